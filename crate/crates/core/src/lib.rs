//! Homomorphism complexes of directed graphs.
//!
//! Small digraphs (at most 64 vertices, loops allowed) are stored as bitset
//! adjacency. On top of that sit the poset of multihomomorphisms `Hom(G, H)`,
//! neighborhood complexes, integral homology, discrete Morse matchings, fold
//! reductions and the reconfiguration graph of homomorphisms.

pub mod cli;
pub mod complexes;
pub mod constructions;
pub mod digraph;
pub mod error;
pub mod homcomplex;
pub mod homology;
pub mod homotopy;
pub mod morse;
pub mod reconfig;
pub mod vertex_set;

pub use complexes::{Face, Poset, SimplicialComplex};
pub use digraph::{Digraph, MapGraph, VertexMap};
pub use error::{Error, Result};
pub use homcomplex::{HomPoset, MultiHom};
pub use homology::{Group, HomologyGroups};
pub use vertex_set::VertexSet;
