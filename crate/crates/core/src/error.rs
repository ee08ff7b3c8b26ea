use thiserror::Error;

/// Errors raised by graph, complex and homology operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size cap exceeded for {what}: {size} > {cap}")]
    SizeCapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    InvalidVertex { vertex: usize, vertex_count: usize },
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("invalid Mycielskian variant {0} (expected 1, 2 or 3)")]
    InvalidVariant(u8),
    #[error("complex has no facets")]
    EmptyComplex,
    #[error("face {0:?} is not in the complex")]
    FaceNotInComplex(Vec<u32>),
    #[error("integer overflow during exact elimination")]
    ArithmeticOverflow,
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("graph is not acyclic")]
    NotAcyclic,
    #[error("there are no homomorphisms")]
    EmptyHom,
    #[error("({v}, {w}) is not a fold")]
    InvalidFold { v: usize, w: usize },
    #[error("map {0:?} is not a homomorphism")]
    NotAHomomorphism(Vec<usize>),
    #[error("the 1-skeleton is disconnected")]
    Disconnected,
    #[error("graph has a loop at vertex {0}")]
    HasLoop(usize),
    #[error("invalid range: {0}")]
    InvalidRange(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
