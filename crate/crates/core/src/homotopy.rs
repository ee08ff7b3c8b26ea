//! Folds, stiffness and dismantlability, and the bi-, di- and line-homotopy
//! relations on homomorphisms read off the looped exponential graph.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::digraph::{is_homomorphism, looped_exponential, Digraph, MapGraph, VertexMap};
use crate::error::{Error, Result};
use crate::homcomplex::{hom_one_skeleton, hom_poset};

fn is_fold(g: &Digraph, v: usize, w: usize) -> bool {
    v != w
        && v < g.vertex_count()
        && w < g.vertex_count()
        && g.in_neighbors(v).is_subset(g.in_neighbors(w))
        && g.out_neighbors(v).is_subset(g.out_neighbors(w))
}

/// Lexicographically least `(v, w)` with `inN(v) ⊆ inN(w)` and
/// `outN(v) ⊆ outN(w)`.
pub fn find_fold(g: &Digraph) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    (0..n)
        .flat_map(|v| (0..n).map(move |w| (v, w)))
        .find(|&(v, w)| is_fold(g, v, w))
}

pub fn all_folds(g: &Digraph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    (0..n)
        .flat_map(|v| (0..n).map(move |w| (v, w)))
        .filter(|&(v, w)| is_fold(g, v, w))
        .collect()
}

/// Deletes `v`, which must fold onto `w`.
pub fn fold(g: &Digraph, v: usize, w: usize) -> Result<Digraph> {
    if !is_fold(g, v, w) {
        return Err(Error::InvalidFold { v, w });
    }
    g.remove_vertex(v)
}

/// The fold sequence applied and the stiff graph it ends in. Each step is
/// reported in the labels of the graph it was applied to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StiffReduction {
    pub steps: Vec<(usize, usize)>,
    pub graph: Digraph,
}

pub fn stiff_reduction(g: &Digraph) -> StiffReduction {
    let mut graph = g.clone();
    let mut steps = Vec::new();
    while let Some((v, w)) = find_fold(&graph) {
        graph = graph.remove_vertex(v).expect("fold vertex is in range");
        steps.push((v, w));
    }
    StiffReduction { steps, graph }
}

/// Folds in a seeded random order until stiff.
pub fn stiff_reduction_random(g: &Digraph, seed: u64) -> StiffReduction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graph = g.clone();
    let mut steps = Vec::new();
    loop {
        let folds = all_folds(&graph);
        let Some(&(v, w)) = folds.choose(&mut rng) else { break };
        graph = graph.remove_vertex(v).expect("fold vertex is in range");
        steps.push((v, w));
    }
    StiffReduction { steps, graph }
}

pub fn is_stiff(g: &Digraph) -> bool {
    find_fold(g).is_none()
}

/// Folds down to the single looped vertex.
pub fn is_dismantlable(g: &Digraph) -> bool {
    let s = stiff_reduction(g).graph;
    s.vertex_count() == 1 && s.has_loop(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Bihomotopy,
    Dihomotopy,
    LineHomotopy,
}

/// `(H^G)°` with reachability queries for the three relations.
#[derive(Clone, Debug)]
pub struct HomotopyData {
    pub exponential: MapGraph,
    succ: Vec<Vec<usize>>,
    both: Vec<Vec<usize>>,
    any: Vec<Vec<usize>>,
}

impl HomotopyData {
    pub fn new(g: &Digraph, h: &Digraph) -> Self {
        let exponential = looped_exponential(h, g);
        let n = exponential.vertex_count();
        let mut succ = vec![Vec::new(); n];
        let mut both = vec![Vec::new(); n];
        let mut any = vec![Vec::new(); n];
        for (a, b) in exponential.edges() {
            if a == b {
                continue;
            }
            succ[a].push(b);
            any[a].push(b);
            any[b].push(a);
            if exponential.has_edge(b, a) {
                both[a].push(b);
            }
        }
        HomotopyData {
            exponential,
            succ,
            both,
            any,
        }
    }

    fn adjacency(&self, r: Relation) -> &[Vec<usize>] {
        match r {
            Relation::Bihomotopy => &self.both,
            Relation::Dihomotopy => &self.succ,
            Relation::LineHomotopy => &self.any,
        }
    }

    pub fn index(&self, f: &VertexMap) -> Option<usize> {
        self.exponential.index_of(f)
    }

    /// Vertices reachable from `s` (including `s`).
    pub fn reachable(&self, s: usize, r: Relation) -> Vec<bool> {
        let adj = self.adjacency(r);
        let mut seen = vec![false; adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(a) = queue.pop_front() {
            for &b in &adj[a] {
                if !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        seen
    }

    pub fn related(&self, f: usize, g: usize, r: Relation) -> bool {
        self.reachable(f, r)[g]
    }

    /// Classes of the equivalence relation generated by `r`, each sorted,
    /// ordered by least member.
    pub fn classes(&self, r: Relation) -> Vec<Vec<usize>> {
        let n = self.exponential.vertex_count();
        let adj = self.adjacency(r);
        let mut sym = vec![Vec::new(); n];
        for (a, l) in adj.iter().enumerate() {
            for &b in l {
                sym[a].push(b);
                sym[b].push(a);
            }
        }
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut stack = vec![s];
            while let Some(a) = stack.pop() {
                for &b in &sym[a] {
                    if comp[b] == usize::MAX {
                        comp[b] = id;
                        members.push(b);
                        stack.push(b);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Raw dihomotopy preorder: for each map, the maps reachable along
    /// directed edges.
    pub fn dihomotopy_preorder(&self) -> Vec<Vec<usize>> {
        (0..self.exponential.vertex_count())
            .map(|s| {
                self.reachable(s, Relation::Dihomotopy)
                    .iter()
                    .enumerate()
                    .filter(|(_, &r)| r)
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect()
    }
}

fn locate(data: &HomotopyData, f: &VertexMap, g: &Digraph, h: &Digraph) -> Result<usize> {
    if !is_homomorphism(f, g, h)? {
        return Err(Error::NotAHomomorphism(f.0.clone()));
    }
    Ok(data.index(f).expect("homomorphisms are looped vertices"))
}

fn relation_holds(f: &VertexMap, k: &VertexMap, g: &Digraph, h: &Digraph, r: Relation) -> Result<bool> {
    let data = HomotopyData::new(g, h);
    let (a, b) = (locate(&data, f, g, h)?, locate(&data, k, g, h)?);
    Ok(data.related(a, b, r))
}

/// Path through bidirected edges of `(H^G)°`.
pub fn bihomotopic(f: &VertexMap, k: &VertexMap, g: &Digraph, h: &Digraph) -> Result<bool> {
    relation_holds(f, k, g, h, Relation::Bihomotopy)
}

/// Directed path in `(H^G)°`.
pub fn dihomotopic(f: &VertexMap, k: &VertexMap, g: &Digraph, h: &Digraph) -> Result<bool> {
    relation_holds(f, k, g, h, Relation::Dihomotopy)
}

/// Path in the underlying undirected graph of `(H^G)°`.
pub fn line_homotopic(f: &VertexMap, k: &VertexMap, g: &Digraph, h: &Digraph) -> Result<bool> {
    relation_holds(f, k, g, h, Relation::LineHomotopy)
}

/// Partition of `Hom_0(G, H)` into classes, as lists of maps.
pub fn homotopy_classes(g: &Digraph, h: &Digraph, r: Relation) -> Vec<Vec<VertexMap>> {
    let data = HomotopyData::new(g, h);
    data.classes(r)
        .into_iter()
        .map(|c| c.into_iter().map(|i| data.exponential.maps[i].clone()).collect())
        .collect()
}

/// Comparison of dismantlability against connectivity of `Hom(T, G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DismantlabilityReport {
    pub dismantlable: bool,
    /// Connectivity of `Hom(T, G)` per witness `T`, in input order; an empty
    /// complex counts as disconnected.
    pub witnesses_connected: Vec<bool>,
    /// Connectivity of `Hom(G, G)`.
    pub self_connected: bool,
    /// Connectivity of `Hom(1, G)`, which is empty when `G` has no loop.
    /// Together with `Hom(G, G)` it exposes every non-dismantlable `G`.
    pub loop_connected: bool,
    /// Human-readable description of each disagreement.
    pub discrepancies: Vec<String>,
}

impl DismantlabilityReport {
    pub fn consistent(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

fn hom_connected(t: &Digraph, g: &Digraph) -> bool {
    hom_one_skeleton(t, g).is_connected()
}

pub fn dismantlable_iff_connected_check(g: &Digraph, witnesses: &[Digraph]) -> DismantlabilityReport {
    let dismantlable = is_dismantlable(g);
    let witnesses_connected: Vec<bool> = witnesses.iter().map(|t| hom_connected(t, g)).collect();
    let self_connected = hom_connected(g, g);
    let loop_connected = hom_connected(&crate::constructions::looped_vertex(), g);
    let mut discrepancies = Vec::new();
    if dismantlable {
        for (i, &c) in witnesses_connected.iter().enumerate() {
            if !c {
                discrepancies.push(format!("dismantlable but Hom(T, G) is disconnected for witness {i}"));
            }
        }
        if !self_connected {
            discrepancies.push("dismantlable but Hom(G, G) is disconnected".into());
        }
        if !loop_connected {
            discrepancies.push("dismantlable but Hom(1, G) is disconnected".into());
        }
    } else if self_connected && loop_connected {
        // Then Hom(G, G) joins the identity to a constant map, which forces a fold.
        discrepancies.push("not dismantlable but Hom(G, G) and Hom(1, G) are connected".into());
    }
    DismantlabilityReport {
        dismantlable,
        witnesses_connected,
        self_connected,
        loop_connected,
        discrepancies,
    }
}

/// Connectivity via the poset rather than the 1-skeleton; used to cross-check.
pub fn hom_connected_via_poset(t: &Digraph, g: &Digraph) -> Result<bool> {
    Ok(hom_poset(t, g)?.is_connected())
}
