//! Finite directed graphs with loops, and the categorical operations on them.
//!
//! Vertices are the dense labels `0..n`. Neighborhoods are stored as 64-bit
//! masks, so a [`Digraph`] has at most 64 vertices. The exponential graph
//! `H^G` routinely exceeds that bound and is therefore returned as a separate
//! sparse type, [`MapGraph`], whose vertices are vertex maps.

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub const MAX_VERTICES: usize = 64;

/// Default cap on the number of vertex maps enumerated by [`exponential`].
pub const DEFAULT_MAP_CAP: u128 = 1_000_000;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Digraph")
            .field("vertices", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::SizeCapExceeded {
            what: "digraph vertices",
            size: n as u128,
            cap: MAX_VERTICES as u128,
        });
    }
    Ok(())
}

impl Digraph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Digraph {
            out: vec![VertexSet::EMPTY; n],
            inn: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Repeated edges collapse to one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Digraph::empty(n)?;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidVertex {
                        vertex: x,
                        vertex_count: n,
                    });
                }
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from its out-neighborhoods.
    pub fn from_out_neighborhoods(out: &[VertexSet]) -> Result<Self> {
        let n = out.len();
        check_size(n)?;
        let full = VertexSet::full(n);
        let mut g = Digraph::empty(n)?;
        for (u, s) in out.iter().enumerate() {
            if let Some(bad) = s.difference(full).first() {
                return Err(Error::InvalidVertex {
                    vertex: bad,
                    vertex_count: n,
                });
            }
            for v in s.iter() {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.out[u].insert(v);
        self.inn[v].insert(u);
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(|s| s.len()).sum()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().map(move |v| (u, v)))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    #[inline]
    pub fn has_loop(&self, v: usize) -> bool {
        self.out[v].contains(v)
    }

    pub fn looped_vertices(&self) -> VertexSet {
        (0..self.vertex_count()).filter(|&v| self.has_loop(v)).collect()
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        self.out[v]
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    /// Vertices adjacent to every member of `s` (all vertices when `s` is empty).
    pub fn common_out_neighbors(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(self.vertices(), |acc, v| acc.intersection(self.out[v]))
    }

    /// Vertices adjacent to every member of `s` (all vertices when `s` is empty).
    pub fn common_in_neighbors(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(self.vertices(), |acc, v| acc.intersection(self.inn[v]))
    }

    /// Same vertices, every edge reversed.
    pub fn reverse(&self) -> Digraph {
        Digraph {
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// Every edge doubled in both directions.
    pub fn underlying_symmetrization(&self) -> Digraph {
        let out = self
            .out
            .iter()
            .zip(&self.inn)
            .map(|(o, i)| o.union(*i))
            .collect::<Vec<_>>();
        Digraph {
            inn: out.clone(),
            out,
        }
    }

    /// Subgraph induced on `s`, relabelled in increasing order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Digraph> {
        if let Some(bad) = s.difference(self.vertices()).first() {
            return Err(Error::InvalidVertex {
                vertex: bad,
                vertex_count: self.vertex_count(),
            });
        }
        let keep = s.to_vec();
        let mut relabel = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            relabel[v] = i;
        }
        let mut g = Digraph::empty(keep.len())?;
        for (i, &u) in keep.iter().enumerate() {
            for v in self.out[u].intersection(s).iter() {
                g.add_edge(i, relabel[v]);
            }
        }
        Ok(g)
    }

    /// Deletes one vertex, compacting the labels above it.
    pub fn remove_vertex(&self, v: usize) -> Result<Digraph> {
        if v >= self.vertex_count() {
            return Err(Error::InvalidVertex {
                vertex: v,
                vertex_count: self.vertex_count(),
            });
        }
        self.induced_subgraph(self.vertices().without(v))
    }

    /// `G°`: the subgraph induced on the looped vertices.
    pub fn looped_part(&self) -> Digraph {
        self.induced_subgraph(self.looped_vertices())
            .expect("looped vertices are in range")
    }

    pub fn is_loopless(&self) -> bool {
        self.looped_vertices().is_empty()
    }

    /// True when no directed cycle (loops included) exists.
    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Kahn order with smallest-label tie-breaking.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        let mut indeg: Vec<usize> = (0..n).map(|v| self.in_degree(v)).collect();
        let mut ready: VertexSet = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.first() {
            ready.remove(v);
            order.push(v);
            for w in self.out[v].iter() {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Weakly connected components, each as a vertex set, ordered by least element.
    pub fn weak_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut comps = Vec::new();
        for start in 0..self.vertex_count() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.out[v]).union(self.inn[v]);
                }
                frontier = next.difference(comp);
                comp = comp.union(next);
            }
            seen = seen.union(comp);
            comps.push(comp);
        }
        comps
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Digraph> {
        let n = self.vertex_count();
        if perm.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "permutation of length {} for {n} vertices",
                perm.len()
            )));
        }
        let mut g = Digraph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        Ok(g)
    }
}

/// A vertex map `V(G) -> V(H)`, stored as its image sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexMap(pub Vec<usize>);

impl VertexMap {
    pub fn domain_size(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.0
    }

    /// Number of vertices where the two maps differ.
    pub fn hamming_distance(&self, other: &VertexMap) -> usize {
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count()
    }
}

impl From<Vec<usize>> for VertexMap {
    fn from(v: Vec<usize>) -> Self {
        VertexMap(v)
    }
}

/// Categorical product; `(g, h)` is labelled `g * |V(H)| + h`.
pub fn product(g: &Digraph, h: &Digraph) -> Result<Digraph> {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let mut p = Digraph::empty(ng * nh)?;
    for (a, b) in g.edges() {
        for (c, d) in h.edges() {
            p.add_edge(a * nh + c, b * nh + d);
        }
    }
    Ok(p)
}

/// Disjoint union; vertices of `h` are shifted by `|V(G)|`.
pub fn coproduct(g: &Digraph, h: &Digraph) -> Result<Digraph> {
    let ng = g.vertex_count();
    let mut p = Digraph::empty(ng + h.vertex_count())?;
    for (u, v) in g.edges() {
        p.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        p.add_edge(u + ng, v + ng);
    }
    Ok(p)
}

/// Identifies the vertices in each class. Class `i` becomes vertex `i`.
pub fn quotient(g: &Digraph, classes: &[Vec<usize>]) -> Result<Digraph> {
    let n = g.vertex_count();
    let mut class_of = vec![usize::MAX; n];
    for (i, class) in classes.iter().enumerate() {
        if class.is_empty() {
            return Err(Error::MalformedPartition(format!("class {i} is empty")));
        }
        for &v in class {
            if v >= n {
                return Err(Error::MalformedPartition(format!(
                    "vertex {v} out of range"
                )));
            }
            if class_of[v] != usize::MAX {
                return Err(Error::MalformedPartition(format!(
                    "vertex {v} appears in more than one class"
                )));
            }
            class_of[v] = i;
        }
    }
    if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
        return Err(Error::MalformedPartition(format!(
            "vertex {v} is not covered"
        )));
    }
    let mut q = Digraph::empty(classes.len())?;
    for (u, v) in g.edges() {
        q.add_edge(class_of[u], class_of[v]);
    }
    Ok(q)
}

pub fn is_homomorphism(f: &VertexMap, g: &Digraph, h: &Digraph) -> Result<bool> {
    if f.domain_size() != g.vertex_count() {
        return Err(Error::ShapeMismatch(format!(
            "map has {} entries, domain has {} vertices",
            f.domain_size(),
            g.vertex_count()
        )));
    }
    if let Some(&bad) = f.0.iter().find(|&&x| x >= h.vertex_count()) {
        return Err(Error::ShapeMismatch(format!(
            "image vertex {bad} out of range for codomain on {} vertices",
            h.vertex_count()
        )));
    }
    Ok(g.edges().all(|(u, v)| h.has_edge(f.0[u], f.0[v])))
}

/// Visits every homomorphism `G -> H` in lexicographic order of image sequences.
pub fn for_each_homomorphism<F>(g: &Digraph, h: &Digraph, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = g.vertex_count();
    let mut image = vec![0usize; n];
    let _ = hom_search(g, h, 0, &mut image, &mut visit);
}

fn hom_search<F>(
    g: &Digraph,
    h: &Digraph,
    v: usize,
    image: &mut [usize],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if v == image.len() {
        return visit(image);
    }
    let mut cand = h.vertices();
    if g.has_loop(v) {
        cand = cand.intersection(h.looped_vertices());
    }
    for u in g.in_neighbors(v).iter().filter(|&u| u < v) {
        cand = cand.intersection(h.out_neighbors(image[u]));
    }
    for w in g.out_neighbors(v).iter().filter(|&w| w < v) {
        cand = cand.intersection(h.in_neighbors(image[w]));
    }
    for x in cand.iter() {
        image[v] = x;
        hom_search(g, h, v + 1, image, visit)?;
    }
    ControlFlow::Continue(())
}

/// `Hom_0(G, H)`, lexicographically ordered.
pub fn enumerate_homomorphisms(g: &Digraph, h: &Digraph) -> Vec<VertexMap> {
    let mut out = Vec::new();
    for_each_homomorphism(g, h, |f| {
        out.push(VertexMap(f.to_vec()));
        ControlFlow::Continue(())
    });
    out
}

pub fn first_homomorphism(g: &Digraph, h: &Digraph) -> Option<VertexMap> {
    let mut found = None;
    for_each_homomorphism(g, h, |f| {
        found = Some(VertexMap(f.to_vec()));
        ControlFlow::Break(())
    });
    found
}

pub fn count_homomorphisms(g: &Digraph, h: &Digraph) -> usize {
    let mut count = 0;
    for_each_homomorphism(g, h, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// True when disjoint `A`, `B` with `|A| = m`, `|B| = n` and `A x B ⊆ E(G)` exist.
pub fn contains_bipartite(g: &Digraph, m: usize, n: usize) -> bool {
    if m == 0 || n == 0 {
        return m + n <= g.vertex_count();
    }
    fn search(
        g: &Digraph,
        start: usize,
        left: usize,
        chosen: VertexSet,
        common: VertexSet,
        n: usize,
    ) -> bool {
        if common.difference(chosen).len() < n {
            return false;
        }
        if left == 0 {
            return true;
        }
        (start..g.vertex_count()).any(|a| {
            search(
                g,
                a + 1,
                left - 1,
                chosen.with(a),
                common.intersection(g.out_neighbors(a)),
                n,
            )
        })
    }
    search(g, 0, m, VertexSet::EMPTY, g.vertices(), n)
}

/// A digraph whose vertices are vertex maps `V(G) -> V(H)`; used for `H^G`
/// and its looped part, which may have far more than 64 vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapGraph {
    pub maps: Vec<VertexMap>,
    pub successors: Vec<Vec<usize>>,
}

impl MapGraph {
    pub fn vertex_count(&self) -> usize {
        self.maps.len()
    }

    pub fn edge_count(&self) -> usize {
        self.successors.iter().map(Vec::len).sum()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.successors[a].binary_search(&b).is_ok()
    }

    pub fn has_loop(&self, a: usize) -> bool {
        self.has_edge(a, a)
    }

    pub fn index_of(&self, f: &VertexMap) -> Option<usize> {
        self.maps.binary_search(f).ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.successors
            .iter()
            .enumerate()
            .flat_map(|(a, s)| s.iter().map(move |&b| (a, b)))
    }

    /// Induced on the looped vertices, keeping the (sorted) order of maps.
    pub fn looped_part(&self) -> MapGraph {
        let keep: Vec<usize> = (0..self.vertex_count())
            .filter(|&a| self.has_loop(a))
            .collect();
        let relabel: HashMap<usize, usize> =
            keep.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        MapGraph {
            maps: keep.iter().map(|&a| self.maps[a].clone()).collect(),
            successors: keep
                .iter()
                .map(|&a| {
                    self.successors[a]
                        .iter()
                        .filter_map(|b| relabel.get(b).copied())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_digraph(&self) -> Result<Digraph> {
        Digraph::from_edges(self.vertex_count(), self.edges())
    }
}

/// `H^G`: vertices are all maps `V(G) -> V(H)` in lexicographic order; `(f, g)` is
/// an edge iff `(f(v), g(v')) ∈ E(H)` for every `(v, v') ∈ E(G)`.
pub fn exponential(h: &Digraph, g: &Digraph, cap: u128) -> Result<MapGraph> {
    let (nh, ng) = (h.vertex_count(), g.vertex_count());
    let size = (nh as u128).checked_pow(ng as u32).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::SizeCapExceeded {
            what: "exponential graph vertices",
            size,
            cap,
        });
    }
    let size = size as usize;
    let maps: Vec<VertexMap> = (0..size).map(|i| VertexMap(decode(i, nh, ng))).collect();
    let successors = maps
        .iter()
        .map(|f| {
            // Successors of f form a product of per-coordinate candidate sets.
            let cand: Vec<VertexSet> = (0..ng)
                .map(|w| {
                    g.in_neighbors(w)
                        .iter()
                        .fold(h.vertices(), |acc, v| acc.intersection(h.out_neighbors(f.0[v])))
                })
                .collect();
            let mut out = Vec::new();
            product_indices(&cand, nh, &mut out);
            out
        })
        .collect();
    Ok(MapGraph { maps, successors })
}

fn decode(mut index: usize, base: usize, len: usize) -> Vec<usize> {
    let mut image = vec![0; len];
    for slot in image.iter_mut().rev() {
        *slot = index % base;
        index /= base;
    }
    image
}

fn product_indices(cand: &[VertexSet], base: usize, out: &mut Vec<usize>) {
    fn rec(cand: &[VertexSet], base: usize, acc: usize, out: &mut Vec<usize>) {
        match cand.split_first() {
            None => out.push(acc),
            Some((first, rest)) => {
                for x in first.iter() {
                    rec(rest, base, acc * base + x, out);
                }
            }
        }
    }
    rec(cand, base, 0, out);
}

/// `(H^G)°` built directly from `Hom_0(G, H)` without enumerating all maps.
pub fn looped_exponential(h: &Digraph, g: &Digraph) -> MapGraph {
    let maps = enumerate_homomorphisms(g, h);
    let successors = maps
        .iter()
        .map(|f| {
            maps.iter()
                .enumerate()
                .filter(|(_, k)| g.edges().all(|(v, w)| h.has_edge(f.0[v], k.0[w])))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    MapGraph { maps, successors }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge() -> Digraph {
        Digraph::from_edges(2, [(0, 1)]).unwrap()
    }

    fn looped_vertex() -> Digraph {
        Digraph::from_edges(1, [(0, 0)]).unwrap()
    }

    #[test]
    fn product_cardinality_and_single_edge() {
        let g = Digraph::empty(2).unwrap();
        let h = Digraph::empty(3).unwrap();
        assert_eq!(product(&g, &h).unwrap().vertex_count(), 6);
        // Of the four candidate pairs only ((0,0),(1,1)) satisfies both edge rules.
        let p = product(&edge(), &edge()).unwrap();
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 3)]);
    }

    #[test]
    fn product_with_looped_vertex_is_identity() {
        let g = Digraph::from_edges(3, [(0, 1), (1, 2), (2, 2)]).unwrap();
        assert_eq!(product(&looped_vertex(), &g).unwrap(), g);
        assert_eq!(product(&g, &looped_vertex()).unwrap(), g);
    }

    #[test]
    fn coproduct_counts() {
        let a = Digraph::empty(1).unwrap();
        let c = coproduct(&a, &a).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (2, 0));
        let g = Digraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let c = coproduct(&g, &edge()).unwrap();
        assert_eq!(c.edge_count(), 3);
        assert!(c.has_edge(3, 4));
    }

    #[test]
    fn exponential_from_looped_vertex() {
        let h = Digraph::from_edges(3, [(0, 1), (1, 2), (2, 0), (1, 1)]).unwrap();
        let e = exponential(&h, &looped_vertex(), DEFAULT_MAP_CAP).unwrap();
        assert_eq!(e.to_digraph().unwrap(), h);
    }

    #[test]
    fn exponential_cap() {
        let h = Digraph::empty(10).unwrap();
        let g = Digraph::empty(7).unwrap();
        assert!(matches!(
            exponential(&h, &g, DEFAULT_MAP_CAP),
            Err(Error::SizeCapExceeded { .. })
        ));
    }

    #[test]
    fn quotient_cases() {
        let g = Digraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let trivial: Vec<Vec<usize>> = (0..3).map(|v| vec![v]).collect();
        assert_eq!(quotient(&g, &trivial).unwrap(), g);
        let q = quotient(&edge(), &[vec![0, 1]]).unwrap();
        assert_eq!(q.edges().collect::<Vec<_>>(), vec![(0, 0)]);
        assert!(matches!(
            quotient(&g, &[vec![0, 1], vec![1, 2]]),
            Err(Error::MalformedPartition(_))
        ));
        assert!(matches!(
            quotient(&g, &[vec![0, 1]]),
            Err(Error::MalformedPartition(_))
        ));
    }

    #[test]
    fn neighbors() {
        let c3 = Digraph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(c3.in_neighbors(0).to_vec(), vec![2]);
        let k4 = Digraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.out_neighbors(0).to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn homomorphism_checks() {
        let g = Digraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let id = VertexMap(vec![0, 1, 2]);
        assert!(is_homomorphism(&id, &g, &g).unwrap());
        let constant = VertexMap(vec![0, 0, 0]);
        assert!(!is_homomorphism(&constant, &g, &g).unwrap());
        assert!(matches!(
            is_homomorphism(&VertexMap(vec![0, 1]), &g, &g),
            Err(Error::ShapeMismatch(_))
        ));
        assert!(matches!(
            is_homomorphism(&VertexMap(vec![0, 1, 5]), &g, &g),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        let g = Digraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let h = Digraph::from_edges(3, [(0, 1), (1, 0), (1, 2), (2, 2)]).unwrap();
        let homs = enumerate_homomorphisms(&g, &h);
        let mut brute = Vec::new();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let f = VertexMap(vec![a, b, c]);
                    if is_homomorphism(&f, &g, &h).unwrap() {
                        brute.push(f);
                    }
                }
            }
        }
        assert_eq!(homs, brute);
    }

    #[test]
    fn bipartite_detection() {
        let k4 = Digraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(contains_bipartite(&k4, 1, 3));
        assert!(contains_bipartite(&k4, 2, 2));
        assert!(!contains_bipartite(&k4, 2, 3));
        assert!(!contains_bipartite(&k4, 3, 2));
    }

    #[test]
    fn induced_and_looped_parts() {
        let g = Digraph::from_edges(3, [(0, 1), (1, 1), (1, 2), (2, 2)]).unwrap();
        assert_eq!(g.induced_subgraph(g.vertices()).unwrap(), g);
        let l = g.looped_part();
        assert_eq!(l.edges().collect::<Vec<_>>(), vec![(0, 0), (0, 1), (1, 1)]);
        assert!(matches!(
            g.induced_subgraph(VertexSet::singleton(7)),
            Err(Error::InvalidVertex { .. })
        ));
        let t = Digraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(t.looped_part().vertex_count(), 0);
    }

    #[test]
    fn too_many_vertices() {
        assert!(matches!(
            Digraph::empty(65),
            Err(Error::SizeCapExceeded { .. })
        ));
    }
}
