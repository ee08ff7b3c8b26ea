//! Abstract simplicial complexes and finite posets, with the neighborhood,
//! order, face-poset and directed clique constructions.

use std::collections::{HashMap, HashSet};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A face: strictly increasing vertex labels.
pub type Face = Vec<u32>;

pub const DEFAULT_FACE_CAP: usize = 1_000_000;

/// A complex stored by its facets.
///
/// A complex without facets is the void complex; `[[]]` is the complex whose
/// only face is the empty one. Both realize the empty space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
}

fn is_sorted_subset(a: &[u32], b: &[u32]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut it = b.iter();
    'outer: for x in a {
        for y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

impl SimplicialComplex {
    /// Normalizes the given faces: sorts vertices, drops duplicates and any
    /// face contained in another.
    pub fn from_facets<I, F>(faces: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = u32>,
    {
        let mut fs: Vec<Face> = faces
            .into_iter()
            .map(|f| {
                let mut f: Face = f.into_iter().collect();
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        fs.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        fs.dedup();
        let mut kept: Vec<Face> = Vec::with_capacity(fs.len());
        for f in fs {
            if !kept.iter().any(|k| is_sorted_subset(&f, k)) {
                kept.push(f);
            }
        }
        kept.sort();
        SimplicialComplex { facets: kept }
    }

    /// Trusts the caller that the faces are sorted and pairwise incomparable.
    pub(crate) fn from_facets_unchecked(mut facets: Vec<Face>) -> Self {
        facets.sort();
        SimplicialComplex { facets }
    }

    pub fn void() -> Self {
        SimplicialComplex { facets: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn empty_face() -> Self {
        SimplicialComplex {
            facets: vec![Vec::new()],
        }
    }

    pub fn simplex(vertices: impl IntoIterator<Item = u32>) -> Self {
        Self::from_facets([vertices])
    }

    /// Boundary of the simplex on `0..=n`.
    pub fn simplex_boundary(n: u32) -> Self {
        Self::from_facets((0..=n).map(|skip| (0..=n).filter(move |&v| v != skip)))
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn vertices(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.facets.iter().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn contains_face(&self, face: &[u32]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        self.facets.iter().any(|k| is_sorted_subset(&f, k))
    }

    /// All nonempty faces grouped by dimension, each group sorted.
    pub fn faces(&self, cap: usize) -> Result<Vec<Vec<Face>>> {
        let mut bound: u128 = 0;
        for f in &self.facets {
            bound = bound.saturating_add((1u128 << f.len().min(100)) - 1);
        }
        let mut by_dim: Vec<HashSet<Face>> = Vec::new();
        let mut total = 0usize;
        for facet in &self.facets {
            let k = facet.len();
            if k >= 64 {
                return Err(Error::SizeCapExceeded {
                    what: "faces",
                    size: bound,
                    cap: cap as u128,
                });
            }
            if by_dim.len() < k {
                by_dim.resize_with(k, HashSet::new);
            }
            for mask in VertexSet::full(k).nonempty_subsets() {
                let face: Face = mask.iter().map(|i| facet[i]).collect();
                if by_dim[face.len() - 1].insert(face) {
                    total += 1;
                    if total > cap {
                        return Err(Error::SizeCapExceeded {
                            what: "faces",
                            size: bound.max(total as u128),
                            cap: cap as u128,
                        });
                    }
                }
            }
        }
        Ok(by_dim
            .into_iter()
            .map(|s| {
                let mut v: Vec<Face> = s.into_iter().collect();
                v.sort();
                v
            })
            .collect())
    }

    /// Number of nonempty faces in each dimension.
    pub fn f_vector(&self) -> Result<Vec<usize>> {
        Ok(self.faces(DEFAULT_FACE_CAP)?.iter().map(Vec::len).collect())
    }

    /// Unreduced Euler characteristic (the empty face is not counted).
    pub fn euler_characteristic(&self) -> Result<i64> {
        Ok(self
            .f_vector()?
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum())
    }

    /// `lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ X}`.
    pub fn link(&self, sigma: &[u32]) -> Result<SimplicialComplex> {
        let mut s = sigma.to_vec();
        s.sort_unstable();
        s.dedup();
        let containing: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| is_sorted_subset(&s, f))
            .map(|f| f.iter().copied().filter(|v| s.binary_search(v).is_err()).collect())
            .collect();
        if containing.is_empty() {
            return Err(Error::FaceNotInComplex(s));
        }
        Ok(Self::from_facets(containing))
    }

    /// Faces whose vertices all lie in `keep`.
    pub fn induced_subcomplex(&self, keep: &[u32]) -> SimplicialComplex {
        if self.is_void() {
            return Self::void();
        }
        let keep: HashSet<u32> = keep.iter().copied().collect();
        Self::from_facets(
            self.facets
                .iter()
                .map(|f| f.iter().copied().filter(|v| keep.contains(v)).collect::<Vec<_>>()),
        )
    }

    /// Two cone points `m+1`, `m+2` (with `m` the largest vertex) over every facet.
    pub fn suspension(&self) -> SimplicialComplex {
        let top = self.vertices().last().map_or(0, |&m| m + 1);
        let base = if self.is_void() {
            vec![Vec::new()]
        } else {
            self.facets.clone()
        };
        let mut out = Vec::with_capacity(2 * base.len());
        for apex in [top, top + 1] {
            for f in &base {
                let mut g = f.clone();
                g.push(apex);
                out.push(g);
            }
        }
        Self::from_facets_unchecked(out)
    }

    /// Renames vertices to `0..k` preserving their order.
    pub fn relabel_dense(&self) -> SimplicialComplex {
        let verts = self.vertices();
        let pos: HashMap<u32, u32> = verts
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as u32))
            .collect();
        Self::from_facets_unchecked(
            self.facets
                .iter()
                .map(|f| f.iter().map(|v| pos[v]).collect())
                .collect(),
        )
    }

    /// Applies a vertex renaming; the renaming must be injective on vertices.
    pub fn relabel(&self, map: impl Fn(u32) -> u32) -> SimplicialComplex {
        Self::from_facets(self.facets.iter().map(|f| f.iter().map(|&v| map(v)).collect::<Vec<_>>()))
    }
}

impl std::fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .facets
            .iter()
            .map(|face| {
                let inner: Vec<String> = face.iter().map(u32::to_string).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

fn vertex_set_face(s: VertexSet) -> Face {
    s.iter().map(|v| v as u32).collect()
}

/// Facets are the nonempty out-neighborhoods.
pub fn out_neighborhood_complex(g: &Digraph) -> SimplicialComplex {
    SimplicialComplex::from_facets(
        (0..g.vertex_count())
            .map(|v| g.out_neighbors(v))
            .filter(|s| !s.is_empty())
            .map(vertex_set_face),
    )
}

/// Facets are the nonempty in-neighborhoods.
pub fn in_neighborhood_complex(g: &Digraph) -> SimplicialComplex {
    out_neighborhood_complex(&g.reverse())
}

/// A digraph whose out-neighborhood complex is `x`: the vertices of `x`
/// relabelled `0..k` in order, plus one source vertex per facet pointing at
/// that facet.
pub fn universality_graph(x: &SimplicialComplex) -> Result<Digraph> {
    let x = x.relabel_dense();
    let facets: Vec<&Face> = x.facets().iter().filter(|f| !f.is_empty()).collect();
    if facets.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let k = x.vertices().len();
    let edges = facets
        .iter()
        .enumerate()
        .flat_map(|(i, f)| f.iter().map(move |&v| (k + i, v as usize)));
    Digraph::from_edges(k + facets.len(), edges)
}

/// Faces `S` admitting an order `v0, .., vk` with `vi -> vj` for all `i < j`.
/// Loops are ignored.
pub fn directed_clique_complex(g: &Digraph) -> SimplicialComplex {
    let n = g.vertex_count();
    let out: Vec<VertexSet> = (0..n).map(|v| g.out_neighbors(v).without(v)).collect();
    let mut level: HashSet<VertexSet> = (0..n).map(VertexSet::singleton).collect();
    let mut facets: Vec<Face> = Vec::new();
    while !level.is_empty() {
        let mut next: HashSet<VertexSet> = HashSet::new();
        let mut sorted: Vec<VertexSet> = level.iter().copied().collect();
        sorted.sort();
        for s in sorted {
            let mut extended = false;
            for v in 0..n {
                if s.contains(v) {
                    continue;
                }
                let t = s.with(v);
                if next.contains(&t) {
                    extended = true;
                    continue;
                }
                // t is a directed clique iff some source u has t - u ⊆ out(u)
                // and t - u is itself a directed clique.
                let ok = t.iter().any(|u| {
                    let rest = t.without(u);
                    rest.is_subset(out[u]) && (rest.len() <= 1 || level.contains(&rest))
                });
                if ok {
                    next.insert(t);
                    extended = true;
                }
            }
            if !extended {
                facets.push(vertex_set_face(s));
            }
        }
        level = next;
    }
    SimplicialComplex::from_facets_unchecked(facets)
}

/// Finite poset stored by its covering relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    up: Vec<Vec<u32>>,
    down: Vec<Vec<u32>>,
}

impl Poset {
    /// Builds a poset from a strict order given as `(a, b)` pairs meaning
    /// `a < b`. The relation must be irreflexive and transitive.
    pub fn from_relation(n: usize, less: &[(usize, usize)]) -> Result<Poset> {
        let words = n.div_ceil(64);
        let mut rel = vec![vec![0u64; words]; n];
        for &(a, b) in less {
            if a >= n || b >= n {
                return Err(Error::InvalidPoset(format!("pair ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::InvalidPoset(format!("{a} < {a} violates irreflexivity")));
            }
            rel[a][b / 64] |= 1 << (b % 64);
        }
        let has = |rel: &Vec<Vec<u64>>, a: usize, b: usize| rel[a][b / 64] >> (b % 64) & 1 == 1;
        for a in 0..n {
            for b in 0..n {
                if !has(&rel, a, b) {
                    continue;
                }
                for c in 0..n {
                    if has(&rel, b, c) && !has(&rel, a, c) {
                        return Err(Error::InvalidPoset(format!(
                            "{a} < {b} < {c} but not {a} < {c}"
                        )));
                    }
                }
            }
        }
        let mut covers = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if has(&rel, a, b) && !(0..n).any(|c| has(&rel, a, c) && has(&rel, c, b)) {
                    covers.push((a, b));
                }
            }
        }
        Ok(Self::from_covers_unchecked(n, &covers))
    }

    /// Builds a poset from its Hasse diagram; the caller guarantees that the
    /// pairs are exactly the covering relations of some partial order.
    pub(crate) fn from_covers_unchecked(n: usize, covers: &[(usize, usize)]) -> Poset {
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(a, b) in covers {
            up[a].push(b as u32);
            down[b].push(a as u32);
        }
        for l in up.iter_mut().chain(down.iter_mut()) {
            l.sort_unstable();
            l.dedup();
        }
        Poset {
            labels: Vec::new(),
            up,
            down,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Poset> {
        if labels.len() != self.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} labels for {} elements",
                labels.len(),
                self.len()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn label(&self, a: usize) -> String {
        self.labels.get(a).cloned().unwrap_or_else(|| a.to_string())
    }

    pub fn upper_covers(&self, a: usize) -> &[u32] {
        &self.up[a]
    }

    pub fn lower_covers(&self, a: usize) -> &[u32] {
        &self.down[a]
    }

    pub fn covers(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(a, s)| s.iter().map(move |&b| (a, b as usize)))
    }

    pub fn less_than(&self, a: usize, b: usize) -> bool {
        let mut seen = HashSet::new();
        let mut stack = vec![a];
        while let Some(x) = stack.pop() {
            for &y in &self.up[x] {
                if y as usize == b {
                    return true;
                }
                if seen.insert(y) {
                    stack.push(y as usize);
                }
            }
        }
        false
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.down[a].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.up[a].is_empty()).collect()
    }

    /// Number of maximal chains, saturating.
    pub fn maximal_chain_count(&self) -> u128 {
        let mut memo = vec![None; self.len()];
        fn count(p: &Poset, a: usize, memo: &mut [Option<u128>]) -> u128 {
            if let Some(c) = memo[a] {
                return c;
            }
            let c = if p.up[a].is_empty() {
                1
            } else {
                let mut total: u128 = 0;
                for &b in &p.up[a] {
                    total = total.saturating_add(count(p, b as usize, memo));
                }
                total
            };
            memo[a] = Some(c);
            c
        }
        self.minimal_elements()
            .into_iter()
            .fold(0u128, |acc, a| acc.saturating_add(count(self, a, &mut memo)))
    }

    /// Length (number of elements) of a longest chain.
    pub fn height(&self) -> usize {
        let mut memo = vec![0usize; self.len()];
        for a in self.reverse_topological_order() {
            memo[a] = 1 + self.up[a].iter().map(|&b| memo[b as usize]).max().unwrap_or(0);
        }
        memo.into_iter().max().unwrap_or(0)
    }

    fn reverse_topological_order(&self) -> Vec<usize> {
        let n = self.len();
        let mut remaining: Vec<usize> = (0..n).map(|a| self.up[a].len()).collect();
        let mut stack: Vec<usize> = (0..n).filter(|&a| remaining[a] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(a) = stack.pop() {
            order.push(a);
            for &b in &self.down[a] {
                remaining[b as usize] -= 1;
                if remaining[b as usize] == 0 {
                    stack.push(b as usize);
                }
            }
        }
        order
    }

    /// Cartesian product; `(p, q)` is labelled `p * |Q| + q`.
    pub fn product(&self, other: &Poset) -> Poset {
        let m = other.len();
        let mut covers = Vec::new();
        for (a, b) in self.covers() {
            for q in 0..m {
                covers.push((a * m + q, b * m + q));
            }
        }
        for p in 0..self.len() {
            for (a, b) in other.covers() {
                covers.push((p * m + a, p * m + b));
            }
        }
        Self::from_covers_unchecked(self.len() * m, &covers)
    }

    /// Connected components of the comparability graph, counted.
    pub fn component_count(&self) -> usize {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut comps = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            comps += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(a) = stack.pop() {
                for &b in self.up[a].iter().chain(&self.down[a]) {
                    if !seen[b as usize] {
                        seen[b as usize] = true;
                        stack.push(b as usize);
                    }
                }
            }
        }
        comps
    }
}

/// Nonempty faces ordered by inclusion. Elements are listed by dimension,
/// then lexicographically; the returned faces give the labelling.
pub fn face_poset(x: &SimplicialComplex, cap: usize) -> Result<(Poset, Vec<Face>)> {
    let by_dim = x.faces(cap)?;
    let faces: Vec<Face> = by_dim.into_iter().flatten().collect();
    let index: HashMap<&[u32], usize> = faces
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let mut covers = Vec::new();
    for (i, f) in faces.iter().enumerate() {
        if f.len() < 2 {
            continue;
        }
        for skip in 0..f.len() {
            let sub: Face = f
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != skip)
                .map(|(_, &v)| v)
                .collect();
            covers.push((index[sub.as_slice()], i));
        }
    }
    let poset = Poset::from_covers_unchecked(faces.len(), &covers);
    let labels = faces
        .iter()
        .map(|f| {
            let inner: Vec<String> = f.iter().map(u32::to_string).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    let poset = poset.with_labels(labels)?;
    Ok((poset, faces))
}

/// Chains of `p`; facets are its maximal chains. The empty poset gives `{∅}`.
pub fn order_complex(p: &Poset, cap: usize) -> Result<SimplicialComplex> {
    let count = p.maximal_chain_count();
    if count > cap as u128 {
        return Err(Error::SizeCapExceeded {
            what: "maximal chains",
            size: count,
            cap: cap as u128,
        });
    }
    if p.is_empty() {
        return Ok(SimplicialComplex::empty_face());
    }
    let mut facets = Vec::with_capacity(count as usize);
    let mut chain: Vec<u32> = Vec::new();
    fn walk(p: &Poset, a: usize, chain: &mut Vec<u32>, out: &mut Vec<Face>) {
        chain.push(a as u32);
        if p.up[a].is_empty() {
            let mut f = chain.clone();
            f.sort_unstable();
            out.push(f);
        } else {
            for &b in &p.up[a] {
                walk(p, b as usize, chain, out);
            }
        }
        chain.pop();
    }
    for a in p.minimal_elements() {
        walk(p, a, &mut chain, &mut facets);
    }
    Ok(SimplicialComplex::from_facets_unchecked(facets))
}
