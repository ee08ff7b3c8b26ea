//! The multihomomorphism poset `P(G, H)`, its 1-skeleton, the closure map
//! `ν = outN ∘ inN` on the out-neighborhood complex, and staircase cells of
//! `Hom(K_m, K_n)`.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::complexes::{out_neighborhood_complex, Poset};
use crate::digraph::{enumerate_homomorphisms, Digraph, VertexMap};
use crate::error::{Error, Result};
use crate::homology::{ChainComplex, HomologyGroups, SparseMatrix};
use crate::vertex_set::VertexSet;

pub const DEFAULT_CELL_CAP: usize = 1_000_000;

/// One nonempty subset of `V(H)` per vertex of `G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiHom(pub Vec<VertexSet>);

impl MultiHom {
    pub fn from_map(f: &VertexMap) -> Self {
        MultiHom(f.0.iter().map(|&x| VertexSet::singleton(x)).collect())
    }

    /// `Σ (|α(v)| - 1)`.
    pub fn dimension(&self) -> usize {
        self.0.iter().map(|s| s.len() - 1).sum()
    }
}

pub fn is_multihom(a: &MultiHom, g: &Digraph, h: &Digraph) -> Result<bool> {
    if a.0.len() != g.vertex_count() {
        return Err(Error::ShapeMismatch(format!(
            "{} assignments for {} vertices",
            a.0.len(),
            g.vertex_count()
        )));
    }
    let all = h.vertices();
    if let Some(bad) = a.0.iter().find(|s| !s.is_subset(all)) {
        return Err(Error::ShapeMismatch(format!(
            "assignment {bad:?} leaves the {} target vertices",
            h.vertex_count()
        )));
    }
    if a.0.iter().any(|s| s.is_empty()) {
        return Ok(false);
    }
    Ok(g.edges().all(|(u, v)| {
        a.0[u]
            .iter()
            .all(|x| a.0[v].is_subset(h.out_neighbors(x)))
    }))
}

/// All multihomomorphisms `G -> H`, stored flat in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomPoset {
    width: usize,
    target_size: usize,
    data: Vec<VertexSet>,
}

pub fn hom_poset(g: &Digraph, h: &Digraph) -> Result<HomPoset> {
    hom_poset_with_cap(g, h, DEFAULT_CELL_CAP)
}

pub fn hom_poset_with_cap(g: &Digraph, h: &Digraph, cap: usize) -> Result<HomPoset> {
    let n = g.vertex_count();
    let mut data = Vec::new();
    let mut count = 0usize;
    let mut cand = vec![h.vertices(); n];
    let mut chosen = vec![VertexSet::EMPTY; n];
    if n == 0 {
        return Ok(HomPoset {
            width: 0,
            target_size: h.vertex_count(),
            data,
        });
    }
    enumerate_cells(g, h, 0, &mut cand, &mut chosen, &mut data, &mut count, cap)?;
    Ok(HomPoset {
        width: n,
        target_size: h.vertex_count(),
        data,
    })
}

#[allow(clippy::too_many_arguments)]
fn enumerate_cells(
    g: &Digraph,
    h: &Digraph,
    v: usize,
    cand: &mut Vec<VertexSet>,
    chosen: &mut Vec<VertexSet>,
    data: &mut Vec<VertexSet>,
    count: &mut usize,
    cap: usize,
) -> Result<()> {
    let n = g.vertex_count();
    let mut pool = cand[v];
    if g.has_loop(v) {
        pool = pool.intersection(h.looped_vertices());
    }
    let saved: Vec<VertexSet> = cand[v + 1..].to_vec();
    'subsets: for s in pool.nonempty_subsets() {
        if g.has_loop(v) && !s.iter().all(|x| s.is_subset(h.out_neighbors(x))) {
            continue;
        }
        let succ = h.common_out_neighbors(s);
        let pred = h.common_in_neighbors(s);
        for w in v + 1..n {
            let mut c = saved[w - v - 1];
            if g.has_edge(v, w) {
                c = c.intersection(succ);
            }
            if g.has_edge(w, v) {
                c = c.intersection(pred);
            }
            if c.is_empty() {
                cand[v + 1..].copy_from_slice(&saved);
                continue 'subsets;
            }
            cand[w] = c;
        }
        chosen[v] = s;
        if v + 1 == n {
            *count += 1;
            if *count > cap {
                return Err(Error::SizeCapExceeded {
                    what: "hom poset cells",
                    size: *count as u128,
                    cap: cap as u128,
                });
            }
            data.extend_from_slice(chosen);
        } else {
            enumerate_cells(g, h, v + 1, cand, chosen, data, count, cap)?;
        }
        cand[v + 1..].copy_from_slice(&saved);
    }
    Ok(())
}

impl HomPoset {
    pub fn len(&self) -> usize {
        if self.width == 0 {
            // The empty graph has exactly one (empty) map.
            1
        } else {
            self.data.len() / self.width
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn source_size(&self) -> usize {
        self.width
    }

    pub fn target_size(&self) -> usize {
        self.target_size
    }

    pub fn cell(&self, i: usize) -> &[VertexSet] {
        &self.data[i * self.width..(i + 1) * self.width]
    }

    pub fn multihom(&self, i: usize) -> MultiHom {
        MultiHom(self.cell(i).to_vec())
    }

    pub fn cells(&self) -> impl Iterator<Item = &[VertexSet]> + '_ {
        (0..self.len()).map(move |i| self.cell(i))
    }

    pub fn dimension_of(&self, i: usize) -> usize {
        self.cell(i).iter().map(|s| s.len() - 1).sum()
    }

    pub fn dimension(&self) -> Option<usize> {
        (0..self.len()).map(|i| self.dimension_of(i)).max()
    }

    pub fn index_of(&self, cell: &[VertexSet]) -> Option<usize> {
        if cell.len() != self.width {
            return None;
        }
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.cell(mid).cmp(cell) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    /// Cells per dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for i in 0..self.len() {
            let d = self.dimension_of(i);
            if f.len() <= d {
                f.resize(d + 1, 0);
            }
            f[d] += 1;
        }
        f
    }

    /// `Σ (-1)^dim` over all cells.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// The homomorphisms, i.e. the minimal cells.
    pub fn homomorphisms(&self) -> Vec<VertexMap> {
        (0..self.len())
            .filter(|&i| self.dimension_of(i) == 0)
            .map(|i| VertexMap(self.cell(i).iter().map(|s| s.first().unwrap_or(0)).collect()))
            .collect()
    }

    /// Cells obtained by deleting one element from one non-singleton
    /// assignment, with the cellular boundary sign.
    pub fn faces_with_signs(&self, i: usize) -> Vec<(usize, i64)> {
        let cell = self.cell(i);
        let mut out = Vec::new();
        let mut offset = 0usize;
        let mut buf = cell.to_vec();
        for (v, s) in cell.iter().enumerate() {
            if s.len() > 1 {
                for (pos, x) in s.iter().enumerate() {
                    buf[v] = s.without(x);
                    let j = self.index_of(&buf).expect("cells are closed downward");
                    let sign = if (offset + pos).is_multiple_of(2) { 1 } else { -1 };
                    out.push((j, sign));
                }
                buf[v] = *s;
            }
            offset += s.len() - 1;
        }
        out
    }

    pub fn lower_covers(&self, i: usize) -> Vec<usize> {
        self.faces_with_signs(i).into_iter().map(|(j, _)| j).collect()
    }

    /// The cellular chain complex of the polyhedral complex, augmented.
    pub fn chain_complex(&self) -> ChainComplex {
        let top = self.dimension().map_or(0, |d| d + 1);
        let mut pos = vec![0u32; self.len()];
        let mut ranks = vec![1usize; top + 1];
        for r in ranks.iter_mut().skip(1) {
            *r = 0;
        }
        for i in 0..self.len() {
            let d = self.dimension_of(i);
            pos[i] = ranks[d + 1] as u32;
            ranks[d + 1] += 1;
        }
        let mut boundaries: Vec<SparseMatrix> = (0..=top)
            .map(|k| SparseMatrix::zero(if k == 0 { 0 } else { ranks[k - 1] }, ranks[k]))
            .collect();
        for i in 0..self.len() {
            let d = self.dimension_of(i);
            let col = if d == 0 {
                vec![(0u32, 1i64)]
            } else {
                let mut c: Vec<(u32, i64)> = self
                    .faces_with_signs(i)
                    .into_iter()
                    .map(|(j, s)| (pos[j], s))
                    .collect();
                c.sort_unstable();
                c
            };
            boundaries[d + 1].cols[pos[i] as usize] = col;
        }
        ChainComplex { ranks, boundaries }
    }

    /// Reduced homology from the cellular chain complex.
    pub fn homology(&self) -> Result<HomologyGroups> {
        self.chain_complex().homology()
    }

    /// The same cells as a generic poset ordered by pointwise inclusion.
    pub fn to_poset(&self) -> Poset {
        let covers: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|i| self.lower_covers(i).into_iter().map(move |j| (j, i)))
            .collect();
        Poset::from_covers_unchecked(self.len(), &covers)
    }

    /// Connected as a space: nonempty with a connected 1-skeleton.
    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let p = self.to_poset();
        p.component_count() == 1
    }
}

/// Reduced homology of `Hom(G, H)`, splitting `G` into weak components and
/// combining the factors with the Künneth formula.
pub fn hom_complex_homology(g: &Digraph, h: &Digraph, cap: usize) -> Result<HomologyGroups> {
    let comps = g.weak_components();
    if comps.len() <= 1 {
        return hom_poset_with_cap(g, h, cap)?.homology();
    }
    let mut acc = HomologyGroups::default();
    for c in comps {
        let part = hom_poset_with_cap(&g.induced_subgraph(c)?, h, cap)?.homology()?;
        acc = acc.product(&part)?;
    }
    Ok(acc)
}

/// Homomorphisms joined when they differ at one vertex `v` and the map with
/// `α(v) = {f(v), g(v)}` is a multihomomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneSkeleton {
    pub homs: Vec<VertexMap>,
    pub adjacency: Vec<Vec<usize>>,
}

pub fn hom_one_skeleton(g: &Digraph, h: &Digraph) -> OneSkeleton {
    let homs = enumerate_homomorphisms(g, h);
    let index: HashMap<&[usize], usize> = homs
        .iter()
        .enumerate()
        .map(|(i, f)| (f.0.as_slice(), i))
        .collect();
    let mut adjacency = vec![Vec::new(); homs.len()];
    for (i, f) in homs.iter().enumerate() {
        let mut other = f.0.clone();
        for v in 0..f.0.len() {
            for x in f.0[v] + 1..h.vertex_count() {
                other[v] = x;
                let Some(&j) = index.get(other.as_slice()) else {
                    continue;
                };
                let mut cell = MultiHom::from_map(f);
                cell.0[v].insert(x);
                if is_multihom(&cell, g, h).unwrap_or(false) {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
            other[v] = f.0[v];
        }
    }
    for a in adjacency.iter_mut() {
        a.sort_unstable();
    }
    OneSkeleton { homs, adjacency }
}

impl OneSkeleton {
    pub fn len(&self) -> usize {
        self.homs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.homs.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn index_of(&self, f: &VertexMap) -> Option<usize> {
        self.homs.binary_search(f).ok()
    }

    /// BFS distances from `s`; `usize::MAX` when unreachable.
    pub fn distances(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(a) = queue.pop_front() {
            for &b in &self.adjacency[a] {
                if dist[b] == usize::MAX {
                    dist[b] = dist[a] + 1;
                    queue.push_back(b);
                }
            }
        }
        dist
    }

    /// Components as sorted index lists, ordered by least element.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let mut comp: Vec<usize> = self
                .distances(s)
                .iter()
                .enumerate()
                .filter(|(_, &d)| d != usize::MAX)
                .map(|(i, _)| i)
                .collect();
            comp.sort_unstable();
            for &i in &comp {
                seen[i] = true;
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        !self.is_empty() && self.components().len() == 1
    }
}

/// The closure map `ν(X) = outN(inN(X))` on the nonempty faces of the
/// out-neighborhood complex.
#[derive(Clone, Debug)]
pub struct NuClosure {
    /// Nonempty faces in increasing numeric order.
    pub faces: Vec<VertexSet>,
    /// `image[i]` indexes `closed`: the closure of `faces[i]`.
    pub image: Vec<usize>,
    /// The closed faces, sorted.
    pub closed: Vec<VertexSet>,
    /// Closed faces ordered by inclusion.
    pub poset: Poset,
    /// Dimension of the order complex of `poset`.
    pub order_dimension: isize,
}

pub fn closure_nu(g: &Digraph) -> Result<NuClosure> {
    let x = out_neighborhood_complex(g);
    if x.is_void() {
        return Err(Error::EmptyComplex);
    }
    let mut faces: HashSet<VertexSet> = HashSet::new();
    for f in x.facets() {
        let s: VertexSet = f.iter().map(|&v| v as usize).collect();
        faces.extend(s.nonempty_subsets());
    }
    let mut faces: Vec<VertexSet> = faces.into_iter().collect();
    faces.sort();
    let nu = |s: VertexSet| g.common_out_neighbors(g.common_in_neighbors(s));
    let mut closed: Vec<VertexSet> = faces.iter().map(|&s| nu(s)).collect();
    closed.sort();
    closed.dedup();
    let image = faces
        .iter()
        .map(|&s| closed.binary_search(&nu(s)).expect("image is closed"))
        .collect();
    let mut less = Vec::new();
    for (i, a) in closed.iter().enumerate() {
        for (j, b) in closed.iter().enumerate() {
            if i != j && a.is_subset(*b) {
                less.push((i, j));
            }
        }
    }
    let poset = Poset::from_relation(closed.len(), &less)?;
    let order_dimension = poset.height() as isize - 1;
    Ok(NuClosure {
        faces,
        image,
        closed,
        poset,
        order_dimension,
    })
}

/// A maximal cell of `Hom(K_m, K_n)` with its blocks and the noncrossing
/// spanning tree of `K_{m, n-m+1}` obtained by shifting block `i` down by `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseCell {
    pub cell: MultiHom,
    pub blocks: Vec<Vec<usize>>,
    pub tree_edges: Vec<(usize, usize)>,
    pub verified: bool,
}

/// True when the blocks are increasing intervals that partition `0..n`, and
/// the shifted blocks form a noncrossing spanning tree of `K_{m, n-m+1}`.
pub fn is_staircase(blocks: &[Vec<usize>], n: usize) -> bool {
    let m = blocks.len();
    if m == 0 || m > n || blocks.iter().any(Vec::is_empty) {
        return false;
    }
    for i in 0..m {
        for j in i + 1..m {
            if !blocks[i].iter().all(|&x| blocks[j].iter().all(|&y| x < y)) {
                return false;
            }
        }
    }
    let flat: Vec<usize> = blocks.iter().flatten().copied().collect();
    if flat != (0..n).collect::<Vec<_>>() {
        return false;
    }
    let edges = shifted_tree(blocks);
    let right = n - m + 1;
    if edges.len() != m + right - 1 || edges.iter().any(|&(_, y)| y >= right) {
        return false;
    }
    for &(i, y) in &edges {
        for &(j, z) in &edges {
            if i < j && y > z {
                return false;
            }
        }
    }
    // Union-find over the m + right tree vertices.
    let mut parent: Vec<usize> = (0..m + right).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(i, y) in &edges {
        let (a, b) = (find(&mut parent, i), find(&mut parent, m + y));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

fn shifted_tree(blocks: &[Vec<usize>]) -> Vec<(usize, usize)> {
    blocks
        .iter()
        .enumerate()
        .flat_map(|(i, b)| b.iter().filter(move |&&x| x >= i).map(move |&x| (i, x - i)))
        .collect()
}

pub fn staircase_cells(m: usize, n: usize) -> Result<Vec<StaircaseCell>> {
    if m < 2 || m > n {
        return Err(Error::InvalidRange(format!(
            "staircase cells need 2 <= m <= n, got m = {m}, n = {n}"
        )));
    }
    let km = crate::constructions::transitive_tournament(m)?;
    let kn = crate::constructions::transitive_tournament(n)?;
    let p = hom_poset(&km, &kn)?;
    let mut out = Vec::new();
    for i in 0..p.len() {
        let cell = p.multihom(i);
        let maximal = (0..m).all(|v| {
            kn.vertices().difference(cell.0[v]).iter().all(|x| {
                let mut bigger = cell.clone();
                bigger.0[v].insert(x);
                !is_multihom(&bigger, &km, &kn).unwrap_or(false)
            })
        });
        if !maximal {
            continue;
        }
        let blocks: Vec<Vec<usize>> = cell.0.iter().map(|s| s.to_vec()).collect();
        let verified = is_staircase(&blocks, n);
        out.push(StaircaseCell {
            tree_edges: shifted_tree(&blocks),
            blocks,
            cell,
            verified,
        });
    }
    Ok(out)
}
