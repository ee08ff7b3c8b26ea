//! Named digraph families, Mycielskians, sphere tournaments, tournament
//! enumeration up to isomorphism, and a handful of fixed example graphs.

use std::sync::OnceLock;

use crate::digraph::{product, quotient, Digraph};
use crate::error::{Error, Result};

/// Edges `i -> j` for all `i < j`.
pub fn transitive_tournament(n: usize) -> Result<Digraph> {
    Digraph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `0 -> 1 -> ... -> n-1`.
pub fn directed_path(n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::InvalidSize("a path needs at least one vertex".into()));
    }
    Digraph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `0 -> 1 -> ... -> n-1 -> 0`.
pub fn directed_cycle(n: usize) -> Result<Digraph> {
    if n < 3 {
        return Err(Error::InvalidSize(format!(
            "a directed cycle needs at least 3 vertices, got {n}"
        )));
    }
    Digraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Vertices `0..=n`, all looped, with `i <-> i+1`.
pub fn interval_bidirected(n: usize) -> Result<Digraph> {
    let loops = (0..=n).map(|i| (i, i));
    let steps = (0..n).flat_map(|i| [(i, i + 1), (i + 1, i)]);
    Digraph::from_edges(n + 1, loops.chain(steps))
}

/// Vertices `0..=n`, all looped, with `i -> i+1`.
pub fn interval_directed_looped(n: usize) -> Result<Digraph> {
    let loops = (0..=n).map(|i| (i, i));
    Digraph::from_edges(n + 1, loops.chain((0..n).map(|i| (i, i + 1))))
}

/// Looped path on `0..=n`; `bits[i]` orients the step between `i` and `i+1`
/// forwards when true and backwards when false.
pub fn line_digraph(n: usize, bits: &[bool]) -> Result<Digraph> {
    if bits.len() != n {
        return Err(Error::InvalidSize(format!(
            "expected {n} orientation bits, got {}",
            bits.len()
        )));
    }
    let loops = (0..=n).map(|i| (i, i));
    let steps = bits
        .iter()
        .enumerate()
        .map(|(i, &fwd)| if fwd { (i, i + 1) } else { (i + 1, i) });
    Digraph::from_edges(n + 1, loops.chain(steps))
}

/// Vertices `0..m` point to every vertex of `m..m+n`.
pub fn complete_bipartite_digraph(m: usize, n: usize) -> Result<Digraph> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidSize("both sides must be nonempty".into()));
    }
    Digraph::from_edges(m + n, (0..m).flat_map(|a| (m..m + n).map(move |b| (a, b))))
}

/// The single looped vertex, the terminal object.
pub fn looped_vertex() -> Digraph {
    Digraph::from_edges(1, [(0, 0)]).expect("one vertex")
}

/// The three-vertex interval used by Mycielskian variant 1, 2 or 3.
pub fn mycielski_interval(variant: u8) -> Result<Digraph> {
    let edges: &[(usize, usize)] = match variant {
        1 => &[(0, 0), (0, 1), (1, 2)],
        2 => &[(0, 0), (1, 0), (2, 1)],
        3 => &[(1, 1), (0, 1), (1, 2)],
        v => return Err(Error::InvalidVariant(v)),
    };
    Digraph::from_edges(3, edges.iter().copied())
}

/// `G × I^k` followed by identifying layer 2 (and layer 0 for `k = 3`).
///
/// Output labels list the layers in order. For variants 1 and 2 they are
/// `(g,0)` for each g, then `(g,1)`, then the merged layer 2. For variant 3
/// the merged layer 0 comes first, then `(g,1)`, then the merged layer 2.
pub fn mycielskian(g: &Digraph, variant: u8) -> Result<Digraph> {
    let interval = mycielski_interval(variant)?;
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidSize("graph has no vertices".into()));
    }
    let p = product(g, &interval)?;
    let at = |v: usize, t: usize| v * 3 + t;
    let layer = |t: usize| (0..n).map(move |v| vec![at(v, t)]);
    let merged = |t: usize| (0..n).map(|v| at(v, t)).collect::<Vec<_>>();
    let classes: Vec<Vec<usize>> = if variant == 3 {
        std::iter::once(merged(0))
            .chain(layer(1))
            .chain(std::iter::once(merged(2)))
            .collect()
    } else {
        layer(0)
            .chain(layer(1))
            .chain(std::iter::once(merged(2)))
            .collect()
    };
    quotient(&p, &classes)
}

/// The tournament on `2n+3` vertices whose out-neighborhood complex is an
/// `n`-sphere.
pub fn sphere_tournament(n: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::InvalidSize("sphere tournaments start at n = 1".into()));
    }
    let size = 2 * n + 3;
    // Built with 1-indexed labels and shifted at the end.
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); size + 1];
    if n == 1 {
        out[5] = vec![1, 3, 4];
        out[4] = vec![2, 3];
        out[3] = vec![1, 2];
        out[2] = vec![1, 5];
        out[1] = vec![4];
    } else {
        out[1] = vec![n + 3];
        for i in 2..=n + 1 {
            out[i] = (1..i).chain([n + 2 + i]).collect();
        }
        for i in n + 2..=size {
            out[i] = (1..i).filter(|&j| j + n + 2 != i).collect();
        }
    }
    let edges = out
        .iter()
        .enumerate()
        .flat_map(|(i, s)| s.iter().map(move |&j| (i - 1, j - 1)));
    Digraph::from_edges(size, edges)
}

/// Exactly one edge between each pair of distinct vertices and no loops.
pub fn is_tournament(g: &Digraph) -> bool {
    let n = g.vertex_count();
    g.is_loopless()
        && (0..n).all(|i| (i + 1..n).all(|j| g.has_edge(i, j) != g.has_edge(j, i)))
}

const CANONICAL_LIMIT: usize = 8;

/// Lexicographically least adjacency code over all vertex orderings.
///
/// For the ordering `p0, p1, ..` the code lists, for each `k`, the bits
/// `A(pk,pk), A(p0,pk), A(pk,p0), A(p1,pk), A(pk,p1), ..`. Graphs are
/// isomorphic iff their codes agree.
pub fn canonical_code(g: &Digraph) -> Result<u64> {
    let n = g.vertex_count();
    if n > CANONICAL_LIMIT {
        return Err(Error::SizeCapExceeded {
            what: "canonical form vertices",
            size: n as u128,
            cap: CANONICAL_LIMIT as u128,
        });
    }
    let mut best = (u64::MAX, usize::MAX);
    let mut order = Vec::with_capacity(n);
    canon_search(g, &mut order, 0, 0, &mut best);
    Ok(if n == 0 { 0 } else { best.0 })
}

/// Returns the canonical relabelling of `g`: the graph whose identity
/// ordering realizes the canonical code.
pub fn canonical_form(g: &Digraph) -> Result<Digraph> {
    let n = g.vertex_count();
    let code = canonical_code(g)?;
    let mut edges = Vec::new();
    let mut bit = n * n;
    let mut take = || {
        bit -= 1;
        code >> bit & 1 == 1
    };
    for k in 0..n {
        if take() {
            edges.push((k, k));
        }
        for j in 0..k {
            if take() {
                edges.push((j, k));
            }
            if take() {
                edges.push((k, j));
            }
        }
    }
    Digraph::from_edges(n, edges)
}

fn canon_search(
    g: &Digraph,
    order: &mut Vec<usize>,
    code: u64,
    bits: usize,
    best: &mut (u64, usize),
) {
    let n = g.vertex_count();
    let k = order.len();
    if k == n {
        if code < best.0 || best.1 == usize::MAX {
            *best = (code, bits);
        }
        return;
    }
    for v in 0..n {
        if order.contains(&v) {
            continue;
        }
        let mut c = code << 1 | g.has_loop(v) as u64;
        for &u in order.iter() {
            c = c << 1 | g.has_edge(u, v) as u64;
            c = c << 1 | g.has_edge(v, u) as u64;
        }
        let nbits = bits + 2 * k + 1;
        if best.1 != usize::MAX {
            let best_prefix = best.0 >> (best.1 - nbits);
            if c > best_prefix {
                continue;
            }
        }
        order.push(v);
        canon_search(g, order, c, nbits, best);
        order.pop();
    }
}

/// One representative per isomorphism class of tournaments on `n` vertices,
/// each in canonical form, sorted by canonical code.
pub fn enumerate_tournaments(n: usize) -> Result<Vec<Digraph>> {
    const MAX: usize = 7;
    if n > MAX {
        return Err(Error::SizeCapExceeded {
            what: "tournament enumeration vertices",
            size: n as u128,
            cap: MAX as u128,
        });
    }
    static CACHE: OnceLock<Vec<Vec<Digraph>>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        let mut levels = vec![vec![Digraph::empty(0).expect("empty graph")]];
        for m in 1..=MAX {
            let mut found: Vec<(u64, Digraph)> = Vec::new();
            for base in &levels[m - 1] {
                for mask in 0u32..1 << (m - 1) {
                    let mut edges: Vec<(usize, usize)> = base.edges().collect();
                    for u in 0..m - 1 {
                        edges.push(if mask >> u & 1 == 1 {
                            (u, m - 1)
                        } else {
                            (m - 1, u)
                        });
                    }
                    let t = Digraph::from_edges(m, edges).expect("small graph");
                    let code = canonical_code(&t).expect("small graph");
                    found.push((code, t));
                }
            }
            found.sort_by_key(|(c, _)| *c);
            found.dedup_by_key(|(c, _)| *c);
            levels.push(
                found
                    .into_iter()
                    .map(|(_, t)| canonical_form(&t).expect("small graph"))
                    .collect(),
            );
        }
        levels
    });
    Ok(all[n].clone())
}

fn signature(g: &Digraph, v: usize) -> (usize, usize, bool) {
    (g.out_degree(v), g.in_degree(v), g.has_loop(v))
}

/// Visits every isomorphism `g -> h` (as `map[v]` = image of v) until
/// `visit` returns false.
fn for_each_isomorphism<F: FnMut(&[usize]) -> bool>(g: &Digraph, h: &Digraph, mut visit: F) {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return;
    }
    let mut sg: Vec<_> = (0..n).map(|v| signature(g, v)).collect();
    let mut sh: Vec<_> = (0..n).map(|v| signature(h, v)).collect();
    let (gs, hs) = (sg.clone(), sh.clone());
    sg.sort();
    sh.sort();
    if sg != sh {
        return;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec<F: FnMut(&[usize]) -> bool>(
        g: &Digraph,
        h: &Digraph,
        gs: &[(usize, usize, bool)],
        hs: &[(usize, usize, bool)],
        v: usize,
        map: &mut [usize],
        used: &mut [bool],
        visit: &mut F,
    ) -> bool {
        if v == map.len() {
            return visit(map);
        }
        for x in 0..map.len() {
            if used[x] || gs[v] != hs[x] {
                continue;
            }
            let consistent = (0..v).all(|u| {
                g.has_edge(u, v) == h.has_edge(map[u], x) && g.has_edge(v, u) == h.has_edge(x, map[u])
            });
            if !consistent {
                continue;
            }
            map[v] = x;
            used[x] = true;
            let go_on = rec(g, h, gs, hs, v + 1, map, used, visit);
            used[x] = false;
            if !go_on {
                return false;
            }
        }
        true
    }
    rec(g, h, &gs, &hs, 0, &mut map, &mut used, &mut visit);
}

pub fn find_isomorphism(g: &Digraph, h: &Digraph) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_isomorphism(g, h, |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

pub fn is_isomorphic(g: &Digraph, h: &Digraph) -> bool {
    find_isomorphism(g, h).is_some()
}

pub fn automorphism_group_order(g: &Digraph) -> u64 {
    let mut count = 0;
    for_each_isomorphism(g, g, |_| {
        count += 1;
        true
    });
    count
}

/// The bidirected edge `a <-> b` and the six-vertex graph `H` used to
/// separate the three homotopy relations.
pub fn figure8_fixture() -> (Digraph, Digraph) {
    let g = Digraph::from_edges(2, [(0, 1), (1, 0)]).expect("fixture");
    let h = Digraph::from_edges(
        6,
        [
            (0, 2),
            (1, 3),
            (0, 1),
            (1, 0),
            (2, 3),
            (3, 2),
            (4, 2),
            (5, 3),
            (4, 5),
            (5, 4),
        ],
    )
    .expect("fixture");
    (g, h)
}

/// Five-vertex tournament with `Hom(C3, T5)` a 15-cycle.
pub fn figure2_t5() -> Digraph {
    Digraph::from_edges(
        5,
        [
            (1, 0),
            (2, 0),
            (0, 3),
            (0, 4),
            (2, 1),
            (3, 1),
            (1, 4),
            (3, 2),
            (4, 2),
            (4, 3),
        ],
    )
    .expect("fixture")
}

/// Seven-vertex tournament with `Hom(C3, T7)` a Möbius strip.
pub fn figure4_t7() -> Digraph {
    let one_indexed = [
        (1, 5),
        (1, 6),
        (1, 7),
        (2, 1),
        (3, 1),
        (4, 1),
        (3, 2),
        (4, 2),
        (5, 2),
        (2, 6),
        (2, 7),
        (4, 3),
        (5, 3),
        (6, 3),
        (3, 7),
        (5, 4),
        (6, 4),
        (7, 4),
        (6, 5),
        (7, 5),
        (7, 6),
    ];
    Digraph::from_edges(7, one_indexed.iter().map(|&(u, v)| (u - 1, v - 1))).expect("fixture")
}

/// Non-transitive four-vertex tournament with contractible `Hom(K2, T4)`.
pub fn figure9_t4() -> Digraph {
    let one_indexed = [(2, 1), (1, 3), (3, 2), (3, 4), (2, 4), (1, 4)];
    Digraph::from_edges(4, one_indexed.iter().map(|&(u, v)| (u - 1, v - 1))).expect("fixture")
}

/// The directed triangle with a pendant edge `3 -> 0`.
pub fn c3_1() -> Digraph {
    Digraph::from_edges(4, [(0, 1), (1, 2), (2, 0), (3, 0)]).expect("fixture")
}

/// Five-vertex graph whose out- and in-neighborhood complexes are drawn as
/// an example.
pub fn figure6_graph() -> Digraph {
    let one_indexed = [(1, 2), (3, 1), (3, 2), (4, 1), (3, 4), (5, 1), (5, 3), (5, 4), (2, 4)];
    Digraph::from_edges(5, one_indexed.iter().map(|&(u, v)| (u - 1, v - 1))).expect("fixture")
}

/// One row of the reference table of five-vertex tournaments.
#[derive(Clone, Debug)]
pub struct Table1Row {
    pub out_neighbors: [&'static [usize]; 5],
    pub outdegrees: [usize; 5],
    /// Free ranks of reduced homology in degrees 0, 1, 2.
    pub ranks: [usize; 3],
}

impl Table1Row {
    pub fn tournament(&self) -> Digraph {
        Digraph::from_edges(
            5,
            self.out_neighbors
                .iter()
                .enumerate()
                .flat_map(|(u, s)| s.iter().map(move |&v| (u, v))),
        )
        .expect("reference row")
    }
}

pub const TABLE1: [Table1Row; 12] = [
    Table1Row { out_neighbors: [&[], &[0], &[0, 1], &[0, 1, 2], &[0, 1, 2, 3]], outdegrees: [4, 3, 2, 1, 0], ranks: [0, 0, 0] },
    Table1Row { out_neighbors: [&[2], &[0], &[1], &[0, 1, 2], &[0, 1, 2, 3]], outdegrees: [4, 3, 1, 1, 1], ranks: [0, 0, 0] },
    Table1Row { out_neighbors: [&[], &[0, 3], &[0, 1], &[0, 2], &[0, 1, 2, 3]], outdegrees: [4, 2, 2, 2, 0], ranks: [0, 0, 0] },
    Table1Row { out_neighbors: [&[3], &[0], &[0, 1], &[1, 2], &[0, 1, 2, 3]], outdegrees: [4, 2, 2, 1, 1], ranks: [0, 0, 0] },
    Table1Row { out_neighbors: [&[], &[0], &[0, 1, 4], &[0, 1, 2], &[0, 1, 3]], outdegrees: [3, 3, 3, 1, 0], ranks: [0, 0, 0] },
    Table1Row { out_neighbors: [&[], &[0, 3, 4], &[0, 1], &[0, 2], &[0, 2, 3]], outdegrees: [3, 3, 2, 2, 0], ranks: [0, 0, 0] },
    Table1Row { out_neighbors: [&[3], &[0], &[0, 1], &[1, 2, 4], &[0, 1, 2]], outdegrees: [3, 3, 2, 1, 1], ranks: [1, 0, 0] },
    Table1Row { out_neighbors: [&[3], &[0], &[0, 1, 4], &[1, 2], &[0, 1, 3]], outdegrees: [3, 3, 2, 1, 1], ranks: [0, 0, 0] },
    Table1Row { out_neighbors: [&[3, 4], &[0], &[0, 1], &[1, 2], &[1, 2, 3]], outdegrees: [3, 2, 2, 2, 1], ranks: [0, 0, 0] },
    Table1Row { out_neighbors: [&[3], &[0, 4], &[0, 1], &[1, 2], &[0, 2, 3]], outdegrees: [3, 2, 2, 2, 1], ranks: [0, 1, 0] },
    Table1Row { out_neighbors: [&[4], &[0, 3], &[0, 1], &[0, 2], &[1, 2, 3]], outdegrees: [3, 2, 2, 2, 1], ranks: [1, 2, 0] },
    Table1Row { out_neighbors: [&[3, 4], &[0, 4], &[0, 1], &[1, 2], &[2, 3]], outdegrees: [2, 2, 2, 2, 2], ranks: [0, 1, 0] },
];

/// Sorted descending outdegree sequence.
pub fn outdegree_sequence(g: &Digraph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.vertex_count()).map(|v| g.out_degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}
