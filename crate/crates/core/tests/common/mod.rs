#![allow(dead_code)]

use std::collections::HashSet;

use dihom::constructions::canonical_code;
use dihom::homology::{Group, HomologyGroups};
use dihom::Digraph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Random digraph with each ordered pair present with probability `p`.
pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, p: f64, loops: bool) -> Digraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if (u != v || loops) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Digraph::from_edges(n, edges).unwrap()
}

/// As `random_digraph` with the vertex count drawn from `sizes`.
pub fn random_digraph_in<R: Rng>(rng: &mut R, sizes: std::ops::RangeInclusive<usize>, p: f64, loops: bool) -> Digraph {
    let n = rng.gen_range(sizes);
    random_digraph(rng, n, p, loops)
}

/// Random acyclic digraph with shuffled labels.
pub fn random_dag<R: Rng>(rng: &mut R, n: usize, p: f64) -> Digraph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((perm[i], perm[j]));
            }
        }
    }
    Digraph::from_edges(n, edges).unwrap()
}

/// Loopless, at most one edge between any two vertices.
pub fn random_simple<R: Rng>(rng: &mut R, n: usize) -> Digraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match rng.gen_range(0..3) {
                1 => edges.push((i, j)),
                2 => edges.push((j, i)),
                _ => {}
            }
        }
    }
    Digraph::from_edges(n, edges).unwrap()
}

/// Every acyclic digraph on `n` vertices, one per isomorphism class.
pub fn dags_up_to_iso(n: usize) -> Vec<Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        let g = Digraph::from_edges(n, edges).unwrap();
        if seen.insert(canonical_code(&g).unwrap()) {
            out.push(g);
        }
    }
    out
}

/// Every digraph on `n` vertices, loops allowed, labelled.
pub fn all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    (0u64..1 << (n * n)).map(move |mask| {
        let edges = (0..n * n).filter(|k| mask >> k & 1 == 1).map(|k| (k / n, k % n));
        Digraph::from_edges(n, edges).unwrap()
    })
}

/// Every digraph on `n` vertices up to isomorphism, loops allowed.
pub fn digraphs_up_to_iso(n: usize) -> Vec<Digraph> {
    let mut seen = HashSet::new();
    all_digraphs(n).filter(|g| seen.insert(canonical_code(g).unwrap())).collect()
}

/// `h` with one extra free generator in dimension `dim`.
pub fn add_free(h: &HomologyGroups, dim: isize) -> HomologyGroups {
    let top = h.top_dimension().unwrap_or(-1).max(dim);
    let groups = (-1..=top)
        .map(|d| {
            let mut g: Group = h.group(d);
            if d == dim {
                g.rank += 1;
            }
            g
        })
        .collect();
    HomologyGroups::new(groups)
}
