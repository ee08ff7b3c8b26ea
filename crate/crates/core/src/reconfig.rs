//! Reconfiguration of homomorphisms: connectivity and diameter of the
//! 1-skeleton, explicit meet paths into transitive tournaments, and the
//! oriented chromatic number.

use crate::constructions::{enumerate_tournaments, transitive_tournament};
use crate::digraph::{first_homomorphism, is_homomorphism, Digraph, VertexMap};
use crate::error::{Error, Result};
use crate::homcomplex::hom_one_skeleton;

pub fn is_connected_hom(g: &Digraph, h: &Digraph) -> Result<bool> {
    let s = hom_one_skeleton(g, h);
    if s.is_empty() {
        return Err(Error::EmptyHom);
    }
    Ok(s.is_connected())
}

/// Largest BFS eccentricity in the 1-skeleton of `Hom(G, H)`.
pub fn diameter(g: &Digraph, h: &Digraph) -> Result<usize> {
    let s = hom_one_skeleton(g, h);
    if s.is_empty() {
        return Err(Error::EmptyHom);
    }
    let mut best = 0;
    for v in 0..s.len() {
        let d = s.distances(v);
        let far = *d.iter().max().expect("nonempty");
        if far == usize::MAX {
            return Err(Error::Disconnected);
        }
        best = best.max(far);
    }
    Ok(best)
}

/// Walks from `f` down to `h = min(f, g)` and back up to `g`, one vertex at a
/// time. Consecutive maps differ at exactly one vertex, and the path has
/// `|{v : f(v) != g(v)}|` steps. Both endpoints are included.
pub fn meet_path(f: &VertexMap, g: &VertexMap, graph: &Digraph, n: usize) -> Result<Vec<VertexMap>> {
    let kn = transitive_tournament(n)?;
    for m in [f, g] {
        if !is_homomorphism(m, graph, &kn)? {
            return Err(Error::NotAHomomorphism(m.0.clone()));
        }
    }
    let descend = |from: &VertexMap, to: &VertexMap| -> Vec<VertexMap> {
        let mut lowered: Vec<usize> = (0..from.0.len()).filter(|&v| to.0[v] < from.0[v]).collect();
        lowered.sort_by_key(|&v| (to.0[v], v));
        let mut cur = from.clone();
        let mut path = vec![cur.clone()];
        for v in lowered {
            cur.0[v] = to.0[v];
            path.push(cur.clone());
        }
        path
    };
    let mut path = descend(f, g);
    let mut back = descend(g, f);
    back.pop();
    back.reverse();
    path.extend(back);
    Ok(path)
}

/// Smallest `n` such that `G` maps into some `n`-vertex tournament, with the
/// first such tournament in enumeration order.
pub fn oriented_chromatic_number(g: &Digraph) -> Result<(usize, Digraph)> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.has_loop(v)) {
        return Err(Error::HasLoop(v));
    }
    for n in 0..=7 {
        for t in enumerate_tournaments(n)? {
            if first_homomorphism(g, &t).is_some() {
                return Ok((n, t));
            }
        }
    }
    Err(Error::SizeCapExceeded {
        what: "oriented chromatic number",
        size: 8,
        cap: 7,
    })
}
