//! Discrete Morse matchings: the acyclicity test, the explicit matching on
//! `Hom(G, K_n)`, free-pair collapses and a randomized greedy matching.

use std::collections::{HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complexes::{Face, Poset, SimplicialComplex, DEFAULT_FACE_CAP};
use crate::digraph::{first_homomorphism, Digraph};
use crate::error::{Error, Result};
use crate::homcomplex::{hom_poset_with_cap, HomPoset, DEFAULT_CELL_CAP};
use crate::vertex_set::VertexSet;

/// Anything with elements `0..len` and a covering relation.
pub trait CoveringRelation {
    fn element_count(&self) -> usize;
    fn lower_covers_of(&self, i: usize) -> Vec<usize>;
}

impl CoveringRelation for Poset {
    fn element_count(&self) -> usize {
        self.len()
    }
    fn lower_covers_of(&self, i: usize) -> Vec<usize> {
        self.lower_covers(i).iter().map(|&x| x as usize).collect()
    }
}

impl CoveringRelation for HomPoset {
    fn element_count(&self) -> usize {
        self.len()
    }
    fn lower_covers_of(&self, i: usize) -> Vec<usize> {
        self.lower_covers(i)
    }
}

/// Pairs `(lower, upper)` along covering relations, plus unmatched cells.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
    pub critical: Vec<usize>,
}

/// Validates `m` against `p`, then looks for a directed cycle in the Hasse
/// diagram with matched covers pointing up and all others pointing down.
pub fn is_acyclic_matching<P: CoveringRelation>(p: &P, m: &Matching) -> Result<bool> {
    let n = p.element_count();
    let mut partner = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut mark = |x: usize| -> Result<()> {
        if x >= n {
            return Err(Error::InvalidMatching(format!("cell {x} out of range")));
        }
        if std::mem::replace(&mut seen[x], true) {
            return Err(Error::InvalidMatching(format!("cell {x} used twice")));
        }
        Ok(())
    };
    for &(lo, hi) in &m.pairs {
        mark(lo)?;
        mark(hi)?;
        partner[lo] = hi;
        partner[hi] = lo;
    }
    for &c in &m.critical {
        mark(c)?;
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return Err(Error::InvalidMatching(format!("cell {missing} is neither matched nor critical")));
    }
    let down: Vec<Vec<usize>> = (0..n).map(|i| p.lower_covers_of(i)).collect();
    for &(lo, hi) in &m.pairs {
        if !down[hi].contains(&lo) {
            return Err(Error::InvalidMatching(format!("{lo} is not covered by {hi}")));
        }
    }
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (y, ds) in down.iter().enumerate() {
        for &x in ds {
            if partner[x] == y {
                succ[x].push(y);
            } else {
                succ[y].push(x);
            }
        }
    }
    Ok(!has_cycle(&succ))
}

fn has_cycle(succ: &[Vec<usize>]) -> bool {
    // 0 unvisited, 1 on stack, 2 done.
    let mut state = vec![0u8; succ.len()];
    for s in 0..succ.len() {
        if state[s] != 0 {
            continue;
        }
        let mut stack = vec![(s, 0usize)];
        state[s] = 1;
        while let Some(&mut (v, ref mut k)) = stack.last_mut() {
            if *k < succ[v].len() {
                let w = succ[v][*k];
                *k += 1;
                match state[w] {
                    0 => {
                        state[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => return true,
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    false
}

/// The matching on `P(G, K_n)` together with the poset it lives on.
#[derive(Clone, Debug)]
pub struct TournamentMatching {
    pub poset: HomPoset,
    pub matching: Matching,
    /// `(vertex, value)` stages: sinks peeled layer by layer, each layer
    /// pinned to the next largest value.
    pub stages: Vec<(usize, usize)>,
}

/// Sinks of `G`, then sinks of what remains, and so on; smallest label first
/// within a layer.
fn sink_layers(g: &Digraph) -> Result<Vec<Vec<usize>>> {
    if !g.is_loopless() {
        return Err(Error::NotAcyclic);
    }
    let mut left = g.vertices();
    let mut layers = Vec::new();
    while !left.is_empty() {
        let sinks: Vec<usize> = left
            .iter()
            .filter(|&v| g.out_neighbors(v).intersection(left).is_empty())
            .collect();
        if sinks.is_empty() {
            return Err(Error::NotAcyclic);
        }
        for &v in &sinks {
            left.remove(v);
        }
        layers.push(sinks);
    }
    Ok(layers)
}

pub fn tournament_matching(g: &Digraph, n: usize) -> Result<TournamentMatching> {
    tournament_matching_with_cap(g, n, DEFAULT_CELL_CAP)
}

pub fn tournament_matching_with_cap(g: &Digraph, n: usize, cap: usize) -> Result<TournamentMatching> {
    let layers = sink_layers(g)?;
    let kn = crate::constructions::transitive_tournament(n)?;
    if first_homomorphism(g, &kn).is_none() {
        return Err(Error::EmptyHom);
    }
    let stages: Vec<(usize, usize)> = layers
        .iter()
        .enumerate()
        .flat_map(|(l, layer)| layer.iter().map(move |&a| (a, n - 1 - l)))
        .collect();
    let poset = hom_poset_with_cap(g, &kn, cap)?;
    let mut matching = Matching::default();
    let mut buf: Vec<VertexSet> = Vec::with_capacity(g.vertex_count());
    for i in 0..poset.len() {
        let cell = poset.cell(i);
        let first = stages
            .iter()
            .find(|&&(a, t)| cell[a] != VertexSet::singleton(t));
        match first {
            None => matching.critical.push(i),
            Some(&(a, t)) if !cell[a].contains(t) => {
                buf.clear();
                buf.extend_from_slice(cell);
                buf[a].insert(t);
                let j = poset.index_of(&buf).ok_or_else(|| {
                    Error::InvalidMatching(format!("adding {t} at vertex {a} leaves the poset"))
                })?;
                matching.pairs.push((i, j));
            }
            Some(_) => {}
        }
    }
    Ok(TournamentMatching {
        poset,
        matching,
        stages,
    })
}

/// Deterministic or seeded choice of the next free pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CollapseStrategy {
    /// Facets by (size, lexicographic), then free faces by (size, lexicographic).
    Lex,
    Random(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseResult {
    /// `(τ, σ)` in the order applied.
    pub log: Vec<(Face, Face)>,
    pub remaining: SimplicialComplex,
}

fn sorted_facets(x: &SimplicialComplex) -> Vec<Face> {
    let mut f = x.facets().to_vec();
    f.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    f
}

fn proper_faces(sigma: &[u32]) -> Vec<Face> {
    let k = sigma.len();
    if k == 0 || k >= 64 {
        return Vec::new();
    }
    let mut out: Vec<Face> = VertexSet::full(k)
        .nonempty_subsets()
        .filter(|s| s.len() < k)
        .map(|s| s.iter().map(|i| sigma[i]).collect())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn contains(a: &[u32], b: &[u32]) -> bool {
    b.iter().all(|v| a.binary_search(v).is_ok())
}

fn is_free(facets: &[Face], tau: &[u32], sigma: &[u32]) -> bool {
    tau.len() < sigma.len()
        && !tau.is_empty()
        && contains(sigma, tau)
        && facets.iter().any(|f| f.as_slice() == sigma)
        && facets
            .iter()
            .filter(|f| contains(f, tau))
            .count()
            == 1
}

fn apply_collapse(x: &SimplicialComplex, tau: &[u32], sigma: &[u32]) -> SimplicialComplex {
    let mut facets: Vec<Face> = x
        .facets()
        .iter()
        .filter(|f| f.as_slice() != sigma)
        .cloned()
        .collect();
    for &v in tau {
        facets.push(sigma.iter().copied().filter(|&w| w != v).collect());
    }
    SimplicialComplex::from_facets(facets)
}

/// Collapses free pairs until none remain.
pub fn collapse_free_pairs(x: &SimplicialComplex, strategy: CollapseStrategy) -> CollapseResult {
    let mut rng = match strategy {
        CollapseStrategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        CollapseStrategy::Lex => None,
    };
    let mut current = x.clone();
    let mut log = Vec::new();
    loop {
        let facets = sorted_facets(&current);
        let next = match rng.as_mut() {
            None => facets.iter().find_map(|sigma| {
                proper_faces(sigma)
                    .into_iter()
                    .find(|tau| is_free(&facets, tau, sigma))
                    .map(|tau| (tau, sigma.clone()))
            }),
            Some(rng) => {
                let all: Vec<(Face, Face)> = facets
                    .iter()
                    .flat_map(|sigma| {
                        proper_faces(sigma)
                            .into_iter()
                            .filter(|tau| is_free(&facets, tau, sigma))
                            .map(|tau| (tau, sigma.clone()))
                            .collect::<Vec<_>>()
                    })
                    .collect();
                all.choose(rng).cloned()
            }
        };
        let Some((tau, sigma)) = next else { break };
        current = apply_collapse(&current, &tau, &sigma);
        log.push((tau, sigma));
    }
    CollapseResult {
        log,
        remaining: current,
    }
}

/// Re-applies a collapse log, checking freeness at every step.
pub fn replay_collapses(x: &SimplicialComplex, log: &[(Face, Face)]) -> Result<SimplicialComplex> {
    let mut current = x.clone();
    for (tau, sigma) in log {
        if !is_free(current.facets(), tau, sigma) {
            return Err(Error::InvalidMatching(format!("({tau:?}, {sigma:?}) is not a free pair")));
        }
        current = apply_collapse(&current, tau, sigma);
    }
    Ok(current)
}

/// Greedy random discrete Morse matching: collapse a random free pair when
/// one exists, otherwise declare a random maximal face critical. Returns the
/// number of critical faces per dimension.
pub fn random_discrete_morse(x: &SimplicialComplex, seed: u64) -> Result<Vec<usize>> {
    let by_dim = x.faces(DEFAULT_FACE_CAP)?;
    let faces: Vec<Face> = by_dim.iter().flatten().cloned().collect();
    let index: HashMap<&[u32], usize> = faces.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
    let n = faces.len();
    let mut down: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, f) in faces.iter().enumerate() {
        if f.len() < 2 {
            continue;
        }
        for skip in 0..f.len() {
            let sub: Face = f.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v).collect();
            let j = index[sub.as_slice()];
            down[i].push(j);
            up[j].push(i);
        }
    }
    let mut alive = vec![true; n];
    let mut cofaces: Vec<usize> = up.iter().map(Vec::len).collect();
    let mut left = n;
    let mut critical = vec![0usize; by_dim.len()];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<usize> = (0..n).filter(|&i| cofaces[i] == 1).collect();
    let mut candidate_set: HashSet<usize> = candidates.iter().copied().collect();

    let free_partner = |i: usize, alive: &[bool], cofaces: &[usize]| -> Option<usize> {
        if !alive[i] || cofaces[i] != 1 {
            return None;
        }
        let s = *up[i].iter().find(|&&s| alive[s])?;
        (cofaces[s] == 0).then_some(s)
    };

    while left > 0 {
        let mut removed: Vec<usize> = Vec::new();
        while !candidates.is_empty() {
            let k = rng.gen_range(0..candidates.len());
            let i = candidates.swap_remove(k);
            candidate_set.remove(&i);
            if let Some(s) = free_partner(i, &alive, &cofaces) {
                removed.push(s);
                removed.push(i);
                break;
            }
        }
        if removed.is_empty() {
            let maximal: Vec<usize> = (0..n).filter(|&i| alive[i] && cofaces[i] == 0).collect();
            let &c = maximal.choose(&mut rng).expect("a nonempty complex has a maximal face");
            critical[faces[c].len() - 1] += 1;
            removed.push(c);
        }
        for r in removed {
            alive[r] = false;
            left -= 1;
            for &d in &down[r] {
                cofaces[d] -= 1;
                let push = |x: usize, cands: &mut Vec<usize>, set: &mut HashSet<usize>| {
                    if alive[x] && cofaces[x] == 1 && set.insert(x) {
                        cands.push(x);
                    }
                };
                push(d, &mut candidates, &mut candidate_set);
                if cofaces[d] == 0 {
                    for &e in &down[d] {
                        push(e, &mut candidates, &mut candidate_set);
                    }
                }
            }
        }
    }
    while critical.last() == Some(&0) && critical.len() > 1 {
        critical.pop();
    }
    Ok(critical)
}
