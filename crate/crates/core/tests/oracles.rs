//! Brute-force oracles checked against the library on small inputs.

mod common;

use std::collections::{BTreeSet, HashSet};

use dihom::complexes::{
    face_poset, order_complex, out_neighborhood_complex, universality_graph, DEFAULT_FACE_CAP,
};
use dihom::constructions::{
    complete_bipartite_digraph, directed_cycle, enumerate_tournaments, figure2_t5, sphere_tournament,
    transitive_tournament, mycielskian,
};
use dihom::digraph::{
    contains_bipartite, count_homomorphisms, enumerate_homomorphisms, exponential, is_homomorphism,
    product, coproduct,
};
use dihom::homcomplex::{hom_poset, is_multihom, MultiHom};
use dihom::homology::{reduced_homology, smith_normal_form, SparseMatrix};
use dihom::morse::random_discrete_morse;
use dihom::reconfig::{meet_path, oriented_chromatic_number};
use dihom::{Digraph, SimplicialComplex, VertexMap, VertexSet};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{random_dag, random_digraph, random_digraph_in};

fn k(n: usize) -> Digraph {
    transitive_tournament(n).unwrap()
}

/// Every map `V(G) -> V(H)` in lexicographic order.
fn all_maps(g: usize, h: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..g {
        out = out
            .into_iter()
            .flat_map(|m| {
                (0..h).map(move |x| {
                    let mut m = m.clone();
                    m.push(x);
                    m
                })
            })
            .collect();
    }
    out
}

fn brute_homs(g: &Digraph, h: &Digraph) -> Vec<Vec<usize>> {
    all_maps(g.vertex_count(), h.vertex_count())
        .into_iter()
        .filter(|f| g.edges().all(|(u, v)| h.has_edge(f[u], f[v])))
        .collect()
}

#[test]
fn product_of_edges_by_rule() {
    let k2 = k(2);
    let p = product(&k2, &k2).unwrap();
    let mut expected = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    if k2.has_edge(a, c) && k2.has_edge(b, d) {
                        expected.push((a * 2 + b, c * 2 + d));
                    }
                }
            }
        }
    }
    assert_eq!(p.edges().collect::<Vec<_>>(), expected);
    assert_eq!(expected, vec![(0, 3)]);
}

#[test]
fn homomorphisms_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let g = random_digraph_in(&mut rng, 0..=4, 0.4, true);
        let h = random_digraph_in(&mut rng, 1..=4, 0.5, true);
        let brute = brute_homs(&g, &h);
        let found: Vec<Vec<usize>> = enumerate_homomorphisms(&g, &h).into_iter().map(|f| f.0).collect();
        assert_eq!(found, brute);
        assert_eq!(count_homomorphisms(&g, &h), brute.len());
        // Looped vertices of H^G are exactly the homomorphisms.
        let e = exponential(&h, &g, 1 << 20).unwrap();
        let looped: Vec<Vec<usize>> = (0..e.vertex_count()).filter(|&i| e.has_loop(i)).map(|i| e.maps[i].0.clone()).collect();
        assert_eq!(looped, brute);
    }
}

#[test]
fn exponential_adjunction_on_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..60 {
        let g = random_digraph_in(&mut rng, 1..=3, 0.4, true);
        let h = random_digraph_in(&mut rng, 1..=3, 0.4, true);
        let kk = random_digraph_in(&mut rng, 1..=3, 0.5, true);
        let kh = exponential(&kk, &h, 1 << 20).unwrap().to_digraph().unwrap();
        assert_eq!(
            count_homomorphisms(&product(&g, &h).unwrap(), &kk),
            count_homomorphisms(&g, &kh)
        );
    }
}

#[test]
fn bipartite_containment_by_subsets() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let g = random_digraph_in(&mut rng, 1..=6, 0.5, false);
        let n = g.vertex_count();
        for m in 1..=3 {
            for l in 1..=3 {
                let brute = VertexSet::full(n).nonempty_subsets().filter(|a| a.len() == m).any(|a| {
                    VertexSet::full(n)
                        .difference(a)
                        .nonempty_subsets()
                        .filter(|b| b.len() == l)
                        .any(|b| a.iter().all(|x| b.iter().all(|y| g.has_edge(x, y))))
                });
                assert_eq!(contains_bipartite(&g, m, l), brute, "{g:?} {m} {l}");
            }
        }
    }
    assert!(contains_bipartite(&k(4), 2, 2));
    assert!(contains_bipartite(&complete_bipartite_digraph(2, 3).unwrap(), 2, 3));
}

/// All tuples of nonempty subsets, filtered by the multihom condition.
fn brute_multihoms(g: &Digraph, h: &Digraph) -> Vec<Vec<VertexSet>> {
    let subsets: Vec<VertexSet> = VertexSet::full(h.vertex_count()).nonempty_subsets().collect();
    let mut out = vec![Vec::new()];
    for _ in 0..g.vertex_count() {
        out = out
            .into_iter()
            .flat_map(|m| {
                subsets.iter().map(move |&s| {
                    let mut m = m.clone();
                    m.push(s);
                    m
                })
            })
            .collect();
    }
    out.retain(|a| {
        g.edges()
            .all(|(u, v)| a[u].iter().all(|x| a[v].iter().all(|y| h.has_edge(x, y))))
    });
    out.sort();
    out
}

#[test]
fn hom_poset_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..80 {
        let g = random_digraph_in(&mut rng, 1..=3, 0.4, true);
        let h = random_digraph_in(&mut rng, 1..=4, 0.5, true);
        let p = hom_poset(&g, &h).unwrap();
        let mut cells: Vec<Vec<VertexSet>> = p.cells().map(|c| c.to_vec()).collect();
        cells.sort();
        assert_eq!(cells, brute_multihoms(&g, &h));
        for c in &cells {
            assert!(is_multihom(&MultiHom(c.clone()), &g, &h).unwrap());
        }
    }
    let p = hom_poset(&k(2), &k(4)).unwrap();
    assert_eq!(p.len(), 17);
    assert_eq!(brute_multihoms(&k(2), &k(4)).len(), 17);
}

/// Lexicographically smallest adjacency matrix over all relabellings.
fn brute_canonical(g: &Digraph) -> Vec<bool> {
    let n = g.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let m: Vec<bool> = (0..n * n).map(|i| g.has_edge(perm[i / n], perm[i % n])).collect();
        if best.as_ref().is_none_or(|b| m < *b) {
            best = Some(m);
        }
        // Next permutation.
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    best.unwrap_or_default()
}

#[test]
fn tournament_classes_by_brute_force() {
    for n in 1..=5 {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut classes = HashSet::new();
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs.iter().enumerate().map(|(b, &(i, j))| if mask >> b & 1 == 1 { (i, j) } else { (j, i) });
            classes.insert(brute_canonical(&Digraph::from_edges(n, edges).unwrap()));
        }
        let found = enumerate_tournaments(n).unwrap();
        assert_eq!(found.len(), classes.len(), "n = {n}");
        let found: HashSet<Vec<bool>> = found.iter().map(brute_canonical).collect();
        assert_eq!(found, classes);
    }
    assert_eq!(enumerate_tournaments(3).unwrap().len(), 2);
}

#[test]
fn oriented_chromatic_number_of_c5_by_search() {
    // Labelled tournaments on k vertices admitting a homomorphism from C5.
    let c5 = directed_cycle(5).unwrap();
    let colorable = |n: usize| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        (0u32..1 << pairs.len()).any(|mask| {
            let edges = pairs.iter().enumerate().map(|(b, &(i, j))| if mask >> b & 1 == 1 { (i, j) } else { (j, i) });
            !brute_homs(&c5, &Digraph::from_edges(n, edges).unwrap()).is_empty()
        })
    };
    let oracle = (1..=5).find(|&n| colorable(n)).unwrap();
    assert_eq!(oracle, 5);
    assert_eq!(oriented_chromatic_number(&c5).unwrap().0, oracle);
}

/// `d_k` = gcd of all `k x k` minors; invariant factors are `d_k / d_{k-1}`.
fn determinantal_invariants(m: &[Vec<i64>]) -> (usize, Vec<u64>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    fn det(m: &[Vec<i64>], r: &[usize], c: &[usize]) -> BigInt {
        if r.is_empty() {
            return BigInt::from(1);
        }
        let mut total = BigInt::zero();
        for (j, &cj) in c.iter().enumerate() {
            let rest: Vec<usize> = c.iter().copied().filter(|&x| x != cj).collect();
            let term = BigInt::from(m[r[0]][cj]) * det(m, &r[1..], &rest);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }
    fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|s| s.count_ones() as usize == k)
            .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect())
            .collect()
    }
    let mut prev = BigInt::from(1);
    let mut factors = Vec::new();
    for size in 1..=rows.min(cols) {
        let mut d = BigInt::zero();
        for r in choose(rows, size) {
            for c in choose(cols, size) {
                d = d.gcd(&det(m, &r, &c));
            }
        }
        if d.is_zero() {
            break;
        }
        factors.push((&d / &prev).abs());
        prev = d;
    }
    let rank = factors.len();
    let torsion = factors
        .into_iter()
        .filter(|f| *f != BigInt::from(1))
        .map(|f| u64::try_from(f).unwrap())
        .collect();
    (rank, torsion)
}

#[test]
fn smith_normal_form_against_minors() {
    assert_eq!(determinantal_invariants(&[vec![2, 4], vec![6, 8]]), (2, vec![2, 4]));
    assert_eq!(
        smith_normal_form(&SparseMatrix::from_dense(&[vec![2, 4], vec![6, 8]])).unwrap(),
        (2, vec![2, 4])
    );
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..300 {
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=4);
        let m: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| if rng.gen_bool(0.4) { 0 } else { rng.gen_range(-6..=6) }).collect())
            .collect();
        assert_eq!(smith_normal_form(&SparseMatrix::from_dense(&m)).unwrap(), determinantal_invariants(&m), "{m:?}");
    }
}

/// Rank over the rationals by fraction-free elimination.
fn rational_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let mut rank = 0;
    let cols = m.first().map_or(0, Vec::len);
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let (a, b) = (m[rank][c].clone(), m[r][c].clone());
                for j in 0..cols {
                    let v = &m[r][j] * &a - &m[rank][j] * &b;
                    m[r][j] = v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced Betti numbers from the simplicial boundary ranks.
fn betti_oracle(x: &SimplicialComplex) -> Vec<i64> {
    if x.is_void() {
        return vec![1];
    }
    let mut by_dim: Vec<Vec<Vec<u32>>> = vec![vec![Vec::new()]];
    let mut all: BTreeSet<Vec<u32>> = BTreeSet::new();
    for f in x.facets() {
        for s in 0u32..1 << f.len() {
            all.insert((0..f.len()).filter(|i| s >> i & 1 == 1).map(|i| f[i]).collect());
        }
    }
    for f in all {
        if f.is_empty() {
            continue;
        }
        if by_dim.len() <= f.len() {
            by_dim.resize(f.len() + 1, Vec::new());
        }
        by_dim[f.len()].push(f);
    }
    let ranks: Vec<usize> = (1..by_dim.len())
        .map(|d| {
            let m: Vec<Vec<BigInt>> = by_dim[d - 1]
                .iter()
                .map(|row| {
                    by_dim[d]
                        .iter()
                        .map(|col| match col.iter().position(|v| !row.contains(v)) {
                            Some(i) if col.len() == row.len() + 1 && row.iter().all(|v| col.contains(v)) => {
                                BigInt::from(if i % 2 == 0 { 1 } else { -1 })
                            }
                            _ => BigInt::zero(),
                        })
                        .collect()
                })
                .collect();
            rational_rank(m)
        })
        .collect();
    (0..by_dim.len())
        .map(|d| {
            let out = if d == 0 { 0 } else { ranks[d - 1] };
            let inn = ranks.get(d).copied().unwrap_or(0);
            by_dim[d].len() as i64 - out as i64 - inn as i64
        })
        .collect()
}

fn random_complex<R: Rng>(rng: &mut R) -> SimplicialComplex {
    let n = rng.gen_range(1..=7);
    let facets: Vec<Vec<u32>> = (0..rng.gen_range(1..=6))
        .map(|_| (0..n).filter(|_| rng.gen_bool(0.45)).collect())
        .collect();
    SimplicialComplex::from_facets(facets)
}

#[test]
fn betti_numbers_against_rational_ranks() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..150 {
        let x = random_complex(&mut rng);
        let h = reduced_homology(&x).unwrap();
        let oracle = betti_oracle(&x);
        for (i, &b) in oracle.iter().enumerate() {
            assert_eq!(h.rank(i as isize - 1) as i64, b, "{x} dim {}", i as isize - 1);
        }
        assert!(h.top_dimension().is_none_or(|d| ((d + 1) as usize) < oracle.len()));
    }
}

#[test]
fn order_complex_of_face_poset_is_subdivision() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..20 {
        let x = random_complex(&mut rng);
        let (p, _) = face_poset(&x, DEFAULT_FACE_CAP).unwrap();
        let sd = order_complex(&p, DEFAULT_FACE_CAP).unwrap();
        assert_eq!(reduced_homology(&sd).unwrap(), reduced_homology(&x).unwrap(), "{x}");
    }
    let p = hom_poset(&k(2), &k(4)).unwrap().to_poset();
    assert_eq!(order_complex(&p, DEFAULT_FACE_CAP).unwrap().euler_characteristic().unwrap(), 1);
}

#[test]
fn suspension_shifts_homology() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..20 {
        let x = random_complex(&mut rng);
        assert_eq!(
            reduced_homology(&x.suspension()).unwrap(),
            reduced_homology(&x).unwrap().shifted(1),
            "{x}"
        );
    }
}

#[test]
fn universality_graph_realizes_complex() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..20 {
        let x = random_complex(&mut rng);
        if x.facets().iter().all(Vec::is_empty) {
            continue;
        }
        let g = universality_graph(&x).unwrap();
        assert_eq!(out_neighborhood_complex(&g), x.relabel_dense(), "{x}");
    }
}

#[test]
fn random_morse_respects_homology() {
    let boundary = SimplicialComplex::simplex_boundary(2);
    for seed in 0..20 {
        let c = random_discrete_morse(&boundary, seed).unwrap();
        assert!(c.get(1).copied().unwrap_or(0) >= 1, "{c:?}");
        let simplex = random_discrete_morse(&SimplicialComplex::simplex([0, 1, 2, 3]), seed).unwrap();
        assert_eq!(simplex.iter().sum::<usize>(), 1, "{simplex:?}");
    }
}

#[test]
fn meet_paths_stay_in_hom() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut done = 0;
    while done < 500 {
        let size = rng.gen_range(1..=5);
        let g = random_dag(&mut rng, size, 0.4);
        let n = rng.gen_range(2..=6);
        let homs = enumerate_homomorphisms(&g, &k(n));
        let (Some(f), Some(h)) = (homs.choose(&mut rng), homs.choose(&mut rng)) else { continue };
        done += 1;
        for step in meet_path(f, h, &g, n).unwrap() {
            assert!(is_homomorphism(&step, &g, &k(n)).unwrap());
        }
    }
}

#[test]
fn coproduct_source_is_product_of_posets() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..30 {
        let a = random_digraph_in(&mut rng, 1..=2, 0.5, true);
        let b = random_digraph_in(&mut rng, 1..=2, 0.5, true);
        let c = random_digraph_in(&mut rng, 1..=3, 0.5, true);
        let whole = hom_poset(&coproduct(&a, &b).unwrap(), &c).unwrap();
        let (pa, pb) = (hom_poset(&a, &c).unwrap(), hom_poset(&b, &c).unwrap());
        assert_eq!(whole.len(), pa.len() * pb.len());
        let joined: BTreeSet<Vec<VertexSet>> = pa
            .cells()
            .flat_map(|x| pb.cells().map(move |y| [x, y].concat()))
            .collect();
        let cells: BTreeSet<Vec<VertexSet>> = whole.cells().map(|x| x.to_vec()).collect();
        assert_eq!(cells, joined);
    }
}

#[test]
fn mycielski_suspends_sphere_tournament() {
    let t = sphere_tournament(1).unwrap();
    let h = reduced_homology(&out_neighborhood_complex(&mycielskian(&t, 3).unwrap())).unwrap();
    assert_eq!(h, dihom::HomologyGroups::from_ranks(&[0, 0, 1]));
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..20 {
        let g = random_digraph(&mut rng, 4, 0.4, false);
        let before = reduced_homology(&out_neighborhood_complex(&g)).unwrap();
        if g.edge_count() == 0 {
            continue;
        }
        let after = reduced_homology(&out_neighborhood_complex(&mycielskian(&g, 1).unwrap())).unwrap();
        assert_eq!(after, common::add_free(&before, 0));
    }
}

#[test]
fn circle_census() {
    let homs = brute_homs(&directed_cycle(3).unwrap(), &figure2_t5());
    assert_eq!(homs.len(), 15);
    let p = hom_poset(&directed_cycle(3).unwrap(), &figure2_t5()).unwrap();
    let found: Vec<Vec<usize>> = p.homomorphisms().into_iter().map(|f: VertexMap| f.0).collect();
    let mut sorted = homs.clone();
    sorted.sort();
    let mut found_sorted = found;
    found_sorted.sort();
    assert_eq!(found_sorted, sorted);
}
