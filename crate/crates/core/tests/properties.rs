//! Invariants as property tests.

use std::collections::BTreeSet;

use dihom::complexes::{out_neighborhood_complex, SimplicialComplex};
use dihom::constructions::{canonical_code, transitive_tournament};
use dihom::digraph::{coproduct, enumerate_homomorphisms, is_homomorphism, product};
use dihom::homcomplex::{closure_nu, hom_one_skeleton, hom_poset, is_multihom, MultiHom};
use dihom::homology::{chain_complex, homology_of_poset, reduced_homology};
use dihom::homotopy::{HomotopyData, Relation};
use dihom::morse::{collapse_free_pairs, is_acyclic_matching, replay_collapses, tournament_matching, CollapseStrategy};
use dihom::{Digraph, VertexMap, VertexSet};
use proptest::prelude::*;

fn digraph(max: usize, loops: bool) -> impl Strategy<Value = Digraph> {
    (1..=max).prop_flat_map(move |n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let edges = (0..n * n).filter(|&i| bits[i] && (loops || i / n != i % n)).map(|i| (i / n, i % n));
            Digraph::from_edges(n, edges).unwrap()
        })
    })
}

fn dag(max: usize) -> impl Strategy<Value = Digraph> {
    (1..=max).prop_flat_map(|n| {
        (proptest::collection::vec(any::<bool>(), n * n), Just((0..n).collect::<Vec<_>>()).prop_shuffle()).prop_map(
            move |(bits, perm)| {
                let edges = (0..n * n)
                    .filter(|&i| bits[i] && i / n < i % n)
                    .map(|i| (perm[i / n], perm[i % n]));
                Digraph::from_edges(n, edges).unwrap()
            },
        )
    })
}

fn complex() -> impl Strategy<Value = SimplicialComplex> {
    proptest::collection::vec(proptest::collection::btree_set(0u32..7, 0..5), 1..6)
        .prop_map(|fs| SimplicialComplex::from_facets(fs.into_iter().map(|s| s.into_iter().collect::<Vec<_>>())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reverse_is_an_involution(g in digraph(6, true)) {
        prop_assert_eq!(g.reverse().reverse(), g.clone());
        prop_assert_eq!(g.reverse().edge_count(), g.edge_count());
    }

    #[test]
    fn homomorphisms_compose(g in digraph(3, true), h in digraph(3, true), k in digraph(3, true)) {
        for f in enumerate_homomorphisms(&g, &h) {
            for e in enumerate_homomorphisms(&h, &k) {
                let composite = VertexMap(f.0.iter().map(|&x| e.0[x]).collect());
                prop_assert!(is_homomorphism(&composite, &g, &k).unwrap());
            }
        }
    }

    #[test]
    fn projections_are_homomorphisms(g in digraph(3, true), h in digraph(3, true)) {
        let p = product(&g, &h).unwrap();
        let m = h.vertex_count();
        let left = VertexMap((0..p.vertex_count()).map(|x| x / m).collect());
        let right = VertexMap((0..p.vertex_count()).map(|x| x % m).collect());
        prop_assert!(is_homomorphism(&left, &p, &g).unwrap());
        prop_assert!(is_homomorphism(&right, &p, &h).unwrap());
    }

    #[test]
    fn canonical_code_ignores_labels(g in digraph(6, true), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permute(&perm).unwrap();
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
    }

    #[test]
    fn hom_poset_is_downward_closed(g in digraph(3, true), h in digraph(4, true)) {
        let p = hom_poset(&g, &h).unwrap();
        let cells: BTreeSet<Vec<VertexSet>> = p.cells().map(|c| c.to_vec()).collect();
        for c in &cells {
            for v in 0..c.len() {
                for x in c[v].iter() {
                    if c[v].len() > 1 {
                        let mut smaller = c.clone();
                        smaller[v].remove(x);
                        prop_assert!(cells.contains(&smaller));
                    }
                }
            }
        }
        let minimal: Vec<VertexMap> = p.homomorphisms();
        prop_assert_eq!(minimal, enumerate_homomorphisms(&g, &h));
    }

    #[test]
    fn cellular_and_order_complex_homology_agree(g in digraph(3, true), h in digraph(4, true)) {
        let p = hom_poset(&g, &h).unwrap();
        prop_assume!(p.len() <= 400);
        prop_assert!(p.chain_complex().validate().is_ok());
        prop_assert_eq!(p.homology().unwrap(), homology_of_poset(&p.to_poset()).unwrap());
    }

    #[test]
    fn coproduct_target_splits(g in digraph(3, true), h in digraph(3, true), k in digraph(3, true)) {
        prop_assume!(g.edge_count() > 0 && g.weak_components().len() == 1);
        let whole = hom_poset(&g, &coproduct(&h, &k).unwrap()).unwrap();
        let (ph, pk) = (hom_poset(&g, &h).unwrap(), hom_poset(&g, &k).unwrap());
        prop_assert_eq!(whole.len(), ph.len() + pk.len());
        let m = h.vertex_count();
        for c in whole.cells() {
            let all: VertexSet = c.iter().fold(VertexSet::EMPTY, |a, s| a.union(*s));
            prop_assert!(all.iter().all(|x| x < m) || all.iter().all(|x| x >= m));
        }
    }

    #[test]
    fn boundary_squares_to_zero(x in complex()) {
        prop_assert!(chain_complex(&x, 100_000).unwrap().complex.validate().is_ok());
        let h = reduced_homology(&x).unwrap();
        prop_assert_eq!(h.reduced_euler_characteristic(), x.euler_characteristic().unwrap() - 1);
    }

    #[test]
    fn collapses_preserve_homology(x in complex(), seed in any::<u64>()) {
        for strategy in [CollapseStrategy::Lex, CollapseStrategy::Random(seed)] {
            let r = collapse_free_pairs(&x, strategy);
            prop_assert_eq!(replay_collapses(&x, &r.log).unwrap(), r.remaining.clone());
            prop_assert_eq!(reduced_homology(&r.remaining).unwrap(), reduced_homology(&x).unwrap());
        }
    }

    #[test]
    fn tournament_matching_is_perfect_but_one(g in dag(4), n in 2usize..=5) {
        let kn = transitive_tournament(n).unwrap();
        prop_assume!(!enumerate_homomorphisms(&g, &kn).is_empty());
        let tm = tournament_matching(&g, n).unwrap();
        prop_assert_eq!(tm.matching.critical.len(), 1);
        prop_assert!(is_acyclic_matching(&tm.poset, &tm.matching).unwrap());
        for &(a, b) in &tm.matching.pairs {
            prop_assert_eq!(tm.poset.dimension_of(b), tm.poset.dimension_of(a) + 1);
        }
    }

    #[test]
    fn bihomotopy_is_skeleton_connectivity(g in digraph(3, true), h in digraph(3, true)) {
        let data = HomotopyData::new(&g, &h);
        let skel = hom_one_skeleton(&g, &h);
        let by_skeleton: BTreeSet<Vec<Vec<usize>>> = skel
            .components()
            .into_iter()
            .map(|c| { let mut v: Vec<Vec<usize>> = c.into_iter().map(|i| skel.homs[i].0.clone()).collect(); v.sort(); v })
            .collect();
        let by_relation: BTreeSet<Vec<Vec<usize>>> = data
            .classes(Relation::Bihomotopy)
            .into_iter()
            .map(|c| { let mut v: Vec<Vec<usize>> = c.into_iter().map(|i| data.exponential.maps[i].0.clone()).collect(); v.sort(); v })
            .collect();
        prop_assert_eq!(by_skeleton, by_relation);
    }

    #[test]
    fn nu_is_a_closure(g in digraph(5, true)) {
        prop_assume!(out_neighborhood_complex(&g).facets().iter().any(|f| !f.is_empty()));
        let nu = closure_nu(&g).unwrap();
        for (i, &s) in nu.faces.iter().enumerate() {
            let c = nu.closed[nu.image[i]];
            prop_assert!(s.is_subset(c));
            let again = g.common_out_neighbors(g.common_in_neighbors(c));
            prop_assert_eq!(again, c);
        }
    }

    #[test]
    fn doubled_maps_are_multihoms(g in digraph(3, true), h in digraph(3, true)) {
        let skel = hom_one_skeleton(&g, &h);
        for (a, nbrs) in skel.adjacency.iter().enumerate() {
            for &b in nbrs {
                let (f, k) = (&skel.homs[a].0, &skel.homs[b].0);
                prop_assert_eq!(f.iter().zip(k).filter(|(x, y)| x != y).count(), 1);
                let cell = MultiHom(f.iter().zip(k).map(|(&x, &y)| VertexSet::singleton(x).with(y)).collect());
                prop_assert!(is_multihom(&cell, &g, &h).unwrap());
            }
        }
    }
}

#[test]
fn looped_source_separates_skeleton_from_hamming() {
    // With a loop at 0, changing f(0) alone needs both values joined by edges.
    let g = Digraph::from_edges(1, [(0, 0)]).unwrap();
    let h = Digraph::from_edges(2, [(0, 0), (1, 1)]).unwrap();
    let skel = hom_one_skeleton(&g, &h);
    assert_eq!(skel.len(), 2);
    assert_eq!(skel.edge_count(), 0);
    let h2 = Digraph::from_edges(2, [(0, 0), (1, 1), (0, 1), (1, 0)]).unwrap();
    assert_eq!(hom_one_skeleton(&g, &h2).edge_count(), 1);
}
