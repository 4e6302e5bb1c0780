mod common;

use common::{census, oracle_defect, oracle_perfect_matchings, random_simple_cubic};
use defect_lab::colouring::graph_is_colourable;
use defect_lab::constructions::{three_sum, Wiring};
use defect_lab::covers::{
    berge_cover, check_sum_index, is_quasi_bipartite, perfect_matching_index, witness_components, CoverIndex,
};
use defect_lab::graph::{cyclic_edge_connectivity, is_two_connected, CubicGraph};
use defect_lab::named;
use proptest::prelude::*;

/// Fewest perfect matchings covering every edge, by trying all subsets.
fn oracle_index(g: &CubicGraph, cap: usize) -> Option<usize> {
    let m = g.edge_count();
    let pms: Vec<u128> = oracle_perfect_matchings(g).iter().map(|p| p.iter().fold(0u128, |a, &e| a | 1 << e)).collect();
    let all = if m == 128 { u128::MAX } else { (1u128 << m) - 1 };
    fn rec(pms: &[u128], from: usize, left: usize, acc: u128, all: u128) -> bool {
        if acc == all {
            return true;
        }
        left > 0 && (from..pms.len()).any(|i| rec(pms, i + 1, left - 1, acc | pms[i], all))
    }
    (1..=cap).find(|&k| rec(&pms, 0, k, 0, all))
}

fn census_upto_22() -> Vec<CubicGraph> {
    [10, 18, 20, 22].into_iter().flat_map(|o| census(o).expect("fixture")).collect()
}

#[test]
fn petersen_and_named_indices() {
    assert_eq!(perfect_matching_index(&named::petersen(), 6).unwrap(), CoverIndex::Exact(5));
    assert_eq!(oracle_index(&named::petersen(), 6), Some(5));
    for g in [named::blanusa_first(), named::blanusa_second()] {
        assert_eq!(perfect_matching_index(&g, 6).unwrap().value(), oracle_index(&g, 6));
    }
}

#[test]
fn defect_three_fixtures_need_four_or_five() {
    let p = named::petersen();
    for g in census_upto_22() {
        if oracle_defect(&g) != Some(3) {
            continue;
        }
        let pi = perfect_matching_index(&g, 6).unwrap();
        assert!(matches!(pi, CoverIndex::Exact(4) | CoverIndex::Exact(5)), "{pi:?}");
        let cc4 = cyclic_edge_connectivity(&g, 6).unwrap().at_least(4);
        if cc4 && !common::isomorphic(&g, &p) {
            assert_eq!(pi, CoverIndex::Exact(4));
        }
    }
}

#[test]
fn berge_covers_of_the_census() {
    for g in census_upto_22().into_iter().take(40) {
        let c = berge_cover(&g).unwrap().expect("cover exists");
        assert!(c.is_berge() && c.covers_all());
        assert!(c.matchings.iter().all(|m| m.is_valid(&g)));
    }
}

#[test]
fn quasi_bipartite_witnesses_are_sound() {
    let mut graphs = vec![named::k33(), named::cube()];
    for v in 0..6 {
        graphs.push(defect_lab::constructions::inflate_vertex(&named::k33(), v).unwrap());
    }
    for g in graphs {
        let w = is_quasi_bipartite(&g).unwrap().expect("witness");
        for (i, &a) in w.u_set.iter().enumerate() {
            for &b in &w.u_set[i + 1..] {
                assert!(!g.adjacent(a, b));
            }
        }
        let comps = witness_components(&g, &w.u_set).unwrap();
        assert_eq!(w.contracted.vertex_count(), w.u_set.len() + comps.len());
        assert_eq!(w.u_set.len(), comps.len());
        assert!(w.contracted.is_simple());
    }
}

/// Pairs from colourable 2-connected cubic graphs on at most 8 vertices.
#[test]
fn sum_index_agrees_on_constructed_instances() {
    let p = named::petersen();
    let hs = [named::k33(), named::k4(), named::prism(), named::cube()];
    let mut n = 0;
    for h in &hs {
        for v in [0, 1] {
            for w in Wiring::all().into_iter().take(3) {
                let r = check_sum_index(&p, 0, h, v, w).unwrap();
                assert!(r.agree, "{h:?} {v} {w:?} {r:?}");
                n += 1;
            }
        }
    }
    assert!(n >= 20);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn index_matches_oracle(n in 2usize..7, seed: u64) {
        let g = random_simple_cubic(2 * n, seed);
        prop_assume!(is_two_connected(&g));
        let pi = perfect_matching_index(&g, 6).unwrap();
        prop_assert_eq!(pi.value(), oracle_index(&g, 6));
        prop_assert_eq!(pi == CoverIndex::Exact(3), graph_is_colourable(&g));
    }

    #[test]
    fn sums_of_snarks_are_snarks(u in 0usize..10, v in 0usize..10, w in 0usize..6) {
        let p = named::petersen();
        let s = three_sum(&p, u, &p, v, Wiring::all()[w]).unwrap();
        prop_assert_eq!(s.vertex_count(), 18);
        prop_assert!(!graph_is_colourable(&s));
    }
}
