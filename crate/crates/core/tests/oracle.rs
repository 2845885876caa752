//! The resolver, Hilbert functions and homology checked against the dense oracle
//! in `common`. Frozen tables below were produced by the oracle.

mod common;

use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;

use homdim::invariants::derived_tensor;
use homdim::random::{self, Shape};
use homdim::resolution::resolve_module;
use homdim::verify::{dual_numbers, multiplication_by_s, plane, trivial_extension};
use homdim::{Algebra, Caps, ChainComplex, GradedAlgebra, PresentedModule, PrimeField};

type Table = Vec<BTreeMap<i32, usize>>;

fn library_betti(m: &PresentedModule, maxn: usize, cap: i32) -> Table {
    let res = resolve_module(m, maxn as i32, cap).unwrap();
    let t = res.betti_table();
    (0..=maxn as i32)
        .map(|n| t.rows.iter().find(|r| r.index == n).map(|r| r.counts.clone()).unwrap_or_default())
        .collect()
}

fn codim_two_ci() -> Algebra {
    GradedAlgebra::parse(PrimeField::default(), &["x", "y"], &["x^2", "y^3"]).unwrap()
}

fn rings() -> Vec<Algebra> {
    let mut v = random::test_rings();
    v.push(codim_two_ci());
    v
}

fn table(rows: &[&[(i32, usize)]]) -> Table {
    rows.iter().map(|r| r.iter().copied().collect()).collect()
}

#[test]
fn frozen_tables_over_the_trivial_extension() {
    let r = trivial_extension();
    let x = multiplication_by_s(&r);
    let (h0, _) = x.homology(0, 20);
    let (h1, _) = x.homology(1, 20);
    let k = PresentedModule::residue_field(&r);

    let h1_frozen = table(&[&[(2, 2)], &[(3, 4)], &[(4, 8)], &[(5, 16)], &[(6, 32)], &[(7, 64)], &[(8, 128)]]);
    assert_eq!(common::module_betti(&h1, 6, 12), h1_frozen);
    assert_eq!(library_betti(&h1, 6, 12), h1_frozen);

    let h0_totals = vec![1, 1, 2, 4, 8, 16, 32, 64, 128];
    assert_eq!(common::totals(&common::module_betti(&h0, 8, 12)), h0_totals);
    assert_eq!(common::totals(&library_betti(&h0, 8, 12)), h0_totals);

    let k_totals: Vec<usize> = (0..=8).map(|n| 1 << n).collect();
    assert_eq!(common::totals(&common::module_betti(&k, 8, 12)), k_totals);
    assert_eq!(common::totals(&library_betti(&k, 8, 12)), k_totals);
}

#[test]
fn frozen_tables_over_complete_intersections() {
    let ci = codim_two_ci();
    let k = PresentedModule::residue_field(&ci);
    let frozen = table(&[
        &[(0, 1)],
        &[(1, 2)],
        &[(2, 2), (3, 1)],
        &[(3, 2), (4, 2)],
        &[(4, 2), (5, 2), (6, 1)],
        &[(5, 2), (6, 2), (7, 2)],
        &[(6, 2), (7, 2), (8, 2), (9, 1)],
    ]);
    assert_eq!(common::module_betti(&k, 6, 14), frozen);
    assert_eq!(library_betti(&k, 6, 14), frozen);

    let pk = PresentedModule::residue_field(&plane());
    let frozen = table(&[&[(0, 1)], &[(1, 2)], &[(2, 1)], &[]]);
    assert_eq!(common::module_betti(&pk, 3, 6), frozen);
    assert_eq!(library_betti(&pk, 3, 6), frozen);

    let dk = PresentedModule::residue_field(&dual_numbers());
    let frozen: Table = (0..=10).map(|n| BTreeMap::from([(n, 1)])).collect();
    assert_eq!(common::module_betti(&dk, 10, 12), frozen);
    assert_eq!(library_betti(&dk, 10, 12), frozen);
}

fn shape(alg: &Algebra) -> Shape {
    if alg.relations().len() == 3 {
        Shape { max_rank: 2, max_terms: 2, ..Shape::default() }
    } else {
        Shape::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn graded_betti_numbers_match_oracle(ring in 0usize..4, seed in any::<u64>()) {
        let alg = &rings()[ring];
        let m = random::random_small_module(alg, shape(alg), &mut random::rng(seed));
        let n = if ring == 0 { 4 } else { 5 };
        prop_assert_eq!(library_betti(&m, n, 12), common::module_betti(&m, n, 12));
    }

    #[test]
    fn hilbert_functions_match_oracle(ring in 0usize..4, seed in any::<u64>()) {
        let alg = &rings()[ring];
        let m = random::random_module(alg, shape(alg), &mut random::rng(seed));
        let o = common::Ring::from_algebra(alg);
        let rel = common::Map::from_graded(m.relations());
        for e in -1..8 {
            prop_assert_eq!(m.dim(e), common::hilbert(&o, m.generators().degrees(), &rel, e), "degree {}", e);
        }
    }

    #[test]
    fn homology_matches_oracle(ring in 0usize..4, seed in any::<u64>()) {
        let alg = &rings()[ring];
        let x = random::random_complex(alg, shape(alg), &mut random::rng(seed));
        let cap = 8;
        let lib = x.homology_table(cap).nonzero();
        let lib: BTreeMap<(i32, i32), usize> = lib.into_iter().filter(|((_, e), _)| *e <= cap).collect();
        prop_assert_eq!(lib, common::homology_dims(&x, cap));
    }

    #[test]
    fn tor_with_residue_field_counts_betti_numbers(ring in 0usize..4, seed in any::<u64>()) {
        let alg = &rings()[ring];
        let m = random::random_small_module(alg, shape(alg), &mut random::rng(seed));
        let x = Arc::new(ChainComplex::module(m.clone(), 0));
        let k = ChainComplex::module(PresentedModule::residue_field(alg), 0);
        let d = derived_tensor(&x, &k, Caps::new(3, 12, 2)).unwrap();
        let t = d.complex.homology_table(12);
        let tor: Vec<usize> = (0..=3).map(|n| t.get(n).map_or(0, |h| h.total())).collect();
        prop_assert_eq!(tor, common::totals(&common::module_betti(&m, 3, 12)));
    }
}
