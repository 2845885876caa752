//! Seeded property tests for complexes, resolutions and dimensions.

use std::sync::Arc;

use proptest::prelude::*;

use homdim::complex::{cone, hom, natural, tensor};
use homdim::dimensions::{ci_dim_best, gdim, hierarchy_check, pci_dim, pd, DimensionVerdict};
use homdim::invariants::{derived_hom, derived_tensor, poincare_product_check, syzygy_shift_check};
use homdim::random::{self, Shape};
use homdim::resolution::{minimal_free_resolution, ses_resolution, strict_resolution};
use homdim::value::DimValue;
use homdim::{Algebra, Caps, ChainComplex, ComplexMorphism, ExtInt};

fn caps() -> Caps {
    Caps::new(5, 16, 3)
}

fn ring(i: usize) -> Algebra {
    random::test_rings()[i].clone()
}

fn shape(alg: &Algebra) -> Shape {
    if alg.relations().len() == 3 {
        Shape { max_rank: 1, max_terms: 2, ..Shape::default() }
    } else {
        Shape::default()
    }
}

fn object(i: usize, seed: u64) -> (Algebra, Arc<ChainComplex>) {
    let alg = ring(i);
    let x = random::random_object(&alg, shape(&alg), &mut random::rng(seed));
    (alg, Arc::new(x))
}

fn exact_or_finite(v: &DimValue) -> bool {
    matches!(v, DimValue::Finite(_) | DimValue::NegInf)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn constructions_are_complexes(i in 0usize..3, seed in any::<u64>()) {
        let (alg, x) = object(i, seed);
        let y = random::random_complex(&alg, shape(&alg), &mut random::rng(seed ^ 1));
        prop_assert!(tensor(&x, &y).unwrap().validate().is_ok());
        prop_assert!(hom(&y, &x).unwrap().validate().is_ok());
        prop_assert!(cone(&ComplexMorphism::identity(x.clone())).validate().is_ok());
        let res = minimal_free_resolution(&x, 4, 16).unwrap();
        prop_assert!(res.complex().validate().is_ok());
        prop_assert!(res.complex().is_minimal());
        prop_assert!(res.augmentation().validate().is_ok());
    }

    #[test]
    fn resolutions_are_quasi_isomorphisms(i in 0usize..3, seed in any::<u64>()) {
        let (_, x) = object(i, seed);
        let n = 4;
        let window = Some((x.low(), n - 1));
        let res = minimal_free_resolution(&x, n, 16).unwrap();
        prop_assert!(res.augmentation().is_quasiiso(16, window).is_quasiiso);
        let strict = strict_resolution(&x, n, 16).unwrap();
        prop_assert!(strict.augmentation().is_surjective(16));
        prop_assert!(strict.augmentation().is_quasiiso(16, window).is_quasiiso);
        // The strict resolution is a resolution too, so its minimal part has the same ranks.
        for k in x.low()..n {
            prop_assert!(strict.rank(k) >= res.rank(k));
        }
    }

    #[test]
    fn cone_is_exact_iff_quasi_isomorphism(i in 0usize..3, seed in any::<u64>(), c in 0i64..3) {
        let (_, x) = object(i, seed);
        let sigma = random::perturb(&ComplexMorphism::identity(x), c, &mut random::rng(seed ^ 2)).unwrap();
        let exact = cone(&sigma).homology_table(16).is_exact();
        prop_assert_eq!(exact, sigma.is_quasiiso(16, None).is_quasiiso);
    }

    #[test]
    fn truncations_at_sup_and_inf_are_quasi_isomorphisms(i in 0usize..3, seed in any::<u64>()) {
        let (_, x) = object(i, seed);
        let t = x.homology_table(16);
        if let (ExtInt::Finite(s), ExtInt::Finite(f)) = (t.sup(), t.inf()) {
            prop_assert!(natural::to_soft_left(&x, s).is_quasiiso(16, None).is_quasiiso);
            prop_assert!(natural::from_soft_right(&x, f, 16).unwrap().is_quasiiso(16, None).is_quasiiso);
            if s > f {
                prop_assert!(!natural::to_soft_left(&x, s - 1).is_quasiiso(16, None).is_quasiiso);
            }
        }
    }

    #[test]
    fn short_exact_sequences_resolve(i in 0usize..3, seed in any::<u64>()) {
        let alg = ring(i);
        let (eta, nu) = random::random_ses(&alg, shape(&alg), &mut random::rng(seed)).unwrap();
        let s = ses_resolution(&eta, &nu, 4, 16).unwrap();
        prop_assert!(s.report.ok(), "{:?}", s.report);
    }

    #[test]
    fn poincare_identities(i in 0usize..3, seed in any::<u64>()) {
        let (alg, x) = object(i, seed);
        let y = Arc::new(random::random_object(&alg, shape(&alg), &mut random::rng(seed ^ 3)));
        let c = poincare_product_check(&x, &y, caps()).unwrap();
        prop_assert!(c.holds, "{:?}", c);
        if let ExtInt::Finite(s) = x.homology_table(16).sup() {
            let res = minimal_free_resolution(&x, caps().cutoff, 16).unwrap();
            for n in s..=s + 2 {
                prop_assert!(syzygy_shift_check(&res, n).unwrap());
            }
        }
    }
}

fn values(x: &Arc<ChainComplex>) -> Vec<DimensionVerdict> {
    vec![
        pd(x, caps()).unwrap(),
        gdim(x, caps()).unwrap(),
        pci_dim(x, caps()).unwrap(),
        ci_dim_best(x, &[], caps()).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn suspension_shifts_every_dimension(i in 0usize..3, seed in any::<u64>(), n in -2i32..3) {
        let (_, x) = object(i, seed);
        let sx = Arc::new(x.suspend(n));
        for (a, b) in values(&x).iter().zip(values(&sx)) {
            if exact_or_finite(&a.value) {
                prop_assert_eq!(&b.value, &a.value.plus(n), "{}", a.dimension);
            }
        }
    }

    #[test]
    fn finite_verdicts_satisfy_the_depth_formula(i in 0usize..3, seed in any::<u64>()) {
        let (_, x) = object(i, seed);
        for v in values(&x) {
            prop_assert!(v.consistent(), "{} {:?}", v.dimension, v.checks);
        }
    }

    #[test]
    fn hierarchy_holds(i in 0usize..3, seed in any::<u64>()) {
        let (_, x) = object(i, seed);
        let h = hierarchy_check(&x, &[], caps()).unwrap();
        prop_assert!(h.holds(), "{:?}", h.violations);
    }

    #[test]
    fn verdicts_are_invariant_under_truncation(i in 0usize..3, seed in any::<u64>()) {
        let (_, x) = object(i, seed);
        if let ExtInt::Finite(s) = x.homology_table(16).sup() {
            let t = Arc::new(x.soft_left(s));
            for (a, b) in values(&x).iter().zip(values(&t)) {
                if a.value.is_determinate() && b.value.is_determinate() {
                    prop_assert_eq!(&a.value, &b.value, "{}", a.dimension);
                }
            }
        }
    }

    #[test]
    fn tensor_and_hom_with_finite_projective_dimension(i in 0usize..3, seed in any::<u64>()) {
        let (alg, x) = object(i, seed);
        let p = Arc::new(random::random_complex(&alg, shape(&alg), &mut random::rng(seed ^ 4)));
        let pp = pd(&p, caps()).unwrap();
        let px = pci_dim(&x, caps()).unwrap().value;
        let pdp = pp.value.finite();
        if let (Some(a), Some(b)) = (px.finite(), pdp) {
            let t = derived_tensor(&p, &x, caps()).unwrap();
            let tv = pci_dim(&t.complex, caps()).unwrap().value;
            if tv.is_determinate() {
                prop_assert_eq!(tv, DimValue::Finite(a + b));
            }
            let inf = p.homology_table(16).inf().finite().unwrap();
            let h = derived_hom(&p, &x, caps()).unwrap();
            let hv = pci_dim(&h.complex, caps()).unwrap().value;
            if hv.is_determinate() {
                prop_assert_eq!(hv, DimValue::Finite(a - inf));
            }
        }
    }
}
