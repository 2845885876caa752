//! The pullback sequence `0 → K → P ⊕ L → M → 0` built from `0 → L → M → N → 0`
//! and a free cover `P ↠ N`.

use std::sync::Arc;

use crate::complex::{ChainComplex, ComplexMorphism};
use crate::error::{Error, Result};
use crate::linalg;
use crate::module::{self, element_to_vec, GradedMap, PresentedModule};
use crate::resolution::{check_short_exact, solve_into};
use crate::value::Caps;

/// A map of presented modules, as a morphism of complexes concentrated in index 0.
pub fn module_map(source: &PresentedModule, target: &PresentedModule, map: GradedMap) -> Result<ComplexMorphism> {
    ComplexMorphism::new(
        Arc::new(ChainComplex::module(source.clone(), 0)),
        Arc::new(ChainComplex::module(target.clone(), 0)),
        vec![map],
    )
}

#[derive(Clone, Debug)]
pub struct EsSequence {
    pub kernel: PresentedModule,
    pub middle: PresentedModule,
    /// `K → P ⊕ L`.
    pub inclusion: ComplexMorphism,
    /// `P ⊕ L → M`.
    pub projection: ComplexMorphism,
    pub exact: bool,
}

fn term(m: &ComplexMorphism, source: bool) -> PresentedModule {
    let c = if source { m.source() } else { m.target() };
    c.term_or_zero(0)
}

/// From `0 → L →α M →π N → 0` and a surjection `φ: P → N` with `P` free, build
/// `K = ker φ`, a lift `γ: P → M` of `φ`, and the exact sequence
/// `0 → K → P ⊕ L → M → 0` with `P ⊕ L → M` given by `(γ, α)`.
pub fn es_pushout(
    alpha: &ComplexMorphism,
    pi: &ComplexMorphism,
    phi: &ComplexMorphism,
    caps: Caps,
) -> Result<EsSequence> {
    let cap = caps.degree_cap;
    check_short_exact(alpha, pi, cap)?;
    let (l, m, n) = (term(alpha, true), term(alpha, false), term(pi, false));
    let p = term(phi, true);
    if !p.is_free() {
        return Err(Error::Shape("the cover must be a free module".into()));
    }
    if **phi.target() != **pi.target() {
        return Err(Error::Shape("the cover does not map onto N".into()));
    }
    if !phi.is_surjective(cap) {
        return Err(Error::NotExact("the cover is not surjective".into()));
    }
    let alg = m.algebra().clone();
    let a = &alg;
    let pf = p.generators();
    let nx = pi.target();
    let my = pi.source();

    let mut gamma_cols = Vec::new();
    for (g, &e) in pf.degrees().iter().enumerate() {
        let target = element_to_vec(&n.generators().layout(a, e), &phi.maps()[0].column_element(g))?;
        gamma_cols.push(solve_into(a, m.generators(), e, nx.free_dim(0, e), &pi.map_rows(0, e), &nx.relation_span(0, e), &target, "P → M")?);
    }
    let gamma = GradedMap::new(a, pf.clone(), m.generators().clone(), gamma_cols)?;

    let (kernel, iota) = module::present_subquotient(a, pf, cap, |e| {
        (linalg::preimage(a.field(), nx.free_dim(0, e), &phi.map_rows(0, e), &nx.relation_span(0, e)), Vec::new())
    });
    let middle = p.direct_sum(&l);
    let mut inc_cols = Vec::new();
    for (g, &e) in kernel.generators().degrees().iter().enumerate() {
        let kp = iota.column_element(g);
        let target = element_to_vec(&m.generators().layout(a, e), &gamma.apply(&kp))?;
        let lpart = solve_into(a, l.generators(), e, my.free_dim(0, e), &alpha.map_rows(0, e), &my.relation_span(0, e), &target, "K → L")?;
        let mut col = kp;
        col.extend(lpart.iter().map(|x| a.neg(x)));
        inc_cols.push(col);
    }
    let inc_map = GradedMap::new(a, kernel.generators().clone(), middle.generators().clone(), inc_cols)?;
    let proj_map = GradedMap::hconcat(a, m.generators(), &[&gamma, &alpha.maps()[0]]);
    let inclusion = module_map(&kernel, &middle, inc_map)?;
    let projection = ComplexMorphism::new(inclusion.target().clone(), alpha.target().clone(), vec![proj_map])?;
    let exact = check_short_exact(&inclusion, &projection, cap).is_ok();
    Ok(EsSequence { kernel, middle, inclusion, projection, exact })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::module::FreeModule;
    use crate::ring::GradedAlgebra;

    #[test]
    fn split_sequence_over_trivial_extension() {
        let r = GradedAlgebra::parse(PrimeField::default(), &["s", "t"], &["s^2", "s*t", "t^2"]).unwrap();
        let k = PresentedModule::residue_field(&r);
        let rr = PresentedModule::ring(&r);
        let m = k.direct_sum(&rr);
        let a = &r;
        let incl = GradedMap::new(a, FreeModule::new(vec![0]), FreeModule::new(vec![0, 0]), vec![vec![a.one(), a.constant(0)]]).unwrap();
        let proj = GradedMap::new(a, FreeModule::new(vec![0, 0]), FreeModule::new(vec![0]), vec![vec![a.constant(0)], vec![a.one()]]).unwrap();
        let alpha = module_map(&k, &m, incl).unwrap();
        let pi = ComplexMorphism::new(alpha.target().clone(), Arc::new(ChainComplex::module(rr.clone(), 0)), vec![proj]).unwrap();
        let phi = ComplexMorphism::new(
            Arc::new(ChainComplex::module(rr.clone(), 0)),
            pi.target().clone(),
            vec![GradedMap::identity(a, rr.generators())],
        )
        .unwrap();
        let es = es_pushout(&alpha, &pi, &phi, Caps::default()).unwrap();
        assert!(es.exact);
        assert_eq!(es.kernel.generators().rank(), 0);
    }
}
