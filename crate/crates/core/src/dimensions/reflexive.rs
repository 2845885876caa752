//! Duals, biduals and total reflexivity of presented modules.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::invariants::derived_hom;
use crate::linalg;
use crate::module::{self, GradedMap, PresentedModule};
use crate::value::{Caps, Certainty};

/// `M* = Hom(M, R)` as the kernel of the transposed presentation `F* → G*`,
/// together with its inclusion into `F*`.
pub fn dual_module(m: &PresentedModule, cap: i32) -> (PresentedModule, GradedMap) {
    let alg = m.algebra();
    let rho_t = m.relations().transpose();
    let ambient = rho_t.source().clone();
    let tdim = |e| rho_t.target().dim(alg, e);
    module::present_subquotient(alg, &ambient, cap, |e| {
        (linalg::kernel(alg.field(), tdim(e), &rho_t.degree_rows(e)), Vec::new())
    })
}

/// Outcome of the total reflexivity test up to a window.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReflexivityReport {
    pub window: i32,
    /// The natural map `M → M**` is bijective in every checked internal degree.
    pub bidual_iso: bool,
    /// Internal degree where the bidual map fails, if it does.
    pub bidual_failure: Option<i32>,
    /// Entry `i-1` records whether `Ext^i(M, R) = 0`; `None` when not computed.
    pub ext_module: Vec<Option<bool>>,
    /// Entry `i-1` records whether `Ext^i(M*, R) = 0`.
    pub ext_dual: Vec<Option<bool>>,
    pub certainty: Certainty,
}

impl ReflexivityReport {
    pub fn totally_reflexive(&self) -> bool {
        self.bidual_iso && self.ext_module.iter().chain(&self.ext_dual).all(|f| *f == Some(true))
    }

    /// Human-readable reason for the first failed check.
    pub fn failure(&self) -> Option<String> {
        if !self.bidual_iso {
            return Some(match self.bidual_failure {
                Some(e) => format!("M → M** is not bijective in internal degree {e}"),
                None => "M → M** is not bijective".into(),
            });
        }
        if let Some(i) = self.ext_module.iter().position(|f| *f == Some(false)) {
            return Some(format!("Ext^{}(M, R) ≠ 0", i + 1));
        }
        if let Some(i) = self.ext_dual.iter().position(|f| *f == Some(false)) {
            return Some(format!("Ext^{}(M*, R) ≠ 0", i + 1));
        }
        None
    }
}

/// First internal degree where `θ: M → M**` fails to be bijective.
fn bidual_failure(m: &PresentedModule, cap: i32) -> Option<i32> {
    let alg = m.algebra();
    let f = alg.field();
    let (dual, iota) = dual_module(m, cap);
    // θ sends a generator of F to evaluation at it, a functional on the generators of M*.
    let theta = iota.transpose();
    let rho2_t = dual.relations().transpose();
    let gens = m.generators();
    let (lo, hi) = module::degree_range(alg, [gens, theta.target()], cap)?;
    for e in lo..=hi {
        let n = gens.dim(alg, e);
        let rows = theta.degree_rows(e);
        let ntarget = theta.target().dim(alg, e);
        let rel = m.relation_span(e);
        let ker = linalg::kernel(f, ntarget, &rows);
        let krank = linalg::rank(f, n, &rel);
        let mut both = ker.clone();
        both.extend(rel.iter().cloned());
        let injective = linalg::rank(f, n, &both) == krank;
        let bidual_dim = ntarget - linalg::rank(f, rho2_t.target().dim(alg, e), &rho2_t.degree_rows(e));
        let surjective = n - ker.len() == bidual_dim;
        if !(injective && surjective) {
            return Some(e);
        }
    }
    None
}

/// `Ext^i(M, R) = 0` for `i = 1..=window`, from `Hom(P, R)` in indices `-i`.
fn ext_vanishing(m: &PresentedModule, caps: Caps) -> Result<(Vec<Option<bool>>, Certainty)> {
    let alg = m.algebra();
    let w = caps.window;
    let x = Arc::new(ChainComplex::module(m.clone(), 0));
    let r = ChainComplex::module(PresentedModule::ring(alg), 0);
    let d = derived_hom(&x, &r, caps.with_cutoff(w + 1))?;
    let t = d.complex.homology_table(caps.degree_cap);
    let mut flags = Vec::with_capacity(w as usize);
    let mut failed = false;
    for i in 1..=w {
        if failed {
            flags.push(None);
            continue;
        }
        debug_assert!(d.is_valid_at(-i));
        let zero = t.get(-i).is_none_or(|h| h.is_zero());
        failed = !zero;
        flags.push(Some(zero));
    }
    Ok((flags, d.certainty))
}

/// Check `M ≅ M**` per internal degree and `Ext^i(M, R) = 0 = Ext^i(M*, R)` for
/// `1 ≤ i ≤ caps.window`, stopping at the first failure.
pub fn totally_reflexive_test(m: &PresentedModule, caps: Caps) -> Result<ReflexivityReport> {
    if caps.window < 1 {
        return Err(Error::WindowTooSmall(format!("reflexivity window {} < 1", caps.window)));
    }
    let w = caps.window as usize;
    let alg = m.algebra();
    let certainty = Certainty::from_flag(alg.is_artinian(), caps.degree_cap);
    let failure = bidual_failure(m, caps.degree_cap);
    let mut report = ReflexivityReport {
        window: caps.window,
        bidual_iso: failure.is_none(),
        bidual_failure: failure,
        ext_module: vec![None; w],
        ext_dual: vec![None; w],
        certainty,
    };
    if !report.bidual_iso {
        return Ok(report);
    }
    let (flags, c1) = ext_vanishing(m, caps)?;
    report.certainty = report.certainty.and(c1);
    let ok = flags.iter().all(|f| *f == Some(true));
    report.ext_module = flags;
    if !ok {
        return Ok(report);
    }
    let (dual, _) = dual_module(m, caps.degree_cap);
    let (flags, c2) = ext_vanishing(&dual, caps)?;
    report.certainty = report.certainty.and(c2);
    report.ext_dual = flags;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::module::FreeModule;
    use crate::ring::GradedAlgebra;

    fn caps() -> Caps {
        Caps::new(6, 20, 4)
    }

    #[test]
    fn duals() {
        let f = PrimeField::default();
        let d = GradedAlgebra::parse(f, &["x"], &["x^2"]).unwrap();
        let (kd, _) = dual_module(&PresentedModule::residue_field(&d), 20);
        assert_eq!(kd.generators().degrees(), &[1]);
        assert_eq!((kd.dim(1), kd.dim(0), kd.dim(2)), (1, 0, 0));
        let free = PresentedModule::free(&d, FreeModule::new(vec![0, 2]));
        let (fd, _) = dual_module(&free, 20);
        assert_eq!(fd.generators().degrees(), &[-2, 0]);
        assert!(fd.is_free());
        let p = GradedAlgebra::polynomial(f, &["x", "y"]).unwrap();
        let (pd, _) = dual_module(&PresentedModule::residue_field(&p), 20);
        assert_eq!(pd.generators().rank(), 0);
    }

    #[test]
    fn reflexivity_verdicts() {
        let f = PrimeField::default();
        let d = GradedAlgebra::parse(f, &["x"], &["x^2"]).unwrap();
        let r = totally_reflexive_test(&PresentedModule::residue_field(&d), caps()).unwrap();
        assert!(r.totally_reflexive(), "{r:?}");
        let free = totally_reflexive_test(&PresentedModule::ring(&d), caps()).unwrap();
        assert!(free.totally_reflexive());
        let m2 = GradedAlgebra::parse(f, &["s", "t"], &["s^2", "s*t", "t^2"]).unwrap();
        let r = totally_reflexive_test(&PresentedModule::residue_field(&m2), caps()).unwrap();
        assert!(!r.totally_reflexive());
        assert!(r.failure().is_some());
    }
}
