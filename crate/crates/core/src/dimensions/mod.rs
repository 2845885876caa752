//! Homological dimensions defined through syzygies: projective, Gorenstein (via
//! totally reflexive modules), lower complete intersection (via the CI* class) and
//! upper bounds for the complete intersection dimension from explicit deformations.
//!
//! Every dimension of this kind is read off a single free resolution: it is the
//! first `n ≥ sup X` whose syzygy `C_n` lies in the relevant resolving class. The
//! class tests are window-bounded, so verdicts carry the caps used.

mod deformation;
mod es;
mod reflexive;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use deformation::{
    ambient_deformation, ci_dim_best, ci_dim_upper, ci_syzygy_reduce, restrict_scalars, trivial_deformation,
    DeformationSpec, SyzygyReduction,
};
pub use es::{es_pushout, module_map, EsSequence};
pub use reflexive::{dual_module, totally_reflexive_test, ReflexivityReport};

use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::invariants::{complexity_estimate, depth, derived_hom, Complexity, PoincareData};
use crate::module::PresentedModule;
use crate::resolution::{minimal_free_resolution, resolve_module, Resolution};
use crate::value::{Caps, Certainty, DimValue, ExtInt};

/// Whether a verdict is the dimension itself or only an upper bound for it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    Exact,
    UpperBound,
}

/// A consistency check attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DimensionVerdict {
    pub dimension: String,
    pub value: DimValue,
    pub kind: VerdictKind,
    /// What established the value: the syzygy that entered the class, or the
    /// deformation achieving a bound.
    pub certificate: String,
    pub certainty: Certainty,
    pub caps: Caps,
    pub checks: Vec<Check>,
}

impl DimensionVerdict {
    fn new(dimension: &str, value: DimValue, certificate: String, certainty: Certainty, caps: Caps) -> Self {
        DimensionVerdict {
            dimension: dimension.into(),
            value,
            kind: VerdictKind::Exact,
            certificate,
            certainty,
            caps,
            checks: Vec::new(),
        }
    }

    /// All attached checks passed.
    pub fn consistent(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "reason", rename_all = "snake_case")]
pub enum Membership {
    Member(String),
    NonMember(String),
    Indeterminate(String),
}

/// A resolving class of modules, tested up to the given caps.
pub trait ResolvingClass {
    fn name(&self) -> &str;
    fn membership(&self, m: &PresentedModule, caps: Caps) -> Result<Membership>;
}

/// Free modules: `β_1 = 0` in the minimal resolution.
pub struct FreeClass;

impl ResolvingClass for FreeClass {
    fn name(&self) -> &str {
        "free"
    }

    fn membership(&self, m: &PresentedModule, caps: Caps) -> Result<Membership> {
        let res = resolve_module(m, 1, caps.degree_cap)?;
        Ok(if res.rank(1) == 0 {
            Membership::Member(format!("free of rank {}", res.rank(0)))
        } else {
            Membership::NonMember(format!("β_1 = {}", res.rank(1)))
        })
    }
}

/// Totally reflexive modules, certified up to the reflexivity window.
pub struct TotallyReflexiveClass;

impl ResolvingClass for TotallyReflexiveClass {
    fn name(&self) -> &str {
        "totally reflexive"
    }

    fn membership(&self, m: &PresentedModule, caps: Caps) -> Result<Membership> {
        let r = totally_reflexive_test(m, caps)?;
        Ok(match r.failure() {
            None => Membership::Member(format!("totally reflexive up to window {}", caps.window)),
            Some(why) => Membership::NonMember(why),
        })
    }
}

/// Totally reflexive modules of finite complexity.
pub struct CiStarClass;

impl ResolvingClass for CiStarClass {
    fn name(&self) -> &str {
        "CI*"
    }

    fn membership(&self, m: &PresentedModule, caps: Caps) -> Result<Membership> {
        match TotallyReflexiveClass.membership(m, caps)? {
            Membership::Member(_) => {}
            other => return Ok(other),
        }
        let res = resolve_module(m, caps.cutoff, caps.degree_cap)?;
        let cx = match complexity_estimate(&PoincareData::from_resolution(&res)) {
            Ok(v) => v,
            Err(Error::WindowTooSmall(why)) => return Ok(Membership::Indeterminate(why)),
            Err(e) => return Err(e),
        };
        Ok(match cx.verdict {
            Complexity::Exactly(c) => Membership::Member(format!("totally reflexive up to window {}, complexity {c}", caps.window)),
            Complexity::SuperpolynomialEvidence => {
                Membership::NonMember("superpolynomial Betti growth (evidence)".into())
            }
            Complexity::AtLeast(c) => Membership::Indeterminate(format!("complexity only bounded below by {c}")),
        })
    }
}

/// Membership of `C^X_n` read off with the free-resolution convention.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SyzygyMembership {
    pub index: i32,
    pub membership: Membership,
}

/// `B-dim X = inf{n ≥ sup X : C_n ∈ B}` for the syzygies of a given free
/// resolution; the scan stops at the first member or indeterminate answer.
pub fn b_dimension_with(
    x: &ChainComplex,
    res: &Resolution,
    class: &dyn ResolvingClass,
    caps: Caps,
) -> Result<(DimensionVerdict, Vec<SyzygyMembership>)> {
    let name = format!("{}-dim", class.name());
    let table = x.homology_table(caps.degree_cap);
    let certainty = table.certainty.and(res.certainty());
    let sup = match table.sup() {
        ExtInt::Finite(s) => s,
        _ => {
            let v = DimensionVerdict::new(&name, DimValue::NegInf, "the complex is exact".into(), certainty, caps);
            return Ok((v, Vec::new()));
        }
    };
    let last = if res.terminated() { res.complex().high() } else { res.cutoff() - 1 };
    let mut scanned = Vec::new();
    for n in sup..=last {
        let c = res.syzygy(n)?;
        let m = class.membership(&c, caps)?;
        scanned.push(SyzygyMembership { index: n, membership: m.clone() });
        match m {
            Membership::Member(why) => {
                let v = DimensionVerdict::new(&name, DimValue::Finite(n), format!("C_{n} is {}: {why}", class.name()), certainty, caps);
                return Ok((v, scanned));
            }
            Membership::Indeterminate(why) => {
                let v = DimensionVerdict::new(
                    &name,
                    DimValue::Indeterminate(format!("membership of C_{n} undecided: {why}")),
                    String::new(),
                    certainty,
                    caps,
                );
                return Ok((v, scanned));
            }
            Membership::NonMember(_) => {}
        }
    }
    let bound = (last + 1).max(sup);
    let v = DimensionVerdict::new(
        &name,
        DimValue::AtLeast(bound),
        format!("no syzygy C_n with {sup} <= n <= {last} is {}", class.name()),
        certainty,
        caps,
    );
    Ok((v, scanned))
}

/// B-dimension from the minimal free resolution.
pub fn b_dimension(x: &Arc<ChainComplex>, class: &dyn ResolvingClass, caps: Caps) -> Result<DimensionVerdict> {
    let res = minimal_free_resolution(x, caps.cutoff, caps.degree_cap)?;
    Ok(b_dimension_with(x, &res, class, caps)?.0)
}

/// `depth R − depth X`, the common value of every finite dimension.
pub fn auslander_buchsbaum(x: &ChainComplex, caps: Caps) -> Result<Option<i32>> {
    let r = ChainComplex::module(PresentedModule::ring(x.algebra()), 0);
    let (dr, _) = depth(&r, caps)?;
    let (dx, _) = depth(x, caps)?;
    Ok(match (dr, dx) {
        (ExtInt::Finite(a), ExtInt::Finite(b)) => Some(a - b),
        _ => None,
    })
}

fn add_ab_check(v: &mut DimensionVerdict, x: &ChainComplex, caps: Caps) -> Result<()> {
    if let DimValue::Finite(n) = v.value {
        let ab = auslander_buchsbaum(x, caps)?;
        v.checks.push(Check {
            name: "depth R - depth X".into(),
            passed: ab == Some(n),
            detail: match ab {
                Some(a) => format!("{a}"),
                None => "undefined".into(),
            },
        });
    }
    Ok(())
}

/// Projective dimension from the minimal free resolution.
pub fn pd(x: &Arc<ChainComplex>, caps: Caps) -> Result<DimensionVerdict> {
    let res = minimal_free_resolution(x, caps.cutoff, caps.degree_cap)?;
    let value = res.projective_dimension();
    let certificate = match &value {
        DimValue::Finite(n) => format!("minimal resolution ends at P_{n}"),
        DimValue::NegInf => "the complex is exact".into(),
        _ => format!("minimal resolution does not end by P_{}", caps.cutoff),
    };
    let mut v = DimensionVerdict::new("pd", value, certificate, res.certainty(), caps);
    add_ab_check(&mut v, x, caps)?;
    Ok(v)
}

/// G-dimension, cross-checked against `−inf RHom(X, R)` and the depth formula.
pub fn gdim(x: &Arc<ChainComplex>, caps: Caps) -> Result<DimensionVerdict> {
    let mut v = b_dimension(x, &TotallyReflexiveClass, caps)?;
    v.dimension = "gdim".into();
    if let DimValue::Finite(n) = v.value {
        let r = ChainComplex::module(PresentedModule::ring(x.algebra()), 0);
        let d = derived_hom(x, &r, caps)?;
        let t = d.complex.homology_table(caps.degree_cap);
        let inf = t.nonzero().keys().map(|k| k.0).filter(|&i| d.is_valid_at(i)).min();
        v.checks.push(Check {
            name: "-inf RHom(X, R)".into(),
            passed: inf == Some(-n),
            detail: inf.map_or("exact in the valid range".into(), |i| format!("{}", -i)),
        });
        add_ab_check(&mut v, x, caps)?;
    }
    Ok(v)
}

/// Lower complete intersection dimension, the B-dimension for the CI* class.
pub fn pci_dim(x: &Arc<ChainComplex>, caps: Caps) -> Result<DimensionVerdict> {
    let mut v = b_dimension(x, &CiStarClass, caps)?;
    v.dimension = "CI*-dim".into();
    add_ab_check(&mut v, x, caps)?;
    Ok(v)
}

/// All four dimensions and the chain `gdim ≤ CI*-dim ≤ CI-dim ≤ pd`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HierarchyReport {
    pub gdim: DimensionVerdict,
    pub pci: DimensionVerdict,
    pub ci: DimensionVerdict,
    pub pd: DimensionVerdict,
    pub violations: Vec<String>,
    /// Comparisons that could not be made because a value is not determinate.
    pub gaps: Vec<String>,
}

impl HierarchyReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn chain(&self) -> [&DimensionVerdict; 4] {
        [&self.gdim, &self.pci, &self.ci, &self.pd]
    }
}

/// Compare the verdicts: determinate values must increase to the right, and a
/// finite value forces every value on its left to equal it. The CI entry is an
/// upper bound, so only `≤` is required against it from the left, and it must equal
/// a finite `pd`.
fn compare_chain(chain: [&DimensionVerdict; 4]) -> (Vec<String>, Vec<String>) {
    let mut violations = Vec::new();
    let mut gaps = Vec::new();
    for j in 1..4 {
        let right = chain[j];
        for left in &chain[..j] {
            let pair = format!("{} vs {}", left.dimension, right.dimension);
            match (&left.value, &right.value) {
                (DimValue::Finite(a), DimValue::Finite(b)) => {
                    let bound = right.kind == VerdictKind::UpperBound;
                    if (bound && a > b) || (!bound && a != b) {
                        violations.push(format!("{pair}: {a} and {b}"));
                    }
                }
                (DimValue::NegInf, DimValue::NegInf) => {}
                (l, DimValue::NegInf) | (DimValue::NegInf, l) => {
                    if l.is_determinate() {
                        violations.push(format!("{pair}: exactness disagrees"));
                    }
                }
                (DimValue::AtLeast(a), DimValue::Finite(b)) if right.kind == VerdictKind::Exact && a > b => {
                    violations.push(format!("{pair}: >= {a} on the left of {b}"));
                }
                (DimValue::Finite(_), DimValue::AtLeast(_)) => {}
                _ => gaps.push(pair),
            }
        }
    }
    (violations, gaps)
}

/// Compute all four verdicts; the CI entry is the best bound over the trivial and
/// ambient deformations and `registry`.
pub fn hierarchy_check(x: &Arc<ChainComplex>, registry: &[DeformationSpec], caps: Caps) -> Result<HierarchyReport> {
    let gdim = gdim(x, caps)?;
    let pci = pci_dim(x, caps)?;
    let ci = ci_dim_best(x, registry, caps)?;
    let pd = pd(x, caps)?;
    let (violations, gaps) = compare_chain([&gdim, &pci, &ci, &pd]);
    Ok(HierarchyReport { gdim, pci, ci, pd, violations, gaps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ring::GradedAlgebra;

    fn k_complex(vars: &[&str], rels: &[&str]) -> Arc<ChainComplex> {
        let r = GradedAlgebra::parse(PrimeField::default(), vars, rels).unwrap();
        Arc::new(ChainComplex::module(PresentedModule::residue_field(&r), 0))
    }

    #[test]
    fn dual_numbers() {
        let k = k_complex(&["x"], &["x^2"]);
        let caps = Caps::new(10, 20, 8);
        let h = hierarchy_check(&k, &[], caps).unwrap();
        assert_eq!(h.gdim.value, DimValue::Finite(0));
        assert_eq!(h.pci.value, DimValue::Finite(0));
        assert_eq!(h.ci.value, DimValue::Finite(0));
        assert_eq!(h.pd.value, DimValue::AtLeast(10));
        assert!(h.holds(), "{:?}", h.violations);
        assert!(h.chain().iter().all(|v| v.consistent()));
    }

    #[test]
    fn regular_ring() {
        let k = k_complex(&["x", "y"], &[]);
        let caps = Caps::new(6, 12, 4);
        let h = hierarchy_check(&k, &[], caps).unwrap();
        for v in h.chain() {
            assert_eq!(v.value, DimValue::Finite(2), "{}", v.dimension);
            assert!(v.consistent(), "{:?}", v.checks);
        }
        assert!(h.holds());
    }

    #[test]
    fn trivial_extension_has_no_finite_dimensions() {
        let k = k_complex(&["s", "t"], &["s^2", "s*t", "t^2"]);
        let caps = Caps::new(5, 20, 3);
        let v = pci_dim(&k, caps).unwrap();
        assert_eq!(v.value, DimValue::AtLeast(5));
        let z = Arc::new(ChainComplex::zero(k.algebra()));
        let h = hierarchy_check(&z, &[], caps).unwrap();
        assert!(h.chain().iter().all(|v| v.value == DimValue::NegInf));
    }
}
