//! Upper bounds for the complete intersection dimension from explicit deformations
//! `Q → R = Q/(f_1..f_c)` with `f` regular on `Q`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{DimensionVerdict, VerdictKind};
use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::module::{FreeModule, GradedMap, PresentedModule};
use crate::resolution::{minimal_free_resolution, Resolution};
use crate::ring::{self, Algebra, GradedAlgebra, Monomial, RingElement};
use crate::value::{Caps, Certainty, DimValue, ExtInt};

/// A deformation `Q ↠ R` with kernel generated by the monomial `Q`-regular
/// sequence `sequence`; the flat part is the identity.
#[derive(Clone, Debug)]
pub struct DeformationSpec {
    pub name: String,
    pub q: Algebra,
    pub sequence: Vec<Monomial>,
}

impl DeformationSpec {
    pub fn new(name: impl Into<String>, q: Algebra, sequence: Vec<Monomial>) -> Self {
        DeformationSpec { name: name.into(), q, sequence }
    }

    /// Length `c` of the regular sequence, which is `pd_Q R`.
    pub fn length(&self) -> usize {
        self.sequence.len()
    }

    /// Check that the sequence is regular on `Q` and that `Q/(f) = R`.
    pub fn validate(&self, r: &Algebra) -> Result<()> {
        if self.q.var_names() != r.var_names() || self.q.field() != r.field() {
            return Err(Error::BadDeformation(format!("{}: ambient ring differs from {:?}", self.name, r)));
        }
        if !self.sequence.is_empty() && !ring::is_monomial_regular_sequence_mod(self.q.relations(), &self.sequence)? {
            return Err(Error::BadDeformation(format!("{}: sequence is not regular on Q", self.name)));
        }
        let mut gens: Vec<Monomial> = self.q.relations().to_vec();
        gens.extend(self.sequence.iter().cloned());
        let mut ours = ring::minimalize(gens);
        let mut theirs = r.relations().to_vec();
        ours.sort();
        theirs.sort();
        if ours != theirs {
            return Err(Error::BadDeformation(format!("{}: Q/(f) does not present the ring", self.name)));
        }
        Ok(())
    }

    pub fn describe(&self) -> String {
        let seq: Vec<String> = self.sequence.iter().map(|m| self.q.format_monomial(m)).collect();
        format!("{}: Q = {:?}, f = ({}), c = {}", self.name, self.q, seq.join(", "), self.length())
    }
}

/// `Q = R`, `c = 0`; the bound is `pd_R X`.
pub fn trivial_deformation(r: &Algebra) -> DeformationSpec {
    DeformationSpec::new("trivial", r.clone(), Vec::new())
}

/// `Q` = the polynomial ring and `f` = the relations of `R`, available when they
/// form a regular sequence.
pub fn ambient_deformation(r: &Algebra) -> Option<DeformationSpec> {
    if r.relations().is_empty() || !r.is_complete_intersection() {
        return None;
    }
    let names: Vec<&str> = r.var_names().iter().map(String::as_str).collect();
    let q = GradedAlgebra::polynomial(r.field(), &names).ok()?;
    Some(DeformationSpec::new("ambient", q, r.relations().to_vec()))
}

fn lift(q: &Algebra, x: &RingElement) -> Result<RingElement> {
    let raw: Vec<(i64, Monomial)> = x.terms().map(|(m, c)| (c as i64, m.clone())).collect();
    q.normal_form(&raw)
}

fn lift_map(q: &Algebra, m: &GradedMap) -> Result<GradedMap> {
    let cols = (0..m.source().rank())
        .map(|j| m.column_element(j).iter().map(|x| lift(q, x)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    GradedMap::new(q, m.source().clone(), m.target().clone(), cols)
}

/// `X` viewed over `Q`: each `F/K` becomes `F/(K + (f)F)` and the differentials
/// are lifted entrywise.
pub fn restrict_scalars(x: &ChainComplex, def: &DeformationSpec) -> Result<ChainComplex> {
    let q = &def.q;
    let seq: Vec<RingElement> = def.sequence.iter().map(|m| q.monomial(1, m.clone())).collect();
    let mut terms = Vec::new();
    for t in x.terms() {
        let gens = t.generators();
        let rel = lift_map(q, t.relations())?;
        let mut degs = rel.source().degrees().to_vec();
        let mut cols: Vec<Vec<RingElement>> = (0..rel.source().rank()).map(|j| rel.column_element(j)).collect();
        for (g, &d) in gens.degrees().iter().enumerate() {
            for (f, m) in seq.iter().zip(&def.sequence) {
                let mut col = vec![RingElement::zero(); gens.rank()];
                col[g] = f.clone();
                cols.push(col);
                degs.push(d + m.degree());
            }
        }
        terms.push(PresentedModule::new(GradedMap::new(q, FreeModule::new(degs), gens.clone(), cols)?));
    }
    let diffs = x
        .indices()
        .skip(1)
        .map(|i| lift_map(q, x.differential(i).unwrap()))
        .collect::<Result<Vec<_>>>()?;
    ChainComplex::new(q, x.low(), terms, diffs)
}

/// `pd_Q X − c`, an upper bound for the CI-dimension of `X`.
pub fn ci_dim_upper(x: &ChainComplex, def: &DeformationSpec, caps: Caps) -> Result<DimensionVerdict> {
    def.validate(x.algebra())?;
    let table = x.homology_table(caps.degree_cap);
    let mut v = DimensionVerdict::new("CI-dim", DimValue::NegInf, "the complex is exact".into(), table.certainty, caps);
    v.kind = VerdictKind::UpperBound;
    if table.is_exact() {
        return Ok(v);
    }
    let c = def.length() as i32;
    let xq = Arc::new(restrict_scalars(x, def)?);
    let res = minimal_free_resolution(&xq, caps.cutoff + c, caps.degree_cap)?;
    v.certainty = v.certainty.and(res.certainty());
    match res.projective_dimension() {
        DimValue::Finite(p) => {
            v.value = DimValue::Finite(p - c);
            v.certificate = format!("pd_Q X = {p} via {}", def.describe());
        }
        other => {
            v.value = DimValue::Indeterminate(format!("pd_Q X is {other} via {}", def.describe()));
        }
    }
    Ok(v)
}

/// Best bound over the trivial deformation, the ambient one when `R` is a
/// complete intersection, and `registry`.
pub fn ci_dim_best(x: &ChainComplex, registry: &[DeformationSpec], caps: Caps) -> Result<DimensionVerdict> {
    let r = x.algebra();
    let mut candidates = vec![trivial_deformation(r)];
    candidates.extend(ambient_deformation(r));
    candidates.extend(registry.iter().cloned());
    let mut best: Option<DimensionVerdict> = None;
    let mut tried = Vec::new();
    for def in &candidates {
        let v = ci_dim_upper(x, def, caps)?;
        if v.value == DimValue::NegInf {
            return Ok(v);
        }
        tried.push(format!("{}: {}", def.name, v.value));
        let better = match (&best, v.value.finite()) {
            (_, None) => false,
            (None, Some(_)) => true,
            (Some(b), Some(n)) => b.value.finite().is_none_or(|m| n < m),
        };
        if better {
            best = Some(v);
        }
    }
    Ok(match best {
        Some(v) => v,
        None => {
            let mut v = DimensionVerdict::new(
                "CI-dim",
                DimValue::Indeterminate(format!("no finite bound from {} deformations", candidates.len())),
                tried.join("; "),
                Certainty::from_flag(r.is_artinian(), caps.degree_cap),
                caps,
            );
            v.kind = VerdictKind::UpperBound;
            v
        }
    })
}

/// How a CI-dimension bound moves between `X` and its syzygy `C_n`, through
/// `CI-dim C_n = max{0, CI-dim X − n}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SyzygyReduction {
    pub index: i32,
    pub syzygy_is_zero: bool,
    /// When `C_n = 0`, the CI-dimension equals `pd X < n`.
    pub certified: Option<DimValue>,
    pub bound_complex: DimValue,
    pub bound_syzygy: DimValue,
    /// `max{0, b − n}` from the bound `b` for `X`.
    pub pushed_to_syzygy: Option<i32>,
    /// From a bound `b` for `C_n`: `b + n` when `b > 0`, at most `n` when `b = 0`.
    pub pulled_to_complex: Option<i32>,
}

pub fn ci_syzygy_reduce(
    x: &ChainComplex,
    res: &Resolution,
    n: i32,
    registry: &[DeformationSpec],
    caps: Caps,
) -> Result<SyzygyReduction> {
    let sup = x.homology_table(caps.degree_cap).sup();
    if let ExtInt::Finite(s) = sup {
        if n < s {
            return Err(Error::Shape(format!("syzygy index {n} is below sup X = {s}")));
        }
    }
    let c = res.syzygy(n)?;
    let cx = ChainComplex::module(c, 0);
    let zero = cx.homology_table(caps.degree_cap).is_exact();
    let bound_complex = ci_dim_best(x, registry, caps)?.value;
    let bound_syzygy = if zero { DimValue::NegInf } else { ci_dim_best(&cx, registry, caps)?.value };
    let certified = zero.then(|| res.projective_dimension());
    let pushed_to_syzygy = bound_complex.finite().map(|b| (b - n).max(0));
    let pulled_to_complex = bound_syzygy.finite().map(|b| if b > 0 { b + n } else { n });
    Ok(SyzygyReduction {
        index: n,
        syzygy_is_zero: zero,
        certified,
        bound_complex,
        bound_syzygy,
        pushed_to_syzygy,
        pulled_to_complex,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn hypersurface_bound() {
        let f = PrimeField::default();
        let r = GradedAlgebra::parse(f, &["x"], &["x^2"]).unwrap();
        let def = ambient_deformation(&r).unwrap();
        def.validate(&r).unwrap();
        let k = ChainComplex::module(PresentedModule::residue_field(&r), 0);
        let v = ci_dim_upper(&k, &def, Caps::new(6, 12, 4)).unwrap();
        assert_eq!(v.value, DimValue::Finite(0));
        assert_eq!(v.kind, VerdictKind::UpperBound);
        let free = ChainComplex::module(PresentedModule::ring(&r), 0);
        assert_eq!(ci_dim_upper(&free, &def, Caps::new(6, 12, 4)).unwrap().value, DimValue::Finite(0));
        assert!(trivial_deformation(&r).validate(&r).is_ok());
    }

    #[test]
    fn rejects_mismatched_deformations() {
        let f = PrimeField::default();
        let r = GradedAlgebra::parse(f, &["x", "y"], &["x^2", "y^3"]).unwrap();
        let q = GradedAlgebra::polynomial(f, &["x", "y"]).unwrap();
        let wrong = DeformationSpec::new("wrong", q.clone(), vec![q.parse_monomial("x^2").unwrap()]);
        assert!(matches!(wrong.validate(&r), Err(Error::BadDeformation(_))));
        let overlapping = DeformationSpec::new(
            "overlap",
            q.clone(),
            vec![q.parse_monomial("x^2").unwrap(), q.parse_monomial("x*y").unwrap()],
        );
        assert!(overlapping.validate(&r).is_err());
        let partial = GradedAlgebra::parse(f, &["x", "y"], &["y^3"]).unwrap();
        let ok = DeformationSpec::new("partial", partial, vec![q.parse_monomial("x^2").unwrap()]);
        ok.validate(&r).unwrap();
    }
}
