//! Betti numbers, Poincaré series, complexity, Koszul complexes, depth and the
//! derived tensor and Hom functors.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::complex::{self, ChainComplex};
use crate::error::{Error, Result};
use crate::module::{FreeModule, GradedMap, PresentedModule};
use crate::resolution::{minimal_free_resolution, resolve_module, Resolution};
use crate::ring::{Algebra, RingElement};
use crate::value::{Caps, Certainty, ExtInt};

/// A truncated Poincaré series `Σ β_n t^n`, stored from `t^start`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincareData {
    /// Exponent of the first coefficient (`inf X` for a minimal resolution).
    pub start: i32,
    pub coeffs: Vec<usize>,
    /// Coefficients are known for exponents up to this value.
    pub cutoff: i32,
    /// Every later coefficient is zero.
    pub terminated: bool,
    pub certainty: Certainty,
}

impl PoincareData {
    pub fn from_resolution(res: &Resolution) -> PoincareData {
        let ranks = res.ranks();
        let first = ranks.iter().position(|r| r.1 > 0);
        let (start, coeffs) = match first {
            None => (0, Vec::new()),
            Some(i) => {
                let last = ranks.iter().rposition(|r| r.1 > 0).unwrap();
                let upto = if res.terminated() { last } else { ranks.len() - 1 };
                (ranks[i].0, ranks[i..=upto].iter().map(|r| r.1).collect())
            }
        };
        PoincareData { start, coeffs, cutoff: res.cutoff(), terminated: res.terminated(), certainty: res.certainty() }
    }

    /// `β_n`, zero outside the stored range.
    pub fn coeff(&self, n: i32) -> usize {
        if n < self.start {
            return 0;
        }
        self.coeffs.get((n - self.start) as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Product series, known up to the smaller guaranteed exponent.
    pub fn product(&self, other: &PoincareData) -> PoincareData {
        let start = self.start + other.start;
        let known = |p: &PoincareData| if p.terminated { i32::MAX / 4 } else { p.cutoff };
        let cutoff = if self.terminated && other.terminated {
            self.cutoff.max(other.cutoff)
        } else {
            (known(self) + other.start).min(known(other) + self.start)
        };
        let mut coeffs = Vec::new();
        if !self.is_zero() && !other.is_zero() {
            let top = if self.terminated && other.terminated {
                self.coeffs.len() + other.coeffs.len() - 2
            } else {
                (cutoff - start).max(0) as usize
            };
            coeffs = (0..=top)
                .map(|k| (0..=k).map(|i| self.coeff(self.start + i as i32) * other.coeff(other.start + (k - i) as i32)).sum())
                .collect();
        }
        PoincareData {
            start,
            coeffs,
            cutoff,
            terminated: self.terminated && other.terminated,
            certainty: self.certainty.and(other.certainty),
        }
    }
}

/// Truncated Poincaré series of `x` from its minimal resolution.
pub fn poincare_series(x: &Arc<ChainComplex>, caps: Caps) -> Result<PoincareData> {
    Ok(PoincareData::from_resolution(&minimal_free_resolution(x, caps.cutoff, caps.degree_cap)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Complexity {
    Exactly(u32),
    AtLeast(u32),
    SuperpolynomialEvidence,
}

impl std::fmt::Display for Complexity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Complexity::Exactly(c) => write!(f, "{c}"),
            Complexity::AtLeast(c) => write!(f, ">= {c}"),
            Complexity::SuperpolynomialEvidence => write!(f, "superpolynomial (evidence)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexityVerdict {
    pub verdict: Complexity,
    /// Degree of the polynomial (or period-2 quasi-polynomial) fitting the window.
    pub fitted_degree: Option<u32>,
    /// Exponents `(first, last)` of the coefficients examined.
    pub window: (i32, i32),
    /// Whether the verdict follows from termination rather than a fit.
    pub certified: bool,
    pub diagnostics: Vec<String>,
}

/// Smallest `d` such that the `d`-th differences of `v` vanish at least twice.
fn difference_degree(v: &[f64]) -> Option<u32> {
    let mut cur = v.to_vec();
    let mut d = 0;
    while cur.len() >= 2 {
        if cur.iter().all(|&x| x == 0.0) {
            return Some(d);
        }
        cur = cur.windows(2).map(|w| w[1] - w[0]).collect();
        d += 1;
    }
    None
}

const RATIO_THRESHOLD: f64 = 1.1;

/// Estimate the complexity from the tail of a truncated Poincaré series.
///
/// Finite projective dimension gives exactly 0. Otherwise the second half of the
/// known coefficients is fitted by successive finite differences, then by a
/// polynomial on even and odd exponents separately; a fit of degree `d` means
/// complexity `d + 1`. If no fit exists and every ratio `β_{n+1}/β_n` exceeds 1.1
/// the growth is reported as superpolynomial.
pub fn complexity_estimate(p: &PoincareData) -> Result<ComplexityVerdict> {
    if p.terminated {
        let last = p.start + p.coeffs.len() as i32 - 1;
        return Ok(ComplexityVerdict {
            verdict: Complexity::Exactly(0),
            fitted_degree: None,
            window: (p.start, last),
            certified: true,
            diagnostics: vec!["resolution terminates: finite projective dimension".into()],
        });
    }
    let n = (p.cutoff - p.start + 1).max(0) as usize;
    let half = n / 2;
    let window: Vec<f64> = (half..n).map(|i| p.coeff(p.start + i as i32) as f64).collect();
    if window.len() < 3 {
        return Err(Error::WindowTooSmall(format!("{} coefficients in the tail window, need 3", window.len())));
    }
    let range = (p.start + half as i32, p.cutoff);
    let verdict = |v, d: Option<u32>, diag: Vec<String>| ComplexityVerdict {
        verdict: v,
        fitted_degree: d,
        window: range,
        certified: false,
        diagnostics: diag,
    };
    let mut diag = vec![format!("tail {:?}", window)];
    if window.iter().all(|&x| x == 0.0) {
        diag.push("tail vanishes but the resolution was not seen to terminate".into());
        return Ok(verdict(Complexity::AtLeast(0), None, diag));
    }
    if let Some(d) = difference_degree(&window) {
        diag.push(format!("polynomial of degree {} fits the tail", d as i64 - 1));
        return Ok(verdict(Complexity::Exactly(d), Some(d.saturating_sub(1)), diag));
    }
    let even: Vec<f64> = window.iter().step_by(2).copied().collect();
    let odd: Vec<f64> = window.iter().skip(1).step_by(2).copied().collect();
    if let (Some(a), Some(b)) = (difference_degree(&even), difference_degree(&odd)) {
        let d = a.max(b);
        diag.push(format!("period-2 quasi-polynomial of degree {} fits the tail", d as i64 - 1));
        return Ok(verdict(Complexity::Exactly(d), Some(d.saturating_sub(1)), diag));
    }
    let ratios: Vec<f64> = window.windows(2).map(|w| if w[0] > 0.0 { w[1] / w[0] } else { 0.0 }).collect();
    diag.push(format!("ratios {:?}", ratios));
    if ratios.iter().all(|&r| r >= RATIO_THRESHOLD) {
        return Ok(verdict(Complexity::SuperpolynomialEvidence, None, diag));
    }
    Ok(verdict(Complexity::AtLeast(1), None, diag))
}

/// The Koszul complex on a homogeneous sequence.
#[derive(Clone, Debug)]
pub struct KoszulData {
    pub sequence: Vec<RingElement>,
    pub complex: Arc<ChainComplex>,
}

impl KoszulData {
    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }
}

/// Subsets of `0..n` of size `k` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Koszul complex on `sequence` (the variables when `None`), with basis `e_S` for
/// subsets `S` and `∂e_S = Σ_k (−1)^k f_{s_k} e_{S∖s_k}`.
pub fn koszul_complex(alg: &Algebra, sequence: Option<&[RingElement]>) -> Result<KoszulData> {
    let seq: Vec<RingElement> = match sequence {
        Some(s) => s.to_vec(),
        None => (0..alg.num_vars()).map(|i| alg.var(i)).collect(),
    };
    let mut degs = Vec::with_capacity(seq.len());
    for f in &seq {
        match (f.is_homogeneous(), f.degree()) {
            (true, Some(d)) => degs.push(d),
            _ => return Err(Error::Inhomogeneous(alg.format_element(f))),
        }
    }
    let n = seq.len();
    let bases: Vec<Vec<Vec<usize>>> = (0..=n).map(|k| subsets(n, k)).collect();
    let module = |k: usize| FreeModule::new(bases[k].iter().map(|s| s.iter().map(|&i| degs[i]).sum()).collect());
    let modules: Vec<FreeModule> = (0..=n).map(module).collect();
    let mut diffs = Vec::new();
    for k in 1..=n {
        let cols = bases[k]
            .iter()
            .map(|s| {
                let mut col = vec![RingElement::zero(); bases[k - 1].len()];
                for (pos, &i) in s.iter().enumerate() {
                    let rest: Vec<usize> = s.iter().copied().filter(|&j| j != i).collect();
                    let row = bases[k - 1].binary_search(&rest).unwrap();
                    let c = if pos % 2 == 0 { seq[i].clone() } else { alg.neg(&seq[i]) };
                    col[row] = c;
                }
                col
            })
            .collect();
        diffs.push(GradedMap::new(alg, modules[k].clone(), modules[k - 1].clone(), cols)?);
    }
    let complex = ChainComplex::free(alg, 0, modules, diffs)?;
    Ok(KoszulData { sequence: seq, complex: Arc::new(complex) })
}

/// `depth X = n − sup(X ⊗ K)` with `K` on the variables.
pub fn depth(x: &ChainComplex, caps: Caps) -> Result<(ExtInt, Certainty)> {
    depth_on(x, None, caps)
}

/// Depth computed with the Koszul complex on a given generating sequence of `m`.
pub fn depth_on(x: &ChainComplex, sequence: Option<&[RingElement]>, caps: Caps) -> Result<(ExtInt, Certainty)> {
    let k = koszul_complex(x.algebra(), sequence)?;
    let t = complex::tensor(x, &k.complex)?;
    let (sup, _, certainty) = t.sup_inf(caps.degree_cap);
    Ok((sup.neg().plus(k.len() as i32), certainty))
}

/// Depth of a module.
pub fn module_depth(m: &PresentedModule, caps: Caps) -> Result<(ExtInt, Certainty)> {
    depth(&ChainComplex::module(m.clone(), 0), caps)
}

/// A derived functor value with the range of homological indices in which its
/// homology is correct.
#[derive(Clone, Debug)]
pub struct DerivedComplex {
    pub complex: Arc<ChainComplex>,
    /// Inclusive bounds; `None` means unbounded on that side.
    pub valid: (Option<i32>, Option<i32>),
    pub certainty: Certainty,
}

impl DerivedComplex {
    pub fn is_valid_at(&self, n: i32) -> bool {
        self.valid.0.is_none_or(|a| n >= a) && self.valid.1.is_none_or(|b| n <= b)
    }
}

/// `X ⊗^L Y = P ⊗ Y` for the minimal resolution `P` of `X`, with homology correct
/// through index `caps.cutoff`.
pub fn derived_tensor(x: &Arc<ChainComplex>, y: &ChainComplex, caps: Caps) -> Result<DerivedComplex> {
    if y.is_zero() || x.is_zero() {
        return Ok(DerivedComplex {
            complex: Arc::new(ChainComplex::zero(x.algebra())),
            valid: (None, None),
            certainty: Certainty::Certified,
        });
    }
    let n = (caps.cutoff + 2 - y.low()).max(x.low());
    let res = minimal_free_resolution(x, n, caps.degree_cap)?;
    let t = complex::tensor(res.complex(), y)?;
    let certainty = res.certainty().and(t.certainty(caps.degree_cap));
    let top = if res.terminated() { None } else { Some(n + y.low() - 1) };
    Ok(DerivedComplex { complex: Arc::new(t), valid: (None, top), certainty })
}

/// `RHom(X, Y) = Hom(P, Y)` with homology correct in indices `≥ low(Y) − cutoff`.
pub fn derived_hom(x: &Arc<ChainComplex>, y: &ChainComplex, caps: Caps) -> Result<DerivedComplex> {
    if y.is_zero() || x.is_zero() {
        return Ok(DerivedComplex {
            complex: Arc::new(ChainComplex::zero(x.algebra())),
            valid: (None, None),
            certainty: Certainty::Certified,
        });
    }
    let n = (caps.cutoff + 1).max(x.low());
    let res = minimal_free_resolution(x, n, caps.degree_cap)?;
    let h = complex::hom(res.complex(), y)?;
    let certainty = res.certainty().and(h.certainty(caps.degree_cap));
    let bottom = if res.terminated() { None } else { Some(y.low() - n + 1) };
    Ok(DerivedComplex { complex: Arc::new(h), valid: (bottom, None), certainty })
}

/// Coefficient table comparing `P_{X⊗^L Y}` with `P_X · P_Y`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProductCheck {
    pub holds: bool,
    pub start: i32,
    pub cutoff: i32,
    pub tensor: Vec<usize>,
    pub product: Vec<usize>,
}

/// Resolve `X ⊗^L Y` on its own and compare its Betti numbers with the product of
/// the Poincaré series of `X` and `Y`, through exponent `caps.cutoff`.
pub fn poincare_product_check(x: &Arc<ChainComplex>, y: &Arc<ChainComplex>, caps: Caps) -> Result<ProductCheck> {
    let px = poincare_series(x, caps)?;
    let py = poincare_series(y, caps)?;
    let prod = px.product(&py);
    let d = derived_tensor(x, y, caps.with_cutoff(caps.cutoff + 1))?;
    let pt = poincare_series(&d.complex, caps)?;
    let start = x.low() + y.low();
    let cutoff = caps.cutoff.min(prod.cutoff);
    let tensor: Vec<usize> = (start..=cutoff).map(|n| pt.coeff(n)).collect();
    let product: Vec<usize> = (start..=cutoff).map(|n| prod.coeff(n)).collect();
    Ok(ProductCheck { holds: tensor == product, start, cutoff, tensor, product })
}

/// Check `β_m(X) = β_{m−n}(C_n)` for `n ≤ m ≤ cutoff`, where `C_n` is the `n`-th
/// syzygy of the minimal resolution and `n ≥ sup X`.
pub fn syzygy_shift_check(res: &Resolution, n: i32) -> Result<bool> {
    let c = res.syzygy(n)?;
    let sub = resolve_module(&c, (res.cutoff() - n).max(0), res.degree_cap())?;
    let px = PoincareData::from_resolution(res);
    let pc = PoincareData::from_resolution(&sub);
    Ok((n..=res.cutoff()).all(|m| px.coeff(m) == pc.coeff(m - n)))
}
