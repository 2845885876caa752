//! Free resolutions of complexes of presented modules.
//!
//! [`minimal_free_resolution`] builds `P` and the quasi-isomorphism `σ: P → X`
//! one homological degree at a time by killing the cycles of the partial mapping
//! cone: at step `n` the cone has `X_n ⊕ P_{n-1}` in degree `n`, and `P_n` receives
//! one generator for each minimal generator of the cone cycles modulo the boundaries
//! coming from `X`. Generators are chosen outside `m·cycles`, so the differential
//! has no unit entries and `P` is minimal.
//!
//! [`strict_resolution`] adds contractible disks to obtain a resolution that is
//! surjective in every degree, and [`ses_resolution`] lifts a short exact sequence
//! of complexes to one of free resolutions.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::complex::{ChainComplex, ComplexMorphism, QuasiIsoReport};
use crate::error::{Error, Result};
use crate::linalg::{self, SparseVec};
use crate::module::{self, element_to_vec, vec_to_element, Element, FreeModule, GradedMap, PresentedModule};
use crate::ring::{Algebra, RingElement};
use crate::value::{Certainty, DimValue};

/// A free resolution `σ: P → X` computed through `P_cutoff`.
#[derive(Clone, Debug)]
pub struct Resolution {
    complex: Arc<ChainComplex>,
    augmentation: ComplexMorphism,
    cutoff: i32,
    degree_cap: i32,
    minimal: bool,
    terminated: bool,
    certainty: Certainty,
}

/// Split a vector of `A ⊕ B` into its two components.
fn split(v: &[(u32, u32)], first_dim: usize) -> (SparseVec, SparseVec) {
    let n = first_dim as u32;
    let a = v.iter().filter(|e| e.0 < n).copied().collect();
    let b = v.iter().filter(|e| e.0 >= n).map(|&(k, x)| (k - n, x)).collect();
    (a, b)
}

fn to_element(alg: &Algebra, m: &FreeModule, e: i32, v: &[(u32, u32)]) -> Element {
    vec_to_element(alg, &m.layout(alg, e), m.rank(), v)
}

fn negate(alg: &Algebra, x: Element) -> Element {
    x.iter().map(|r| alg.neg(r)).collect()
}

impl Resolution {
    pub fn complex(&self) -> &Arc<ChainComplex> {
        &self.complex
    }

    pub fn augmentation(&self) -> &ComplexMorphism {
        &self.augmentation
    }

    pub fn cutoff(&self) -> i32 {
        self.cutoff
    }

    pub fn degree_cap(&self) -> i32 {
        self.degree_cap
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// True when `P_n = 0` was reached beyond the top of the input, so every later
    /// term vanishes.
    pub fn terminated(&self) -> bool {
        self.terminated
    }

    /// Whether the ranks are exact in all internal degrees.
    pub fn certainty(&self) -> Certainty {
        self.certainty
    }

    /// `rank P_n` (a Betti number when the resolution is minimal).
    pub fn rank(&self, n: i32) -> usize {
        self.complex.generators(n).rank()
    }

    /// `(n, rank P_n)` for every computed index.
    pub fn ranks(&self) -> Vec<(i32, usize)> {
        self.complex.indices().map(|n| (n, self.rank(n))).collect()
    }

    pub fn betti_table(&self) -> BettiTable {
        let rows = self
            .complex
            .indices()
            .map(|n| {
                let mut counts = BTreeMap::new();
                for &d in self.complex.generators(n).degrees() {
                    *counts.entry(d).or_insert(0) += 1;
                }
                BettiRow { index: n, counts }
            })
            .collect();
        BettiTable { rows, cutoff: self.cutoff, terminated: self.terminated, certainty: self.certainty }
    }

    /// Whether index `n` lies in the computed range (or beyond termination).
    pub fn covers(&self, n: i32) -> bool {
        n <= self.cutoff || self.terminated
    }

    /// The syzygy `C_n = coker ∂_{n+1}`; requires `∂_{n+1}` to be known.
    pub fn syzygy(&self, n: i32) -> Result<PresentedModule> {
        if n + 1 > self.cutoff && !self.terminated {
            return Err(Error::BeyondCutoff { index: n, cutoff: self.cutoff });
        }
        Ok(self.complex.cokernel(n))
    }

    /// Projective dimension read off a minimal resolution.
    pub fn projective_dimension(&self) -> DimValue {
        let last = self.complex.indices().rev().find(|&n| self.rank(n) > 0);
        match (last, self.terminated) {
            (None, true) => DimValue::NegInf,
            (Some(n), true) => DimValue::Finite(n),
            (Some(n), false) => DimValue::AtLeast(n),
            (None, false) => DimValue::Indeterminate("no generators below the cutoff, input extends beyond it".into()),
        }
    }

    /// The same resolution of `Σ^n X`.
    pub fn suspend(&self, n: i32) -> Resolution {
        Resolution {
            complex: Arc::new(self.complex.suspend(n)),
            augmentation: self.augmentation.suspend(n),
            cutoff: self.cutoff + n,
            ..self.clone()
        }
    }
}

/// Betti numbers split by internal degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub rows: Vec<BettiRow>,
    pub cutoff: i32,
    pub terminated: bool,
    pub certainty: Certainty,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRow {
    pub index: i32,
    pub counts: BTreeMap<i32, usize>,
}

impl BettiRow {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

/// Minimal free resolution of `x` through homological index `cutoff`, exact in
/// internal degrees up to `cap`.
pub fn minimal_free_resolution(x: &Arc<ChainComplex>, cutoff: i32, cap: i32) -> Result<Resolution> {
    let alg = x.algebra();
    let f = alg.field();
    let l = x.low();
    let empty = FreeModule::zero();
    let mut p_mods: Vec<FreeModule> = Vec::new();
    let mut p_diffs: Vec<GradedMap> = Vec::new();
    let mut sigmas: Vec<GradedMap> = Vec::new();
    let mut certified = alg.is_artinian();
    let mut terminated = false;
    let mut n = l;
    while n <= cutoff.max(l) {
        let fx = x.generators(n);
        let fx1 = x.generators(n - 1);
        let p1 = if n > l { &p_mods[(n - 1 - l) as usize] } else { &empty };
        let p2 = if n - 1 > l { &p_mods[(n - 2 - l) as usize] } else { &empty };
        let dx = x.map_or_zero(n);
        let s1 = if n > l { sigmas[(n - 1 - l) as usize].clone() } else { GradedMap::zero(alg, empty.clone(), fx1.clone()) };
        let dp = if n - 1 > l { p_diffs[(n - 2 - l) as usize].clone() } else { GradedMap::zero(alg, p1.clone(), p2.clone()) };
        let dmap = GradedMap::block(alg, (fx, p1), (fx1, p2), [[Some(&dx), Some(&s1)], [None, Some(&dp)]]);
        let ambient = fx.direct_sum(p1);
        let range = module::degree_range(alg, [&ambient], cap);
        if range.is_some() && !module::cap_certifies(alg, [&ambient], cap) {
            certified = false;
        }
        let gens = module::minimal_generators(alg, &ambient, range, |e| {
            let rows = dmap.degree_rows(e);
            let tdim = fx1.dim(alg, e) + p2.dim(alg, e);
            let sub = linalg::preimage(f, tdim, &rows, &x.relation_span(n - 1, e));
            let mut quot: Vec<SparseVec> = x.diff_rows(n + 1, e).to_vec();
            quot.extend(x.relation_span(n, e).iter().cloned());
            (sub, quot)
        });
        let pn = FreeModule::new(gens.iter().map(|(e, _)| *e).collect());
        let mut sig_cols = Vec::with_capacity(gens.len());
        let mut d_cols = Vec::with_capacity(gens.len());
        for (e, v) in &gens {
            let (a, b) = split(v, fx.dim(alg, *e));
            sig_cols.push(to_element(alg, fx, *e, &a));
            d_cols.push(negate(alg, to_element(alg, p1, *e, &b)));
        }
        sigmas.push(GradedMap::from_dense_unchecked(alg, pn.clone(), fx.clone(), sig_cols));
        if n > l {
            p_diffs.push(GradedMap::from_dense_unchecked(alg, pn.clone(), p1.clone(), d_cols));
        }
        let done = n > x.high() && pn.is_zero();
        p_mods.push(pn);
        if done {
            terminated = true;
            break;
        }
        n += 1;
    }
    let terms = p_mods.into_iter().map(|m| PresentedModule::free(alg, m)).collect();
    let p = Arc::new(ChainComplex::new_unchecked(alg, l, terms, p_diffs));
    let minimal = p.is_minimal();
    let augmentation = ComplexMorphism::new_unchecked(p.clone(), x.clone(), sigmas)?;
    Ok(Resolution {
        complex: p,
        augmentation,
        cutoff,
        degree_cap: cap,
        minimal,
        terminated,
        certainty: Certainty::from_flag(certified, cap),
    })
}

/// Minimal free resolution of a module placed in homological degree 0.
pub fn resolve_module(m: &PresentedModule, cutoff: i32, cap: i32) -> Result<Resolution> {
    minimal_free_resolution(&Arc::new(ChainComplex::module(m.clone(), 0)), cutoff, cap)
}

/// A resolution `P = F ⊕ G → X` with every component surjective: `F` is the
/// minimal resolution and `G` is a sum of disks `E_n` in degrees `n, n-1` on the
/// generators of `X_n`, mapped identically onto them.
pub fn strict_resolution(x: &Arc<ChainComplex>, cutoff: i32, cap: i32) -> Result<Resolution> {
    let alg = x.algebra();
    let fres = minimal_free_resolution(x, cutoff, cap)?;
    let fc = fres.complex();
    let l = x.low() - 1;
    let hi = cutoff.max(x.low());
    let parts = |n: i32| -> [FreeModule; 3] {
        [fc.generators(n).clone(), x.generators(n).clone(), x.generators(n + 1).clone()]
    };
    let mut terms = Vec::new();
    let mut diffs = Vec::new();
    let mut sigmas = Vec::new();
    for n in l..=hi {
        let [fp, e0, e1] = parts(n);
        let all = fp.direct_sum(&e0).direct_sum(&e1);
        terms.push(PresentedModule::free(alg, all));
        let alpha = fres.augmentation().map_or_zero(n);
        let id0 = GradedMap::identity(alg, &e0);
        let dx = x.map_or_zero(n + 1);
        sigmas.push(GradedMap::blocks(
            alg,
            &[&fp, &e0, &e1],
            &[x.generators(n)],
            &[(0, 0, &alpha), (0, 1, &id0), (0, 2, &dx)],
        ));
        if n > l {
            let [gp, g0, g1] = parts(n - 1);
            let dp = fc.map_or_zero(n);
            diffs.push(GradedMap::blocks(alg, &[&fp, &e0, &e1], &[&gp, &g0, &g1], &[(0, 0, &dp), (2, 1, &id0)]));
        }
    }
    let p = Arc::new(ChainComplex::new_unchecked(alg, l, terms, diffs));
    let augmentation = ComplexMorphism::new_unchecked(p.clone(), x.clone(), sigmas)?;
    Ok(Resolution {
        complex: p,
        augmentation,
        cutoff,
        degree_cap: cap,
        minimal: false,
        terminated: fres.terminated,
        certainty: fres.certainty,
    })
}

/// Exactness of `0 → X → Y → Z → 0` in one index and internal degree.
fn ses_exact_at(eta: &ComplexMorphism, nu: &ComplexMorphism, i: i32, e: i32) -> std::result::Result<(), String> {
    let (x, y, z) = (eta.source(), eta.target(), nu.target());
    let f = x.algebra().field();
    let (nx, ny, nz) = (x.free_dim(i, e), y.free_dim(i, e), z.free_dim(i, e));
    let kx = linalg::rank(f, nx, &x.relation_span(i, e));
    let pre = linalg::preimage(f, ny, &eta.map_rows(i, e), &y.relation_span(i, e));
    if pre.len() != kx {
        return Err(format!("first map not injective at index {i}, degree {e}"));
    }
    let mut img: Vec<SparseVec> = nu.map_rows(i, e).to_vec();
    img.extend(z.relation_span(i, e).iter().cloned());
    if linalg::rank(f, nz, &img) != nz {
        return Err(format!("second map not surjective at index {i}, degree {e}"));
    }
    let ker = linalg::preimage(f, nz, &nu.map_rows(i, e), &z.relation_span(i, e)).len();
    let mut im: Vec<SparseVec> = eta.map_rows(i, e).to_vec();
    im.extend(y.relation_span(i, e).iter().cloned());
    if ker != linalg::rank(f, ny, &im) {
        return Err(format!("not exact in the middle at index {i}, degree {e}"));
    }
    Ok(())
}

/// Check that `0 → X → Y → Z → 0` is a short exact sequence of complexes.
pub fn check_short_exact(eta: &ComplexMorphism, nu: &ComplexMorphism, cap: i32) -> Result<()> {
    if !Arc::ptr_eq(eta.target(), nu.source()) && **eta.target() != **nu.source() {
        return Err(Error::Shape("the two morphisms are not composable".into()));
    }
    eta.validate()?;
    nu.validate()?;
    let (x, y, z) = (eta.source(), eta.target(), nu.target());
    let mods = x.terms().iter().chain(y.terms()).chain(z.terms()).map(PresentedModule::generators);
    let Some((lo, hi)) = module::degree_range(x.algebra(), mods, cap) else { return Ok(()) };
    let imin = x.low().min(y.low()).min(z.low());
    let imax = x.high().max(y.high()).max(z.high());
    for i in imin..=imax {
        for e in lo..=hi {
            ses_exact_at(eta, nu, i, e).map_err(Error::NotExact)?;
        }
    }
    Ok(())
}

/// Solve `Σ x_j rows_j ≡ target (mod slack)` and return `x` as an element of `src`.
pub(crate) fn solve_into(
    alg: &Algebra,
    src: &FreeModule,
    e: i32,
    ncols: usize,
    rows: &[SparseVec],
    slack: &[SparseVec],
    target: &[(u32, u32)],
    what: &str,
) -> Result<Element> {
    let s = linalg::solver(alg.field(), ncols, rows, slack);
    let x = s.solve(target).ok_or_else(|| Error::NotExact(format!("no lift exists: {what}")))?;
    Ok(to_element(alg, src, e, &x))
}

/// Degree-`e` coordinates of column `g` of `map`.
fn column_vec(alg: &Algebra, map: &GradedMap, g: usize, e: i32) -> Result<SparseVec> {
    element_to_vec(&map.target().layout(alg, e), &map.column_element(g))
}

/// The lifted diagram `0 → T → U → V → 0` over `0 → X → Y → Z → 0`.
#[derive(Clone, Debug)]
pub struct SesResolution {
    /// `ψ: T → X`.
    pub t: Resolution,
    /// `λ: U → Y`, with `U = F ⊕ G`.
    pub u: Resolution,
    /// `α: V → Z`, a strict resolution.
    pub v: Resolution,
    pub iota: ComplexMorphism,
    pub theta: ComplexMorphism,
    pub report: SesReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SesReport {
    pub rows_exact: bool,
    pub commutes: bool,
    pub verticals: [QuasiIsoReport; 3],
    /// Homological window in which the quasi-isomorphisms were tested.
    pub window: (i32, i32),
}

impl SesReport {
    pub fn ok(&self) -> bool {
        self.rows_exact && self.commutes && self.verticals.iter().all(|r| r.is_quasiiso)
    }
}

/// Lift an exact sequence `0 → X →η Y →ν Z → 0` of complexes to an exact sequence
/// of degreewise finite free resolutions, following the construction
/// `U = F ⊕ G`, `T = ker(U → V)`.
pub fn ses_resolution(eta: &ComplexMorphism, nu: &ComplexMorphism, cutoff: i32, cap: i32) -> Result<SesResolution> {
    check_short_exact(eta, nu, cap)?;
    let (x, y, z) = (eta.source().clone(), eta.target().clone(), nu.target().clone());
    let alg = x.algebra().clone();
    let a = &alg;
    let f = alg.field();

    let vres = strict_resolution(&z, cutoff + 1, cap)?;
    let vc = vres.complex().clone();
    let alpha = vres.augmentation().clone();
    let fres = minimal_free_resolution(&y, cutoff, cap)?;
    let fc = fres.complex().clone();
    let gamma = fres.augmentation().clone();

    // σ: F → V with ασ = νγ.
    let mut sigma: BTreeMap<i32, GradedMap> = BTreeMap::new();
    for n in fc.indices() {
        let src = fc.generators(n);
        let vn = vc.generators(n);
        let vn1 = vc.generators(n - 1);
        let zn = z.generators(n);
        let mut cols = Vec::new();
        let stack = GradedMap::blocks(
            a,
            &[vn],
            &[zn, vn1],
            &[(0, 0, &alpha.map_or_zero(n)), (1, 0, &vc.map_or_zero(n))],
        );
        for (g, &e) in src.degrees().iter().enumerate() {
            let nugamma = nu.map_or_zero(n).apply(&gamma.map_or_zero(n).column_element(g));
            let lower = match (fc.differential(n), sigma.get(&(n - 1))) {
                (Some(d), Some(s)) => s.apply(&d.column_element(g)),
                _ => vec![RingElement::zero(); vn1.rank()],
            };
            let mut target: Element = nugamma;
            target.extend(lower);
            let tv = element_to_vec(&stack.target().layout(a, e), &target)?;
            let slack = vc_slack(&z, n, e);
            cols.push(solve_into(a, vn, e, stack.target().dim(a, e), &stack.degree_rows(e), &slack, &tv, "F → V")?);
        }
        sigma.insert(n, GradedMap::from_dense_unchecked(a, src.clone(), vn.clone(), cols));
    }

    // Disks G on the generators of V and ε: G → V, ρ: G → Y.
    let glow = vc.low() - 1;
    let ghi = cutoff;
    let mut lift_y: BTreeMap<i32, GradedMap> = BTreeMap::new();
    for n in vc.indices() {
        let ev = vc.generators(n);
        let yn = y.generators(n);
        let mut cols = Vec::new();
        for (g, &e) in ev.degrees().iter().enumerate() {
            let target = element_to_vec(&z.generators(n).layout(a, e), &alpha.map_or_zero(n).column_element(g))?;
            cols.push(solve_into(
                a,
                yn,
                e,
                z.free_dim(n, e),
                &nu.map_rows(n, e),
                &z.relation_span(n, e),
                &target,
                "V → Y",
            )?);
        }
        lift_y.insert(n, GradedMap::from_dense_unchecked(a, ev.clone(), yn.clone(), cols));
    }
    let e_of = |n: i32| vc.generators(n).clone();
    let lift = |n: i32| -> GradedMap {
        lift_y.get(&n).cloned().unwrap_or_else(|| GradedMap::zero(a, e_of(n), y.generators(n).clone()))
    };

    let ulow = fc.low().min(glow);
    let mut u_terms = Vec::new();
    let mut u_diffs = Vec::new();
    let mut lambdas = Vec::new();
    let mut thetas = Vec::new();
    for n in ulow..=ghi {
        let (fp, e0, e1) = (fc.generators(n).clone(), e_of(n), e_of(n + 1));
        let parts = [&fp, &e0, &e1];
        u_terms.push(PresentedModule::free(a, fp.direct_sum(&e0).direct_sum(&e1)));
        let gam = gamma.map_or_zero(n);
        let rho_top = lift(n);
        let rho_bottom = y.map_or_zero(n + 1).compose(&lift(n + 1))?;
        lambdas.push(GradedMap::blocks(a, &parts, &[y.generators(n)], &[(0, 0, &gam), (0, 1, &rho_top), (0, 2, &rho_bottom)]));
        let sig = sigma
            .get(&n)
            .cloned()
            .unwrap_or_else(|| GradedMap::zero(a, fp.clone(), vc.generators(n).clone()));
        let id0 = GradedMap::identity(a, &e0);
        let dv = vc.map_or_zero(n + 1);
        thetas.push(GradedMap::blocks(a, &parts, &[vc.generators(n)], &[(0, 0, &sig), (0, 1, &id0), (0, 2, &dv)]));
        if n > ulow {
            let lower = [fc.generators(n - 1).clone(), e_of(n - 1), e_of(n)];
            let df = fc.map_or_zero(n);
            u_diffs.push(GradedMap::blocks(a, &parts, &[&lower[0], &lower[1], &lower[2]], &[(0, 0, &df), (2, 1, &id0)]));
        }
    }
    let uc = Arc::new(ChainComplex::new_unchecked(a, ulow, u_terms, u_diffs));
    let vtrunc = Arc::new(vc.slice(vc.low(), ghi));
    let lambda = ComplexMorphism::new_unchecked(uc.clone(), y.clone(), lambdas)?;
    let theta = ComplexMorphism::new_unchecked(uc.clone(), vtrunc.clone(), thetas)?;

    // T = ker θ, degreewise free.
    let mut t_mods = Vec::new();
    let mut iotas: Vec<GradedMap> = Vec::new();
    for n in uc.indices() {
        let un = uc.generators(n);
        let range = module::degree_range(a, [un], cap);
        let th = theta.map(n).unwrap();
        let gens = module::minimal_generators(a, un, range, |e| {
            (linalg::kernel(f, vtrunc.free_dim(n, e), &th.degree_rows(e)), Vec::new())
        });
        let tn = FreeModule::new(gens.iter().map(|(e, _)| *e).collect());
        let cols = gens.iter().map(|(e, v)| to_element(a, un, *e, v)).collect();
        let inc = GradedMap::from_dense_unchecked(a, tn.clone(), un.clone(), cols);
        if let Some((lo, hi)) = range {
            for e in lo..=hi {
                let kdim = uc.free_dim(n, e) - linalg::rank(f, vtrunc.free_dim(n, e), &th.degree_rows(e));
                if tn.dim(a, e) != kdim || linalg::rank(f, uc.free_dim(n, e), &inc.degree_rows(e)) != kdim {
                    return Err(Error::NotExact(format!("kernel of U → V is not free at index {n}, degree {e}")));
                }
            }
        }
        t_mods.push(tn);
        iotas.push(inc);
    }
    let mut t_diffs = Vec::new();
    for n in uc.low() + 1..=uc.high() {
        let k = (n - uc.low()) as usize;
        let du = uc.differential(n).unwrap();
        let mut cols = Vec::new();
        for (g, &e) in t_mods[k].degrees().iter().enumerate() {
            let image = du.apply(&iotas[k].column_element(g));
            let tv = element_to_vec(&uc.generators(n - 1).layout(a, e), &image)?;
            cols.push(solve_into(a, &t_mods[k - 1], e, uc.free_dim(n - 1, e), &iotas[k - 1].degree_rows(e), &[], &tv, "T differential")?);
        }
        t_diffs.push(GradedMap::from_dense_unchecked(a, t_mods[k].clone(), t_mods[k - 1].clone(), cols));
    }
    let tc = Arc::new(ChainComplex::new_unchecked(
        a,
        uc.low(),
        t_mods.iter().map(|m| PresentedModule::free(a, m.clone())).collect(),
        t_diffs,
    ));
    let iota = ComplexMorphism::new_unchecked(tc.clone(), uc.clone(), iotas)?;

    // ψ: T → X through η.
    let mut psis = Vec::new();
    for n in tc.indices() {
        let k = (n - tc.low()) as usize;
        let lam = lambda.map(n).unwrap().compose(iota.map(n).unwrap())?;
        let mut cols = Vec::new();
        for (g, &e) in t_mods[k].degrees().iter().enumerate() {
            let tv = column_vec(a, &lam, g, e)?;
            cols.push(solve_into(
                a,
                x.generators(n),
                e,
                y.free_dim(n, e),
                &eta.map_rows(n, e),
                &y.relation_span(n, e),
                &tv,
                "T → X",
            )?);
        }
        psis.push(GradedMap::from_dense_unchecked(a, t_mods[k].clone(), x.generators(n).clone(), cols));
    }
    let psi = ComplexMorphism::new_unchecked(tc.clone(), x.clone(), psis)?;

    let window = (tc.low().min(x.low()), cutoff - 1);
    let rows_exact = rows_exact(&iota, &theta, cap);
    let commutes = eta.compose(&psi).and_then(|l| same_morphism(&l, &lambda.compose(&iota)?)).is_ok()
        && alpha_theta_commutes(&vres, &theta, nu, &lambda);
    let alpha_trunc = ComplexMorphism::new_unchecked(
        vtrunc.clone(),
        z.clone(),
        vtrunc.indices().map(|n| alpha.map_or_zero(n)).collect(),
    )?;
    let verticals = [
        psi.is_quasiiso(cap, Some(window)),
        lambda.is_quasiiso(cap, Some(window)),
        alpha_trunc.is_quasiiso(cap, Some(window)),
    ];
    let report = SesReport { rows_exact, commutes, verticals, window };
    let wrap = |c: Arc<ChainComplex>, aug: ComplexMorphism, certainty| Resolution {
        complex: c,
        augmentation: aug,
        cutoff,
        degree_cap: cap,
        minimal: false,
        terminated: false,
        certainty,
    };
    Ok(SesResolution {
        t: wrap(tc, psi, fres.certainty.and(vres.certainty)),
        u: wrap(uc, lambda, fres.certainty.and(vres.certainty)),
        v: wrap(vtrunc, alpha_trunc, vres.certainty),
        iota,
        theta,
        report,
    })
}

fn vc_slack(z: &ChainComplex, n: i32, e: i32) -> Vec<SparseVec> {
    z.relation_span(n, e).to_vec()
}

/// Two morphisms agree modulo the relations of the target.
fn same_morphism(a: &ComplexMorphism, b: &ComplexMorphism) -> Result<()> {
    let diff = a
        .source()
        .indices()
        .map(|i| a.map_or_zero(i).add(&b.map_or_zero(i).scaled(-1)))
        .collect::<Result<Vec<_>>>()?;
    let tgt = a.target();
    for (k, d) in diff.iter().enumerate() {
        let i = a.source().low() + k as i32;
        for (g, &e) in d.source().degrees().iter().enumerate() {
            let v = element_to_vec(&tgt.generators(i).layout(tgt.algebra(), e), &d.column_element(g))?;
            if !module::in_span(tgt.algebra(), tgt.free_dim(i, e), &tgt.relation_span(i, e), &v) {
                return Err(Error::NotAMorphism(format!("square does not commute at index {i}")));
            }
        }
    }
    Ok(())
}

fn alpha_theta_commutes(vres: &Resolution, theta: &ComplexMorphism, nu: &ComplexMorphism, lambda: &ComplexMorphism) -> bool {
    let z = nu.target();
    let alpha = vres.augmentation();
    let lhs: Vec<GradedMap> = theta
        .source()
        .indices()
        .map(|n| alpha.map_or_zero(n).compose(&theta.map_or_zero(n)))
        .collect::<Result<_>>()
        .unwrap_or_default();
    let Ok(l) = ComplexMorphism::new_unchecked(theta.source().clone(), z.clone(), lhs) else { return false };
    nu.compose(lambda).and_then(|r| same_morphism(&l, &r)).is_ok()
}

/// Degreewise exactness of `0 → T → U → V → 0` for free rows.
fn rows_exact(iota: &ComplexMorphism, theta: &ComplexMorphism, cap: i32) -> bool {
    let (t, u, v) = (iota.source(), iota.target(), theta.target());
    let f = u.algebra().field();
    let Some((lo, hi)) = u.degree_range(cap) else { return true };
    u.indices().all(|n| {
        (lo..=hi).all(|e| {
            let (nt, nu_, nv) = (t.free_dim(n, e), u.free_dim(n, e), v.free_dim(n, e));
            let inj = linalg::rank(f, nu_, &iota.map_rows(n, e)) == nt;
            let surj = linalg::rank(f, nv, &theta.map_rows(n, e)) == nv;
            let comp = iota
                .map_rows(n, e)
                .iter()
                .all(|r| linalg::combine(f, r, &theta.map_rows(n, e)).is_empty());
            inj && surj && comp && nt + nv == nu_
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ring::GradedAlgebra;

    fn residue_field(alg: &Algebra) -> PresentedModule {
        PresentedModule::residue_field(alg)
    }

    #[test]
    fn residue_field_of_trivial_extension() {
        let r = GradedAlgebra::parse(PrimeField::default(), &["s", "t"], &["s^2", "s*t", "t^2"]).unwrap();
        let res = resolve_module(&residue_field(&r), 6, 20).unwrap();
        let betti: Vec<usize> = res.ranks().iter().map(|x| x.1).collect();
        assert_eq!(betti, vec![1, 2, 4, 8, 16, 32, 64]);
        assert!(res.is_minimal());
        assert_eq!(res.certainty(), Certainty::Certified);
        assert!(res.augmentation().is_quasiiso(20, Some((0, 5))).is_quasiiso);
    }

    #[test]
    fn koszul_resolution_of_k() {
        let r = GradedAlgebra::polynomial(PrimeField::default(), &["x", "y"]).unwrap();
        let res = resolve_module(&residue_field(&r), 10, 20).unwrap();
        assert!(res.terminated());
        assert_eq!(res.projective_dimension(), DimValue::Finite(2));
        let betti: Vec<usize> = res.ranks().iter().map(|x| x.1).collect();
        assert_eq!(&betti[..3], &[1, 2, 1]);
    }

    #[test]
    fn strict_resolution_is_surjective() {
        let r = GradedAlgebra::parse(PrimeField::default(), &["x"], &["x^2"]).unwrap();
        let x = Arc::new(ChainComplex::module(residue_field(&r), 0));
        let s = strict_resolution(&x, 4, 20).unwrap();
        s.complex().validate().unwrap();
        s.augmentation().validate().unwrap();
        assert!(s.augmentation().is_surjective(20));
        assert!(s.augmentation().is_quasiiso(20, Some((-1, 3))).is_quasiiso);
    }

    #[test]
    fn lifts_a_cone_sequence() {
        use crate::complex::cone_sequence;
        let r = GradedAlgebra::parse(PrimeField::default(), &["x"], &["x^2"]).unwrap();
        let k1 = PresentedModule::new(GradedMap::new(&r, FreeModule::new(vec![2]), FreeModule::new(vec![1]), vec![vec![r.var(0)]]).unwrap());
        let x = Arc::new(ChainComplex::module(k1, 0));
        let y = Arc::new(ChainComplex::module(PresentedModule::free(&r, FreeModule::new(vec![0])), 0));
        let inc = GradedMap::new(&r, FreeModule::new(vec![1]), FreeModule::new(vec![0]), vec![vec![r.var(0)]]).unwrap();
        let sigma = ComplexMorphism::new(x, y, vec![inc]).unwrap();
        let (eta, nu) = cone_sequence(&sigma);
        let lifted = ses_resolution(&eta, &nu, 4, 20).unwrap();
        assert!(lifted.report.rows_exact);
        assert!(lifted.report.commutes);
        assert!(lifted.report.ok(), "{:?}", lifted.report);
        lifted.t.complex().validate().unwrap();
        lifted.iota.validate().unwrap();
        lifted.theta.validate().unwrap();
    }
}
