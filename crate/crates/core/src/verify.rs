//! The reproduction suite: worked examples and seeded property checks, one
//! report per criterion. Shared by the acceptance tests and `homdim verify`.

use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::complex::{cone, natural, tensor, ChainComplex, ComplexMorphism};
use crate::dimensions::{
    ambient_deformation, b_dimension_with, ci_dim_best, ci_dim_upper, gdim, hierarchy_check, pci_dim, pd,
    CiStarClass, DimensionVerdict, FreeClass, Membership, ResolvingClass, TotallyReflexiveClass,
};
use crate::error::Result;
use crate::field::PrimeField;
use crate::invariants::{
    complexity_estimate, depth, koszul_complex, poincare_product_check, syzygy_shift_check, Complexity,
    PoincareData,
};
use crate::module::{FreeModule, GradedMap, PresentedModule};
use crate::random::{self, Shape, TestRng};
use crate::resolution::{minimal_free_resolution, resolve_module, ses_resolution, strict_resolution};
use crate::ring::{Algebra, GradedAlgebra};
use crate::value::{Caps, DimValue, ExtInt};

/// One named assertion inside a criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Item {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub id: u32,
    pub title: String,
    pub passed: bool,
    /// Number of instances examined, for the seeded criteria.
    pub instances: usize,
    /// Wall-clock time; dropped by [`CriterionReport::without_timing`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub budget_ms: Option<u64>,
    pub items: Vec<Item>,
}

impl CriterionReport {
    pub fn failures(&self) -> impl Iterator<Item = &Item> {
        self.items.iter().filter(|i| !i.passed)
    }

    /// `PASS`/`FAIL` line with the time and the first failure, if any.
    pub fn summary(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let time = match (self.elapsed_ms, self.budget_ms) {
            (Some(t), Some(b)) => format!(", {t} ms (budget {b} ms)"),
            (Some(t), None) => format!(", {t} ms"),
            (None, Some(b)) => format!(", budget {b} ms"),
            (None, None) => String::new(),
        };
        let mut s = format!(
            "criterion {} {status}: {} [{} checks, {} instances{time}]",
            self.id,
            self.title,
            self.items.len(),
            self.instances,
        );
        if let Some(f) = self.failures().next() {
            s.push_str(&format!(" first failure: {}: {}", f.name, f.detail));
        }
        s
    }

    /// The same report with wall-clock times removed, so that reports for a fixed
    /// seed are byte-identical. The runtime check keeps its verdict.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        for item in &mut self.items {
            if item.name == "runtime" {
                item.detail = if item.passed { "within budget".into() } else { "over budget".into() };
            }
        }
        self
    }
}

struct Recorder {
    items: Vec<Item>,
    instances: usize,
}

impl Recorder {
    fn new() -> Self {
        Recorder { items: Vec::new(), instances: 0 }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.items.push(Item { name: name.into(), passed, detail: detail.into() });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: impl Into<String>, got: T, want: T) {
        let passed = got == want;
        self.check(name, passed, format!("got {got:?}, expected {want:?}"));
    }

    /// Record an error from a computation as a failed item.
    fn run(&mut self, name: &str, f: impl FnOnce(&mut Recorder) -> Result<()>) {
        if let Err(e) = f(self) {
            self.check(name, false, format!("error: {e}"));
        }
    }

    fn finish(self, id: u32, title: &str, elapsed: Duration, budget: Option<Duration>) -> CriterionReport {
        let ms = elapsed.as_millis() as u64;
        let budget_ms = budget.map(|b| b.as_millis() as u64);
        let mut items = self.items;
        if let Some(b) = budget_ms {
            items.push(Item { name: "runtime".into(), passed: ms < b, detail: format!("{ms} ms, budget {b} ms") });
        }
        let passed = !items.is_empty() && items.iter().all(|i| i.passed);
        CriterionReport { id, title: title.into(), passed, instances: self.instances, elapsed_ms: Some(ms), budget_ms, items }
    }
}

fn field() -> PrimeField {
    PrimeField::default()
}

/// `k[s,t]/(s², st, t²)`.
pub fn trivial_extension() -> Algebra {
    GradedAlgebra::parse(field(), &["s", "t"], &["s^2", "s*t", "t^2"]).expect("valid ring")
}

/// `k[x]/(x²)`.
pub fn dual_numbers() -> Algebra {
    GradedAlgebra::parse(field(), &["x"], &["x^2"]).expect("valid ring")
}

/// `k[x,y]`.
pub fn plane() -> Algebra {
    GradedAlgebra::polynomial(field(), &["x", "y"]).expect("valid ring")
}

/// `0 → R(-1) --s--> R → 0` over `k[s,t]/(s², st, t²)`.
pub fn multiplication_by_s(r: &Algebra) -> ChainComplex {
    let d = GradedMap::new(r, FreeModule::new(vec![1]), FreeModule::new(vec![0]), vec![vec![r.var(0)]]).expect("degree-1 entry");
    ChainComplex::free(r, 0, vec![FreeModule::new(vec![0]), FreeModule::new(vec![1])], vec![d]).expect("a complex")
}

fn residue(r: &Algebra) -> Arc<ChainComplex> {
    Arc::new(ChainComplex::module(PresentedModule::residue_field(r), 0))
}

fn complexity_of(m: &PresentedModule, caps: Caps) -> Result<Complexity> {
    let res = resolve_module(m, caps.cutoff, caps.degree_cap)?;
    Ok(complexity_estimate(&PoincareData::from_resolution(&res))?.verdict)
}

fn dims(m: &PresentedModule, upto: i32) -> Vec<usize> {
    (0..=upto).map(|e| m.dim(e)).collect()
}

/// Criterion 1: the complex `0 → R(-1) → R → 0` over `k[s,t]/(s², st, t²)`.
pub fn criterion_1(caps: Caps) -> CriterionReport {
    let t0 = Instant::now();
    let mut rec = Recorder::new();
    rec.run("example", |rec| {
        let r = trivial_extension();
        let x = Arc::new(multiplication_by_s(&r));
        rec.instances = 1;
        rec.eq("pd X", pd(&x, caps)?.value, DimValue::Finite(1));
        let (h0, _) = x.homology(0, caps.degree_cap);
        let (h1, _) = x.homology(1, caps.degree_cap);
        rec.eq("dim_k H_0 in degrees 0..2", dims(&h0, 2), vec![1, 1, 0]);
        rec.eq("dim_k H_1 in degrees 0..2 (H_1 = m(-1))", dims(&h1, 2), vec![0, 0, 2]);
        let res = resolve_module(&h1, 9, caps.degree_cap)?;
        let betti: Vec<usize> = (0..=8).map(|n| res.rank(n)).collect();
        let want: Vec<usize> = (0..=8).map(|n| 1 << (n + 1)).collect();
        rec.eq("Betti numbers of H_1, n = 0..8", betti, want);
        let k = PresentedModule::residue_field(&r);
        for (name, m) in [("H_0", &h0), ("H_1", &h1), ("k", &k)] {
            rec.eq(format!("complexity of {name}"), complexity_of(m, caps)?, Complexity::SuperpolynomialEvidence);
        }
        for (name, m) in [("H_0", &h0), ("H_1", &h1)] {
            let mem = CiStarClass.membership(m, caps)?;
            rec.check(format!("{name} is not CI*"), matches!(mem, Membership::NonMember(_)), format!("{mem:?}"));
        }
        Ok(())
    });
    rec.finish(1, "trivial extension example: pd 1, homology, Betti 2^(n+1), infinite complexity", t0.elapsed(), Some(Duration::from_secs(5)))
}

fn verdict_value(v: &DimensionVerdict) -> DimValue {
    v.value.clone()
}

/// Criterion 2: `k` over the hypersurface `k[x]/(x²)`.
pub fn criterion_2(caps: Caps) -> CriterionReport {
    let t0 = Instant::now();
    let mut rec = Recorder::new();
    rec.run("hypersurface", |rec| {
        let r = dual_numbers();
        let k = residue(&r);
        rec.instances = 1;
        let res = minimal_free_resolution(&k, caps.cutoff, caps.degree_cap)?;
        let betti: Vec<usize> = (0..=caps.cutoff).map(|n| res.rank(n)).collect();
        rec.eq("β_n(k), n = 0..cutoff", betti, vec![1; caps.cutoff as usize + 1]);
        let cx = complexity_estimate(&PoincareData::from_resolution(&res))?;
        rec.eq("complexity of k", cx.verdict, Complexity::Exactly(1));
        let g = gdim(&k, caps)?;
        rec.eq("gdim k", verdict_value(&g), DimValue::Finite(0));
        let p = pci_dim(&k, caps)?;
        rec.eq("CI*-dim k", verdict_value(&p), DimValue::Finite(0));
        let def = ambient_deformation(&r).expect("x^2 is regular on k[x]");
        rec.eq("CI-dim bound from Q = k[x]", ci_dim_upper(&k, &def, caps)?.value, DimValue::Finite(0));
        let rr = ChainComplex::module(PresentedModule::ring(&r), 0);
        rec.eq("depth R", depth(&rr, caps)?.0, ExtInt::Finite(0));
        rec.eq("depth k", depth(&k, caps)?.0, ExtInt::Finite(0));
        rec.check("gdim depth check", g.consistent(), format!("{:?}", g.checks));
        rec.check("CI*-dim depth check", p.consistent(), format!("{:?}", p.checks));
        let h = hierarchy_check(&k, &[], caps)?;
        let chain: Vec<DimValue> = h.chain().iter().map(|v| v.value.clone()).collect();
        rec.eq(
            "gdim, CI*-dim, CI-dim, pd",
            chain,
            vec![DimValue::Finite(0), DimValue::Finite(0), DimValue::Finite(0), DimValue::AtLeast(caps.cutoff)],
        );
        rec.check("hierarchy holds", h.holds(), format!("{:?}", h.violations));
        Ok(())
    });
    rec.finish(2, "hypersurface k[x]/(x^2): constant Betti numbers, complexity 1, dimensions 0", t0.elapsed(), Some(Duration::from_secs(5)))
}

/// Criterion 3: `k` over `k[x,y]`.
pub fn criterion_3(caps: Caps) -> CriterionReport {
    let t0 = Instant::now();
    let mut rec = Recorder::new();
    rec.run("regular ring", |rec| {
        let r = plane();
        let k = residue(&r);
        rec.instances = 1;
        let res = minimal_free_resolution(&k, caps.cutoff, caps.degree_cap)?;
        rec.eq("Betti numbers of k", (0..=3).map(|n| res.rank(n)).collect::<Vec<_>>(), vec![1, 2, 1, 0]);
        rec.check("resolution of k terminates", res.terminated(), "");
        let h = hierarchy_check(&k, &[], caps)?;
        for v in h.chain() {
            rec.eq(format!("{} k", v.dimension), v.value.clone(), DimValue::Finite(2));
        }
        rec.check("hierarchy holds", h.holds(), format!("{:?}", h.violations));
        let rr = ChainComplex::module(PresentedModule::ring(&r), 0);
        rec.eq("depth R", depth(&rr, caps)?.0, ExtInt::Finite(2));
        let kos = koszul_complex(&r, None)?;
        let t = kos.complex.homology_table(caps.degree_cap);
        let positive: Vec<(i32, i32)> = t.nonzero().keys().copied().filter(|&(i, _)| i > 0).collect();
        rec.eq("nonzero Koszul homology in positive indices", positive, Vec::new());
        Ok(())
    });
    rec.finish(3, "regular ring k[x,y]: all dimensions 2, Betti (1,2,1), depth 2, Koszul exact", t0.elapsed(), Some(Duration::from_secs(5)))
}

/// Smaller shapes over the ring with exponential Betti growth.
fn shape_for(alg: &Algebra) -> Shape {
    if alg.relations().len() > 1 {
        Shape { max_rank: 1, max_terms: 2, ..Shape::default() }
    } else {
        Shape::default()
    }
}

/// Cycle through the test rings.
fn instances(count: usize) -> impl Iterator<Item = (usize, Algebra)> {
    let rings = random::test_rings();
    (0..count).map(move |i| (i, rings[i % rings.len()].clone()))
}

fn nonzero_object(alg: &Algebra, rng: &mut TestRng, caps: Caps) -> ChainComplex {
    loop {
        let x = random::random_object(alg, shape_for(alg), rng);
        if !x.homology_table(caps.degree_cap).is_exact() {
            return x;
        }
    }
}

/// Criterion 4: Poincaré series of derived tensor products and of syzygies.
pub fn criterion_4(seed: u64, count: usize) -> CriterionReport {
    let t0 = Instant::now();
    let mut rec = Recorder::new();
    let caps = Caps::new(8, 20, 4);
    let mut rng = random::rng(seed);
    for (i, alg) in instances(count) {
        rec.instances += 1;
        let x = Arc::new(nonzero_object(&alg, &mut rng, caps));
        let y = Arc::new(nonzero_object(&alg, &mut rng, caps));
        rec.run(&format!("pair {i}"), |rec| {
            let c = poincare_product_check(&x, &y, caps)?;
            rec.check(format!("pair {i}: P(X ⊗L Y) = P(X) P(Y)"), c.holds, format!("tensor {:?}, product {:?}", c.tensor, c.product));
            let sup = x.homology_table(caps.degree_cap).sup().finite().expect("not exact");
            let res = minimal_free_resolution(&x, caps.cutoff, caps.degree_cap)?;
            for n in sup..=sup + 2 {
                let ok = syzygy_shift_check(&res, n)?;
                rec.check(format!("pair {i}: syzygy shift n = {n}"), ok, "");
            }
            Ok(())
        });
    }
    rec.finish(4, "Poincaré product and syzygy shift identities", t0.elapsed(), None)
}

fn classes() -> [&'static dyn ResolvingClass; 3] {
    [&FreeClass, &TotallyReflexiveClass, &CiStarClass]
}

/// Criterion 5: syzygy reduction of B-dimensions for free, totally reflexive and
/// CI* modules, and agreement with `pd` and `gdim`.
pub fn criterion_5(seed: u64, count: usize) -> CriterionReport {
    let t0 = Instant::now();
    let mut rec = Recorder::new();
    let caps = Caps::new(6, 20, 4);
    let mut rng = random::rng(seed);
    for (i, alg) in instances(count) {
        rec.instances += 1;
        let x = Arc::new(nonzero_object(&alg, &mut rng, caps));
        rec.run(&format!("instance {i}"), |rec| {
            let minimal = minimal_free_resolution(&x, caps.cutoff, caps.degree_cap)?;
            let strict = strict_resolution(&x, caps.cutoff, caps.degree_cap)?;
            let sup = x.homology_table(caps.degree_cap).sup().finite().expect("not exact");
            for class in classes() {
                let (v, _) = b_dimension_with(&x, &minimal, class, caps)?;
                let (w, _) = b_dimension_with(&x, &strict, class, caps)?;
                if v.value.is_determinate() && w.value.is_determinate() {
                    rec.eq(format!("{i}: {} from minimal and strict resolutions", class.name()), &w.value, &v.value);
                }
                if let DimValue::Finite(b) = v.value {
                    for n in sup..=sup + 2 {
                        let c = Arc::new(ChainComplex::module(minimal.syzygy(n)?, 0));
                        let (vc, _) = b_dimension_with(&c, &minimal_free_resolution(&c, caps.cutoff, caps.degree_cap)?, class, caps)?;
                        let want = if c.homology_table(caps.degree_cap).is_exact() {
                            DimValue::NegInf
                        } else {
                            DimValue::Finite((b - n).max(0))
                        };
                        if vc.value.is_determinate() {
                            rec.eq(format!("{i}: {}-dim C_{n} = max(0, {b} - {n})", class.name()), vc.value, want);
                        }
                    }
                }
            }
            let free = b_dimension_with(&x, &minimal, &FreeClass, caps)?.0;
            rec.eq(format!("{i}: free class gives pd"), free.value, pd(&x, caps)?.value);
            let tr = b_dimension_with(&x, &minimal, &TotallyReflexiveClass, caps)?.0;
            rec.eq(format!("{i}: totally reflexive class gives gdim"), tr.value, gdim(&x, caps)?.value);
            Ok(())
        });
    }
    rec.finish(5, "syzygy reduction of B-dimensions; free = pd, totally reflexive = gdim", t0.elapsed(), None)
}

/// Criterion 6: complexes, truncations, cones, strict resolutions, resolutions of
/// short exact sequences and suspension.
pub fn criterion_6(seed: u64, count: usize) -> CriterionReport {
    let t0 = Instant::now();
    let mut rec = Recorder::new();
    let caps = Caps::new(5, 20, 4);
    let cap = caps.degree_cap;
    let mut rng = random::rng(seed);
    let mut morphisms = 0;
    let mut diagrams = 0;
    for (i, alg) in instances(count) {
        rec.instances += 1;
        let shape = shape_for(&alg);
        let x = Arc::new(random::random_complex(&alg, shape, &mut rng));
        let y = random::random_object(&alg, shape, &mut rng);
        rec.run(&format!("instance {i}"), |rec| {
            // ∂² = 0 on everything built from x and y.
            let built = [
                ("random complex", (*x).clone()),
                ("tensor", tensor(&x, &y)?),
                ("cone of identity", cone(&ComplexMorphism::identity(x.clone()))),
                ("soft truncation", x.soft_right(x.low() + 1, cap)?),
            ];
            for (name, c) in &built {
                rec.check(format!("{i}: ∂² = 0 on {name}"), c.validate().is_ok(), "");
            }
            let t = x.homology_table(cap);
            if let (ExtInt::Finite(s), ExtInt::Finite(f)) = (t.sup(), t.inf()) {
                let left = natural::to_soft_left(&x, s);
                rec.check(format!("{i}: X → τ≤sup X is a quasi-isomorphism"), left.is_quasiiso(cap, None).is_quasiiso, "");
                let right = natural::from_soft_right(&x, f, cap)?;
                rec.check(format!("{i}: τ≥inf X → X is a quasi-isomorphism"), right.is_quasiiso(cap, None).is_quasiiso, "");
                let res = minimal_free_resolution(&x, caps.cutoff, cap)?;
                let p = res.complex().clone();
                if p.high() >= s {
                    let to_c = natural::hard_right_to_cokernel(&p, s);
                    let window = Some((s, caps.cutoff - 1));
                    rec.check(format!("{i}: P≥sup → Σ^sup C_sup is a quasi-isomorphism"), to_c.is_quasiiso(cap, window).is_quasiiso, "");
                }
            }
            for c in [0, 1, 2] {
                let sigma = random::perturb(&ComplexMorphism::identity(x.clone()), c, &mut rng)?;
                let exact = cone(&sigma).homology_table(cap).is_exact();
                let qiso = sigma.is_quasiiso(cap, None).is_quasiiso;
                morphisms += 1;
                rec.check(format!("{i}: cone exact iff quasi-isomorphism (c = {c})"), exact == qiso, format!("exact {exact}, qiso {qiso}"));
            }
            let strict = strict_resolution(&x, caps.cutoff, cap)?;
            rec.check(format!("{i}: strict resolution surjective"), strict.augmentation().is_surjective(cap), "");
            let (eta, nu) = random::random_ses(&alg, shape, &mut rng)?;
            let s = ses_resolution(&eta, &nu, caps.cutoff, cap)?;
            diagrams += 1;
            rec.check(format!("{i}: resolution of a short exact sequence"), s.report.ok(), format!("{:?}", s.report));
            for n in [1, -2] {
                let sx = Arc::new(x.suspend(n));
                let pairs = [
                    ("pd", pd(&x, caps)?.value, pd(&sx, caps)?.value),
                    ("gdim", gdim(&x, caps)?.value, gdim(&sx, caps)?.value),
                    ("CI*-dim", pci_dim(&x, caps)?.value, pci_dim(&sx, caps)?.value),
                    ("CI-dim", ci_dim_best(&x, &[], caps)?.value, ci_dim_best(&sx, &[], caps)?.value),
                ];
                for (name, a, b) in pairs {
                    if a.finite().is_some() || a == DimValue::NegInf {
                        rec.eq(format!("{i}: {name}(Σ^{n} X) = {name}(X) + {n}"), b, a.plus(n));
                    }
                }
            }
            Ok(())
        });
    }
    rec.check("at least 50 morphisms", morphisms >= 50, format!("{morphisms}"));
    rec.check("at least 10 short exact sequences", diagrams >= 10, format!("{diagrams}"));
    rec.finish(6, "structural suite", t0.elapsed(), Some(Duration::from_secs(60)))
}

/// Criterion 7: `CI*-dim` of the third term of a short exact sequence over
/// `k[x]/(x²)` is at most one more than the larger of the other two.
pub fn criterion_7(seed: u64, count: usize) -> CriterionReport {
    let t0 = Instant::now();
    let mut rec = Recorder::new();
    let caps = Caps::new(6, 20, 4);
    let alg = dual_numbers();
    let mut rng = random::rng(seed);
    for i in 0..count {
        rec.instances += 1;
        rec.run(&format!("sequence {i}"), |rec| {
            let (eta, nu) = random::random_ses(&alg, Shape::default(), &mut rng)?;
            let terms = [eta.source().clone(), eta.target().clone(), nu.target().clone()];
            let mut values = Vec::new();
            for t in &terms {
                values.push(pci_dim(t, caps)?.value);
            }
            for j in 0..3 {
                let others: Vec<&DimValue> = (0..3).filter(|&k| k != j).map(|k| &values[k]).collect();
                let finite: Vec<ExtInt> = others.iter().filter_map(|v| v.as_ext()).collect();
                if finite.len() < 2 {
                    continue;
                }
                let bound = finite.iter().max().unwrap().plus(1);
                let third = values[j].as_ext();
                let ok = matches!(third, Some(t) if t <= bound);
                rec.check(format!("{i}: term {j} at most max + 1"), ok, format!("{values:?}"));
            }
            Ok(())
        });
    }
    rec.finish(7, "two-of-three bound for CI*-dim over k[x]/(x^2)", t0.elapsed(), None)
}

/// Criterion 8: complete intersection detection against finiteness of `CI*-dim k`.
pub fn criterion_8(caps: Caps) -> CriterionReport {
    let t0 = Instant::now();
    let mut rec = Recorder::new();
    let hyper = GradedAlgebra::parse(field(), &["x", "y"], &["x^2", "y^3"]).expect("valid ring");
    let cases = [
        ("k[x]/(x^2)", dual_numbers(), true),
        ("k[x,y]", plane(), true),
        ("k[x,y]/(x^2,y^3)", hyper, true),
        ("k[s,t]/(s^2,st,t^2)", trivial_extension(), false),
    ];
    for (name, r, ci) in cases {
        rec.instances += 1;
        rec.eq(format!("{name} is a complete intersection"), r.is_complete_intersection(), ci);
        rec.run(name, |rec| {
            let v = pci_dim(&residue(&r), caps)?.value;
            if ci {
                rec.check(format!("CI*-dim k over {name} finite"), v.finite().is_some(), format!("{v}"));
            } else {
                rec.eq(format!("CI*-dim k over {name}"), v, DimValue::AtLeast(caps.cutoff));
            }
            Ok(())
        });
    }
    rec.finish(8, "complete intersection detection", t0.elapsed(), None)
}

/// Seeded instance counts for the property criteria.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counts {
    pub poincare: usize,
    pub reduction: usize,
    pub structural: usize,
    pub two_of_three: usize,
}

impl Default for Counts {
    fn default() -> Self {
        Counts { poincare: 30, reduction: 30, structural: 30, two_of_three: 20 }
    }
}

/// The worked examples: criteria 1, 2, 3 and 8.
pub fn examples_suite(caps: Caps) -> Vec<CriterionReport> {
    vec![criterion_1(caps), criterion_2(caps), criterion_3(caps), criterion_8(caps)]
}

/// The seeded property criteria 4 to 7.
pub fn properties_suite(seed: u64, counts: Counts) -> Vec<CriterionReport> {
    vec![
        criterion_4(seed, counts.poincare),
        criterion_5(seed.wrapping_add(1), counts.reduction),
        criterion_6(seed.wrapping_add(2), counts.structural),
        criterion_7(seed.wrapping_add(3), counts.two_of_three),
    ]
}

/// Every criterion in order.
pub fn full_suite(caps: Caps, seed: u64, counts: Counts) -> Vec<CriterionReport> {
    let mut v = examples_suite(caps);
    v.extend(properties_suite(seed, counts));
    v.sort_by_key(|r| r.id);
    v
}
