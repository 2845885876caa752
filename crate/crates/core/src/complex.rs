//! Bounded complexes of finitely presented graded modules and their calculus:
//! homology, suspension, truncations, mapping cones, tensor products, Hom complexes
//! and quasi-isomorphism tests.
//!
//! Term `X_i` is the cokernel `F_i / K_i` of a map of free modules, and the
//! differential is stored as a lift `δ_i: F_i → F_{i-1}`. Free complexes are the
//! case `K = 0`. Homology is computed on lifts: with
//! `Z̃_i = {f ∈ F_i : δ_i f ∈ K_{i-1}}` and `B̃_i = δ_{i+1}(F_{i+1}) + K_i`,
//! `H_i = Z̃_i / B̃_i`, one internal degree at a time.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, SparseVec};
use crate::module::{self, element_to_vec, FreeModule, GradedMap, PresentedModule};
use crate::ring::{Algebra, RingElement};
use crate::value::{Certainty, ExtInt};

#[derive(Clone, Debug)]
pub struct ChainComplex {
    alg: Algebra,
    low: i32,
    terms: Vec<PresentedModule>,
    /// `diffs[k]` lifts `∂_{low+k}`; `diffs[0]` maps into the zero module.
    diffs: Vec<GradedMap>,
    empty: FreeModule,
}

impl PartialEq for ChainComplex {
    fn eq(&self, other: &Self) -> bool {
        self.low == other.low && self.terms == other.terms && self.diffs == other.diffs
    }
}

fn sign(alg: &Algebra, s: i64) -> u32 {
    alg.field().from_i64(s)
}

fn parity(n: i32) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

impl ChainComplex {
    /// `terms[k]` sits in homological degree `low + k`; `diffs[k]` is
    /// `∂_{low+k+1}: F_{low+k+1} → F_{low+k}`. Validity is checked.
    pub fn new(alg: &Algebra, low: i32, terms: Vec<PresentedModule>, diffs: Vec<GradedMap>) -> Result<Self> {
        if diffs.len() + 1 != terms.len().max(1) {
            return Err(Error::Shape(format!("{} terms need {} differentials", terms.len(), terms.len().saturating_sub(1))));
        }
        let c = Self::assemble(alg, low, terms, diffs)?;
        c.validate()?;
        Ok(c)
    }

    fn assemble(alg: &Algebra, low: i32, terms: Vec<PresentedModule>, diffs: Vec<GradedMap>) -> Result<Self> {
        let mut all = Vec::with_capacity(terms.len());
        if let Some(t0) = terms.first() {
            all.push(GradedMap::zero(alg, t0.generators().clone(), FreeModule::zero()));
        }
        for (k, d) in diffs.into_iter().enumerate() {
            if d.source() != terms[k + 1].generators() || d.target() != terms[k].generators() {
                return Err(Error::Shape(format!("differential {} does not match its terms", low + k as i32 + 1)));
            }
            all.push(d);
        }
        Ok(ChainComplex { alg: alg.clone(), low, terms, diffs: all, empty: FreeModule::zero() })
    }

    pub(crate) fn new_unchecked(alg: &Algebra, low: i32, terms: Vec<PresentedModule>, diffs: Vec<GradedMap>) -> Self {
        Self::assemble(alg, low, terms, diffs).expect("shape-consistent complex")
    }

    /// A complex of free modules.
    pub fn free(alg: &Algebra, low: i32, modules: Vec<FreeModule>, diffs: Vec<GradedMap>) -> Result<Self> {
        let terms = modules.into_iter().map(|m| PresentedModule::free(alg, m)).collect();
        ChainComplex::new(alg, low, terms, diffs)
    }

    pub fn zero(alg: &Algebra) -> Self {
        ChainComplex { alg: alg.clone(), low: 0, terms: Vec::new(), diffs: Vec::new(), empty: FreeModule::zero() }
    }

    /// A module viewed as a complex concentrated in degree `at`.
    pub fn module(m: PresentedModule, at: i32) -> Self {
        let alg = m.algebra().clone();
        ChainComplex::new_unchecked(&alg, at, vec![m], Vec::new())
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest index carrying a term (`low - 1` for the empty complex).
    pub fn high(&self) -> i32 {
        self.low + self.terms.len() as i32 - 1
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<i32> {
        self.low..=self.high()
    }

    pub fn terms(&self) -> &[PresentedModule] {
        &self.terms
    }

    pub fn term(&self, i: i32) -> Option<&PresentedModule> {
        if i < self.low {
            return None;
        }
        self.terms.get((i - self.low) as usize)
    }

    pub fn generators(&self, i: i32) -> &FreeModule {
        self.term(i).map(PresentedModule::generators).unwrap_or(&self.empty)
    }

    /// The lift of `∂_i`, when both `X_i` and `X_{i-1}` are terms.
    pub fn differential(&self, i: i32) -> Option<&GradedMap> {
        if i <= self.low || i > self.high() {
            return None;
        }
        Some(&self.diffs[(i - self.low) as usize])
    }

    pub fn is_free(&self) -> bool {
        self.terms.iter().all(PresentedModule::is_free)
    }

    /// True when there are no generators at all.
    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.generators().is_zero())
    }

    pub fn is_minimal(&self) -> bool {
        self.diffs.iter().all(GradedMap::is_minimal)
    }

    /// Drop zero terms at both ends.
    pub fn trimmed(&self) -> ChainComplex {
        let nz: Vec<i32> = self.indices().filter(|&i| !self.generators(i).is_zero()).collect();
        match (nz.first(), nz.last()) {
            (Some(&a), Some(&b)) => self.slice(a, b),
            _ => ChainComplex::zero(&self.alg),
        }
    }

    /// Terms with indices in `a..=b` (hard truncation on both sides).
    pub fn slice(&self, a: i32, b: i32) -> ChainComplex {
        let a = a.max(self.low);
        let b = b.min(self.high());
        if a > b {
            return ChainComplex { low: a, ..ChainComplex::zero(&self.alg) };
        }
        let terms = (a..=b).map(|i| self.term(i).unwrap().clone()).collect();
        let diffs = (a + 1..=b).map(|i| self.differential(i).unwrap().clone()).collect();
        ChainComplex::new_unchecked(&self.alg, a, terms, diffs)
    }

    /// Degree-`e` rows of `δ_i`: one (possibly empty) row per basis element of `F_i`.
    pub fn diff_rows(&self, i: i32, e: i32) -> Arc<Vec<SparseVec>> {
        match self.term(i) {
            None => Arc::new(Vec::new()),
            Some(t) if i == self.low => Arc::new(vec![Vec::new(); t.generators().dim(&self.alg, e)]),
            Some(_) => self.diffs[(i - self.low) as usize].degree_rows(e),
        }
    }

    /// Spanning set of `K_i` in degree `e`.
    pub fn relation_span(&self, i: i32, e: i32) -> Arc<Vec<SparseVec>> {
        match self.term(i) {
            None => Arc::new(Vec::new()),
            Some(t) => t.relation_span(e),
        }
    }

    pub fn free_dim(&self, i: i32, e: i32) -> usize {
        self.generators(i).dim(&self.alg, e)
    }

    /// Basis of `Z̃_i` in degree `e`.
    pub fn cycles(&self, i: i32, e: i32) -> Vec<SparseVec> {
        let rows = self.diff_rows(i, e);
        let n = self.free_dim(i - 1, e);
        linalg::preimage(self.alg.field(), n, &rows, &self.relation_span(i - 1, e))
    }

    /// Spanning set of `B̃_i` in degree `e`.
    pub fn boundaries(&self, i: i32, e: i32) -> Vec<SparseVec> {
        let mut b: Vec<SparseVec> = self.diff_rows(i + 1, e).iter().cloned().collect();
        b.extend(self.relation_span(i, e).iter().cloned());
        b
    }

    pub fn homology_dim(&self, i: i32, e: i32) -> usize {
        let n = self.free_dim(i, e);
        if n == 0 {
            return 0;
        }
        let z = self.cycles(i, e).len();
        let b = linalg::rank(self.alg.field(), n, &self.boundaries(i, e));
        z - b
    }

    /// Internal degrees that can carry anything, up to `cap`.
    pub fn degree_range(&self, cap: i32) -> Option<(i32, i32)> {
        module::degree_range(&self.alg, self.terms.iter().map(PresentedModule::generators), cap)
    }

    pub fn cap_certifies(&self, cap: i32) -> bool {
        module::cap_certifies(&self.alg, self.terms.iter().map(PresentedModule::generators), cap)
    }

    pub fn certainty(&self, cap: i32) -> Certainty {
        Certainty::from_flag(self.cap_certifies(cap), cap)
    }

    /// Graded dimensions of every homology module.
    pub fn homology_table(&self, cap: i32) -> HomologyRecord {
        let range = self.degree_range(cap);
        let mut entries = Vec::new();
        for i in self.indices() {
            let dims = match range {
                Some((lo, hi)) => (lo..=hi).map(|e| self.homology_dim(i, e)).collect(),
                None => Vec::new(),
            };
            entries.push(HomologyDegree { index: i, first_degree: range.map_or(0, |r| r.0), dims });
        }
        HomologyRecord { entries, certainty: self.certainty(cap) }
    }

    /// `H_i` as a presented module; generators are cycles of `F_i`.
    pub fn homology(&self, i: i32, cap: i32) -> (PresentedModule, Certainty) {
        let (m, _) = module::present_subquotient(&self.alg, self.generators(i), cap, |e| {
            (self.cycles(i, e), self.boundaries(i, e))
        });
        (m, self.certainty(cap))
    }

    /// `(sup, inf)` of the homology; `(−∞, +∞)` for exact complexes.
    pub fn sup_inf(&self, cap: i32) -> (ExtInt, ExtInt, Certainty) {
        let t = self.homology_table(cap);
        (t.sup(), t.inf(), t.certainty)
    }

    /// `Σ^n X`: shift indices by `n` and multiply differentials by `(−1)^n`.
    pub fn suspend(&self, n: i32) -> ChainComplex {
        let s = parity(n);
        let diffs = self.diffs.iter().skip(1).map(|d| if s == 1 { d.clone() } else { d.scaled(-1) }).collect();
        ChainComplex::new_unchecked(&self.alg, self.low + n, self.terms.clone(), diffs)
    }

    pub fn direct_sum(&self, other: &ChainComplex) -> ChainComplex {
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let terms: Vec<PresentedModule> = (low..=high).map(|i| self.term_or_zero(i).direct_sum(&other.term_or_zero(i))).collect();
        let diffs = (low + 1..=high)
            .map(|i| {
                let a = self.map_or_zero(i);
                let b = other.map_or_zero(i);
                GradedMap::block(
                    &self.alg,
                    (a.source(), b.source()),
                    (a.target(), b.target()),
                    [[Some(&a), None], [None, Some(&b)]],
                )
            })
            .collect();
        ChainComplex::new_unchecked(&self.alg, low, terms, diffs)
    }

    pub(crate) fn term_or_zero(&self, i: i32) -> PresentedModule {
        self.term(i).cloned().unwrap_or_else(|| PresentedModule::zero(&self.alg))
    }

    /// `δ_i` or the zero map between the (possibly empty) generator modules.
    pub(crate) fn map_or_zero(&self, i: i32) -> GradedMap {
        self.differential(i)
            .cloned()
            .unwrap_or_else(|| GradedMap::zero(&self.alg, self.generators(i).clone(), self.generators(i - 1).clone()))
    }

    /// Check `∂∂ ≡ 0` and `∂(K_i) ⊆ K_{i-1}` on generators.
    pub fn validate(&self) -> Result<()> {
        for i in self.low + 1..=self.high() {
            let d = self.differential(i).unwrap();
            if let Some(r) = self.term(i).filter(|t| !t.is_free()) {
                let img = d.compose(r.relations())?;
                self.check_columns_in(&img, i - 1, "differential does not preserve relations", i)?;
            }
            if i - 1 > self.low {
                let dd = self.differential(i - 1).unwrap().compose(d)?;
                self.check_columns_in(&dd, i - 2, "composite of consecutive differentials is nonzero", i)?;
            }
        }
        Ok(())
    }

    fn check_columns_in(&self, map: &GradedMap, j: i32, what: &str, i: i32) -> Result<()> {
        for (g, &deg) in map.source().degrees().iter().enumerate() {
            if map.column(g).is_empty() {
                continue;
            }
            let layout = self.generators(j).layout(&self.alg, deg);
            let v = element_to_vec(&layout, &map.column_element(g))?;
            if !module::in_span(&self.alg, layout.dim(), &self.relation_span(j, deg), &v) {
                return Err(Error::NotAComplex(format!("{what} at index {i}")));
            }
        }
        Ok(())
    }

    /// Soft left truncation `τ_{≤n}`: `C_n` in degree `n`, then `X_{n-1}, …`.
    pub fn soft_left(&self, n: i32) -> ChainComplex {
        if n < self.low {
            return ChainComplex { low: n, ..ChainComplex::zero(&self.alg) };
        }
        let mut t = self.slice(self.low, n);
        if n < self.high() {
            let k = (n - t.low) as usize;
            let rel = t.terms[k].relations().clone();
            let d = self.differential(n + 1).unwrap();
            let c = GradedMap::hconcat(&self.alg, rel.target(), &[&rel, d]);
            t.terms[k] = PresentedModule::new(c);
        }
        t
    }

    /// Soft right truncation `τ_{≥n}`: `Z_n` in degree `n`, then `X_{n+1}, …`.
    pub fn soft_right(&self, n: i32, cap: i32) -> Result<ChainComplex> {
        if n > self.high() {
            return Ok(ChainComplex { low: n, ..ChainComplex::zero(&self.alg) });
        }
        if n <= self.low {
            return Ok(self.clone());
        }
        let (z, inc) = module::present_subquotient(&self.alg, self.generators(n), cap, |e| {
            (self.cycles(n, e), self.relation_span(n, e).to_vec())
        });
        let mut terms = vec![z.clone()];
        terms.extend((n + 1..=self.high()).map(|i| self.term(i).unwrap().clone()));
        let mut diffs = Vec::new();
        if n < self.high() {
            let d = self.differential(n + 1).unwrap();
            diffs.push(lift_through(&self.alg, d, &inc, self, n, cap)?);
            diffs.extend((n + 2..=self.high()).map(|i| self.differential(i).unwrap().clone()));
        }
        Ok(ChainComplex::new_unchecked(&self.alg, n, terms, diffs))
    }

    /// Hard left truncation `X_{≤n}`.
    pub fn hard_left(&self, n: i32) -> ChainComplex {
        self.slice(self.low, n)
    }

    /// Hard right truncation `X_{≥n}`.
    pub fn hard_right(&self, n: i32) -> ChainComplex {
        self.slice(n, self.high())
    }

    /// `C_n = coker(∂_{n+1})` as a presented module.
    pub fn cokernel(&self, n: i32) -> PresentedModule {
        match (self.term(n), self.differential(n + 1)) {
            (None, _) => PresentedModule::zero(&self.alg),
            (Some(t), None) => t.clone(),
            (Some(t), Some(d)) => PresentedModule::new(GradedMap::hconcat(&self.alg, t.generators(), &[t.relations(), d])),
        }
    }
}

/// Lift a map `d: F → F_n` whose image lies in `Z̃_n` through `inc: F' → F_n`
/// modulo `K_n`, generator by generator.
fn lift_through(alg: &Algebra, d: &GradedMap, inc: &GradedMap, x: &ChainComplex, n: i32, _cap: i32) -> Result<GradedMap> {
    let mut cols = Vec::with_capacity(d.source().rank());
    for (g, &deg) in d.source().degrees().iter().enumerate() {
        let layout = x.generators(n).layout(alg, deg);
        let target = element_to_vec(&layout, &d.column_element(g))?;
        let rows = inc.degree_rows(deg);
        let s = linalg::solver(alg.field(), layout.dim(), &rows, &x.relation_span(n, deg));
        let sol = s
            .solve(&target)
            .ok_or_else(|| Error::NotAComplex(format!("boundary outside the cycles at index {n}")))?;
        let src = inc.source().layout(alg, deg);
        cols.push(module::vec_to_element(alg, &src, inc.source().rank(), &sol));
    }
    Ok(GradedMap::from_dense_unchecked(alg, d.source().clone(), inc.source().clone(), cols))
}

/// Graded dimensions of one homology module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyDegree {
    pub index: i32,
    pub first_degree: i32,
    pub dims: Vec<usize>,
}

impl HomologyDegree {
    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Dimension in internal degree `e`.
    pub fn dim(&self, e: i32) -> usize {
        let k = e - self.first_degree;
        if k < 0 {
            return 0;
        }
        self.dims.get(k as usize).copied().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyRecord {
    pub entries: Vec<HomologyDegree>,
    pub certainty: Certainty,
}

impl HomologyRecord {
    pub fn get(&self, i: i32) -> Option<&HomologyDegree> {
        self.entries.iter().find(|h| h.index == i)
    }

    pub fn is_exact(&self) -> bool {
        self.entries.iter().all(HomologyDegree::is_zero)
    }

    pub fn sup(&self) -> ExtInt {
        self.entries.iter().rev().find(|h| !h.is_zero()).map_or(ExtInt::NegInf, |h| ExtInt::Finite(h.index))
    }

    pub fn inf(&self) -> ExtInt {
        self.entries.iter().find(|h| !h.is_zero()).map_or(ExtInt::PosInf, |h| ExtInt::Finite(h.index))
    }

    /// Map `(index, internal degree) → dim` over nonzero entries, for comparisons.
    pub fn nonzero(&self) -> BTreeMap<(i32, i32), usize> {
        let mut out = BTreeMap::new();
        for h in &self.entries {
            for (k, &d) in h.dims.iter().enumerate() {
                if d > 0 {
                    out.insert((h.index, h.first_degree + k as i32), d);
                }
            }
        }
        out
    }
}

/// A morphism of complexes given by lifts `σ_i: F^X_i → F^Y_i`.
#[derive(Clone, Debug)]
pub struct ComplexMorphism {
    source: Arc<ChainComplex>,
    target: Arc<ChainComplex>,
    maps: Vec<GradedMap>,
}

impl ComplexMorphism {
    /// `maps[k]` is `σ_{low+k}` for `low = source.low()`; validity is checked.
    pub fn new(source: Arc<ChainComplex>, target: Arc<ChainComplex>, maps: Vec<GradedMap>) -> Result<Self> {
        let m = Self::new_unchecked(source, target, maps)?;
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(source: Arc<ChainComplex>, target: Arc<ChainComplex>, maps: Vec<GradedMap>) -> Result<Self> {
        if maps.len() != source.terms.len() {
            return Err(Error::Shape(format!("{} maps for {} source terms", maps.len(), source.terms.len())));
        }
        for (k, m) in maps.iter().enumerate() {
            let i = source.low + k as i32;
            if m.source() != source.generators(i) || m.target() != target.generators(i) {
                return Err(Error::Shape(format!("component {i} does not match the complexes")));
            }
        }
        Ok(ComplexMorphism { source, target, maps })
    }

    pub fn identity(x: Arc<ChainComplex>) -> Self {
        let maps = x.indices().map(|i| GradedMap::identity(&x.alg, x.generators(i))).collect();
        ComplexMorphism { source: x.clone(), target: x, maps }
    }

    pub fn zero(x: Arc<ChainComplex>, y: Arc<ChainComplex>) -> Self {
        let maps = x.indices().map(|i| GradedMap::zero(&x.alg, x.generators(i).clone(), y.generators(i).clone())).collect();
        ComplexMorphism { source: x, target: y, maps }
    }

    pub fn source(&self) -> &Arc<ChainComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<ChainComplex> {
        &self.target
    }

    pub fn map(&self, i: i32) -> Option<&GradedMap> {
        if i < self.source.low {
            return None;
        }
        self.maps.get((i - self.source.low) as usize)
    }

    pub fn maps(&self) -> &[GradedMap] {
        &self.maps
    }

    pub(crate) fn map_or_zero(&self, i: i32) -> GradedMap {
        self.map(i).cloned().unwrap_or_else(|| {
            GradedMap::zero(&self.source.alg, self.source.generators(i).clone(), self.target.generators(i).clone())
        })
    }

    pub fn map_rows(&self, i: i32, e: i32) -> Arc<Vec<SparseVec>> {
        match self.map(i) {
            Some(m) => m.degree_rows(e),
            None => Arc::new(Vec::new()),
        }
    }

    /// Check `σδ ≡ δσ` modulo relations and `σ(K^X) ⊆ K^Y`.
    pub fn validate(&self) -> Result<()> {
        let (x, y) = (&*self.source, &*self.target);
        for i in x.indices() {
            let s = self.map(i).unwrap();
            if let Some(t) = x.term(i).filter(|t| !t.is_free()) {
                let img = s.compose(t.relations())?;
                check_in(y, &img, i, "relations are not preserved")?;
            }
            let lhs = match x.differential(i) {
                Some(d) => self.map_or_zero(i - 1).compose(d)?,
                None => GradedMap::zero(&x.alg, x.generators(i).clone(), y.generators(i - 1).clone()),
            };
            let rhs = y.map_or_zero(i).compose(s)?;
            let diff = lhs.add(&rhs.scaled(-1))?;
            check_in(y, &diff, i - 1, "does not commute with the differentials")?;
        }
        Ok(())
    }

    pub fn compose(&self, first: &ComplexMorphism) -> Result<ComplexMorphism> {
        let maps = first
            .source
            .indices()
            .map(|i| self.map_or_zero(i).compose(&first.map_or_zero(i)))
            .collect::<Result<Vec<_>>>()?;
        ComplexMorphism::new_unchecked(first.source.clone(), self.target.clone(), maps)
    }

    /// The same morphism between suspended complexes.
    pub fn suspend(&self, n: i32) -> ComplexMorphism {
        ComplexMorphism {
            source: Arc::new(self.source.suspend(n)),
            target: Arc::new(self.target.suspend(n)),
            maps: self.maps.clone(),
        }
    }

    /// Whether each component induces a surjection on the degree-`e` pieces of
    /// the presented terms, for all `e` up to `cap`.
    pub fn is_surjective(&self, cap: i32) -> bool {
        let y = &*self.target;
        let Some((lo, hi)) = y.degree_range(cap) else { return true };
        y.indices().all(|i| {
            (lo..=hi).all(|e| {
                let n = y.free_dim(i, e);
                let mut span: Vec<SparseVec> = self.map_rows(i, e).iter().cloned().collect();
                span.extend(y.relation_span(i, e).iter().cloned());
                linalg::rank(y.alg.field(), n, &span) == n
            })
        })
    }

    /// Quasi-isomorphism test: compares `H(σ)` with both homologies in every
    /// homological index (restricted to `window` if given) and internal degree.
    pub fn is_quasiiso(&self, cap: i32, window: Option<(i32, i32)>) -> QuasiIsoReport {
        let (x, y) = (&*self.source, &*self.target);
        let f = x.alg.field();
        let mut lo_i = x.low.min(y.low);
        let mut hi_i = x.high().max(y.high());
        if let Some((a, b)) = window {
            lo_i = lo_i.max(a);
            hi_i = hi_i.min(b);
        }
        let mods = x.terms.iter().chain(&y.terms).map(PresentedModule::generators);
        let range = module::degree_range(&x.alg, mods, cap);
        let certainty = Certainty::from_flag(
            module::cap_certifies(&x.alg, x.terms.iter().chain(&y.terms).map(PresentedModule::generators), cap),
            cap,
        );
        let mut table = Vec::new();
        let mut failure = None;
        if let Some((lo, hi)) = range {
            for i in lo_i..=hi_i {
                for e in lo..=hi {
                    let ny = y.free_dim(i, e);
                    let zx = x.cycles(i, e);
                    let bx = linalg::rank(f, x.free_dim(i, e), &x.boundaries(i, e));
                    let zy = y.cycles(i, e).len();
                    let by_span = y.boundaries(i, e);
                    let by = linalg::rank(f, ny, &by_span);
                    let rows = self.map_rows(i, e);
                    let mut span = by_span;
                    span.extend(zx.iter().map(|z| linalg::combine(f, z, &rows)));
                    let rank = linalg::rank(f, ny, &span) - by;
                    let (hx, hy) = (zx.len() - bx, zy - by);
                    if hx == 0 && hy == 0 {
                        continue;
                    }
                    table.push(HomologyMapRank { index: i, degree: e, source_dim: hx, target_dim: hy, rank });
                    if (rank != hx || rank != hy) && failure.is_none() {
                        failure = Some((i, e));
                    }
                }
            }
        }
        QuasiIsoReport { is_quasiiso: failure.is_none(), failure, certainty, table }
    }
}

fn check_in(y: &ChainComplex, map: &GradedMap, j: i32, what: &str) -> Result<()> {
    for (g, &deg) in map.source().degrees().iter().enumerate() {
        if map.column(g).is_empty() {
            continue;
        }
        let layout = y.generators(j).layout(&y.alg, deg);
        let v = element_to_vec(&layout, &map.column_element(g))?;
        if !module::in_span(&y.alg, layout.dim(), &y.relation_span(j, deg), &v) {
            return Err(Error::NotAMorphism(format!("{what} at index {j}")));
        }
    }
    Ok(())
}

/// Rank of `H_i(σ)` in one internal degree, next to the homology dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyMapRank {
    pub index: i32,
    pub degree: i32,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiIsoReport {
    pub is_quasiiso: bool,
    /// First `(index, internal degree)` where `H(σ)` is not bijective.
    pub failure: Option<(i32, i32)>,
    pub certainty: Certainty,
    pub table: Vec<HomologyMapRank>,
}

/// Mapping cone: `V_i = Y_i ⊕ X_{i-1}`, `d(y, x) = (δy + σx, −δx)`.
pub fn cone(sigma: &ComplexMorphism) -> ChainComplex {
    let (x, y) = (&*sigma.source, &*sigma.target);
    let alg = &x.alg;
    if x.is_zero() && y.is_zero() {
        return ChainComplex::zero(alg);
    }
    let low = y.low.min(x.low + 1);
    let high = y.high().max(x.high() + 1);
    let terms = (low..=high).map(|i| y.term_or_zero(i).direct_sum(&x.term_or_zero(i - 1))).collect();
    let diffs = (low + 1..=high)
        .map(|i| {
            let dy = y.map_or_zero(i);
            let dx = x.map_or_zero(i - 1).scaled(-1);
            let s = sigma.map_or_zero(i - 1);
            GradedMap::block(
                alg,
                (y.generators(i), x.generators(i - 1)),
                (y.generators(i - 1), x.generators(i - 2)),
                [[Some(&dy), Some(&s)], [None, Some(&dx)]],
            )
        })
        .collect();
    ChainComplex::new_unchecked(alg, low, terms, diffs)
}

/// The inclusion `Y → Cone(σ)` and projection `Cone(σ) → ΣX`.
pub fn cone_sequence(sigma: &ComplexMorphism) -> (ComplexMorphism, ComplexMorphism) {
    let (x, y) = (&*sigma.source, &*sigma.target);
    let alg = &x.alg;
    let v = Arc::new(cone(sigma));
    let inc = y
        .indices()
        .map(|i| {
            let id = GradedMap::identity(alg, y.generators(i));
            GradedMap::block(
                alg,
                (y.generators(i), &FreeModule::zero()),
                (y.generators(i), x.generators(i - 1)),
                [[Some(&id), None], [None, None]],
            )
        })
        .collect();
    let sx = Arc::new(x.suspend(1));
    let proj = v
        .indices()
        .map(|i| {
            let id = GradedMap::identity(alg, x.generators(i - 1));
            let m = GradedMap::block(
                alg,
                (y.generators(i), x.generators(i - 1)),
                (&FreeModule::zero(), x.generators(i - 1)),
                [[None, None], [None, Some(&id)]],
            );
            GradedMap::from_sparse(alg, m.source().clone(), sx.generators(i).clone(), m.columns().to_vec())
        })
        .collect();
    let inc = ComplexMorphism::new_unchecked(Arc::new(y.clone()), v.clone(), inc).expect("cone inclusion shape");
    let proj = ComplexMorphism::new_unchecked(v, sx, proj).expect("cone projection shape");
    (inc, proj)
}

/// Offsets of the blocks `(i, n - i)` in degree `n` of a tensor product.
fn tensor_blocks(x: &ChainComplex, y: &ChainComplex, n: i32) -> Vec<(i32, usize)> {
    let mut out = Vec::new();
    let mut off = 0;
    for i in x.indices() {
        let j = n - i;
        if y.term(j).is_none() {
            continue;
        }
        out.push((i, off));
        off += x.generators(i).rank() * y.generators(j).rank();
    }
    out
}

fn block_offset(blocks: &[(i32, usize)], i: i32) -> Option<usize> {
    blocks.iter().find(|b| b.0 == i).map(|b| b.1)
}

/// Total complex of `X ⊗ Y` with `∂(a⊗b) = ∂a⊗b + (−1)^{|a|} a⊗∂b`. At most one
/// factor may have relations.
pub fn tensor(x: &ChainComplex, y: &ChainComplex) -> Result<ChainComplex> {
    if !x.is_free() && !y.is_free() {
        return Err(Error::Unsupported("tensor product of two complexes that both carry relations".into()));
    }
    let alg = &x.alg;
    if x.terms.is_empty() || y.terms.is_empty() {
        return Ok(ChainComplex::zero(alg));
    }
    let low = x.low + y.low;
    let high = x.high() + y.high();
    let gens = |n: i32| -> FreeModule {
        let mut d = Vec::new();
        for (i, _) in tensor_blocks(x, y, n) {
            for &da in x.generators(i).degrees() {
                for &db in y.generators(n - i).degrees() {
                    d.push(da + db);
                }
            }
        }
        FreeModule::new(d)
    };
    let mut terms = Vec::new();
    for n in low..=high {
        let f = gens(n);
        let blocks = tensor_blocks(x, y, n);
        let mut rel_degs = Vec::new();
        let mut rel_cols: Vec<Vec<(usize, RingElement)>> = Vec::new();
        for &(i, off) in &blocks {
            let j = n - i;
            let (fx, fy) = (x.generators(i), y.generators(j));
            let ry = fy.rank();
            if let Some(t) = x.term(i).filter(|t| !t.is_free()) {
                let r = t.relations();
                for (k, &dr) in r.source().degrees().iter().enumerate() {
                    for (b, &db) in fy.degrees().iter().enumerate() {
                        rel_degs.push(dr + db);
                        rel_cols.push(r.column(k).iter().map(|(a, c)| (off + a * ry + b, c.clone())).collect());
                    }
                }
            }
            if let Some(t) = y.term(j).filter(|t| !t.is_free()) {
                let r = t.relations();
                for (a, &da) in fx.degrees().iter().enumerate() {
                    for (k, &dr) in r.source().degrees().iter().enumerate() {
                        rel_degs.push(da + dr);
                        rel_cols.push(r.column(k).iter().map(|(b, c)| (off + a * ry + b, c.clone())).collect());
                    }
                }
            }
        }
        let rel = GradedMap::from_entries(alg, FreeModule::new(rel_degs), f, rel_cols);
        terms.push(PresentedModule::new(rel));
    }
    let mut diffs = Vec::new();
    for n in low + 1..=high {
        let src_blocks = tensor_blocks(x, y, n);
        let tgt_blocks = tensor_blocks(x, y, n - 1);
        let mut cols = Vec::new();
        for &(i, _) in &src_blocks {
            let j = n - i;
            let (fx, fy) = (x.generators(i), y.generators(j));
            let s = sign(alg, parity(i));
            for a in 0..fx.rank() {
                for b in 0..fy.rank() {
                    let mut col = Vec::new();
                    if let (Some(d), Some(off)) = (x.differential(i), block_offset(&tgt_blocks, i - 1)) {
                        let ry = y.generators(j).rank();
                        for (a2, c) in d.column(a) {
                            col.push((off + a2 * ry + b, c.clone()));
                        }
                    }
                    if let (Some(d), Some(off)) = (y.differential(j), block_offset(&tgt_blocks, i)) {
                        let ry = y.generators(j - 1).rank();
                        for (b2, c) in d.column(b) {
                            col.push((off + a * ry + b2, alg.scale(c, s)));
                        }
                    }
                    cols.push(col);
                }
            }
        }
        diffs.push(GradedMap::from_entries(alg, gens(n), gens(n - 1), cols));
    }
    Ok(ChainComplex::new_unchecked(alg, low, terms, diffs))
}

/// Offsets of the blocks `Hom(X_i, Y_{i+n})` in degree `n`.
fn hom_blocks(x: &ChainComplex, y: &ChainComplex, n: i32) -> Vec<(i32, usize)> {
    let mut out = Vec::new();
    let mut off = 0;
    for i in x.indices() {
        if y.term(i + n).is_none() {
            continue;
        }
        out.push((i, off));
        off += x.generators(i).rank() * y.generators(i + n).rank();
    }
    out
}

/// `Hom(X, Y)` for a free complex `X`: degree `n` is `⊕_i Hom(X_i, Y_{i+n})` and
/// `∂φ = ∂^Y φ − (−1)^n φ ∂^X`.
pub fn hom(x: &ChainComplex, y: &ChainComplex) -> Result<ChainComplex> {
    if !x.is_free() {
        return Err(Error::Unsupported("Hom complex out of a complex with relations".into()));
    }
    let alg = &x.alg;
    if x.terms.is_empty() || y.terms.is_empty() {
        return Ok(ChainComplex::zero(alg));
    }
    let low = y.low - x.high();
    let high = y.high() - x.low;
    let gens = |n: i32| -> FreeModule {
        let mut d = Vec::new();
        for (i, _) in hom_blocks(x, y, n) {
            for &da in x.generators(i).degrees() {
                for &db in y.generators(i + n).degrees() {
                    d.push(db - da);
                }
            }
        }
        FreeModule::new(d)
    };
    let mut terms = Vec::new();
    for n in low..=high {
        let f = gens(n);
        let mut rel_degs = Vec::new();
        let mut rel_cols: Vec<Vec<(usize, RingElement)>> = Vec::new();
        for (i, off) in hom_blocks(x, y, n) {
            let fy = y.generators(i + n);
            let ry = fy.rank();
            if let Some(t) = y.term(i + n).filter(|t| !t.is_free()) {
                let r = t.relations();
                for (a, &da) in x.generators(i).degrees().iter().enumerate() {
                    for (k, &dr) in r.source().degrees().iter().enumerate() {
                        rel_degs.push(dr - da);
                        rel_cols.push(r.column(k).iter().map(|(b, c)| (off + a * ry + b, c.clone())).collect());
                    }
                }
            }
        }
        terms.push(PresentedModule::new(GradedMap::from_entries(alg, FreeModule::new(rel_degs), f, rel_cols)));
    }
    // Row access to the differentials of X: for δ^X_{i+1}, a ↦ [(a'', c)].
    let rows_of = |i: i32| -> Vec<Vec<(usize, RingElement)>> {
        let mut rows = vec![Vec::new(); x.generators(i).rank()];
        if let Some(d) = x.differential(i + 1) {
            for (a2, col) in d.columns().iter().enumerate() {
                for (a, c) in col {
                    rows[*a].push((a2, c.clone()));
                }
            }
        }
        rows
    };
    let mut diffs = Vec::new();
    for n in low + 1..=high {
        let src = hom_blocks(x, y, n);
        let tgt = hom_blocks(x, y, n - 1);
        let s = sign(alg, -parity(n));
        let mut cols = Vec::new();
        for &(i, _) in &src {
            let fy = y.generators(i + n);
            let xrows = rows_of(i);
            for a in 0..x.generators(i).rank() {
                for b in 0..fy.rank() {
                    let mut col = Vec::new();
                    if let (Some(d), Some(off)) = (y.differential(i + n), block_offset(&tgt, i)) {
                        let ry = y.generators(i + n - 1).rank();
                        for (b2, c) in d.column(b) {
                            col.push((off + a * ry + b2, c.clone()));
                        }
                    }
                    if let Some(off) = block_offset(&tgt, i + 1) {
                        let ry = y.generators(i + n).rank();
                        for (a2, c) in &xrows[a] {
                            col.push((off + a2 * ry + b, alg.scale(c, s)));
                        }
                    }
                    cols.push(col);
                }
            }
        }
        diffs.push(GradedMap::from_entries(alg, gens(n), gens(n - 1), cols));
    }
    Ok(ChainComplex::new_unchecked(alg, low, terms, diffs))
}

/// Natural maps relating a complex to its truncations.
pub mod natural {
    use super::*;

    fn identity_on(x: &ChainComplex, y: &ChainComplex, indices: impl Iterator<Item = i32>) -> Vec<GradedMap> {
        indices
            .map(|i| {
                if y.term(i).is_some() && x.generators(i) == y.generators(i) {
                    GradedMap::identity(&x.alg, x.generators(i))
                } else {
                    GradedMap::zero(&x.alg, x.generators(i).clone(), y.generators(i).clone())
                }
            })
            .collect()
    }

    /// `X → τ_{≤n}(X)`.
    pub fn to_soft_left(x: &Arc<ChainComplex>, n: i32) -> ComplexMorphism {
        let t = Arc::new(x.soft_left(n));
        let maps = identity_on(x, &t, x.indices());
        ComplexMorphism::new_unchecked(x.clone(), t, maps).expect("truncation map shape")
    }

    /// `τ_{≥n}(X) → X`.
    pub fn from_soft_right(x: &Arc<ChainComplex>, n: i32, cap: i32) -> Result<ComplexMorphism> {
        if n <= x.low() || n > x.high() {
            let t = Arc::new(x.soft_right(n, cap)?);
            let maps = identity_on(&t, x, t.indices());
            return ComplexMorphism::new_unchecked(t, x.clone(), maps);
        }
        let (_, inc) = module::present_subquotient(&x.alg, x.generators(n), cap, |e| {
            (x.cycles(n, e), x.relation_span(n, e).to_vec())
        });
        let t = Arc::new(x.soft_right(n, cap)?);
        let mut maps = vec![inc];
        maps.extend(identity_on(&t, x, n + 1..=t.high()));
        ComplexMorphism::new_unchecked(t, x.clone(), maps)
    }

    /// `X_{≥n} → Σ^n C_n` (projection in degree `n`).
    pub fn hard_right_to_cokernel(x: &Arc<ChainComplex>, n: i32) -> ComplexMorphism {
        let src = Arc::new(x.hard_right(n));
        let c = Arc::new(ChainComplex::module(x.cokernel(n), n));
        let maps = identity_on(&src, &c, src.indices());
        ComplexMorphism::new_unchecked(src, c, maps).expect("cokernel map shape")
    }

    /// `X_{≤n} → X`.
    pub fn hard_left_inclusion(x: &Arc<ChainComplex>, n: i32) -> ComplexMorphism {
        let src = Arc::new(x.hard_left(n));
        let maps = identity_on(&src, x, src.indices());
        ComplexMorphism::new_unchecked(src, x.clone(), maps).expect("inclusion shape")
    }

    /// `X → X_{≥n}` (zero below `n`).
    pub fn hard_right_projection(x: &Arc<ChainComplex>, n: i32) -> ComplexMorphism {
        let tgt = Arc::new(x.hard_right(n));
        let maps = identity_on(x, &tgt, x.indices());
        ComplexMorphism::new_unchecked(x.clone(), tgt, maps).expect("projection shape")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ring::GradedAlgebra;

    fn ring() -> Algebra {
        GradedAlgebra::parse(PrimeField::default(), &["s", "t"], &["s^2", "s*t", "t^2"]).unwrap()
    }

    fn mult(alg: &Algebra, elt: &str, from: i32, to: i32) -> GradedMap {
        let e = alg.parse_element(elt).unwrap();
        GradedMap::new(alg, FreeModule::new(vec![from]), FreeModule::new(vec![to]), vec![vec![e]]).unwrap()
    }

    fn example(alg: &Algebra) -> ChainComplex {
        ChainComplex::free(alg, 0, vec![FreeModule::new(vec![0]), FreeModule::new(vec![1])], vec![mult(alg, "s", 1, 0)]).unwrap()
    }

    #[test]
    fn example_homology() {
        let r = ring();
        let x = example(&r);
        let t = x.homology_table(20);
        assert_eq!(t.get(0).unwrap().dims, vec![1, 1, 0]);
        assert_eq!(t.get(1).unwrap().dims, vec![0, 0, 2]);
        assert_eq!(t.certainty, Certainty::Certified);
        assert_eq!((t.sup(), t.inf()), (ExtInt::Finite(1), ExtInt::Finite(0)));
        let (h1, _) = x.homology(1, 20);
        assert_eq!(h1.generators().degrees(), &[2, 2]);
    }

    #[test]
    fn identity_complex_is_exact() {
        let r = ring();
        let x = ChainComplex::free(&r, 0, vec![FreeModule::new(vec![0]); 2], vec![mult(&r, "1", 0, 0)]).unwrap();
        assert!(x.homology_table(20).is_exact());
    }

    #[test]
    fn rejects_non_complex() {
        let p = GradedAlgebra::polynomial(PrimeField::default(), &["x"]).unwrap();
        let res = ChainComplex::free(
            &p,
            0,
            vec![FreeModule::new(vec![0]), FreeModule::new(vec![1]), FreeModule::new(vec![2])],
            vec![mult(&p, "x", 1, 0), mult(&p, "x", 2, 1)],
        );
        assert!(matches!(res, Err(Error::NotAComplex(_))));
    }

    #[test]
    fn suspension_laws() {
        let r = ring();
        let x = example(&r);
        assert_eq!(x.suspend(0), x);
        assert_eq!(x.suspend(2).suspend(3), x.suspend(5));
        let t = x.suspend(2).homology_table(20);
        assert_eq!(t.get(3).unwrap().dims, x.homology_table(20).get(1).unwrap().dims);
    }

    #[test]
    fn cones() {
        let r = ring();
        let x = Arc::new(example(&r));
        let id = ComplexMorphism::identity(x.clone());
        assert!(cone(&id).homology_table(20).is_exact());
        assert!(id.is_quasiiso(20, None).is_quasiiso);
        let z = ComplexMorphism::zero(x.clone(), x.clone());
        assert!(!z.is_quasiiso(20, None).is_quasiiso);
        let c = cone(&z);
        c.validate().unwrap();
        assert!(!c.homology_table(20).is_exact());
    }

    #[test]
    fn truncation_maps() {
        let r = ring();
        let x = Arc::new(example(&r));
        let m = natural::from_soft_right(&x, 0, 20).unwrap();
        m.validate().unwrap();
        assert!(m.is_quasiiso(20, None).is_quasiiso);
        let l = natural::to_soft_left(&x, 1);
        assert!(l.is_quasiiso(20, None).is_quasiiso);
        let right = natural::from_soft_right(&x, 1, 20).unwrap();
        right.validate().unwrap();
        assert!(!right.is_quasiiso(20, None).is_quasiiso);
        let c = natural::hard_right_to_cokernel(&x, 1);
        c.validate().unwrap();
        assert!(c.is_quasiiso(20, None).is_quasiiso);
    }

    #[test]
    fn tensor_and_hom_units() {
        let r = ring();
        let x = example(&r);
        let unit = ChainComplex::module(PresentedModule::free(&r, FreeModule::new(vec![0])), 0);
        assert_eq!(tensor(&x, &unit).unwrap(), x);
        let h = hom(&unit, &x).unwrap();
        assert_eq!(h, x);
        let hs = hom(&x.suspend(1), &x).unwrap();
        let h0 = hom(&x, &x).unwrap();
        assert_eq!(hs.low(), h0.low() - 1);
        hs.validate().unwrap();
        h0.validate().unwrap();
    }
}
