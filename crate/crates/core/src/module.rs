//! Graded free modules, graded maps between them and finitely presented modules.
//!
//! A free module is a list of generator degrees. Its degree-`e` piece has the basis
//! `(g, m)` with `m` a standard monomial of degree `e - deg(g)`, ordered generator
//! by generator; [`Layout`] fixes that ordering. A [`GradedMap`] stores the image of
//! each source generator as a sparse column of ring elements and can produce the
//! matrix of its degree-`e` piece.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::linalg::{self, Echelon, SparseVec};
use crate::ring::{Algebra, Monomial, Piece, RingElement};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeModule {
    degrees: Vec<i32>,
}

impl FreeModule {
    pub fn new(degrees: Vec<i32>) -> Self {
        FreeModule { degrees }
    }

    pub fn zero() -> Self {
        FreeModule::default()
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn degree(&self, g: usize) -> i32 {
        self.degrees[g]
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.degrees.iter().copied().min()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.degrees.iter().copied().max()
    }

    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        let mut d = self.degrees.clone();
        d.extend_from_slice(&other.degrees);
        FreeModule::new(d)
    }

    pub fn shifted(&self, by: i32) -> FreeModule {
        FreeModule::new(self.degrees.iter().map(|d| d + by).collect())
    }

    /// Graded `k`-dimension of the degree-`e` piece.
    pub fn dim(&self, alg: &Algebra, e: i32) -> usize {
        self.degrees.iter().map(|&d| alg.hilbert_function(e - d)).sum()
    }

    pub fn layout(&self, alg: &Algebra, e: i32) -> Layout {
        Layout::new(alg, self, e)
    }
}

/// Coordinates of the degree-`e` piece of a free module.
pub struct Layout {
    pub degree: i32,
    offsets: Vec<u32>,
    pieces: Vec<Arc<Piece>>,
    total: usize,
}

impl Layout {
    pub fn new(alg: &Algebra, module: &FreeModule, e: i32) -> Self {
        let mut offsets = Vec::with_capacity(module.rank() + 1);
        let mut pieces = Vec::with_capacity(module.rank());
        let mut total = 0usize;
        for &d in module.degrees() {
            offsets.push(total as u32);
            let p = alg.piece(e - d);
            total += p.dim();
            pieces.push(p);
        }
        offsets.push(total as u32);
        Layout { degree: e, offsets, pieces, total }
    }

    pub fn dim(&self) -> usize {
        self.total
    }

    pub fn offset(&self, g: usize) -> u32 {
        self.offsets[g]
    }

    pub fn piece(&self, g: usize) -> &Piece {
        &self.pieces[g]
    }

    /// Coordinate of `m · g`, if that is a nonzero basis element.
    pub fn index(&self, g: usize, m: &Monomial) -> Option<u32> {
        self.pieces[g].index_of(m).map(|i| self.offsets[g] + i as u32)
    }

    /// Generator and monomial of a coordinate.
    pub fn locate(&self, idx: u32) -> (usize, &Monomial) {
        let g = self.offsets.partition_point(|&o| o <= idx) - 1;
        let m = &self.pieces[g].monomials()[(idx - self.offsets[g]) as usize];
        (g, m)
    }

    /// Basis elements `(generator, monomial)` in order.
    pub fn basis(&self) -> impl Iterator<Item = (usize, &Monomial)> + '_ {
        self.pieces
            .iter()
            .enumerate()
            .flat_map(|(g, p)| p.monomials().iter().map(move |m| (g, m)))
    }
}

/// A vector of the free module as one ring element per generator.
pub type Element = Vec<RingElement>;

/// Coordinates of a homogeneous element of degree `layout.degree`.
pub fn element_to_vec(layout: &Layout, elt: &[RingElement]) -> Result<SparseVec> {
    let mut v = Vec::new();
    for (g, r) in elt.iter().enumerate() {
        for (m, c) in r.terms() {
            let idx = layout.index(g, m).ok_or_else(|| {
                Error::Inhomogeneous(format!("term of degree {} on generator {g} in degree {}", m.degree(), layout.degree))
            })?;
            v.push((idx, c));
        }
    }
    v.sort_unstable_by_key(|e| e.0);
    Ok(v)
}

pub fn vec_to_element(alg: &Algebra, layout: &Layout, rank: usize, v: &[(u32, u32)]) -> Element {
    let mut out = vec![RingElement::zero(); rank];
    for &(idx, c) in v {
        let (g, m) = layout.locate(idx);
        let t = alg.monomial(c, m.clone());
        alg.add_assign(&mut out[g], &t);
    }
    out
}

/// Multiply a degree-`e` vector by variable `i`, landing in degree `e + 1`.
pub fn times_var(from: &Layout, to: &Layout, i: usize, v: &[(u32, u32)]) -> SparseVec {
    let mut out = Vec::with_capacity(v.len());
    for &(idx, c) in v {
        let (g, m) = from.locate(idx);
        if let Some(j) = to.index(g, &m.times_var(i)) {
            out.push((j, c));
        }
    }
    out.sort_unstable_by_key(|e| e.0);
    out
}

/// A degree-preserving homomorphism of graded free modules.
pub struct GradedMap {
    alg: Algebra,
    source: FreeModule,
    target: FreeModule,
    columns: Vec<Vec<(usize, RingElement)>>,
    cache: Mutex<HashMap<i32, Arc<Vec<SparseVec>>>>,
}

impl Clone for GradedMap {
    fn clone(&self) -> Self {
        GradedMap {
            alg: self.alg.clone(),
            source: self.source.clone(),
            target: self.target.clone(),
            columns: self.columns.clone(),
            cache: Mutex::new(HashMap::new()),
        }
    }
}

impl std::fmt::Debug for GradedMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GradedMap")
            .field("source", &self.source.degrees)
            .field("target", &self.target.degrees)
            .field("columns", &self.columns)
            .finish()
    }
}

impl PartialEq for GradedMap {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.columns == other.columns
    }
}

impl GradedMap {
    /// Build from columns (images of source generators), checking homogeneity.
    pub fn new(alg: &Algebra, source: FreeModule, target: FreeModule, columns: Vec<Element>) -> Result<Self> {
        if columns.len() != source.rank() {
            return Err(Error::Shape(format!("{} columns for {} source generators", columns.len(), source.rank())));
        }
        let mut sparse_cols = Vec::with_capacity(columns.len());
        for (j, col) in columns.into_iter().enumerate() {
            if col.len() != target.rank() {
                return Err(Error::Shape(format!("column {j} has {} entries, expected {}", col.len(), target.rank())));
            }
            let mut sc = Vec::new();
            for (i, r) in col.into_iter().enumerate() {
                if r.is_zero() {
                    continue;
                }
                let want = source.degree(j) - target.degree(i);
                if r.degree() != Some(want) {
                    return Err(Error::Inhomogeneous(format!(
                        "entry ({i},{j}) = {} should be homogeneous of degree {want}",
                        alg.format_element(&r)
                    )));
                }
                sc.push((i, r));
            }
            sparse_cols.push(sc);
        }
        Ok(GradedMap::from_sparse(alg, source, target, sparse_cols))
    }

    pub(crate) fn from_sparse(
        alg: &Algebra,
        source: FreeModule,
        target: FreeModule,
        columns: Vec<Vec<(usize, RingElement)>>,
    ) -> Self {
        GradedMap { alg: alg.clone(), source, target, columns, cache: Mutex::new(HashMap::new()) }
    }

    pub fn zero(alg: &Algebra, source: FreeModule, target: FreeModule) -> Self {
        let n = source.rank();
        GradedMap::from_sparse(alg, source, target, vec![Vec::new(); n])
    }

    pub fn identity(alg: &Algebra, m: &FreeModule) -> Self {
        let cols = (0..m.rank()).map(|j| vec![(j, alg.one())]).collect();
        GradedMap::from_sparse(alg, m.clone(), m.clone(), cols)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn column(&self, j: usize) -> &[(usize, RingElement)] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vec<(usize, RingElement)>] {
        &self.columns
    }

    /// Dense column `j` as an element of the target.
    pub fn column_element(&self, j: usize) -> Element {
        let mut out = vec![RingElement::zero(); self.target.rank()];
        for (i, r) in &self.columns[j] {
            out[*i] = r.clone();
        }
        out
    }

    pub fn entry(&self, i: usize, j: usize) -> RingElement {
        self.columns[j].iter().find(|(k, _)| *k == i).map(|(_, r)| r.clone()).unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    /// True iff no entry has a nonzero constant term.
    pub fn is_minimal(&self) -> bool {
        self.columns.iter().flatten().all(|(_, r)| r.constant_term() == 0)
    }

    /// Images of the degree-`e` basis of the source, as target coordinates.
    pub fn degree_rows(&self, e: i32) -> Arc<Vec<SparseVec>> {
        if let Some(r) = self.cache.lock().unwrap().get(&e) {
            return Arc::clone(r);
        }
        let src = self.source.layout(&self.alg, e);
        let tgt = self.target.layout(&self.alg, e);
        let rows = Arc::new(self.rows_between(&src, &tgt));
        self.cache.lock().unwrap().insert(e, Arc::clone(&rows));
        rows
    }

    fn rows_between(&self, src: &Layout, tgt: &Layout) -> Vec<SparseVec> {
        let f = self.alg.field();
        let mut rows = Vec::with_capacity(src.dim());
        for (j, m) in src.basis() {
            let mut v = Vec::new();
            for (i, r) in &self.columns[j] {
                for (mm, c) in r.terms() {
                    let prod = m.mul(mm);
                    if let Some(idx) = tgt.index(*i, &prod) {
                        v.push((idx, c));
                    }
                }
            }
            rows.push(linalg::canonicalize(f, v));
        }
        rows
    }

    /// Apply to a homogeneous element.
    pub fn apply(&self, x: &[RingElement]) -> Element {
        let mut out = vec![RingElement::zero(); self.target.rank()];
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for (i, r) in &self.columns[j] {
                let p = self.alg.mul(xj, r);
                self.alg.add_assign(&mut out[*i], &p);
            }
        }
        out
    }

    /// Apply to a coordinate vector of degree `e`.
    pub fn apply_vec(&self, e: i32, v: &[(u32, u32)]) -> SparseVec {
        let rows = self.degree_rows(e);
        linalg::combine(self.alg.field(), v, &rows)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap> {
        if other.target != self.source {
            return Err(Error::Shape("composition of incompatible maps".into()));
        }
        let cols = (0..other.source.rank())
            .map(|j| self.apply(&other.column_element(j)))
            .collect::<Vec<_>>();
        Ok(GradedMap::from_dense_unchecked(&self.alg, other.source.clone(), self.target.clone(), cols))
    }

    /// Build from unsorted column entries, merging duplicates and dropping zeros.
    pub(crate) fn from_entries(
        alg: &Algebra,
        source: FreeModule,
        target: FreeModule,
        columns: Vec<Vec<(usize, RingElement)>>,
    ) -> Self {
        let cols = columns
            .into_iter()
            .map(|mut col| {
                col.sort_by_key(|e| e.0);
                let mut merged: Vec<(usize, RingElement)> = Vec::with_capacity(col.len());
                for (i, r) in col {
                    match merged.last_mut() {
                        Some(last) if last.0 == i => alg.add_assign(&mut last.1, &r),
                        _ => merged.push((i, r)),
                    }
                }
                merged.retain(|(_, r)| !r.is_zero());
                merged
            })
            .collect();
        GradedMap::from_sparse(alg, source, target, cols)
    }

    pub(crate) fn from_dense_unchecked(alg: &Algebra, source: FreeModule, target: FreeModule, cols: Vec<Element>) -> Self {
        let sparse = cols
            .into_iter()
            .map(|c| c.into_iter().enumerate().filter(|(_, r)| !r.is_zero()).collect())
            .collect();
        GradedMap::from_sparse(alg, source, target, sparse)
    }

    pub fn scaled(&self, c: i64) -> GradedMap {
        let c = self.alg.field().from_i64(c);
        let cols = self
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .map(|(i, r)| (*i, self.alg.scale(r, c)))
                    .filter(|(_, r)| !r.is_zero())
                    .collect()
            })
            .collect();
        GradedMap::from_sparse(&self.alg, self.source.clone(), self.target.clone(), cols)
    }

    pub fn add(&self, other: &GradedMap) -> Result<GradedMap> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Shape("sum of maps with different shapes".into()));
        }
        let cols = (0..self.source.rank())
            .map(|j| {
                let a = self.column_element(j);
                let b = other.column_element(j);
                a.iter().zip(&b).map(|(x, y)| self.alg.add(x, y)).collect()
            })
            .collect();
        Ok(GradedMap::from_dense_unchecked(&self.alg, self.source.clone(), self.target.clone(), cols))
    }

    /// Block matrix `[[a, b], [c, d]]` with blocks given as optional maps.
    pub fn block(
        alg: &Algebra,
        source: (&FreeModule, &FreeModule),
        target: (&FreeModule, &FreeModule),
        blocks: [[Option<&GradedMap>; 2]; 2],
    ) -> GradedMap {
        let mut list = Vec::new();
        for (r, row) in blocks.iter().enumerate() {
            for (c, b) in row.iter().enumerate() {
                if let Some(m) = b {
                    list.push((r, c, *m));
                }
            }
        }
        GradedMap::blocks(alg, &[source.0, source.1], &[target.0, target.1], &list)
    }

    /// Block matrix from `(row block, column block, map)` triples; missing blocks are zero.
    pub fn blocks(alg: &Algebra, sources: &[&FreeModule], targets: &[&FreeModule], list: &[(usize, usize, &GradedMap)]) -> GradedMap {
        let src = FreeModule::new(sources.iter().flat_map(|m| m.degrees().iter().copied()).collect());
        let tgt = FreeModule::new(targets.iter().flat_map(|m| m.degrees().iter().copied()).collect());
        let offsets = |ms: &[&FreeModule]| -> Vec<usize> {
            ms.iter()
                .scan(0usize, |acc, m| {
                    let o = *acc;
                    *acc += m.rank();
                    Some(o)
                })
                .collect()
        };
        let (so, to) = (offsets(sources), offsets(targets));
        let mut cols: Vec<Vec<(usize, RingElement)>> = vec![Vec::new(); src.rank()];
        for &(r, c, m) in list {
            debug_assert_eq!(m.source(), sources[c]);
            debug_assert_eq!(m.target(), targets[r]);
            for (j, col) in m.columns.iter().enumerate() {
                for (i, e) in col {
                    cols[so[c] + j].push((to[r] + i, e.clone()));
                }
            }
        }
        GradedMap::from_entries(alg, src, tgt, cols)
    }

    /// Transpose into a map of dual free modules (generator degrees negated).
    pub fn transpose(&self) -> GradedMap {
        let mut cols: Vec<Vec<(usize, RingElement)>> = vec![Vec::new(); self.target.rank()];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, r) in col {
                cols[*i].push((j, r.clone()));
            }
        }
        GradedMap::from_sparse(&self.alg, self.target.shifted_dual(), self.source.shifted_dual(), cols)
    }

    /// Restrict to a subset of source generators.
    pub fn select_columns(&self, idx: &[usize]) -> GradedMap {
        let src = FreeModule::new(idx.iter().map(|&j| self.source.degree(j)).collect());
        let cols = idx.iter().map(|&j| self.columns[j].clone()).collect();
        GradedMap::from_sparse(&self.alg, src, self.target.clone(), cols)
    }

    /// Concatenate columns of maps with a common target.
    pub fn hconcat(alg: &Algebra, target: &FreeModule, maps: &[&GradedMap]) -> GradedMap {
        let mut degs = Vec::new();
        let mut cols = Vec::new();
        for m in maps {
            degs.extend_from_slice(m.source.degrees());
            cols.extend(m.columns.iter().cloned());
        }
        GradedMap::from_sparse(alg, FreeModule::new(degs), target.clone(), cols)
    }
}

impl FreeModule {
    /// The dual free module `Hom(F, R)`.
    pub fn shifted_dual(&self) -> FreeModule {
        FreeModule::new(self.degrees.iter().map(|d| -d).collect())
    }
}

/// The cokernel of a map of free modules `relations: G → F`; free when `G = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct PresentedModule {
    relations: GradedMap,
}

impl PresentedModule {
    pub fn new(relations: GradedMap) -> Self {
        PresentedModule { relations }
    }

    pub fn free(alg: &Algebra, generators: FreeModule) -> Self {
        PresentedModule { relations: GradedMap::zero(alg, FreeModule::zero(), generators) }
    }

    pub fn zero(alg: &Algebra) -> Self {
        PresentedModule::free(alg, FreeModule::zero())
    }

    /// `R` itself, one generator in degree 0.
    pub fn ring(alg: &Algebra) -> Self {
        PresentedModule::free(alg, FreeModule::new(vec![0]))
    }

    /// `k = R/m`, presented by the variables.
    pub fn residue_field(alg: &Algebra) -> Self {
        let n = alg.num_vars();
        let cols = (0..n).map(|i| vec![alg.var(i)]).collect();
        PresentedModule::new(GradedMap::from_dense_unchecked(alg, FreeModule::new(vec![1; n]), FreeModule::new(vec![0]), cols))
    }

    pub fn algebra(&self) -> &Algebra {
        self.relations.algebra()
    }

    pub fn generators(&self) -> &FreeModule {
        self.relations.target()
    }

    pub fn relations(&self) -> &GradedMap {
        &self.relations
    }

    pub fn is_free(&self) -> bool {
        self.relations.source().is_zero()
    }

    /// Spanning set of the relation submodule in degree `e`.
    pub fn relation_span(&self, e: i32) -> Arc<Vec<SparseVec>> {
        if self.is_free() {
            return Arc::new(Vec::new());
        }
        self.relations.degree_rows(e)
    }

    /// `k`-dimension of the degree-`e` piece.
    pub fn dim(&self, e: i32) -> usize {
        let alg = self.algebra();
        let n = self.generators().dim(alg, e);
        n - linalg::rank(alg.field(), n, &self.relation_span(e))
    }

    pub fn shifted(&self, by: i32) -> PresentedModule {
        let r = &self.relations;
        PresentedModule::new(GradedMap::from_sparse(
            r.algebra(),
            r.source().shifted(by),
            r.target().shifted(by),
            r.columns().to_vec(),
        ))
    }

    pub fn direct_sum(&self, other: &PresentedModule) -> PresentedModule {
        let a = &self.relations;
        let b = &other.relations;
        PresentedModule::new(GradedMap::block(
            a.algebra(),
            (a.source(), b.source()),
            (a.target(), b.target()),
            [[Some(a), None], [None, Some(b)]],
        ))
    }

    /// Largest internal degree in which the module can be nonzero, when the ring
    /// is Artinian.
    pub fn top_degree(&self) -> Option<i32> {
        let t = self.algebra().top_degree()?;
        Some(self.generators().max_degree().map_or(i32::MIN, |d| d + t))
    }
}

/// Degree range `lo..=hi` in which computations over `modules` take place: from the
/// least generator degree up to the cap, shortened in the Artinian case.
pub fn degree_range<'a>(alg: &Algebra, modules: impl IntoIterator<Item = &'a FreeModule>, cap: i32) -> Option<(i32, i32)> {
    let mut lo = i32::MAX;
    let mut hi = i32::MIN;
    for m in modules {
        if let (Some(a), Some(b)) = (m.min_degree(), m.max_degree()) {
            lo = lo.min(a);
            hi = hi.max(b);
        }
    }
    if lo == i32::MAX {
        return None;
    }
    let top = match alg.top_degree() {
        Some(t) => (hi + t).min(cap),
        None => cap,
    };
    (lo <= top).then_some((lo, top))
}

/// Whether every degree above `cap` is known to vanish for `modules`.
pub fn cap_certifies<'a>(alg: &Algebra, modules: impl IntoIterator<Item = &'a FreeModule>, cap: i32) -> bool {
    match alg.top_degree() {
        None => false,
        Some(t) => modules.into_iter().filter_map(FreeModule::max_degree).all(|d| d + t <= cap),
    }
}

/// Minimal generators of the submodule `S + Q` modulo `Q` of a free module `ambient`.
///
/// `span(e)` returns `(S_e, Q_e)`: spanning sets of the degree-`e` parts of two
/// submodules. Generators are chosen degree by degree as a complement of
/// `Q_e + m·S_{e-1}` inside `S_e`, so the result is deterministic.
pub fn minimal_generators(
    alg: &Algebra,
    ambient: &FreeModule,
    range: Option<(i32, i32)>,
    mut span: impl FnMut(i32) -> (Vec<SparseVec>, Vec<SparseVec>),
) -> Vec<(i32, SparseVec)> {
    let f = alg.field();
    let mut out = Vec::new();
    let Some((lo, hi)) = range else { return out };
    let mut prev: Option<(Layout, Vec<SparseVec>)> = None;
    for e in lo..=hi {
        let layout = ambient.layout(alg, e);
        let (sub, quot) = span(e);
        let mut base = quot;
        if let Some((pl, ps)) = &prev {
            for v in ps {
                for i in 0..alg.num_vars() {
                    let w = times_var(pl, &layout, i, v);
                    if !w.is_empty() {
                        base.push(w);
                    }
                }
            }
        }
        let picked = linalg::complement(f, layout.dim(), &base, &sub);
        out.extend(picked.iter().map(|&i| (e, sub[i].clone())));
        prev = Some((layout, sub));
    }
    out
}

/// A presentation of the subquotient `(S + Q)/Q` of a free module, together with
/// the map sending the new generators to their representatives in the ambient module.
pub fn present_subquotient(
    alg: &Algebra,
    ambient: &FreeModule,
    cap: i32,
    mut span: impl FnMut(i32) -> (Vec<SparseVec>, Vec<SparseVec>),
) -> (PresentedModule, GradedMap) {
    let range = degree_range(alg, [ambient], cap);
    let f = alg.field();
    let mut quot_cache: HashMap<i32, Vec<SparseVec>> = HashMap::new();
    let gens = minimal_generators(alg, ambient, range, |e| {
        let (s, q) = span(e);
        quot_cache.insert(e, q.clone());
        (s, q)
    });
    let degs: Vec<i32> = gens.iter().map(|(e, _)| *e).collect();
    let new_free = FreeModule::new(degs);
    let cols: Vec<Element> = gens
        .iter()
        .map(|(e, v)| vec_to_element(alg, &ambient.layout(alg, *e), ambient.rank(), v))
        .collect();
    let inclusion = GradedMap::from_dense_unchecked(alg, new_free.clone(), ambient.clone(), cols);
    let rel_range = degree_range(alg, [&new_free], cap);
    let rels = minimal_generators(alg, &new_free, rel_range, |e| {
        let n = ambient.dim(alg, e);
        let rows = inclusion.degree_rows(e);
        let q = match quot_cache.get(&e) {
            Some(q) => q.clone(),
            None => span(e).1,
        };
        (linalg::preimage(f, n, &rows, &q), Vec::new())
    });
    let rel_free = FreeModule::new(rels.iter().map(|(e, _)| *e).collect());
    let rel_cols: Vec<Element> = rels
        .iter()
        .map(|(e, v)| vec_to_element(alg, &new_free.layout(alg, *e), new_free.rank(), v))
        .collect();
    let relations = GradedMap::from_dense_unchecked(alg, rel_free, new_free, rel_cols);
    (PresentedModule::new(relations), inclusion)
}

/// Whether `v` lies in the span of `rows` (degree-`e` coordinates of a module of
/// dimension `n`).
pub fn in_span(alg: &Algebra, n: usize, rows: &[SparseVec], v: &[(u32, u32)]) -> bool {
    Echelon::from_rows(alg.field(), n, rows).contains(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ring::GradedAlgebra;

    fn ring() -> Algebra {
        GradedAlgebra::parse(PrimeField::default(), &["s", "t"], &["s^2", "s*t", "t^2"]).unwrap()
    }

    #[test]
    fn layout_locates_basis() {
        let r = ring();
        let m = FreeModule::new(vec![0, 1]);
        let l = m.layout(&r, 1);
        assert_eq!(l.dim(), 3);
        let (g, mono) = l.locate(2);
        assert_eq!(g, 1);
        assert!(mono.is_one());
    }

    #[test]
    fn multiplication_map_rows() {
        let r = ring();
        let s = r.parse_element("s").unwrap();
        let map = GradedMap::new(&r, FreeModule::new(vec![1]), FreeModule::new(vec![0]), vec![vec![s]]).unwrap();
        assert_eq!(map.degree_rows(1).as_slice(), &[vec![(0, 1)]]);
        assert_eq!(map.degree_rows(2).as_slice(), &[Vec::<(u32, u32)>::new(), Vec::new()]);
    }

    #[test]
    fn inhomogeneous_entries_rejected() {
        let r = ring();
        let e = r.parse_element("s + 1").unwrap();
        assert!(GradedMap::new(&r, FreeModule::new(vec![1]), FreeModule::new(vec![0]), vec![vec![e]]).is_err());
    }

    #[test]
    fn quotient_by_s() {
        let r = ring();
        let s = r.parse_element("s").unwrap();
        let rel = GradedMap::new(&r, FreeModule::new(vec![1]), FreeModule::new(vec![0]), vec![vec![s]]).unwrap();
        let m = PresentedModule::new(rel);
        assert_eq!((0..3).map(|e| m.dim(e)).collect::<Vec<_>>(), vec![1, 1, 0]);
    }

    #[test]
    fn maximal_ideal_presentation() {
        let r = ring();
        let ambient = FreeModule::new(vec![0]);
        let (m, inc) = present_subquotient(&r, &ambient, 10, |e| {
            let n = ambient.dim(&r, e);
            let sub = if e >= 1 { (0..n as u32).map(|i| vec![(i, 1)]).collect() } else { Vec::new() };
            (sub, Vec::new())
        });
        assert_eq!(m.generators().degrees(), &[1, 1]);
        assert_eq!(inc.target().rank(), 1);
        // m ≅ k(-1)^2: four relations s·e_i, t·e_i
        assert_eq!(m.relations().source().rank(), 4);
        assert_eq!(m.dim(1), 2);
        assert_eq!(m.dim(2), 0);
    }
}
