//! Sparse vectors and incremental row echelon forms over GF(p).
//!
//! All module-level linear algebra reduces to a handful of questions about spans of
//! sparse vectors in one graded piece: rank, membership, kernels of a list of
//! images and solutions of `x·rows = v`. [`Echelon`] answers them with distinct
//! leading columns and unit leading coefficients; reduction stops as soon as the
//! leading column is not a pivot, which is enough to decide membership.

use crate::field::PrimeField;

/// Sorted `(index, nonzero value)` pairs.
pub type SparseVec = Vec<(u32, u32)>;

/// `y + c·x`.
pub fn axpy(f: PrimeField, y: &[(u32, u32)], c: u32, x: &[(u32, u32)]) -> SparseVec {
    if c == 0 {
        return y.to_vec();
    }
    let mut out = Vec::with_capacity(y.len() + x.len());
    let (mut i, mut j) = (0, 0);
    while i < y.len() && j < x.len() {
        let (a, b) = (y[i], x[j]);
        match a.0.cmp(&b.0) {
            std::cmp::Ordering::Less => {
                out.push(a);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b.0, f.mul(c, b.1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = f.add(a.1, f.mul(c, b.1));
                if v != 0 {
                    out.push((a.0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&y[i..]);
    out.extend(x[j..].iter().map(|&(k, v)| (k, f.mul(c, v))));
    out
}

pub fn scale(f: PrimeField, x: &[(u32, u32)], c: u32) -> SparseVec {
    if c == 0 {
        return Vec::new();
    }
    x.iter().map(|&(k, v)| (k, f.mul(c, v))).collect()
}

/// Sum of `c_i · vecs[i]` for a sparse coefficient vector `c`.
pub fn combine(f: PrimeField, coeffs: &[(u32, u32)], vecs: &[SparseVec]) -> SparseVec {
    let mut acc = Vec::new();
    for &(i, c) in coeffs {
        acc = axpy(f, &acc, c, &vecs[i as usize]);
    }
    acc
}

/// Sort by index, merge duplicates and drop zeros.
pub fn canonicalize(f: PrimeField, mut v: Vec<(u32, u32)>) -> SparseVec {
    v.sort_unstable_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (k, x) in v {
        match out.last_mut() {
            Some(last) if last.0 == k => last.1 = f.add(last.1, x),
            _ => out.push((k, x)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

/// Shift every index by `offset`.
pub fn shifted(v: &[(u32, u32)], offset: u32) -> SparseVec {
    v.iter().map(|&(k, x)| (k + offset, x)).collect()
}

const NO_PIVOT: u32 = u32::MAX;

/// An echelon basis of a subspace of `GF(p)^ncols`, optionally remembering for each
/// row which combination of inserted vectors produced it.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    pivot_row: Vec<u32>,
    rows: Vec<SparseVec>,
    tags: Vec<SparseVec>,
}

impl Echelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        Echelon { field, pivot_row: vec![NO_PIVOT; ncols], rows: Vec::new(), tags: Vec::new() }
    }

    pub fn from_rows(field: PrimeField, ncols: usize, rows: &[SparseVec]) -> Self {
        let mut e = Echelon::new(field, ncols);
        for r in rows {
            e.insert(r.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.pivot_row.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    fn pivot(&self, col: u32) -> Option<usize> {
        match self.pivot_row[col as usize] {
            NO_PIVOT => None,
            r => Some(r as usize),
        }
    }

    /// Reduce until the leading column is not a pivot; zero iff `v` is in the span.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        while let Some(&(col, c)) = v.first() {
            let Some(r) = self.pivot(col) else { break };
            v = axpy(self.field, &v, self.field.neg(c), &self.rows[r]);
        }
        v
    }

    /// Reduce `v` while tracking the tag combination alongside.
    pub fn reduce_tagged(&self, mut v: SparseVec, mut tag: SparseVec) -> (SparseVec, SparseVec) {
        while let Some(&(col, c)) = v.first() {
            let Some(r) = self.pivot(col) else { break };
            let m = self.field.neg(c);
            v = axpy(self.field, &v, m, &self.rows[r]);
            tag = axpy(self.field, &tag, m, &self.tags[r]);
        }
        (v, tag)
    }

    pub fn contains(&self, v: &[(u32, u32)]) -> bool {
        self.reduce(v.to_vec()).is_empty()
    }

    /// Insert `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        self.insert_tagged(v, Vec::new()).is_none()
    }

    /// Insert `v` carrying `tag`. If `v` was already in the span, returns the tag
    /// combination of a dependency (a kernel element in tag coordinates).
    pub fn insert_tagged(&mut self, v: SparseVec, tag: SparseVec) -> Option<SparseVec> {
        let (v, tag) = self.reduce_tagged(v, tag);
        let Some(&(col, c)) = v.first() else {
            return Some(tag);
        };
        let inv = self.field.inv(c);
        self.pivot_row[col as usize] = self.rows.len() as u32;
        self.rows.push(scale(self.field, &v, inv));
        self.tags.push(scale(self.field, &tag, inv));
        None
    }

    /// Express `v` through inserted tags: returns `x` with `Σ x_t · (tagged vector t) = v`
    /// where untagged insertions act as free slack.
    pub fn solve(&self, v: &[(u32, u32)]) -> Option<SparseVec> {
        let (rest, tag) = self.reduce_tagged(v.to_vec(), Vec::new());
        rest.is_empty().then(|| scale(self.field, &tag, self.field.neg(1)))
    }
}

/// Rank of the span of `rows`.
pub fn rank(field: PrimeField, ncols: usize, rows: &[SparseVec]) -> usize {
    Echelon::from_rows(field, ncols, rows).rank()
}

/// Basis of `{x : Σ x_i rows_i ∈ span(sub)}` in the coordinates of `rows`.
pub fn preimage(field: PrimeField, ncols: usize, rows: &[SparseVec], sub: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::from_rows(field, ncols, sub);
    let mut out = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        if let Some(k) = e.insert_tagged(r.clone(), vec![(i as u32, 1)]) {
            out.push(k);
        }
    }
    out
}

/// Basis of the kernel of `x ↦ Σ x_i rows_i`.
pub fn kernel(field: PrimeField, ncols: usize, rows: &[SparseVec]) -> Vec<SparseVec> {
    preimage(field, ncols, rows, &[])
}

/// Indices of a maximal subfamily of `candidates` independent modulo `base`.
pub fn complement(field: PrimeField, ncols: usize, base: &[SparseVec], candidates: &[SparseVec]) -> Vec<usize> {
    let mut e = Echelon::from_rows(field, ncols, base);
    candidates
        .iter()
        .enumerate()
        .filter_map(|(i, c)| e.insert(c.clone()).then_some(i))
        .collect()
}

/// Solver for `Σ x_i rows_i ≡ v (mod span(slack))`.
pub fn solver(field: PrimeField, ncols: usize, rows: &[SparseVec], slack: &[SparseVec]) -> Echelon {
    let mut e = Echelon::from_rows(field, ncols, slack);
    for (i, r) in rows.iter().enumerate() {
        e.insert_tagged(r.clone(), vec![(i as u32, 1)]);
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    fn dense(v: &SparseVec, n: usize) -> Vec<u32> {
        let mut d = vec![0; n];
        for &(k, x) in v {
            d[k as usize] = x;
        }
        d
    }

    fn sparse(d: &[u32]) -> SparseVec {
        d.iter().enumerate().filter(|(_, &x)| x != 0).map(|(k, &x)| (k as u32, x)).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![sparse(&[1, 2, 0]), sparse(&[2, 4, 0]), sparse(&[0, 1, 1])];
        assert_eq!(rank(f(), 3, &rows), 2);
        let k = kernel(f(), 3, &rows);
        assert_eq!(k.len(), 1);
        let img = combine(f(), &k[0], &rows);
        assert!(img.is_empty());
    }

    #[test]
    fn solve_with_slack() {
        let rows = vec![sparse(&[1, 1, 0])];
        let slack = vec![sparse(&[0, 0, 1])];
        let s = solver(f(), 3, &rows, &slack);
        let x = s.solve(&sparse(&[3, 3, 5])).unwrap();
        assert_eq!(x, vec![(0, 3)]);
        assert!(s.solve(&sparse(&[1, 0, 0])).is_none());
    }

    fn mat() -> impl Strategy<Value = Vec<Vec<u32>>> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(0u32..7, c), r))
    }

    proptest! {
        #[test]
        fn rank_nullity(m in mat()) {
            let n = m[0].len();
            let rows: Vec<SparseVec> = m.iter().map(|r| sparse(r)).collect();
            let k = kernel(f(), n, &rows);
            prop_assert_eq!(k.len() + rank(f(), n, &rows), rows.len());
            for v in &k {
                prop_assert!(combine(f(), v, &rows).is_empty());
            }
        }

        #[test]
        fn solutions_reproduce_targets(m in mat(), coeffs in prop::collection::vec(0u32..7, 6)) {
            let n = m[0].len();
            let rows: Vec<SparseVec> = m.iter().map(|r| sparse(r)).collect();
            let c = sparse(&coeffs[..rows.len()]);
            let target = combine(f(), &c, &rows);
            let s = solver(f(), n, &rows, &[]);
            let x = s.solve(&target).unwrap();
            prop_assert_eq!(dense(&combine(f(), &x, &rows), n), dense(&target, n));
        }
    }
}
