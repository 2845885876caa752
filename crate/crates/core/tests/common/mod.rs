//! Dense reference computations, independent of the library's sparse echelon
//! code and its resolver. Everything is done one internal degree at a time with
//! full GF(p) matrices on monomial bases, so it is only usable for small inputs.
//!
//! The library is only used to read inputs (ring relations, presentation matrices
//! and differentials).

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use homdim::{Algebra, ChainComplex, GradedMap, PresentedModule};

pub type Mono = Vec<u32>;
/// Sparse element of a free module: `(generator, monomial) -> coefficient`.
pub type Elem = BTreeMap<(usize, Mono), u64>;

#[derive(Clone, Debug)]
pub struct Ring {
    pub nvars: usize,
    pub relations: Vec<Mono>,
    pub p: u64,
}

impl Ring {
    pub fn from_algebra(a: &Algebra) -> Ring {
        Ring {
            nvars: a.num_vars(),
            relations: a.relations().iter().map(|m| m.exponents().to_vec()).collect(),
            p: a.field().characteristic() as u64,
        }
    }

    pub fn standard(&self, m: &[u32]) -> bool {
        !self.relations.iter().any(|r| r.iter().zip(m).all(|(a, b)| a <= b))
    }

    /// Standard monomials of degree `d`.
    pub fn basis(&self, d: i32) -> Vec<Mono> {
        fn go(n: usize, d: u32, prefix: &mut Mono, out: &mut Vec<Mono>) {
            if prefix.len() + 1 == n {
                prefix.push(d);
                out.push(prefix.clone());
                prefix.pop();
                return;
            }
            for a in (0..=d).rev() {
                prefix.push(a);
                go(n, d - a, prefix, out);
                prefix.pop();
            }
        }
        if d < 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        if self.nvars == 0 {
            if d == 0 {
                out.push(Vec::new());
            }
        } else {
            go(self.nvars, d as u32, &mut Vec::new(), &mut out);
        }
        out.retain(|m| self.standard(m));
        out
    }

    fn inv(&self, a: u64) -> u64 {
        let (mut r, mut b, mut e) = (1u64, a % self.p, self.p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        r
    }

    pub fn mul_mono(&self, x: &Elem, mu: &[u32]) -> Elem {
        let mut out = Elem::new();
        for ((g, nu), &c) in x {
            let prod: Mono = nu.iter().zip(mu).map(|(a, b)| a + b).collect();
            if self.standard(&prod) {
                let e = out.entry((*g, prod)).or_insert(0);
                *e = (*e + c) % self.p;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Row-reduce; returns a basis of the row space.
    pub fn rref(&self, rows: &[Vec<u64>], ncols: usize) -> Vec<Vec<u64>> {
        let mut m: Vec<Vec<u64>> = rows.to_vec();
        let mut r = 0;
        for c in 0..ncols {
            let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
            m.swap(r, piv);
            let inv = self.inv(m[r][c]);
            for v in m[r].iter_mut() {
                *v = *v * inv % self.p;
            }
            for i in 0..m.len() {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for k in 0..ncols {
                        m[i][k] = (m[i][k] + self.p - f * m[r][k] % self.p) % self.p;
                    }
                }
            }
            r += 1;
        }
        m.truncate(r);
        m
    }

    pub fn rank(&self, rows: &[Vec<u64>], ncols: usize) -> usize {
        self.rref(rows, ncols).len()
    }

    /// Basis of `{a : Σ a_i rows_i = 0}`.
    pub fn left_kernel(&self, rows: &[Vec<u64>], ncols: usize) -> Vec<Vec<u64>> {
        let m = rows.len();
        let aug: Vec<Vec<u64>> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut v = r.clone();
                v.extend((0..m).map(|j| u64::from(i == j)));
                v
            })
            .collect();
        self.rref(&aug, ncols + m)
            .into_iter()
            .filter(|v| v[..ncols].iter().all(|&x| x == 0))
            .map(|v| v[ncols..].to_vec())
            .collect()
    }
}

/// Degree-`e` monomial basis of a graded free module.
pub struct Layout {
    pub keys: Vec<(usize, Mono)>,
    index: HashMap<(usize, Mono), usize>,
}

impl Layout {
    pub fn new(r: &Ring, degs: &[i32], e: i32) -> Layout {
        let keys: Vec<(usize, Mono)> = degs
            .iter()
            .enumerate()
            .flat_map(|(g, &d)| r.basis(e - d).into_iter().map(move |m| (g, m)))
            .collect();
        let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        Layout { keys, index }
    }

    pub fn dim(&self) -> usize {
        self.keys.len()
    }

    pub fn dense(&self, x: &Elem) -> Vec<u64> {
        let mut v = vec![0; self.dim()];
        for (k, &c) in x {
            v[self.index[k]] = c;
        }
        v
    }

    pub fn sparse(&self, v: &[u64]) -> Elem {
        v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (self.keys[i].clone(), c)).collect()
    }
}

/// A map of free modules given by the images of the source generators.
#[derive(Clone, Debug)]
pub struct Map {
    pub source: Vec<i32>,
    pub target: Vec<i32>,
    pub images: Vec<Elem>,
}

impl Map {
    pub fn from_graded(m: &GradedMap) -> Map {
        let images = (0..m.source().rank())
            .map(|j| {
                let mut x = Elem::new();
                for (g, entry) in m.column_element(j).iter().enumerate() {
                    for (mono, c) in entry.terms() {
                        x.insert((g, mono.exponents().to_vec()), c as u64);
                    }
                }
                x
            })
            .collect();
        Map { source: m.source().degrees().to_vec(), target: m.target().degrees().to_vec(), images }
    }

    /// Rows: images of the degree-`e` source basis, in target coordinates.
    pub fn rows(&self, r: &Ring, e: i32) -> Vec<Vec<u64>> {
        let src = Layout::new(r, &self.source, e);
        let tgt = Layout::new(r, &self.target, e);
        src.keys
            .iter()
            .map(|(j, mu)| tgt.dense(&r.mul_mono(&self.images[*j], mu)))
            .collect()
    }
}

/// Dimension of `F_e / N_e` where `N` is generated by the images of `rel`.
pub fn hilbert(r: &Ring, gens: &[i32], rel: &Map, e: i32) -> usize {
    let n = Layout::new(r, gens, e).dim();
    n - r.rank(&rel.rows(r, e), n)
}

/// Graded Betti numbers `β_{n,e}` of `coker(rel)` for `n ≤ maxn`, computed in
/// internal degrees up to `cap`.
pub fn betti(r: &Ring, gens: &[i32], rel: &Map, maxn: usize, cap: i32) -> Vec<BTreeMap<i32, usize>> {
    let lo = gens.iter().copied().min().unwrap_or(0);
    let mut out = Vec::new();

    // P_0: the generators of F that survive modulo N + mF.
    let mut cover = Vec::new();
    let mut b0 = BTreeMap::new();
    for e in lo..=cap {
        let lay = Layout::new(r, gens, e);
        let mut span = rel.rows(r, e);
        for (i, (_, m)) in lay.keys.iter().enumerate() {
            if m.iter().any(|&a| a > 0) {
                let mut v = vec![0; lay.dim()];
                v[i] = 1;
                span.push(v);
            }
        }
        let mut rk = r.rank(&span, lay.dim());
        for (g, &d) in gens.iter().enumerate() {
            if d != e {
                continue;
            }
            let mut v = vec![0; lay.dim()];
            v[lay.index[&(g, vec![0; r.nvars])]] = 1;
            span.push(v);
            let nr = r.rank(&span, lay.dim());
            if nr > rk {
                rk = nr;
                cover.push(g);
                *b0.entry(e).or_insert(0) += 1;
            } else {
                span.pop();
            }
        }
    }
    out.push(b0);
    let degs: Vec<i32> = cover.iter().map(|&g| gens[g]).collect();
    let images = cover.iter().map(|&g| Elem::from([((g, vec![0; r.nvars]), 1)])).collect();
    let to_f = Map { source: degs.clone(), target: gens.to_vec(), images };

    // Syzygy of the cover: preimage of N.
    let mut syz: BTreeMap<i32, Vec<Vec<u64>>> = BTreeMap::new();
    for e in lo..=cap {
        let src = Layout::new(r, &degs, e);
        let mut rows = to_f.rows(r, e);
        rows.extend(rel.rows(r, e));
        let ncols = Layout::new(r, gens, e).dim();
        let ker: Vec<Vec<u64>> = r.left_kernel(&rows, ncols).into_iter().map(|v| v[..src.dim()].to_vec()).collect();
        syz.insert(e, r.rref(&ker, src.dim()));
    }
    let mut prev = degs;

    for _ in 1..=maxn {
        // Minimal generators of the syzygy: a complement of m·S in S, degree by degree.
        let mut new_degs = Vec::new();
        let mut images = Vec::new();
        let mut bn = BTreeMap::new();
        for e in lo..=cap {
            let lay = Layout::new(r, &prev, e);
            let below = Layout::new(r, &prev, e - 1);
            let mut span: Vec<Vec<u64>> = Vec::new();
            for s in syz.get(&(e - 1)).into_iter().flatten() {
                let x = below.sparse(s);
                for i in 0..r.nvars {
                    let mut mu = vec![0; r.nvars];
                    mu[i] = 1;
                    span.push(lay.dense(&r.mul_mono(&x, &mu)));
                }
            }
            let mut rk = r.rank(&span, lay.dim());
            for s in syz.get(&e).into_iter().flatten() {
                span.push(s.clone());
                let nr = r.rank(&span, lay.dim());
                if nr > rk {
                    rk = nr;
                    new_degs.push(e);
                    images.push(lay.sparse(s));
                    *bn.entry(e).or_insert(0) += 1;
                } else {
                    span.pop();
                }
            }
        }
        out.push(bn);
        let map = Map { source: new_degs.clone(), target: prev.clone(), images };
        syz.clear();
        for e in lo..=cap {
            let n = Layout::new(r, &prev, e).dim();
            let k = r.left_kernel(&map.rows(r, e), n);
            syz.insert(e, k);
        }
        prev = new_degs;
    }
    out
}

/// Betti numbers of a presented module from the library, computed by the oracle.
pub fn module_betti(m: &PresentedModule, maxn: usize, cap: i32) -> Vec<BTreeMap<i32, usize>> {
    let r = Ring::from_algebra(m.algebra());
    betti(&r, m.generators().degrees(), &Map::from_graded(m.relations()), maxn, cap)
}

pub fn totals(b: &[BTreeMap<i32, usize>]) -> Vec<usize> {
    b.iter().map(|row| row.values().sum()).collect()
}

/// `dim_k H_i(X)_e` for a complex of free modules, by dense ranks.
pub fn homology_dims(x: &ChainComplex, cap: i32) -> BTreeMap<(i32, i32), usize> {
    assert!(x.is_free(), "the oracle handles free complexes only");
    let r = Ring::from_algebra(x.algebra());
    let lo = x.indices().filter_map(|i| x.generators(i).min_degree()).min().unwrap_or(0);
    let mut out = BTreeMap::new();
    for i in x.indices() {
        let degs = x.generators(i).degrees();
        for e in lo..=cap {
            let n = Layout::new(&r, degs, e).dim();
            if n == 0 {
                continue;
            }
            let out_rank = x.differential(i).map_or(0, |d| r.rank(&Map::from_graded(d).rows(&r, e), Layout::new(&r, d.target().degrees(), e).dim()));
            let in_rank = x.differential(i + 1).map_or(0, |d| r.rank(&Map::from_graded(d).rows(&r, e), n));
            let h = n - out_rank - in_rank;
            if h > 0 {
                out.insert((i, e), h);
            }
        }
    }
    out
}
