//! Seeded generators of small random rings, modules, complexes, chain maps and
//! short exact sequences for the property suites.
//!
//! Shapes stay small (at most three variables, three homological degrees and
//! generator degrees up to three) so every instance resolves in milliseconds.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{cone_sequence, natural, ChainComplex, ComplexMorphism};
use crate::error::Result;
use crate::field::PrimeField;
use crate::linalg;
use crate::module::{vec_to_element, FreeModule, GradedMap, PresentedModule};
use crate::ring::{Algebra, GradedAlgebra, RingElement};

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `k[s,t]/(s², st, t²)`, `k[x]/(x²)` and `k[x,y]` over `GF(101)`.
pub fn test_rings() -> Vec<Algebra> {
    let f = PrimeField::default();
    vec![
        GradedAlgebra::parse(f, &["s", "t"], &["s^2", "s*t", "t^2"]).unwrap(),
        GradedAlgebra::parse(f, &["x"], &["x^2"]).unwrap(),
        GradedAlgebra::polynomial(f, &["x", "y"]).unwrap(),
    ]
}

/// Size limits for generated objects.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub max_rank: usize,
    pub max_terms: usize,
    pub max_gen_degree: i32,
    /// Probability that a coefficient of an entry is nonzero.
    pub density: f64,
}

impl Default for Shape {
    fn default() -> Self {
        Shape { max_rank: 2, max_terms: 3, max_gen_degree: 3, density: 0.7 }
    }
}

/// A random homogeneous element of degree `d` (zero for negative `d`).
pub fn random_element(alg: &Algebra, d: i32, density: f64, rng: &mut TestRng) -> RingElement {
    let p = alg.field().characteristic() as i64;
    let raw: Vec<(i64, _)> = alg
        .graded_piece_basis(d)
        .into_iter()
        .filter_map(|m| rng.gen_bool(density).then(|| (rng.gen_range(1..p), m)))
        .collect();
    alg.normal_form(&raw).expect("basis monomials are well formed")
}

/// A random degree-preserving map; `units` allows degree-0 entries.
pub fn random_map(alg: &Algebra, source: &FreeModule, target: &FreeModule, units: bool, density: f64, rng: &mut TestRng) -> GradedMap {
    let cols = source
        .degrees()
        .iter()
        .map(|&ds| {
            target
                .degrees()
                .iter()
                .map(|&dt| {
                    let d = ds - dt;
                    if d < 0 || (d == 0 && !units) {
                        RingElement::zero()
                    } else {
                        random_element(alg, d, density, rng)
                    }
                })
                .collect()
        })
        .collect();
    GradedMap::new(alg, source.clone(), target.clone(), cols).expect("entries are homogeneous of the right degree")
}

fn random_degrees(rng: &mut TestRng, n: usize, lo: i32, hi: i32) -> FreeModule {
    let mut d: Vec<i32> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
    d.sort_unstable();
    FreeModule::new(d)
}

/// A random presented module with at most `max_rank` generators and relations.
pub fn random_module(alg: &Algebra, shape: Shape, rng: &mut TestRng) -> PresentedModule {
    let n = rng.gen_range(1..=shape.max_rank);
    let gens = random_degrees(rng, n, 0, 1);
    let nrel = rng.gen_range(0..=shape.max_rank);
    let top = gens.max_degree().unwrap_or(0);
    let rels = random_degrees(rng, nrel, top + 1, top + 2);
    PresentedModule::new(random_map(alg, &rels, &gens, false, shape.density, rng))
}

/// A random module that is either `k`, `R`, a cyclic quotient or a random
/// presentation.
pub fn random_small_module(alg: &Algebra, shape: Shape, rng: &mut TestRng) -> PresentedModule {
    match rng.gen_range(0..4) {
        0 => PresentedModule::residue_field(alg),
        1 => PresentedModule::ring(alg),
        2 => {
            let v = rng.gen_range(0..alg.num_vars());
            let col = vec![alg.var(v)];
            PresentedModule::new(GradedMap::new(alg, FreeModule::new(vec![1]), FreeModule::new(vec![0]), vec![col]).unwrap())
        }
        _ => random_module(alg, shape, rng),
    }
}

/// A random bounded free complex with `∂² = 0`: each new differential sends its
/// generators to random cycles of the previous term.
pub fn random_complex(alg: &Algebra, shape: Shape, rng: &mut TestRng) -> ChainComplex {
    let low = rng.gen_range(-1..=1);
    let f = alg.field();
    let n0 = rng.gen_range(1..=shape.max_rank);
    let mut modules = vec![random_degrees(rng, n0, 0, 1)];
    let mut diffs: Vec<GradedMap> = Vec::new();
    let nterms = rng.gen_range(1..=shape.max_terms);
    for _ in 1..nterms {
        let prev = modules.last().unwrap().clone();
        let base = prev.min_degree().unwrap_or(0);
        let mut degs = Vec::new();
        let mut cols = Vec::new();
        for _ in 0..rng.gen_range(1..=shape.max_rank) {
            let e = rng.gen_range(base + 1..=(base + 2).min(shape.max_gen_degree.max(base + 1)));
            let n = prev.dim(alg, e);
            let cyc = match diffs.last() {
                None => (0..n as u32).map(|i| vec![(i, 1)]).collect(),
                Some(d) => linalg::kernel(f, d.target().dim(alg, e), &d.degree_rows(e)),
            };
            let coeffs: Vec<(u32, u32)> = (0..cyc.len() as u32)
                .filter_map(|i| if rng.gen_bool(shape.density) { Some((i, rng.gen_range(1..f.characteristic()))) } else { None })
                .collect();
            let v = linalg::combine(f, &coeffs, &cyc);
            degs.push(e);
            cols.push(vec_to_element(alg, &prev.layout(alg, e), prev.rank(), &v));
        }
        let next = FreeModule::new(degs);
        diffs.push(GradedMap::new(alg, next.clone(), prev, cols).expect("homogeneous columns"));
        modules.push(next);
    }
    ChainComplex::free(alg, low, modules, diffs).expect("consecutive differentials compose to zero")
}

/// Either a random free complex or a random module in a random degree.
pub fn random_object(alg: &Algebra, shape: Shape, rng: &mut TestRng) -> ChainComplex {
    if rng.gen_bool(0.5) {
        random_complex(alg, shape, rng)
    } else {
        ChainComplex::module(random_small_module(alg, shape, rng), rng.gen_range(0..=1))
    }
}

/// `c·base + (∂h + h∂)` for a random homotopy `h` from a free source; homotopic to
/// `c·base`, so it is a quasi-isomorphism exactly when `c·base` is.
pub fn perturb(base: &ComplexMorphism, c: i64, rng: &mut TestRng) -> Result<ComplexMorphism> {
    let (x, y) = (base.source().clone(), base.target().clone());
    let alg = x.algebra().clone();
    let h: Vec<GradedMap> = x
        .indices()
        .map(|i| random_map(&alg, x.generators(i), y.generators(i + 1), true, 0.5, rng))
        .collect();
    let hmap = |i: i32| -> GradedMap {
        if x.indices().contains(&i) {
            h[(i - x.low()) as usize].clone()
        } else {
            GradedMap::zero(&alg, x.generators(i).clone(), y.generators(i + 1).clone())
        }
    };
    let mut maps = Vec::new();
    for i in x.indices() {
        let dy = match y.differential(i + 1) {
            Some(d) => d.clone(),
            None => GradedMap::zero(&alg, y.generators(i + 1).clone(), y.generators(i).clone()),
        };
        let mut m = base.map_or_zero(i).scaled(c).add(&dy.compose(&hmap(i))?)?;
        if let Some(dx) = x.differential(i) {
            m = m.add(&hmap(i - 1).compose(dx)?)?;
        }
        maps.push(m);
    }
    ComplexMorphism::new(x, y, maps)
}

/// A short exact sequence `0 → A → B → C → 0` of complexes: either the cone
/// sequence of a perturbed identity or a hard truncation sequence.
pub fn random_ses(alg: &Algebra, shape: Shape, rng: &mut TestRng) -> Result<(ComplexMorphism, ComplexMorphism)> {
    let x = Arc::new(random_complex(alg, shape, rng));
    if rng.gen_bool(0.5) && x.high() > x.low() {
        let n = rng.gen_range(x.low()..x.high());
        return Ok((natural::hard_left_inclusion(&x, n), natural::hard_right_projection(&x, n + 1)));
    }
    let c = *[0i64, 1, 2].choose(rng).unwrap();
    let sigma = perturb(&ComplexMorphism::identity(x), c, rng)?;
    Ok(cone_sequence(&sigma))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_complexes_are_complexes() {
        for (i, alg) in test_rings().iter().enumerate() {
            let mut r = rng(i as u64);
            for _ in 0..10 {
                let x = random_complex(alg, Shape::default(), &mut r);
                x.validate().unwrap();
                let m = random_module(alg, Shape::default(), &mut r);
                ChainComplex::module(m, 0).validate().unwrap();
                let s = perturb(&ComplexMorphism::identity(Arc::new(x)), 2, &mut r).unwrap();
                s.validate().unwrap();
            }
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let alg = &test_rings()[0];
        let a = random_complex(alg, Shape::default(), &mut rng(7));
        let b = random_complex(alg, Shape::default(), &mut rng(7));
        assert_eq!(a, b);
    }
}
