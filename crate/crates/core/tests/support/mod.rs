//! Seeded random structures for property tests.
#![allow(dead_code)]

use copre::algebra::{CompatiblePreLie, CompatibleRep, Product};
use copre::cochain::{basis_keys, Cochain};
use copre::cohomology::{CochainTuple, TotalComplex};
use copre::extension::TwoCocyclePair;
use copre::linalg::{rat, Matrix};
use copre::Rational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(r: &mut ChaCha8Rng) -> Rational {
    rat(r.gen_range(-2..=2))
}

/// Sparse entries from {-2..2} with the given density in percent.
pub fn sparse(r: &mut ChaCha8Rng, percent: u32) -> Rational {
    if r.gen_range(0..100) < percent {
        small(r)
    } else {
        rat(0)
    }
}

pub fn product(r: &mut ChaCha8Rng, d: usize, percent: u32) -> Product {
    let mut p = Product::zero(d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                p.set(i, j, k, sparse(r, percent));
            }
        }
    }
    p
}

pub fn cochain(r: &mut ChaCha8Rng, arity: usize, d: usize, w: usize) -> Cochain {
    let mut c = Cochain::zero(arity, d, w);
    for k in basis_keys(arity, d) {
        let v: Vec<Rational> = (0..w).map(|_| small(r)).collect();
        c.set(k, v).unwrap();
    }
    c
}

pub fn pair(r: &mut ChaCha8Rng, d: usize, percent: u32) -> CompatiblePreLie {
    CompatiblePreLie::candidate(product(r, d, percent), product(r, d, percent)).unwrap()
}

pub fn matrix(r: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_rows((0..rows).map(|_| (0..cols).map(|_| small(r)).collect()).collect()).unwrap()
}

/// Random cochain on `g ⊕ V` (`dim g = d`, `dim V = m`) of bidegree `k|l`.
pub fn homogeneous(r: &mut ChaCha8Rng, d: usize, m: usize, k: i64, l: i64) -> Cochain {
    let n = (k + l + 1) as usize;
    let mut c = Cochain::zero(n, d + m, d + m);
    for key in basis_keys(n, d + m) {
        let a = key.subset.iter().chain([&key.last]).filter(|&&i| i < d).count() as i64;
        let mut v = vec![rat(0); d + m];
        if a == k + 1 {
            for x in v.iter_mut().take(d) {
                *x = sparse(r, 60);
            }
        } else if a == k {
            for x in v.iter_mut().skip(d) {
                *x = sparse(r, 60);
            }
        }
        c.set(key, v).unwrap();
    }
    c
}

/// Random 2-cocycle: a combination of class representatives plus a coboundary.
pub fn cocycle(r: &mut ChaCha8Rng, a: &CompatiblePreLie, rep: &CompatibleRep) -> TwoCocyclePair {
    let c = TotalComplex::with_coefficients(a, rep).unwrap();
    let mut t = CochainTuple::zero(2, a.dim(), rep.rep_dim());
    for h in &c.cohomology(2).representatives {
        t = t.add(&h.scale(&small(r))).unwrap();
    }
    let phi = matrix(r, rep.rep_dim(), a.dim());
    let b = c.differential(&CochainTuple::new(vec![Cochain::from_linear_map(&phi)]).unwrap()).unwrap();
    TwoCocyclePair::from_tuple(&t.add(&b).unwrap()).unwrap()
}
