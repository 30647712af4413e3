//! Associative algebras given by structure constants.

use alloc::borrow::Cow;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::linalg;
use super::linmap::LinMap;
use super::svec::{Acc, SVec};
use super::TensorError;
use crate::exactfield::Scalar;
use crate::par;

/// Anything with a basis product. Implemented by stored tables and by lazy
/// tensor products of them.
pub trait Algebra: Sync {
    fn dim(&self) -> usize;
    fn conductor(&self) -> u32;
    fn unit(&self) -> SVec;
    /// e_i · e_j
    fn mul_basis(&self, i: usize, j: usize) -> Cow<'_, SVec>;

    fn mul(&self, a: &SVec, b: &SVec) -> SVec {
        let mut acc = Acc::new(self.conductor());
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let c = x * y;
                acc.add_svec(&self.mul_basis(i, j), &c);
            }
        }
        acc.into_svec()
    }

    /// Matrix of y ↦ x·y.
    fn left_mult(&self, x: &SVec) -> LinMap {
        let d = self.dim();
        let cols = (0..d).map(|j| self.mul(x, &SVec::basis(j, self.conductor()))).collect();
        LinMap::from_cols(d, d, self.conductor(), cols)
    }

    /// Matrix of y ↦ y·x.
    fn right_mult(&self, x: &SVec) -> LinMap {
        let d = self.dim();
        let cols = (0..d).map(|j| self.mul(&SVec::basis(j, self.conductor()), x)).collect();
        LinMap::from_cols(d, d, self.conductor(), cols)
    }

    /// Two-sided inverse by solving the left-multiplication system; the
    /// result is checked on both sides before it is returned.
    fn inverse(&self, x: &SVec) -> Result<SVec, TensorError> {
        let n = self.conductor();
        let l = self.left_mult(x);
        let unit = self.unit();
        let y = linalg::solve_cols(&l.cols, self.dim(), &unit, n).ok_or(TensorError::NotInvertible)?;
        if self.mul(x, &y) != unit || self.mul(&y, x) != unit {
            return Err(TensorError::NotInvertible);
        }
        Ok(y)
    }
}

/// Solve x·y = 1 in `a` (see [`Algebra::inverse`]).
pub fn solve_in_algebra(a: &dyn Algebra, x: &SVec) -> Result<SVec, TensorError> {
    a.inverse(x)
}

pub fn linmap_of_left_mult(a: &dyn Algebra, x: &SVec) -> LinMap {
    a.left_mult(x)
}

/// First failure of `f` being a unital algebra map `src → dst`: `[]` for the
/// unit, `[i, j]` for f(e_i e_j) ≠ f(e_i) f(e_j).
pub fn check_algebra_map(f: &LinMap, src: &dyn Algebra, dst: &dyn Algebra) -> Option<Vec<usize>> {
    if f.apply(&src.unit()) != dst.unit() {
        return Some(Vec::new());
    }
    let d = src.dim();
    par::find_first(d * d, |p| {
        let (i, j) = (p / d, p % d);
        let lhs = f.apply(&src.mul_basis(i, j));
        (lhs != dst.mul(&f.cols[i], &f.cols[j])).then(|| alloc::vec![i, j])
    })
}

fn assoc_fails(a: &dyn Algebra, i: usize, j: usize, k: usize) -> bool {
    let n = a.conductor();
    let left = a.mul(&a.mul_basis(i, j), &SVec::basis(k, n));
    let right = a.mul(&SVec::basis(i, n), &a.mul_basis(j, k));
    left != right
}

/// Every basis triple; returns the lexicographically first failure.
pub fn check_associativity_exhaustive(a: &dyn Algebra) -> Option<[usize; 3]> {
    let d = a.dim();
    par::find_first(d, |i| {
        (0..d).flat_map(|j| (0..d).map(move |k| (j, k))).find(|&(j, k)| assoc_fails(a, i, j, k)).map(|(j, k)| [i, j, k])
    })
}

/// `samples` basis triples drawn from a ChaCha8 stream seeded with `seed`.
pub fn check_associativity_sampled(a: &dyn Algebra, seed: u64, samples: usize) -> Option<[usize; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = a.dim() as u64;
    let triples: Vec<[usize; 3]> = (0..samples)
        .map(|_| {
            let mut t = [0usize; 3];
            for x in t.iter_mut() {
                *x = (rng.next_u64() % d) as usize;
            }
            t
        })
        .collect();
    par::find_first(triples.len(), |p| {
        let [i, j, k] = triples[p];
        assoc_fails(a, i, j, k).then_some(triples[p])
    })
}

/// Exhaustive up to dimension [`EXHAUSTIVE_ASSOC_DIM`]; above it, all
/// triples drawn from the basis indices `gens` plus 10⁴ seeded random triples.
pub fn check_associativity_scaled(a: &dyn Algebra, gens: &[usize], seed: u64) -> Option<[usize; 3]> {
    if a.dim() <= EXHAUSTIVE_ASSOC_DIM {
        return check_associativity_exhaustive(a);
    }
    let g = gens.len();
    let on_gens = par::find_first(g * g * g, |p| {
        let t = [gens[p / (g * g)], gens[(p / g) % g], gens[p % g]];
        assoc_fails(a, t[0], t[1], t[2]).then_some(t)
    });
    on_gens.or_else(|| check_associativity_sampled(a, seed, ASSOC_SAMPLES))
}

/// Number of random triples in the sampled associativity check.
pub const ASSOC_SAMPLES: usize = 10_000;

/// Largest dimension for which associativity is checked on every triple.
pub const EXHAUSTIVE_ASSOC_DIM: usize = 64;

/// Stored multiplication table: `mult[i*dim + j] = e_i e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    pub n: u32,
    pub dim: usize,
    pub mult: Vec<SVec>,
    pub unit: SVec,
}

impl AlgebraData {
    pub fn new(n: u32, dim: usize, mult: Vec<SVec>, unit: SVec) -> Result<Self, TensorError> {
        if mult.len() != dim * dim {
            return Err(TensorError::DimMismatch);
        }
        if mult.iter().chain(core::iter::once(&unit)).any(|v| v.max_index().is_some_and(|m| m >= dim)) {
            return Err(TensorError::DimMismatch);
        }
        Ok(AlgebraData { n, dim, mult, unit })
    }

    /// Build a table by evaluating `f(i, j)` for every basis pair (in
    /// parallel when enabled; the result does not depend on scheduling).
    pub fn from_fn<F>(n: u32, dim: usize, unit: SVec, f: F) -> Self
    where
        F: Fn(usize, usize) -> SVec + Sync + Send,
    {
        let mult = par::map_range(dim * dim, |p| f(p / dim, p % dim));
        AlgebraData { n, dim, mult, unit }
    }

    /// Copy out any algebra's table.
    pub fn materialize(a: &dyn Algebra) -> Self {
        let d = a.dim();
        Self::from_fn(a.conductor(), d, a.unit(), |i, j| a.mul_basis(i, j).into_owned())
    }

    /// First basis index where the unit fails to be a two-sided identity.
    pub fn check_unit(&self) -> Option<usize> {
        (0..self.dim).find(|&i| {
            let e = SVec::basis(i, self.n);
            self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e
        })
    }

    /// Exhaustive check; returns the lexicographically first failing triple.
    pub fn check_associativity(&self) -> Option<[usize; 3]> {
        check_associativity_exhaustive(self)
    }

    /// Seeded random sample of basis triples.
    pub fn check_associativity_sampled(&self, seed: u64, samples: usize) -> Option<[usize; 3]> {
        check_associativity_sampled(self, seed, samples)
    }

    /// See [`check_associativity_scaled`].
    pub fn check_associativity_scaled(&self, gens: &[usize], seed: u64) -> Option<[usize; 3]> {
        check_associativity_scaled(self, gens, seed)
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| (i + 1..d).all(|j| self.mult[i * d + j] == self.mult[j * d + i]))
    }
}

impl Algebra for AlgebraData {
    fn dim(&self) -> usize {
        self.dim
    }
    fn conductor(&self) -> u32 {
        self.n
    }
    fn unit(&self) -> SVec {
        self.unit.clone()
    }
    fn mul_basis(&self, i: usize, j: usize) -> Cow<'_, SVec> {
        Cow::Borrowed(&self.mult[i * self.dim + j])
    }
}

/// Lazy tensor product A₁ ⊗ … ⊗ A_m; basis index is row-major over factors.
pub struct TensorAlg<'a> {
    factors: Vec<&'a dyn Algebra>,
}

impl<'a> TensorAlg<'a> {
    pub fn new(factors: Vec<&'a dyn Algebra>) -> Self {
        assert!(!factors.is_empty());
        TensorAlg { factors }
    }

    fn split(&self, mut i: usize) -> Vec<usize> {
        let mut out = alloc::vec![0; self.factors.len()];
        for (l, f) in self.factors.iter().enumerate().rev() {
            out[l] = i % f.dim();
            i /= f.dim();
        }
        out
    }
}

/// Tensor product of sparse vectors with row-major flattening.
pub fn kron(parts: &[Cow<'_, SVec>], dims: &[usize], n: u32) -> SVec {
    let mut cur: Vec<(usize, Scalar)> = alloc::vec![(0, Scalar::one(n))];
    for (p, &d) in parts.iter().zip(dims) {
        let mut next = Vec::with_capacity(cur.len() * p.len());
        for (i, x) in &cur {
            for (j, y) in p.iter() {
                next.push((i * d + j, x * y));
            }
        }
        cur = next;
    }
    // row-major with sorted inputs gives sorted output
    SVec { e: cur.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
}

impl Algebra for TensorAlg<'_> {
    fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim()).product()
    }
    fn conductor(&self) -> u32 {
        self.factors[0].conductor()
    }
    fn unit(&self) -> SVec {
        let units: Vec<SVec> = self.factors.iter().map(|f| f.unit()).collect();
        let parts: Vec<Cow<'_, SVec>> = units.iter().map(Cow::Borrowed).collect();
        let dims: Vec<usize> = self.factors.iter().map(|f| f.dim()).collect();
        kron(&parts, &dims, self.conductor())
    }
    fn mul_basis(&self, i: usize, j: usize) -> Cow<'_, SVec> {
        let (a, b) = (self.split(i), self.split(j));
        let parts: Vec<Cow<'_, SVec>> = self.factors.iter().enumerate().map(|(l, f)| f.mul_basis(a[l], b[l])).collect();
        let dims: Vec<usize> = self.factors.iter().map(|f| f.dim()).collect();
        Cow::Owned(kron(&parts, &dims, self.conductor()))
    }
}
