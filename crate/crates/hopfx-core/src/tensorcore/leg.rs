//! Sparse elements of A₀ ⊗ A₁ ⊗ … ⊗ A_m with leg bookkeeping.
//!
//! Multi-indices are flattened row-major (leg 0 most significant), so the
//! `BTreeMap` order is the lexicographic order of multi-indices and merging
//! two adjacent legs is a pure relabelling of dimensions.

use alloc::borrow::Cow;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::algebra::{Algebra, TensorAlg};
use super::linmap::LinMap;
use super::svec::{Acc, SVec};
use super::TensorError;
use crate::exactfield::Scalar;
use crate::par;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegElement {
    n: u32,
    dims: Vec<usize>,
    entries: BTreeMap<usize, Scalar>,
}

fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1; dims.len()];
    for l in (0..dims.len().saturating_sub(1)).rev() {
        s[l] = s[l + 1] * dims[l + 1];
    }
    s
}

impl LegElement {
    pub fn zero(n: u32, dims: Vec<usize>) -> Self {
        LegElement { n, dims, entries: BTreeMap::new() }
    }

    /// A 0-leg element (a scalar).
    pub fn scalar(v: Scalar) -> Self {
        let n = v.conductor();
        let mut entries = BTreeMap::new();
        if !v.is_zero() {
            entries.insert(0, v);
        }
        LegElement { n, dims: Vec::new(), entries }
    }

    pub fn from_terms(
        n: u32,
        dims: Vec<usize>,
        terms: impl IntoIterator<Item = (Vec<usize>, Scalar)>,
    ) -> Result<Self, TensorError> {
        let mut out = Self::zero(n, dims);
        for (idx, v) in terms {
            if idx.len() != out.dims.len() || idx.iter().zip(&out.dims).any(|(i, d)| i >= d) {
                return Err(TensorError::DimMismatch);
            }
            let k = out.encode(&idx);
            out.add_at(k, &v);
        }
        Ok(out)
    }

    /// Single-leg element from a vector.
    pub fn from_vec(n: u32, dim: usize, v: &SVec) -> Self {
        Self::from_flat(n, vec![dim], v)
    }

    /// From a sparse vector over the flattened index.
    pub fn from_flat(n: u32, dims: Vec<usize>, v: &SVec) -> Self {
        LegElement { n, dims, entries: v.iter().map(|(i, x)| (i, x.clone())).collect() }
    }

    pub fn to_flat(&self) -> SVec {
        SVec { e: self.entries.iter().map(|(i, v)| (*i, v.clone())).collect() }
    }

    /// Tensor product of the units of `algs`.
    pub fn unit(algs: &[&dyn Algebra]) -> Self {
        let n = algs[0].conductor();
        let units: Vec<SVec> = algs.iter().map(|a| a.unit()).collect();
        let mut out = LegElement::scalar(Scalar::one(n));
        for (u, a) in units.iter().zip(algs) {
            out = out.tensor(&LegElement::from_vec(n, a.dim(), u));
        }
        out
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn encode(&self, idx: &[usize]) -> usize {
        idx.iter().zip(&self.dims).fold(0, |acc, (i, d)| acc * d + i)
    }

    pub fn decode(&self, mut k: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for l in (0..self.dims.len()).rev() {
            out[l] = k % self.dims[l];
            k /= self.dims[l];
        }
        out
    }

    fn add_at(&mut self, k: usize, v: &Scalar) {
        if v.is_zero() {
            return;
        }
        let remove = match self.entries.get_mut(&k) {
            Some(s) => {
                *s += v;
                s.is_zero()
            }
            None => {
                self.entries.insert(k, v.clone());
                false
            }
        };
        if remove {
            self.entries.remove(&k);
        }
    }

    pub fn get(&self, idx: &[usize]) -> Scalar {
        self.entries.get(&self.encode(idx)).cloned().unwrap_or_else(|| Scalar::zero(self.n))
    }

    /// (multi-index, value) in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &Scalar)> + '_ {
        self.entries.iter().map(|(k, v)| (self.decode(*k), v))
    }

    pub fn add(&self, o: &LegElement) -> LegElement {
        assert_eq!(self.dims, o.dims, "leg shape mismatch");
        let mut out = self.clone();
        for (k, v) in &o.entries {
            out.add_at(*k, v);
        }
        out
    }

    pub fn sub(&self, o: &LegElement) -> LegElement {
        self.add(&o.scale(&-Scalar::one(self.n)))
    }

    pub fn scale(&self, c: &Scalar) -> LegElement {
        let mut out = Self::zero(self.n, self.dims.clone());
        if !c.is_zero() {
            out.entries = self.entries.iter().map(|(k, v)| (*k, v * c)).collect();
        }
        out
    }

    /// Outer product: legs of `self` then legs of `o`.
    pub fn tensor(&self, o: &LegElement) -> LegElement {
        let w: usize = o.dims.iter().product();
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&o.dims);
        let mut entries = BTreeMap::new();
        for (a, x) in &self.entries {
            for (b, y) in &o.entries {
                entries.insert(a * w + b, x * y);
            }
        }
        LegElement { n: self.n, dims, entries }
    }

    /// Place the legs of `self` at `targets` inside the ambient tensor product
    /// `algs`; every other leg carries the unit of its algebra.
    pub fn embed(&self, targets: &[usize], algs: &[&dyn Algebra]) -> Result<LegElement, TensorError> {
        if targets.len() != self.arity() {
            return Err(TensorError::DimMismatch);
        }
        let m = algs.len();
        let mut seen = vec![false; m];
        for (l, &t) in targets.iter().enumerate() {
            if t >= m || seen[t] || algs[t].dim() != self.dims[l] {
                return Err(TensorError::DimMismatch);
            }
            seen[t] = true;
        }
        let dims: Vec<usize> = algs.iter().map(|a| a.dim()).collect();
        let st = strides(&dims);
        // fixed part: units on the untouched legs
        let mut base: Vec<(usize, Scalar)> = vec![(0, Scalar::one(self.n))];
        for l in 0..m {
            if seen[l] {
                continue;
            }
            let u = algs[l].unit();
            let mut next = Vec::with_capacity(base.len() * u.len());
            for (k, x) in &base {
                for (i, y) in u.iter() {
                    next.push((k + i * st[l], x * y));
                }
            }
            base = next;
        }
        let mut out = LegElement::zero(self.n, dims);
        for (k, v) in &self.entries {
            let idx = self.decode(*k);
            let off: usize = idx.iter().zip(targets).map(|(i, &t)| i * st[t]).sum();
            for (b, u) in &base {
                out.add_at(off + b, &(v * u));
            }
        }
        Ok(out)
    }

    /// Reorder legs: leg `l` of the result is leg `perm[l]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> LegElement {
        assert_eq!(perm.len(), self.arity());
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut out = LegElement::zero(self.n, dims);
        for (k, v) in &self.entries {
            let idx = self.decode(*k);
            let new: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            let nk = out.encode(&new);
            out.entries.insert(nk, v.clone());
        }
        out
    }

    /// Leg-wise product `self · o`; `algs[l]` multiplies leg `l`.
    pub fn product(&self, o: &LegElement, algs: &[&dyn Algebra]) -> Result<LegElement, TensorError> {
        if self.dims != o.dims || algs.len() != self.arity() || algs.iter().zip(&self.dims).any(|(a, d)| a.dim() != *d)
        {
            return Err(TensorError::DimMismatch);
        }
        let n = self.n;
        let dims = self.dims.clone();
        let xs: Vec<(Vec<usize>, &Scalar)> = self.terms().collect();
        let ys: Vec<(Vec<usize>, &Scalar)> = o.terms().collect();
        let work = |range: core::ops::Range<usize>| -> BTreeMap<usize, Scalar> {
            let mut acc = Acc::new(n);
            for (a, x) in &xs[range] {
                for (b, y) in &ys {
                    let parts: Vec<Cow<'_, SVec>> =
                        algs.iter().enumerate().map(|(l, alg)| alg.mul_basis(a[l], b[l])).collect();
                    if parts.iter().any(|p| p.is_empty()) {
                        continue;
                    }
                    let c = *x * *y;
                    emit(&parts, &dims, &c, &mut acc);
                }
            }
            acc.into_map()
        };
        let total = xs.len() * ys.len();
        let entries = if total < 4096 {
            work(0..xs.len())
        } else {
            let chunk = (xs.len() / 64).max(1);
            let nchunks = xs.len().div_ceil(chunk);
            let parts = par::map_range(nchunks, |c| work(c * chunk..((c + 1) * chunk).min(xs.len())));
            let mut merged = parts.into_iter();
            let mut first = merged.next().unwrap_or_default();
            for m in merged {
                for (k, v) in m {
                    match first.get_mut(&k) {
                        Some(s) => *s += &v,
                        None => {
                            first.insert(k, v);
                        }
                    }
                }
            }
            first.retain(|_, v| !v.is_zero());
            first
        };
        Ok(LegElement { n, dims, entries })
    }

    /// Product of several factors left to right.
    pub fn product_chain(factors: &[&LegElement], algs: &[&dyn Algebra]) -> Result<LegElement, TensorError> {
        let mut it = factors.iter();
        let mut acc = (*it.next().expect("empty product")).clone();
        for f in it {
            acc = acc.product(f, algs)?;
        }
        Ok(acc)
    }

    /// Two-sided inverse in the tensor product algebra.
    pub fn inverse(&self, algs: &[&dyn Algebra]) -> Result<LegElement, TensorError> {
        let t = TensorAlg::new(algs.to_vec());
        let inv = t.inverse(&self.to_flat())?;
        Ok(LegElement::from_flat(self.n, self.dims.clone(), &inv))
    }

    /// k-th power; negative exponents go through the inverse.
    pub fn pow(&self, k: i32, algs: &[&dyn Algebra]) -> Result<LegElement, TensorError> {
        let base = if k < 0 { self.inverse(algs)? } else { self.clone() };
        let mut acc = LegElement::unit(algs);
        for _ in 0..k.unsigned_abs() {
            acc = acc.product(&base, algs)?;
        }
        Ok(acc)
    }

    /// Replace leg `leg` by the legs of `images[i]` for each basis index i.
    /// All images must share one shape; an image with no legs contracts.
    pub fn substitute(&self, leg: usize, images: &[LegElement]) -> LegElement {
        assert_eq!(images.len(), self.dims[leg]);
        let img_dims = images[0].dims.clone();
        let mut dims = self.dims[..leg].to_vec();
        dims.extend_from_slice(&img_dims);
        dims.extend_from_slice(&self.dims[leg + 1..]);
        let tail: usize = self.dims[leg + 1..].iter().product();
        let w: usize = img_dims.iter().product();
        let mut out = LegElement::zero(self.n, dims);
        for (k, v) in &self.entries {
            let lo = k % tail;
            let rest = k / tail;
            let i = rest % self.dims[leg];
            let hi = rest / self.dims[leg];
            for (m, x) in &images[i].entries {
                out.add_at((hi * w + m) * tail + lo, &(v * x));
            }
        }
        out
    }

    /// Apply a linear map on one leg.
    pub fn map_leg(&self, leg: usize, f: &LinMap) -> LegElement {
        let images: Vec<LegElement> = f.cols.iter().map(|c| LegElement::from_vec(self.n, f.dst, c)).collect();
        self.substitute(leg, &images)
    }

    /// Contract one leg against a covector.
    pub fn contract(&self, leg: usize, f: &[Scalar]) -> LegElement {
        let images: Vec<LegElement> = f.iter().map(|v| LegElement::scalar(v.clone())).collect();
        self.substitute(leg, &images)
    }

    /// Coefficient slice (id ⊗ e^i) on one leg.
    pub fn slice(&self, leg: usize, i: usize) -> LegElement {
        let f: Vec<Scalar> =
            (0..self.dims[leg]).map(|j| if j == i { Scalar::one(self.n) } else { Scalar::zero(self.n) }).collect();
        self.contract(leg, &f)
    }

    /// Merge legs `l` and `l+1` into one leg (row-major).
    pub fn merge_legs(&self, l: usize) -> LegElement {
        let mut dims = self.dims.clone();
        let d = dims.remove(l + 1);
        dims[l] *= d;
        LegElement { n: self.n, dims, entries: self.entries.clone() }
    }

    /// Split leg `l` into two legs of sizes `a`, `b` with `a·b = dims[l]`.
    pub fn split_leg(&self, l: usize, a: usize, b: usize) -> LegElement {
        assert_eq!(a * b, self.dims[l]);
        let mut dims = self.dims.clone();
        dims[l] = b;
        dims.insert(l, a);
        LegElement { n: self.n, dims, entries: self.entries.clone() }
    }

    /// Lexicographically first multi-index where the elements differ.
    pub fn first_diff(&self, o: &LegElement) -> Option<Vec<usize>> {
        if self.dims != o.dims {
            return Some(Vec::new());
        }
        let keys = self.entries.keys().chain(o.entries.keys());
        let mut bad: Option<usize> = None;
        for k in keys {
            if self.entries.get(k) != o.entries.get(k) {
                bad = Some(bad.map_or(*k, |b: usize| b.min(*k)));
            }
        }
        bad.map(|k| self.decode(k))
    }
}

/// acc += c · ⊗_l parts[l] (row-major over `dims`).
fn emit(parts: &[Cow<'_, SVec>], dims: &[usize], c: &Scalar, acc: &mut Acc) {
    fn go(parts: &[Cow<'_, SVec>], dims: &[usize], l: usize, off: usize, c: &Scalar, acc: &mut Acc) {
        if l == parts.len() {
            acc.add(off, c);
            return;
        }
        let single = parts[l].len() == 1;
        for (i, v) in parts[l].iter() {
            let off2 = off * dims[l] + i;
            if single && v.is_one() {
                go(parts, dims, l + 1, off2, c, acc);
            } else {
                go(parts, dims, l + 1, off2, &(c * v), acc);
            }
        }
    }
    go(parts, dims, 0, 0, c, acc);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensorcore::AlgebraData;

    fn z2() -> AlgebraData {
        let one = |i| SVec::basis(i, 1);
        AlgebraData::new(1, 2, vec![one(0), one(1), one(1), one(0)], one(0)).unwrap()
    }

    fn q(v: i64) -> Scalar {
        Scalar::from_int(1, v)
    }

    #[test]
    fn trivial_r_embeds_to_unit() {
        let a = z2();
        let algs: [&dyn Algebra; 3] = [&a, &a, &a];
        let r = LegElement::from_terms(1, vec![2, 2], [(vec![0, 0], q(1))]).unwrap();
        assert_eq!(r.embed(&[1, 2], &algs).unwrap(), LegElement::unit(&algs));
    }

    #[test]
    fn reversed_embedding_is_a_swap() {
        let a = z2();
        let algs: [&dyn Algebra; 3] = [&a, &a, &a];
        let x = LegElement::from_terms(1, vec![2, 2], [(vec![0, 1], q(2)), (vec![1, 1], q(-1))]).unwrap();
        let fwd = x.embed(&[1, 2], &algs).unwrap();
        let rev = x.embed(&[2, 1], &algs).unwrap();
        assert_eq!(rev, fwd.permute(&[0, 2, 1]));
    }

    #[test]
    fn embed_rejects_bad_dims() {
        let a = z2();
        let x = LegElement::from_terms(1, vec![3], [(vec![0], q(1))]).unwrap();
        assert_eq!(x.embed(&[0], &[&a as &dyn Algebra]), Err(TensorError::DimMismatch));
    }

    #[test]
    fn unit_is_left_identity() {
        let a = z2();
        let algs: [&dyn Algebra; 2] = [&a, &a];
        let y = LegElement::from_terms(1, vec![2, 2], [(vec![1, 0], q(3)), (vec![1, 1], q(5))]).unwrap();
        assert_eq!(LegElement::unit(&algs).product(&y, &algs).unwrap(), y);
    }

    #[test]
    fn substitute_with_scalars_contracts() {
        let x = LegElement::from_terms(1, vec![2, 2], [(vec![0, 1], q(2)), (vec![1, 1], q(3))]).unwrap();
        let c = x.contract(0, &[q(1), q(10)]);
        assert_eq!(c, LegElement::from_terms(1, vec![2], [(vec![1], q(32))]).unwrap());
        assert_eq!(x.slice(1, 1), LegElement::from_terms(1, vec![2], [(vec![0], q(2)), (vec![1], q(3))]).unwrap());
    }

    #[test]
    fn merge_then_split_is_identity() {
        let x = LegElement::from_terms(1, vec![2, 3, 2], [(vec![1, 2, 0], q(7))]).unwrap();
        assert_eq!(x.merge_legs(1).split_leg(1, 3, 2), x);
    }
}
