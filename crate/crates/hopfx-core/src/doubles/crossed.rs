//! Crossed tensor products A ⊗ B with basis a⊗b = (a⊗1)(1⊗b) and a cross
//! relation rewriting (1⊗b)(a⊗1). Products are computed lazily unless the
//! table is materialised.

use alloc::borrow::Cow;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::exactfield::Scalar;
use crate::par;
use crate::report::Report;
use crate::tensorcore::{check_associativity_scaled, kron, Acc, Algebra, AlgebraData, SVec};

/// Tables up to this dimension are stored; larger ones stay lazy.
pub const MATERIALIZE_DIM: usize = 256;

#[derive(Clone, Debug)]
pub struct CrossedProduct {
    pub left: Arc<AlgebraData>,
    pub right: Arc<AlgebraData>,
    /// `cross[b·dim(A) + a]` = (1⊗e_b)(e_a⊗1), flattened over A⊗B.
    pub cross: Vec<SVec>,
    unit: SVec,
    table: Option<Vec<SVec>>,
}

impl CrossedProduct {
    pub fn new(left: Arc<AlgebraData>, right: Arc<AlgebraData>, cross: Vec<SVec>) -> Self {
        let n = left.n;
        let unit = kron(&[Cow::Borrowed(&left.unit), Cow::Borrowed(&right.unit)], &[left.dim, right.dim], n);
        let mut cp = CrossedProduct { left, right, cross, unit, table: None };
        if cp.dim() <= MATERIALIZE_DIM {
            cp.materialize();
        }
        cp
    }

    fn compute(&self, p: usize, q: usize) -> SVec {
        let (da, db) = (self.left.dim, self.right.dim);
        let n = self.left.n;
        let (f, g) = (p / db, p % db);
        let (f2, g2) = (q / db, q % db);
        let mut acc = Acc::new(n);
        for (idx, c) in self.cross[g * da + f2].iter() {
            let (x, y) = (idx / db, idx % db);
            outer(&self.left.mult[f * da + x], &self.right.mult[y * db + g2], db, c, &mut acc);
        }
        acc.into_svec()
    }

    pub fn materialize(&mut self) {
        if self.table.is_none() {
            let d = self.dim();
            self.table = Some(par::map_range(d * d, |p| self.compute(p / d, p % d)));
        }
    }

    pub fn is_materialized(&self) -> bool {
        self.table.is_some()
    }

    /// Stored table (materialising first).
    pub fn to_algebra_data(&self) -> AlgebraData {
        match &self.table {
            Some(t) => AlgebraData { n: self.left.n, dim: self.dim(), mult: t.clone(), unit: self.unit.clone() },
            None => AlgebraData::materialize(self),
        }
    }

    /// a ↦ a⊗1
    pub fn embed_left(&self, a: &SVec) -> SVec {
        let n = self.left.n;
        kron(&[Cow::Borrowed(a), Cow::Borrowed(&self.right.unit)], &[self.left.dim, self.right.dim], n)
    }

    /// b ↦ 1⊗b
    pub fn embed_right(&self, b: &SVec) -> SVec {
        let n = self.left.n;
        kron(&[Cow::Borrowed(&self.left.unit), Cow::Borrowed(b)], &[self.left.dim, self.right.dim], n)
    }

    /// Unit law, both factor inclusions multiplicative, (a⊗1)(1⊗b) = a⊗b,
    /// and associativity (exhaustive at small dimension, sampled above).
    pub fn check(&self, seed: u64) -> Report {
        let mut rep = Report::new();
        let n = self.left.n;
        let (da, db) = (self.left.dim, self.right.dim);
        let dim = self.dim();
        let unit_fail = (0..dim).find(|&i| {
            let e = SVec::basis(i, n);
            self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e
        });
        rep.record("unit", unit_fail.map(|i| alloc::vec![i]));
        let left = par::find_first(da * da, |p| {
            let (i, j) = (p / da, p % da);
            let ei = self.embed_left(&SVec::basis(i, n));
            let ej = self.embed_left(&SVec::basis(j, n));
            (self.mul(&ei, &ej) != self.embed_left(&self.left.mult[p])).then(|| alloc::vec![i, j])
        });
        rep.record("left_subalgebra", left);
        let right = par::find_first(db * db, |p| {
            let (i, j) = (p / db, p % db);
            let ei = self.embed_right(&SVec::basis(i, n));
            let ej = self.embed_right(&SVec::basis(j, n));
            (self.mul(&ei, &ej) != self.embed_right(&self.right.mult[p])).then(|| alloc::vec![i, j])
        });
        rep.record("right_subalgebra", right);
        let order = par::find_first(da * db, |p| {
            let (i, j) = (p / db, p % db);
            let prod = self.mul(&self.embed_left(&SVec::basis(i, n)), &self.embed_right(&SVec::basis(j, n)));
            (prod != SVec::basis(p, n)).then(|| alloc::vec![i, j])
        });
        rep.record("ordering", order);
        let gens: Vec<usize> = Vec::new();
        rep.record("associativity", check_associativity_scaled(self, &gens, seed).map(|t| t.to_vec()));
        rep
    }
}

impl Algebra for CrossedProduct {
    fn dim(&self) -> usize {
        self.left.dim * self.right.dim
    }
    fn conductor(&self) -> u32 {
        self.left.n
    }
    fn unit(&self) -> SVec {
        self.unit.clone()
    }
    fn mul_basis(&self, i: usize, j: usize) -> Cow<'_, SVec> {
        match &self.table {
            Some(t) => Cow::Borrowed(&t[i * self.dim() + j]),
            None => Cow::Owned(self.compute(i, j)),
        }
    }
}

/// Σ c·(x⊗y) as a flat vector over A⊗B.
pub(crate) fn outer(x: &SVec, y: &SVec, db: usize, c: &Scalar, acc: &mut Acc) {
    for (i, a) in x.iter() {
        let ca = c * a;
        for (j, b) in y.iter() {
            acc.add(i * db + j, &(&ca * b));
        }
    }
}
