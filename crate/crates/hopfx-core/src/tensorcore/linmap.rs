//! Exact sparse matrices between based spaces.

use alloc::vec::Vec;

use super::linalg;
use super::svec::{Acc, SVec};
use super::TensorError;
use crate::exactfield::Scalar;
use crate::par;

/// Column-stored matrix: `cols[j]` is the image of the j-th source basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    pub src: usize,
    pub dst: usize,
    pub n: u32,
    pub cols: Vec<SVec>,
}

impl LinMap {
    pub fn from_cols(src: usize, dst: usize, n: u32, cols: Vec<SVec>) -> Self {
        assert_eq!(cols.len(), src, "column count must equal source dimension");
        debug_assert!(cols.iter().all(|c| c.max_index().map_or(true, |m| m < dst)));
        LinMap { src, dst, n, cols }
    }

    /// From (row, col, value) triples.
    pub fn from_entries(
        src: usize,
        dst: usize,
        n: u32,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Self {
        let mut accs: Vec<Acc> = (0..src).map(|_| Acc::new(n)).collect();
        for (i, j, v) in entries {
            accs[j].add(i, &v);
        }
        Self::from_cols(src, dst, n, accs.into_iter().map(Acc::into_svec).collect())
    }

    pub fn identity(d: usize, n: u32) -> Self {
        Self::from_cols(d, d, n, (0..d).map(|i| SVec::basis(i, n)).collect())
    }

    pub fn zero(src: usize, dst: usize, n: u32) -> Self {
        Self::from_cols(src, dst, n, alloc::vec![SVec::new(); src])
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        self.cols[j].get(i).cloned().unwrap_or_else(|| Scalar::zero(self.n))
    }

    /// Non-zero entries as (row, col, value), column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.cols.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |(i, v)| (i, j, v)))
    }

    pub fn apply(&self, x: &SVec) -> SVec {
        let mut acc = Acc::new(self.n);
        for (j, v) in x.iter() {
            acc.add_svec(&self.cols[j], v);
        }
        acc.into_svec()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinMap) -> LinMap {
        assert_eq!(other.dst, self.src, "composition shape mismatch");
        let cols = par::map_range(other.src, |j| self.apply(&other.cols[j]));
        LinMap::from_cols(other.src, self.dst, self.n, cols)
    }

    pub fn pow(&self, k: u32) -> LinMap {
        assert_eq!(self.src, self.dst);
        let mut acc = LinMap::identity(self.src, self.n);
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }

    pub fn add(&self, o: &LinMap) -> LinMap {
        assert!(self.src == o.src && self.dst == o.dst);
        let cols = self.cols.iter().zip(&o.cols).map(|(a, b)| a.add(b)).collect();
        LinMap::from_cols(self.src, self.dst, self.n, cols)
    }

    pub fn scale(&self, c: &Scalar) -> LinMap {
        LinMap::from_cols(self.src, self.dst, self.n, self.cols.iter().map(|v| v.scale(c)).collect())
    }

    pub fn transpose(&self) -> LinMap {
        LinMap::from_cols(self.dst, self.src, self.n, linalg::transpose(&self.cols, self.dst))
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.cols, self.n)
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst && self.cols.iter().enumerate().all(|(j, c)| *c == SVec::basis(j, self.n))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SVec::is_zero)
    }

    pub fn inverse(&self) -> Result<LinMap, TensorError> {
        if self.src != self.dst {
            return Err(TensorError::DimMismatch);
        }
        let cols = linalg::inverse_cols(&self.cols, self.n).ok_or(TensorError::NotInvertible)?;
        Ok(LinMap::from_cols(self.src, self.dst, self.n, cols))
    }

    /// Kernel basis.
    pub fn kernel(&self) -> Vec<SVec> {
        let rows = linalg::transpose(&self.cols, self.dst);
        linalg::nullspace(&rows, self.src, self.n)
    }

    /// Kronecker product, row-major on both sides.
    pub fn kron(&self, o: &LinMap) -> LinMap {
        let mut cols = Vec::with_capacity(self.src * o.src);
        for a in &self.cols {
            for b in &o.cols {
                let mut e = Vec::with_capacity(a.len() * b.len());
                for (i, x) in a.iter() {
                    for (k, y) in b.iter() {
                        e.push((i * o.dst + k, x * y));
                    }
                }
                cols.push(SVec { e });
            }
        }
        LinMap::from_cols(self.src * o.src, self.dst * o.dst, self.n, cols)
    }

    /// First (row, col) where the two maps differ.
    pub fn first_diff(&self, o: &LinMap) -> Option<[usize; 2]> {
        if self.src != o.src || self.dst != o.dst {
            return Some([usize::MAX, usize::MAX]);
        }
        for (j, (a, b)) in self.cols.iter().zip(&o.cols).enumerate() {
            if a != b {
                let d = a.sub(b);
                let i = d.iter().next().map(|(i, _)| i).unwrap_or(0);
                return Some([i, j]);
            }
        }
        None
    }
}
