//! Exact sparse Gaussian elimination.
//!
//! Rows are inserted one at a time and reduced against the pivots found so
//! far; each stored pivot row is normalized to a leading 1. Pivot order is the
//! insertion order, so results do not depend on anything but the input.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::svec::SVec;
use crate::exactfield::Scalar;

#[derive(Clone, Debug)]
pub struct Echelon {
    n: u32,
    /// pivot column -> row whose first entry is (pivot, 1)
    pivots: BTreeMap<usize, SVec>,
}

impl Echelon {
    pub fn new(n: u32) -> Self {
        Echelon { n, pivots: BTreeMap::new() }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_cols(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Eliminate all pivot columns from `row`.
    pub fn reduce(&self, row: &SVec) -> SVec {
        let mut m: BTreeMap<usize, Scalar> = row.e.iter().cloned().collect();
        let mut from = 0usize;
        loop {
            let hit = m.range(from..).find(|(c, _)| self.pivots.contains_key(c)).map(|(c, v)| (*c, v.clone()));
            let Some((c, coef)) = hit else { break };
            let prow = &self.pivots[&c];
            for (k, v) in prow.iter() {
                let t = &coef * v;
                match m.get_mut(&k) {
                    Some(s) => *s -= &t,
                    None => {
                        m.insert(k, -t);
                    }
                }
            }
            m.retain(|_, v| !v.is_zero());
            from = c + 1;
        }
        SVec { e: m.into_iter().collect() }
    }

    /// Insert a row; returns true when it was independent of the previous ones.
    pub fn insert(&mut self, row: &SVec) -> bool {
        let r = self.reduce(row);
        let Some(&(c, ref lead)) = r.e.first() else { return false };
        let inv = lead.inv();
        self.pivots.insert(c, r.scale(&inv));
        true
    }

    /// Back-substitute so that every pivot column is zero in all other rows.
    pub fn make_reduced(&mut self) {
        let cols: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for &c in &cols {
            let prow = self.pivots[&c].clone();
            let targets: Vec<usize> = self.pivots.range(..c).map(|(k, _)| *k).collect();
            for t in targets {
                let row = self.pivots.get_mut(&t).unwrap();
                if let Some(f) = row.get(c).cloned() {
                    *row = row.sub(&prow.scale(&f));
                }
            }
        }
    }

    pub fn row(&self, pivot: usize) -> Option<&SVec> {
        self.pivots.get(&pivot)
    }
}

/// Rank of a set of sparse rows (or columns — rank is the same).
pub fn rank(vectors: &[SVec], n: u32) -> usize {
    let mut ech = Echelon::new(n);
    for v in vectors {
        ech.insert(v);
    }
    ech.rank()
}

/// Basis of {y : Σ_j y_j · rows[i]_j = 0 for all i}, i.e. the kernel of the
/// matrix with the given rows, over `ncols` unknowns.
pub fn nullspace(rows: &[SVec], ncols: usize, n: u32) -> Vec<SVec> {
    let mut ech = Echelon::new(n);
    for r in rows {
        ech.insert(r);
    }
    ech.make_reduced();
    let mut out = Vec::new();
    for f in 0..ncols {
        if ech.pivots.contains_key(&f) {
            continue;
        }
        let mut pairs = alloc::vec![(f, Scalar::one(n))];
        for (p, row) in &ech.pivots {
            if let Some(v) = row.get(f) {
                pairs.push((*p, -v));
            }
        }
        out.push(SVec::from_pairs(n, pairs));
    }
    out
}

/// Transpose between row and column storage.
pub fn transpose(vs: &[SVec], other_dim: usize) -> Vec<SVec> {
    let mut out: Vec<Vec<(usize, Scalar)>> = alloc::vec![Vec::new(); other_dim];
    for (j, v) in vs.iter().enumerate() {
        for (i, x) in v.iter() {
            out[i].push((j, x.clone()));
        }
    }
    out.into_iter().map(|e| SVec { e }).collect()
}

/// Solve A y = b where A is given by its columns (each of length `nrows`).
/// Free variables are set to zero. `None` if inconsistent.
pub fn solve_cols(cols: &[SVec], nrows: usize, b: &SVec, n: u32) -> Option<SVec> {
    let ncols = cols.len();
    let mut rows = transpose(cols, nrows);
    for (i, v) in b.iter() {
        rows[i].e.push((ncols, v.clone()));
    }
    let mut ech = Echelon::new(n);
    for r in &rows {
        ech.insert(r);
    }
    if ech.pivots.contains_key(&ncols) {
        return None;
    }
    // back substitution from the last pivot
    let mut y: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (&c, row) in ech.pivots.iter().rev() {
        let mut v = row.get(ncols).cloned().unwrap_or_else(|| Scalar::zero(n));
        for (k, a) in row.iter() {
            if k > c && k < ncols {
                if let Some(yk) = y.get(&k) {
                    v -= &(a * yk);
                }
            }
        }
        if !v.is_zero() {
            y.insert(c, v);
        }
    }
    Some(SVec { e: y.into_iter().collect() })
}

/// Inverse of a square matrix given by columns; `None` if singular.
pub fn inverse_cols(cols: &[SVec], n: u32) -> Option<Vec<SVec>> {
    let d = cols.len();
    let mut rows = transpose(cols, d);
    for (i, r) in rows.iter_mut().enumerate() {
        r.e.push((d + i, Scalar::one(n)));
    }
    let mut ech = Echelon::new(n);
    for r in &rows {
        ech.insert(r);
    }
    if ech.pivots.len() != d || ech.pivots.keys().next_back().is_some_and(|&c| c >= d) {
        return None;
    }
    ech.make_reduced();
    // row i of the inverse sits in the augmented half of pivot row i
    let inv_rows: Vec<SVec> = (0..d)
        .map(|i| {
            let row = &ech.pivots[&i];
            SVec { e: row.iter().filter(|(k, _)| *k >= d).map(|(k, v)| (k - d, v.clone())).collect() }
        })
        .collect();
    Some(transpose(&inv_rows, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Scalar {
        Scalar::from_int(1, v)
    }

    fn col(xs: &[i64]) -> SVec {
        SVec::from_dense(&xs.iter().map(|&v| q(v)).collect::<Vec<_>>())
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = [col(&[1, 2, 3]), col(&[2, 4, 6]), col(&[0, 1, 1])];
        assert_eq!(rank(&rows, 1), 2);
    }

    #[test]
    fn solve_small_system() {
        // columns of [[2,1],[1,3]]
        let cols = [col(&[2, 1]), col(&[1, 3])];
        let y = solve_cols(&cols, 2, &col(&[3, 4]), 1).unwrap();
        assert_eq!(y.to_dense(2, 1), alloc::vec![q(1), q(1)]);
        let sing = [col(&[1, 1]), col(&[2, 2])];
        assert!(solve_cols(&sing, 2, &col(&[1, 0]), 1).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let cols = [col(&[0, 1, 0]), col(&[2, 0, 0]), col(&[1, 1, 1])];
        let inv = inverse_cols(&cols, 1).unwrap();
        // A·A⁻¹ e_j = e_j
        for (j, c) in inv.iter().enumerate() {
            let mut acc = super::super::svec::Acc::new(1);
            for (k, v) in c.iter() {
                acc.add_svec(&cols[k], v);
            }
            assert_eq!(acc.into_svec(), SVec::basis(j, 1));
        }
        assert!(inverse_cols(&[col(&[1, 1]), col(&[1, 1])], 1).is_none());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let rows = [col(&[1, 1, 0, 0]), col(&[0, 0, 1, -1])];
        let ker = nullspace(&rows, 4, 1);
        assert_eq!(ker.len(), 2);
        for k in &ker {
            for r in &rows {
                assert!(r.dot(k, 1).is_zero());
            }
        }
    }
}
