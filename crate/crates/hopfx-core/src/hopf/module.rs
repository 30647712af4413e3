//! Finite-dimensional left modules, stored as one matrix per basis element.

use alloc::vec::Vec;

use crate::tensorcore::{Algebra, LinMap, SVec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleData {
    pub dim: usize,
    /// `act[i]` is the matrix of e_i ▷ −.
    pub act: Vec<LinMap>,
}

impl ModuleData {
    pub fn regular(a: &dyn Algebra) -> Self {
        let d = a.dim();
        let n = a.conductor();
        let act = (0..d).map(|i| a.left_mult(&SVec::basis(i, n))).collect();
        ModuleData { dim: d, act }
    }

    /// Action of an arbitrary element.
    pub fn rho(&self, x: &SVec, n: u32) -> LinMap {
        let mut out = LinMap::zero(self.dim, self.dim, n);
        for (i, c) in x.iter() {
            out = out.add(&self.act[i].scale(c));
        }
        out
    }

    /// First failure of the module axioms: `[i]` if the unit does not act as
    /// the identity on e_i's row, `[i, j]` if ρ(e_i e_j) ≠ ρ(e_i)ρ(e_j).
    pub fn check(&self, a: &dyn Algebra) -> Option<Vec<usize>> {
        let n = a.conductor();
        let d = a.dim();
        if self.act.len() != d {
            return Some(Vec::new());
        }
        if !self.rho(&a.unit(), n).is_identity() {
            return Some(alloc::vec![usize::MAX]);
        }
        crate::par::find_first(d * d, |p| {
            let (i, j) = (p / d, p % d);
            let lhs = self.rho(&a.mul_basis(i, j), n);
            (lhs != self.act[i].compose(&self.act[j])).then(|| alloc::vec![i, j])
        })
    }
}
