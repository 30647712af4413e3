//! Representations of the punctured-torus braid group on M ⊗ V^⊗n, with M a
//! module over an algebra B carrying (X, Y) and V an H-module.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::exactfield::Scalar;
use crate::hopf::ModuleData;
use crate::par;
use crate::quasitriangular::QT;
use crate::report::Report;
use crate::tensorcore::{Acc, Algebra, LegElement, LinMap, SVec};

/// How σ_i is formed from R.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaVariant {
    /// flip ∘ ρ(R^{i,i+1})
    Standard,
    /// ρ(R^{i,i+1}) without the flip
    NoFlip,
}

#[derive(Clone, Debug)]
pub struct BraidRep {
    pub n: usize,
    /// Dimensions of the tensor legs M, V, …, V.
    pub dims: Vec<usize>,
    pub x: Vec<LinMap>,
    pub y: Vec<LinMap>,
    pub sigma: Vec<LinMap>,
}

impl BraidRep {
    pub fn dim(&self) -> usize {
        self.dims.iter().product()
    }
}

fn strides(dims: &[usize]) -> Vec<usize> {
    let mut st = vec![1; dims.len()];
    for l in (0..dims.len().saturating_sub(1)).rev() {
        st[l] = st[l + 1] * dims[l + 1];
    }
    st
}

/// The operator of `elem` acting on the tensor legs `legs` of the space
/// with leg modules `mods` (identity on the others).
pub fn leg_operator(elem: &LegElement, legs: &[usize], mods: &[&ModuleData], n: u32) -> LinMap {
    let dims: Vec<usize> = mods.iter().map(|m| m.dim).collect();
    let st = strides(&dims);
    let total: usize = dims.iter().product();
    let terms: Vec<(Vec<usize>, Scalar)> = elem.terms().map(|(i, v)| (i, v.clone())).collect();
    let cols = par::map_range(total, |col| {
        let digits: Vec<usize> = (0..dims.len()).map(|l| (col / st[l]) % dims[l]).collect();
        let base: usize = col - legs.iter().map(|&l| digits[l] * st[l]).sum::<usize>();
        let mut acc = Acc::new(n);
        for (idx, c) in &terms {
            let mut cur: Vec<(usize, Scalar)> = vec![(base, c.clone())];
            for (t, &l) in legs.iter().enumerate() {
                let v = &mods[l].act[idx[t]].cols[digits[l]];
                let mut next = Vec::with_capacity(cur.len() * v.len());
                for (off, a) in &cur {
                    for (i, b) in v.iter() {
                        next.push((off + i * st[l], a * b));
                    }
                }
                cur = next;
                if cur.is_empty() {
                    break;
                }
            }
            for (k, v) in &cur {
                acc.add(*k, v);
            }
        }
        acc.into_svec()
    });
    LinMap::from_cols(total, total, n, cols)
}

/// Swap tensor legs `a` and `a+1`.
pub fn flip_operator(dims: &[usize], a: usize, n: u32) -> LinMap {
    let st = strides(dims);
    let total: usize = dims.iter().product();
    let mut swapped = dims.to_vec();
    swapped.swap(a, a + 1);
    let st2 = strides(&swapped);
    let cols = (0..total)
        .map(|col| {
            let mut digits: Vec<usize> = (0..dims.len()).map(|l| (col / st[l]) % dims[l]).collect();
            digits.swap(a, a + 1);
            let k: usize = digits.iter().zip(&st2).map(|(d, s)| d * s).sum();
            SVec::basis(k, n)
        })
        .collect();
    LinMap::from_cols(total, total, n, cols)
}

fn compose_all(ops: &[&LinMap]) -> LinMap {
    let mut it = ops.iter();
    let mut acc = (*it.next().expect("nonempty")).clone();
    for o in it {
        acc = acc.compose(o);
    }
    acc
}

/// Operators for X_j, Y_j (j = 1..n) and σ_i on M⊗V^⊗n. σ_i = flip∘ρ(R)
/// on V-legs i, i+1; X_1 = ρ(X) on legs (M, V_1) and
/// X_j = R^{j,j−1}⋯R^{j,1} X^{0,j} R^{1,j}⋯R^{j−1,j}, likewise Y_j.
#[allow(clippy::too_many_arguments)]
pub fn build_braid_rep(
    q: &QT,
    b: &dyn Algebra,
    x: &LegElement,
    y: &LegElement,
    m: &ModuleData,
    v: &ModuleData,
    n: usize,
    variant: SigmaVariant,
) -> Result<BraidRep, Error> {
    if n == 0 || v.dim != q.dim() || m.act.len() != b.dim() {
        return Err(Error::DimMismatch);
    }
    if let Some(w) = m.check(b) {
        return Err(Error::ModuleAxiomFailed { witness: w });
    }
    if let Some(w) = v.check(&q.h) {
        return Err(Error::ModuleAxiomFailed { witness: w });
    }
    let c = q.conductor();
    let mut mods: Vec<&ModuleData> = vec![m];
    mods.extend(core::iter::repeat(v).take(n));
    let dims: Vec<usize> = mods.iter().map(|md| md.dim).collect();
    let r_op = |i: usize, j: usize| leg_operator(&q.r, &[i, j], &mods, c);
    let sigma: Vec<LinMap> = (1..n)
        .map(|i| {
            let r = r_op(i, i + 1);
            match variant {
                SigmaVariant::Standard => flip_operator(&dims, i, c).compose(&r),
                SigmaVariant::NoFlip => r,
            }
        })
        .collect();
    let dressed = |z: &LegElement| -> Vec<LinMap> {
        (1..=n)
            .map(|j| {
                let left: Vec<LinMap> = (1..j).rev().map(|i| r_op(j, i)).collect();
                let right: Vec<LinMap> = (1..j).map(|i| r_op(i, j)).collect();
                let core = leg_operator(z, &[0, j], &mods, c);
                let mut ops: Vec<&LinMap> = left.iter().collect();
                ops.push(&core);
                ops.extend(right.iter());
                compose_all(&ops)
            })
            .collect()
    };
    Ok(BraidRep { n, dims, x: dressed(x), y: dressed(y), sigma })
}

fn diff(a: &LinMap, b: &LinMap) -> Option<Vec<usize>> {
    a.first_diff(b).map(|w| w.to_vec())
}

/// Every relation of the presentation as an exact matrix identity.
pub fn check_presentation(rep: &BraidRep) -> Report {
    let mut out = Report::new();
    let n = rep.n;
    let pairs = |ops: &[LinMap]| -> Option<Vec<usize>> {
        for i in 0..n {
            for j in i + 1..n {
                if let Some(mut w) = diff(&ops[i].compose(&ops[j]), &ops[j].compose(&ops[i])) {
                    w.splice(0..0, [i + 1, j + 1]);
                    return Some(w);
                }
            }
        }
        None
    };
    out.record("X_commute", pairs(&rep.x));
    out.record("Y_commute", pairs(&rep.y));
    let s = &rep.sigma;
    let mut braid = None;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            let (l, r) = if j == i + 1 {
                (compose_all(&[&s[i], &s[j], &s[i]]), compose_all(&[&s[j], &s[i], &s[j]]))
            } else {
                (s[i].compose(&s[j]), s[j].compose(&s[i]))
            };
            if braid.is_none() {
                braid = diff(&l, &r).map(|mut w| {
                    w.splice(0..0, [i + 1, j + 1]);
                    w
                });
            }
        }
    }
    out.record("braid", braid);
    let conj = |ops: &[LinMap]| -> Option<Vec<usize>> {
        (0..s.len()).find_map(|i| {
            diff(&ops[i + 1], &compose_all(&[&s[i], &ops[i], &s[i]])).map(|mut w| {
                w.insert(0, i + 1);
                w
            })
        })
    };
    out.record("X_conjugation", conj(&rep.x));
    out.record("Y_conjugation", conj(&rep.y));
    if n >= 2 {
        let lhs = rep.x[0].compose(&rep.y[1]);
        let rhs = compose_all(&[&rep.y[1], &rep.x[0], &s[0], &s[0]]);
        out.record("cross", diff(&lhs, &rhs));
    }
    out
}
