//! Center, grouplike search and ribbon elements.
//!
//! A ribbon element has the form v = u·w with w grouplike and u·w central,
//! so the search runs over grouplikes inside u⁻¹Z(H): first the largest
//! subcoalgebra W of that space, then the characters of W* as common
//! eigenvectors of its structure matrices. Only grouplikes whose
//! coordinates are rational in the echelon basis of W are found.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::QT;
use crate::exactfield::poly::{char_poly, rational_roots};
use crate::exactfield::{Rational, Scalar};
use crate::hopf::HopfData;
use crate::report::Report;
use crate::tensorcore::linalg::{nullspace, solve_cols, transpose, Echelon};
use crate::tensorcore::{Algebra, LegElement, LinMap, SVec};

/// Basis of the center, as the kernel of z ↦ ([z, e_j])_j.
pub fn center(a: &dyn Algebra) -> Vec<SVec> {
    let d = a.dim();
    let n = a.conductor();
    let cols: Vec<SVec> = crate::par::map_range(d, |i| {
        let mut e = Vec::new();
        for j in 0..d {
            let c = a.mul_basis(i, j).sub(&a.mul_basis(j, i));
            e.extend(c.iter().map(|(k, v)| (j * d + k, v.clone())));
        }
        SVec::from_pairs(n, e)
    });
    LinMap::from_cols(d, d * d, n, cols).kernel()
}

/// Reduced echelon basis of a span: (pivot, row) pairs.
fn echelon_basis(vs: &[SVec], n: u32) -> Vec<(usize, SVec)> {
    let mut ech = Echelon::new(n);
    for v in vs {
        ech.insert(v);
    }
    ech.make_reduced();
    let pivots: Vec<usize> = ech.pivot_cols().collect();
    pivots.into_iter().map(|p| (p, ech.row(p).unwrap().clone())).collect()
}

/// Largest subcoalgebra contained in span(vs).
fn largest_subcoalgebra(h: &HopfData, vs: &[SVec]) -> Vec<SVec> {
    let d = h.dim();
    let n = h.conductor();
    let mut basis: Vec<SVec> = echelon_basis(vs, n).into_iter().map(|(_, r)| r).collect();
    loop {
        let mut ech = Echelon::new(n);
        for v in &basis {
            ech.insert(v);
        }
        // column a: reductions of every left and right slice of Δ(basis[a])
        let cols: Vec<SVec> = basis
            .iter()
            .map(|w| {
                let dw = h.delta(w);
                let mut left: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); d];
                let mut right: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); d];
                for (p, v) in dw.iter() {
                    left[p / d].push((p % d, v.clone()));
                    right[p % d].push((p / d, v.clone()));
                }
                let mut e = Vec::new();
                for (s, slices) in [left, right].into_iter().enumerate() {
                    for (i, sl) in slices.into_iter().enumerate() {
                        let red = ech.reduce(&SVec::from_pairs(n, sl));
                        e.extend(red.iter().map(|(k, v)| ((s * d + i) * d + k, v.clone())));
                    }
                }
                SVec::from_pairs(n, e)
            })
            .collect();
        let rows = transpose(&cols, 2 * d * d);
        let ker = nullspace(&rows, basis.len(), n);
        if ker.len() == basis.len() {
            return basis;
        }
        let next: Vec<SVec> = ker
            .iter()
            .map(|t| {
                let mut acc = crate::tensorcore::Acc::new(n);
                for (a, c) in t.iter() {
                    acc.add_svec(&basis[a], c);
                }
                acc.into_svec()
            })
            .collect();
        basis = echelon_basis(&next, n).into_iter().map(|(_, r)| r).collect();
        if basis.is_empty() {
            return basis;
        }
    }
}

fn abs_bound(m: &[Vec<Scalar>]) -> Rational {
    m.iter()
        .map(|row| row.iter().flat_map(|s| s.coeffs()).fold(Rational::ZERO, |acc, c| &acc + &c.abs()))
        .max()
        .unwrap_or(Rational::ZERO)
}

fn roots_of(m: &[Vec<Scalar>], n: u32) -> Vec<Rational> {
    rational_roots(&char_poly(m, n), Some(&abs_bound(m))).unwrap_or_default()
}

/// Kernel of (A − λI) restricted to span(k_basis), as new basis vectors.
fn restrict_eigen(a: &[Vec<Scalar>], lambda: &Scalar, k_basis: &[SVec], n: u32) -> Vec<SVec> {
    let m = a.len();
    let images: Vec<SVec> = k_basis
        .iter()
        .map(|k| {
            let dense = k.to_dense(m, n);
            let out: Vec<Scalar> = (0..m)
                .map(|c| {
                    let mut s = -(lambda * &dense[c]);
                    for (a_ca, t) in a[c].iter().zip(&dense) {
                        if !t.is_zero() {
                            s.add_mul(a_ca, t);
                        }
                    }
                    s
                })
                .collect();
            SVec::from_dense(&out)
        })
        .collect();
    let rows = transpose(&images, m);
    nullspace(&rows, k_basis.len(), n)
        .iter()
        .map(|s| {
            let mut acc = crate::tensorcore::Acc::new(n);
            for (i, c) in s.iter() {
                acc.add_svec(&k_basis[i], c);
            }
            acc.into_svec()
        })
        .collect()
}

/// All grouplike elements in span(vs) whose echelon coordinates are rational.
pub fn grouplikes_in(h: &HopfData, vs: &[SVec]) -> Vec<SVec> {
    let d = h.dim();
    let n = h.conductor();
    let w = largest_subcoalgebra(h, vs);
    if w.is_empty() {
        return Vec::new();
    }
    let eb = echelon_basis(&w, n);
    let m = eb.len();
    let piv: Vec<usize> = eb.iter().map(|(p, _)| *p).collect();
    // ls[b][c][a] = coefficient of w_b ⊗ w_c in Δ(w_a)
    let deltas: Vec<SVec> = eb.iter().map(|(_, r)| h.delta(r)).collect();
    let ls: Vec<Vec<Vec<Scalar>>> = (0..m)
        .map(|b| {
            (0..m)
                .map(|c| {
                    (0..m)
                        .map(|a| deltas[a].get(piv[b] * d + piv[c]).cloned().unwrap_or_else(|| Scalar::zero(n)))
                        .collect()
                })
                .collect()
        })
        .collect();
    let eps: Vec<Scalar> = eb.iter().map(|(_, r)| h.eps(r)).collect();
    // a generic combination separates characters with distinct values
    let generic: Vec<Vec<Scalar>> = (0..m)
        .map(|c| {
            (0..m)
                .map(|a| {
                    let mut s = Scalar::zero(n);
                    for (b, l) in ls.iter().enumerate() {
                        s.add_mul(&Scalar::from_int(n, b as i64 + 1), &l[c][a]);
                    }
                    s
                })
                .collect()
        })
        .collect();
    let per_b: Vec<Vec<Rational>> = ls.iter().map(|l| roots_of(l, n)).collect();
    let unit_basis: Vec<SVec> = (0..m).map(|i| SVec::basis(i, n)).collect();
    let mut found: BTreeSet<Vec<(usize, Scalar)>> = BTreeSet::new();
    for mu in roots_of(&generic, n) {
        let space = restrict_eigen(&generic, &Scalar::from_rational(n, mu), &unit_basis, n);
        // branch on the eigenvalue of each L_b; t_b equals it
        let mut states: Vec<(Vec<SVec>, Vec<Scalar>)> = vec![(space, Vec::new())];
        for b in 0..m {
            let mut next = Vec::new();
            for (k, fixed) in &states {
                for lam in &per_b[b] {
                    let lam = Scalar::from_rational(n, lam.clone());
                    let k2 = restrict_eigen(&ls[b], &lam, k, n);
                    if k2.is_empty() {
                        continue;
                    }
                    let mut f2 = fixed.clone();
                    f2.push(lam);
                    // some t in span(k2) with t_0..t_b = f2?
                    let cols: Vec<SVec> = k2
                        .iter()
                        .map(|v| SVec::from_pairs(n, v.iter().filter(|(i, _)| *i <= b).map(|(i, x)| (i, x.clone()))))
                        .collect();
                    if solve_cols(&cols, b + 1, &SVec::from_dense(&f2), n).is_some() {
                        next.push((k2, f2));
                    }
                }
            }
            states = next;
        }
        for (_, t) in states {
            let ok_eps = t.iter().zip(&eps).fold(Scalar::zero(n), |mut s, (a, b)| {
                s.add_mul(a, b);
                s
            }) == Scalar::one(n);
            let ok = ok_eps
                && (0..m).all(|b| {
                    (0..m).all(|c| {
                        let mut s = Scalar::zero(n);
                        for a in 0..m {
                            s.add_mul(&t[a], &ls[b][c][a]);
                        }
                        s == &t[b] * &t[c]
                    })
                });
            if ok {
                let mut acc = crate::tensorcore::Acc::new(n);
                for (a, c) in t.iter().enumerate() {
                    acc.add_svec(&eb[a].1, c);
                }
                found.insert(acc.into_svec().iter().map(|(i, v)| (i, v.clone())).collect());
            }
        }
    }
    found.into_iter().map(|e| SVec::from_pairs(n, e)).collect()
}

/// The ribbon axioms for a candidate v.
pub fn check_ribbon(q: &QT, v: &SVec) -> Report {
    let h = &q.h;
    let n = q.conductor();
    let d = q.dim();
    let mut rep = Report::new();
    let central = (0..d).find(|&i| {
        let e = SVec::basis(i, n);
        h.alg.mul(v, &e) != h.alg.mul(&e, v)
    });
    rep.record("ribbon_central", central.map(|i| vec![i]));
    rep.pass("ribbon_square", h.alg.mul(v, v) == q.nu);
    rep.pass("ribbon_antipode", h.s(v) == *v);
    rep.pass("ribbon_counit", h.eps(v).is_one());
    let vl = LegElement::from_vec(n, d, v);
    let lhs = LegElement::from_flat(n, vec![d, d], &h.delta(v));
    let rhs = q.chain(&[&q.dinv, &vl.tensor(&vl)]);
    rep.record("ribbon_delta", lhs.first_diff(&rhs));
    rep
}

/// Search for a ribbon element; among all solutions found, return the one
/// whose sparse coefficient list (index, value) is lexicographically least.
pub fn find_ribbon(q: &QT) -> Option<SVec> {
    let h = &q.h;
    let uinv = h.inverse(&q.u).ok()?;
    let z = center(h);
    let v_space: Vec<SVec> = z.iter().map(|c| h.alg.mul(&uinv, c)).collect();
    let key = |v: &SVec| -> Vec<(usize, Scalar)> { v.iter().map(|(i, c)| (i, c.clone())).collect() };
    grouplikes_in(h, &v_space)
        .into_iter()
        .map(|w| h.alg.mul(&q.u, &w))
        .filter(|v| check_ribbon(q, v).all_pass())
        .min_by(|a, b| key(a).cmp(&key(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{
        cyclic_table, example_drinfeld_double, example_group_algebra, example_sweedler, symmetric_table,
    };

    #[test]
    fn center_of_commutative_and_sweedler() {
        let h = example_group_algebra(&cyclic_table(3), 1).unwrap();
        assert_eq!(center(&h).len(), 3);
        let (h4, _) = example_sweedler(&Scalar::one(1));
        // Z(H₄) = span{1}
        assert_eq!(center(&h4).len(), 1);
        let s3 = example_group_algebra(&symmetric_table(3), 1).unwrap();
        assert_eq!(center(&s3).len(), 3);
    }

    #[test]
    fn grouplikes_of_group_algebra() {
        let h = example_group_algebra(&symmetric_table(3), 1).unwrap();
        let all: Vec<SVec> = (0..6).map(|i| SVec::basis(i, 1)).collect();
        assert_eq!(grouplikes_in(&h, &all).len(), 6);
    }

    #[test]
    fn trivial_ribbon_is_unit() {
        let h = example_group_algebra(&cyclic_table(2), 1).unwrap();
        let q = QT::trivial(h).unwrap();
        assert_eq!(find_ribbon(&q), Some(SVec::basis(0, 1)));
    }

    #[test]
    fn group_double_has_ribbon() {
        let (h, r) = example_drinfeld_double(&cyclic_table(2), 1).unwrap();
        let q = QT::new(h, r).unwrap();
        let v = find_ribbon(&q).expect("D(Z/2) is ribbon");
        assert!(check_ribbon(&q, &v).all_pass());
    }
}
