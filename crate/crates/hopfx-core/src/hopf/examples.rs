//! Built-in Hopf algebras: group algebras, Sweedler's algebra and Drinfeld
//! doubles. The quasitriangular ones come with their R-matrix as a two-leg
//! element.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{HopfData, HopfError};
use crate::exactfield::Scalar;
use crate::tensorcore::{Acc, Algebra, AlgebraData, LegElement, LinMap, SVec};

/// Cayley table: `mul[a*order + b]` is the index of a·b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub order: usize,
    pub mul: Vec<usize>,
}

impl GroupTable {
    pub fn new(order: usize, mul: Vec<usize>) -> Result<Self, HopfError> {
        let t = GroupTable { order, mul };
        t.check()?;
        Ok(t)
    }

    pub fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    fn check(&self) -> Result<usize, HopfError> {
        let g = self.order;
        if g == 0 || self.mul.len() != g * g || self.mul.iter().any(|&x| x >= g) {
            return Err(HopfError::NotAGroup(format!("table must be {g}×{g} with entries < {g}")));
        }
        let e = (0..g)
            .find(|&e| (0..g).all(|a| self.m(e, a) == a && self.m(a, e) == a))
            .ok_or_else(|| HopfError::NotAGroup("no identity".into()))?;
        for a in 0..g {
            if !(0..g).any(|b| self.m(a, b) == e && self.m(b, a) == e) {
                return Err(HopfError::NotAGroup(format!("element {a} has no inverse")));
            }
            for b in 0..g {
                for c in 0..g {
                    if self.m(self.m(a, b), c) != self.m(a, self.m(b, c)) {
                        return Err(HopfError::NotAGroup(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(e)
    }

    /// Same group with the identity relabelled to index 0 (swap with 0).
    pub fn normalized(&self) -> Result<GroupTable, HopfError> {
        let e = self.check()?;
        let sw = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let g = self.order;
        let mut mul = vec![0; g * g];
        for a in 0..g {
            for b in 0..g {
                mul[sw(a) * g + sw(b)] = sw(self.m(a, b));
            }
        }
        Ok(GroupTable { order: g, mul })
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.m(a, b) == 0).expect("normalized group")
    }
}

pub fn cyclic_table(m: usize) -> GroupTable {
    GroupTable { order: m, mul: (0..m * m).map(|p| (p / m + p % m) % m).collect() }
}

/// Symmetric group on k letters, permutations in lexicographic order (the
/// identity comes first); product is composition (a·b)(i) = a(b(i)).
pub fn symmetric_table(k: usize) -> GroupTable {
    let mut perms: Vec<Vec<usize>> = vec![(0..k).collect()];
    // next-permutation enumeration
    loop {
        let mut p = perms.last().unwrap().clone();
        let Some(i) = (1..k).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..k).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        perms.push(p);
    }
    let g = perms.len();
    let index = |q: &Vec<usize>| perms.iter().position(|p| p == q).unwrap();
    let mut mul = vec![0; g * g];
    for a in 0..g {
        for b in 0..g {
            let c: Vec<usize> = (0..k).map(|i| perms[a][perms[b][i]]).collect();
            mul[a * g + b] = index(&c);
        }
    }
    GroupTable { order: g, mul }
}

/// 𝕜[G] with grouplike basis; the identity becomes e_0.
pub fn example_group_algebra(table: &GroupTable, n: u32) -> Result<HopfData, HopfError> {
    let t = table.normalized()?;
    let g = t.order;
    let one = Scalar::one(n);
    let alg = AlgebraData::from_fn(n, g, SVec::basis(0, n), |a, b| SVec::basis(t.m(a, b), n));
    let comult = (0..g).map(|a| SVec::basis(a * g + a, n)).collect();
    let counit = vec![one; g];
    let antipode = LinMap::from_cols(g, g, n, (0..g).map(|a| SVec::basis(t.inv(a), n)).collect());
    HopfData::new(alg, comult, counit, antipode)
}

/// Sweedler's 4-dimensional algebra with basis {1, g, x, gx}, together with
/// the R-matrix R_λ. The field is the one λ lives in.
pub fn example_sweedler(lambda: &Scalar) -> (HopfData, LegElement) {
    let n = lambda.conductor();
    let q = |v: i64| Scalar::from_int(n, v);
    // index = a + 2b for g^a x^b
    let mult = |i: usize, j: usize| -> SVec {
        let (a, b, c, d) = (i & 1, i >> 1, j & 1, j >> 1);
        if b + d >= 2 {
            return SVec::new();
        }
        let sign = if b * c == 1 { -1 } else { 1 };
        SVec::from_pairs(n, [(((a + c) & 1) + 2 * (b + d), q(sign))])
    };
    let alg = AlgebraData::from_fn(n, 4, SVec::basis(0, n), mult);
    let t = |pairs: &[(usize, usize, i64)]| SVec::from_pairs(n, pairs.iter().map(|&(i, j, v)| (i * 4 + j, q(v))));
    let comult = vec![t(&[(0, 0, 1)]), t(&[(1, 1, 1)]), t(&[(2, 0, 1), (1, 2, 1)]), t(&[(3, 1, 1), (0, 3, 1)])];
    let counit = vec![q(1), q(1), q(0), q(0)];
    let antipode = LinMap::from_cols(
        4,
        4,
        n,
        vec![SVec::basis(0, n), SVec::basis(1, n), SVec::from_pairs(n, [(3, q(-1))]), SVec::basis(2, n)],
    );
    let h = HopfData::new(alg, comult, counit, antipode).expect("sweedler data is well formed");
    let half = Scalar::from_frac(n, 1, 2);
    let hl = &half * lambda;
    let mut terms: Vec<(Vec<usize>, Scalar)> = Vec::new();
    for (i, j, s) in [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, -1)] {
        terms.push((vec![i, j], &half * &q(s)));
    }
    for (i, j, s) in [(2, 2, 1), (2, 3, -1), (3, 2, 1), (3, 3, 1)] {
        terms.push((vec![i, j], &hl * &q(s)));
    }
    let r = LegElement::from_terms(n, vec![4, 4], terms).expect("indices in range");
    (h, r)
}

/// Re-base a quasitriangular pair so that the unit is e_0.
/// Both validators must accept a generated double; anything else is a bug
/// in the construction, not a property of the input.
fn checked_double((h, r): (HopfData, LegElement)) -> Result<(HopfData, LegElement), HopfError> {
    if let Some(c) = super::validate_hopf(&h).failures().next() {
        return Err(HopfError::InternalConventionError(format!("double fails {}", c.name)));
    }
    let q = crate::quasitriangular::QT::new(h, r)
        .map_err(|_| HopfError::InternalConventionError("double R not invertible".into()))?;
    if let Some(c) = crate::quasitriangular::validate_qt(&q).failures().next() {
        return Err(HopfError::InternalConventionError(format!("double fails {}", c.name)));
    }
    Ok((q.h, q.r))
}

fn normalize_pair(h: HopfData, r: LegElement) -> Result<(HopfData, LegElement), HopfError> {
    let (nh, pinv) = h.normalize_unit()?;
    let r = r.map_leg(0, &pinv).map_leg(1, &pinv);
    Ok((nh, r))
}

/// D(G) = 𝕜^G ⋈ 𝕜[G] with basis δ_g ⊗ h, re-based so that e_0 is the unit.
pub fn example_drinfeld_double(table: &GroupTable, n: u32) -> Result<(HopfData, LegElement), HopfError> {
    let t = table.normalized()?;
    let g = t.order;
    let d = g * g;
    let ix = |a: usize, h: usize| a * g + h;
    let one = Scalar::one(n);
    let unit = SVec::from_pairs(n, (0..g).map(|a| (ix(a, 0), one.clone())));
    let alg = AlgebraData::from_fn(n, d, unit, |p, q| {
        let (a, h) = (p / g, p % g);
        let (b, k) = (q / g, q % g);
        // δ_a h · δ_b k = [a = h b h⁻¹] δ_a hk
        if t.m(t.m(h, b), t.inv(h)) == a {
            SVec::basis(ix(a, t.m(h, k)), n)
        } else {
            SVec::new()
        }
    });
    let comult = (0..d)
        .map(|p| {
            let (a, h) = (p / g, p % g);
            SVec::from_pairs(n, (0..g).map(|x| (ix(x, h) * d + ix(t.m(t.inv(x), a), h), one.clone())))
        })
        .collect();
    let counit = (0..d).map(|p| if p / g == 0 { one.clone() } else { Scalar::zero(n) }).collect();
    let antipode = LinMap::from_cols(
        d,
        d,
        n,
        (0..d)
            .map(|p| {
                let (a, h) = (p / g, p % g);
                let hi = t.inv(h);
                SVec::basis(ix(t.m(t.m(hi, t.inv(a)), h), hi), n)
            })
            .collect(),
    );
    let h = HopfData::new(alg, comult, counit, antipode)?;
    // R = Σ_g (δ_g ⊗ e) ⊗ (Σ_a δ_a ⊗ g)
    let r = LegElement::from_terms(
        n,
        vec![d, d],
        (0..g).flat_map(|x| (0..g).map(move |a| (vec![ix(x, 0), ix(a, x)], Scalar::one(n)))),
    )?;
    normalize_pair(h, r).and_then(checked_double)
}

/// Drinfeld double D(A) = A^{*cop} ⋈ A of an arbitrary Hopf algebra, basis
/// e^i ⊗ e_a at index i·d + a, with R = Σ (ε ⊗ e_i) ⊗ (e^i ⊗ 1). Re-based so
/// that e_0 is the unit.
pub fn example_drinfeld_double_of(a: &HopfData) -> Result<(HopfData, LegElement), HopfError> {
    let n = a.conductor();
    let d = a.dim();
    let dd = d * d;
    let ix = |i: usize, x: usize| i * d + x;
    let si = a.antipode_inv().ok_or(HopfError::NotInvertible)?.clone();
    let basis = |i: usize| SVec::basis(i, n);
    // K[x][y][u] = S⁻¹(e_x) e_u e_y
    let k_tab: Vec<SVec> = crate::par::map_range(d * d * d, |p| {
        let (x, y, u) = (p / (d * d), (p / d) % d, p % d);
        a.alg.mul(&a.alg.mul(&si.cols[x], &basis(u)), &basis(y))
    });
    let ktab = |x: usize, y: usize, u: usize| &k_tab[(x * d + y) * d + u];
    // Δ²(e_x) over (x1, x2, x3)
    let d2: Vec<Vec<(usize, usize, usize, Scalar)>> = (0..d)
        .map(|x| {
            let mut acc = Acc::new(n);
            for (p, v) in a.comult[x].iter() {
                let (x1, x23) = (p / d, p % d);
                for (q, w) in a.comult[x23].iter() {
                    acc.add(x1 * dd + q, &(v * w));
                }
            }
            acc.into_svec().iter().map(|(p, v)| (p / dd, (p / d) % d, p % d, v.clone())).collect()
        })
        .collect();
    let unit = {
        let mut acc = Acc::new(n);
        for (i, e) in a.counit.iter().enumerate() {
            for (x, u) in a.unit_vec().iter() {
                acc.add(ix(i, x), &(e * u));
            }
        }
        acc.into_svec()
    };
    let alg = AlgebraData::from_fn(n, dd, unit.clone(), |p, q| {
        let (i, x) = (p / d, p % d);
        let (j, y) = (q / d, q % d);
        let mut acc = Acc::new(n);
        for (x1, x2, x3, v) in &d2[x] {
            // fun = Σ_u [S⁻¹(x3) e_u x1]_j e^u; left factor e^i·fun
            let mut f = Acc::new(n);
            for u in 0..d {
                if let Some(fu) = ktab(*x3, *x1, u).get(j) {
                    for k in 0..d {
                        if let Some(c) = a.comult[k].get(i * d + u) {
                            f.add(k, &(c * fu));
                        }
                    }
                }
            }
            let f = f.into_svec();
            let prod = &a.alg.mult[x2 * d + y];
            for (k, fk) in f.iter() {
                for (b, pb) in prod.iter() {
                    acc.add(ix(k, b), &(&(v * fk) * pb));
                }
            }
        }
        acc.into_svec()
    });
    let mut comult: Vec<Acc> = (0..dd).map(|_| Acc::new(n)).collect();
    for (jk, m) in a.alg.mult.iter().enumerate() {
        let (j, k) = (jk / d, jk % d);
        for (i, v) in m.iter() {
            for x in 0..d {
                for (p, w) in a.comult[x].iter() {
                    let (x1, x2) = (p / d, p % d);
                    comult[ix(i, x)].add(ix(k, x1) * dd + ix(j, x2), &(v * w));
                }
            }
        }
    }
    let unit_a = a.unit_vec();
    let counit: Vec<Scalar> = (0..dd)
        .map(|p| {
            let (i, x) = (p / d, p % d);
            let ui = unit_a.get(i).cloned().unwrap_or_else(|| Scalar::zero(n));
            &ui * &a.counit[x]
        })
        .collect();
    let eps_vec = SVec::from_dense(&a.counit);
    let tensor = |f: &SVec, x: &SVec| {
        let mut acc = Acc::new(n);
        for (i, u) in f.iter() {
            for (y, w) in x.iter() {
                acc.add(ix(i, y), &(u * w));
            }
        }
        acc.into_svec()
    };
    let antipode_cols = crate::par::map_range(dd, |p| {
        let (i, x) = (p / d, p % d);
        let left = tensor(&eps_vec, &a.antipode.cols[x]);
        // S*⁻¹(e^i) = Σ_j [S⁻¹ e_j]_i e^j
        let sf = SVec::from_pairs(n, (0..d).filter_map(|j| si.cols[j].get(i).map(|v| (j, v.clone()))));
        let right = tensor(&sf, unit_a);
        alg.mul(&left, &right)
    });
    let antipode = LinMap::from_cols(dd, dd, n, antipode_cols);
    let h = HopfData::new(alg, comult.into_iter().map(Acc::into_svec).collect(), counit, antipode)?;
    let r = LegElement::zero(n, vec![dd, dd]);
    let mut terms = Vec::new();
    for i in 0..d {
        let l = tensor(&eps_vec, &basis(i));
        let rr = tensor(&basis(i), unit_a);
        for (p, u) in l.iter() {
            for (q, w) in rr.iter() {
                terms.push((vec![p, q], u * w));
            }
        }
    }
    let r = r.add(&LegElement::from_terms(n, vec![dd, dd], terms)?);
    normalize_pair(h, r).and_then(checked_double)
}

#[cfg(test)]
mod tests {
    use super::super::validate_hopf;
    use super::*;

    #[test]
    fn symmetric_group_of_three() {
        let t = symmetric_table(3);
        assert_eq!(t.order, 6);
        assert!(GroupTable::new(6, t.mul.clone()).is_ok());
        // non-abelian
        assert!((0..6).any(|a| (0..6).any(|b| t.m(a, b) != t.m(b, a))));
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(matches!(GroupTable::new(2, vec![0, 1, 1, 1]), Err(HopfError::NotAGroup(_))));
        assert!(matches!(GroupTable::new(2, vec![0, 1, 1]), Err(HopfError::NotAGroup(_))));
    }

    #[test]
    fn identity_relabelled_to_zero() {
        // Z/2 with identity at index 1
        let t = GroupTable::new(2, vec![1, 0, 0, 1]).unwrap();
        let h = example_group_algebra(&t, 1).unwrap();
        assert_eq!(*h.unit_vec(), SVec::basis(0, 1));
        assert!(validate_hopf(&h).all_pass());
    }

    #[test]
    fn sweedler_is_hopf() {
        for l in [0, 1, -3] {
            let (h, _) = example_sweedler(&Scalar::from_int(1, l));
            let rep = validate_hopf(&h);
            assert!(rep.all_pass(), "{:?}", rep.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn group_doubles_are_hopf() {
        for t in [cyclic_table(2), cyclic_table(3), symmetric_table(3)] {
            let (h, _) = example_drinfeld_double(&t, 1).unwrap();
            assert_eq!(h.dim(), t.order * t.order);
            assert_eq!(*h.unit_vec(), SVec::basis(0, 1));
            assert!(validate_hopf(&h).all_pass());
        }
    }

    #[test]
    fn generic_double_of_sweedler_is_hopf() {
        let (a, _) = example_sweedler(&Scalar::zero(1));
        let (h, r) = example_drinfeld_double_of(&a).unwrap();
        assert_eq!(h.dim(), 16);
        let rep = validate_hopf(&h);
        assert!(rep.all_pass(), "{:?}", rep.failures().collect::<Vec<_>>());
        assert_eq!(r.arity(), 2);
    }
}
