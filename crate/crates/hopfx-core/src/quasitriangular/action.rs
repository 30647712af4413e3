//! H^e = H^coop ⊗ H and its left action on the dual,
//! ((x⊗y)▷f)(z) = f(S⁻¹(x)·z·y).

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::hopf::{dual_hopf, HopfData};
use crate::par;
use crate::report::Report;
use crate::tensorcore::{Acc, Algebra, AlgebraData, LinMap, SVec};

/// Action matrices of the basis of H⊗H on the dual basis. Column i of
/// `act[a·d + b]` is (e_a⊗e_b)▷e^i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualAction {
    pub d: usize,
    pub n: u32,
    pub act: Vec<LinMap>,
}

impl DualAction {
    pub fn basis(&self, a: usize, b: usize) -> &LinMap {
        &self.act[a * self.d + b]
    }

    /// Matrix of x▷ for x ∈ H⊗H (flattened).
    pub fn matrix(&self, x: &SVec) -> LinMap {
        let mut acc: Vec<Acc> = (0..self.d).map(|_| Acc::new(self.n)).collect();
        for (p, c) in x.iter() {
            for (i, col) in self.act[p].cols.iter().enumerate() {
                acc[i].add_svec(col, c);
            }
        }
        LinMap::from_cols(self.d, self.d, self.n, acc.into_iter().map(Acc::into_svec).collect())
    }

    pub fn apply(&self, x: &SVec, f: &SVec) -> SVec {
        let mut acc = Acc::new(self.n);
        for (p, c) in x.iter() {
            for (i, fi) in f.iter() {
                acc.add_svec(&self.act[p].cols[i], &(c * fi));
            }
        }
        acc.into_svec()
    }

    /// Σ_{(a,b)} x_{ab} act[ab] weighted by an element's terms, grouped:
    /// returns for each first pair (a,b) the map Σ_{c,e} x[a,b,c,e]·act[ce].
    pub fn grouped(&self, x: &crate::tensorcore::LegElement) -> Vec<(usize, LinMap)> {
        let d = self.d;
        let mut groups: alloc::collections::BTreeMap<usize, Vec<(usize, crate::exactfield::Scalar)>> =
            alloc::collections::BTreeMap::new();
        for (idx, v) in x.terms() {
            groups.entry(idx[0] * d + idx[1]).or_default().push((idx[2] * d + idx[3], v.clone()));
        }
        let items: Vec<(usize, Vec<(usize, crate::exactfield::Scalar)>)> = groups.into_iter().collect();
        par::map_range(items.len(), |t| {
            let (ab, terms) = &items[t];
            (*ab, self.matrix(&SVec::from_pairs(self.n, terms.iter().cloned())))
        })
    }
}

/// The action ((x⊗y)▷f)(z) = f(S⁻¹(x) z y) of H^e on H*.
pub fn he_action_on_dual(h: &HopfData) -> Result<DualAction, Error> {
    let d = h.dim();
    let n = h.conductor();
    let si = h.antipode_inv().ok_or_else(|| Error::NotInvertible("antipode".into()))?;
    // rows[a][u] = S⁻¹(e_a)·e_u
    let left: Vec<SVec> = par::map_range(d * d, |p| h.alg.mul(&si.cols[p / d], &SVec::basis(p % d, n)));
    let act = par::map_range(d * d, |p| {
        let (a, b) = (p / d, p % d);
        let mut entries = Vec::new();
        for u in 0..d {
            let y = h.alg.mul(&left[a * d + u], &SVec::basis(b, n));
            for (i, v) in y.iter() {
                entries.push((u, i, v.clone()));
            }
        }
        LinMap::from_entries(d, d, n, entries)
    });
    Ok(DualAction { d, n, act })
}

/// H^coop ⊗ H: componentwise product, Δ(x⊗y) = (x₂⊗y₁)⊗(x₁⊗y₂),
/// antipode S⁻¹⊗S.
pub fn build_he(h: &HopfData) -> Result<HopfData, Error> {
    let d = h.dim();
    let n = h.conductor();
    let dd = d * d;
    let si = h.antipode_inv().ok_or_else(|| Error::NotInvertible("antipode".into()))?;
    let kron2 = |x: &SVec, y: &SVec| {
        let mut e = Vec::with_capacity(x.len() * y.len());
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                e.push((i * d + j, a * b));
            }
        }
        SVec::from_pairs(n, e)
    };
    let unit = kron2(h.unit_vec(), h.unit_vec());
    let alg = AlgebraData::from_fn(n, dd, unit, |p, q| {
        kron2(&h.alg.mult[(p / d) * d + q / d], &h.alg.mult[(p % d) * d + q % d])
    });
    let comult = par::map_range(dd, |p| {
        let (a, b) = (p / d, p % d);
        let mut acc = Acc::new(n);
        for (s, x) in h.comult[a].iter() {
            let (a1, a2) = (s / d, s % d);
            for (t, y) in h.comult[b].iter() {
                let (b1, b2) = (t / d, t % d);
                acc.add((a2 * d + b1) * dd + a1 * d + b2, &(x * y));
            }
        }
        acc.into_svec()
    });
    let counit = (0..dd).map(|p| &h.counit[p / d] * &h.counit[p % d]).collect();
    let antipode = si.kron(&h.antipode);
    Ok(HopfData::new(alg, comult, counit, antipode)?)
}

/// Module axioms for the H^e action and the module-algebra property for the
/// plain dual product: x▷(fg) = Σ (x₍₁₎▷f)(x₍₂₎▷g).
pub fn check_dual_action(h: &HopfData, act: &DualAction) -> Report {
    let d = h.dim();
    let n = h.conductor();
    let mut rep = Report::new();
    let he = match build_he(h) {
        Ok(he) => he,
        Err(_) => {
            rep.pass("module", false);
            return rep;
        }
    };
    let m = crate::hopf::ModuleData { dim: d, act: act.act.clone() };
    rep.record("module", m.check(&he));
    let dual = dual_hopf(h);
    let fail = par::find_first(d * d, |p| {
        let lhs_map = &act.act[p];
        let dp = &he.comult[p];
        for i in 0..d {
            for j in 0..d {
                let lhs = lhs_map.apply(&dual.alg.mult[i * d + j]);
                let mut acc = Acc::new(n);
                for (s, c) in dp.iter() {
                    let (x1, x2) = (s / (d * d), s % (d * d));
                    let prod = dual.alg.mul(&act.act[x1].cols[i], &act.act[x2].cols[j]);
                    acc.add_svec(&prod, c);
                }
                if acc.into_svec() != lhs {
                    return Some(vec![p / d, p % d, i, j]);
                }
            }
        }
        None
    });
    rep.record("module_algebra", fail);
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Scalar;
    use crate::hopf::{cyclic_table, example_drinfeld_double, example_group_algebra, example_sweedler, validate_hopf};

    #[test]
    fn unit_acts_trivially_and_z2_example() {
        let h = example_group_algebra(&cyclic_table(2), 1).unwrap();
        let a = he_action_on_dual(&h).unwrap();
        assert!(a.basis(0, 0).is_identity());
        // (g⊗g)▷δ_g = δ_g
        assert_eq!(a.basis(1, 1).apply(&SVec::basis(1, 1)), SVec::basis(1, 1));
    }

    #[test]
    fn he_dims_and_validity() {
        let h = example_group_algebra(&cyclic_table(2), 1).unwrap();
        assert_eq!(build_he(&h).unwrap().dim(), 4);
        let (h4, _) = example_sweedler(&Scalar::one(1));
        let he = build_he(&h4).unwrap();
        assert_eq!(he.dim(), 16);
        assert!(validate_hopf(&he).all_pass());
        let (dz2, _) = example_drinfeld_double(&cyclic_table(2), 1).unwrap();
        assert!(validate_hopf(&build_he(&dz2).unwrap()).all_pass());
    }

    #[test]
    fn action_is_module_algebra() {
        let (h4, _) = example_sweedler(&Scalar::one(1));
        let a = he_action_on_dual(&h4).unwrap();
        let rep = check_dual_action(&h4, &a);
        assert!(rep.all_pass(), "{:?}", rep.failures().collect::<Vec<_>>());
    }
}
