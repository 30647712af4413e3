//! The k-twisted braided dual ~H_k: the dual space of H with product
//! x·y = m(F_k ▷ (x⊗y)), F_k = (D²⁴)^{-k} R⁴² R³² acting through H^e.
//! k = 0 is the reflection equation algebra.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::hopf::dual_hopf;
use crate::par;
use crate::quasitriangular::{he_action_on_dual, twist_k, DualAction, QT};
use crate::report::Report;
use crate::tensorcore::{check_algebra_map, Acc, Algebra, AlgebraData, LegElement, LinMap, SVec};

/// Seed for sampled associativity checks above the exhaustive threshold.
pub const ASSOC_SEED: u64 = 0x5eed_0001;

#[derive(Clone, Debug)]
pub struct BraidedDual {
    pub k: i32,
    pub alg: AlgebraData,
    /// The H^e action on H* that also acts on ~H_k.
    pub action: Arc<DualAction>,
}

impl BraidedDual {
    pub fn dim(&self) -> usize {
        self.alg.dim
    }
}

/// The twisted product table, unchecked.
pub fn twisted_product(q: &QT, act: &DualAction, k: i32) -> AlgebraData {
    let d = q.dim();
    let n = q.conductor();
    let dual = dual_hopf(&q.h);
    let groups = act.grouped(&twist_k(q, k).f);
    let unit = SVec::from_dense(&q.h.counit);
    let mult = par::map_range(d * d, |p| {
        let (i, j) = (p / d, p % d);
        let mut acc = Acc::new(n);
        for (ab, g) in &groups {
            let prod = dual.alg.mul(&act.act[*ab].cols[i], &g.cols[j]);
            acc.add_svec(&prod, &crate::exactfield::Scalar::one(n));
        }
        acc.into_svec()
    });
    AlgebraData { n, dim: d, mult, unit }
}

/// Build ~H_k and assert the unit law and associativity.
pub fn build_braided_dual(q: &QT, k: i32) -> Result<BraidedDual, Error> {
    let act = Arc::new(he_action_on_dual(&q.h)?);
    build_braided_dual_with(q, act, k)
}

/// As [`build_braided_dual`], reusing a precomputed action.
pub fn build_braided_dual_with(q: &QT, act: Arc<DualAction>, k: i32) -> Result<BraidedDual, Error> {
    let alg = twisted_product(q, &act, k);
    if let Some(i) = alg.check_unit() {
        return Err(Error::InternalConventionError(format!("~H_{k}: counit is not a unit at e^{i}")));
    }
    let gens: Vec<usize> = (0..alg.dim).collect();
    if let Some(t) = alg.check_associativity_scaled(&gens, ASSOC_SEED) {
        return Err(Error::InternalConventionError(format!("~H_{k}: associativity fails at {t:?}")));
    }
    Ok(BraidedDual { k, alg, action: act })
}

/// X = Σ e^i ⊗ e_i on legs (dual, H).
pub fn canonical_x(d: usize, n: u32) -> LegElement {
    let terms = (0..d).map(|i| (vec![i, i], crate::exactfield::Scalar::one(n)));
    LegElement::from_terms(n, vec![d, d], terms).expect("diagonal indices")
}

/// Leg algebras B ⊗ H^⊗m.
fn b_hs<'a>(b: &'a dyn Algebra, q: &'a QT, m: usize) -> Vec<&'a dyn Algebra> {
    let mut v: Vec<&dyn Algebra> = vec![b];
    v.extend(q.hs(m));
    v
}

/// X^{0,12} = D^k (R^{12})⁻¹ X^{0,2} R^{12} X^{0,1} and the reflection
/// equation R²¹X^{0,2}R¹²X^{0,1} = X^{0,1}R²¹X^{0,2}R¹² in B⊗H⊗H, for
/// any algebra B and element x ∈ B⊗H.
pub fn check_k_reflection(q: &QT, b: &dyn Algebra, x: &LegElement, k: i32) -> Report {
    let mut rep = Report::new();
    let algs = b_hs(b, q, 2);
    let on = |y: &LegElement, t: &[usize]| y.embed(t, &algs).expect("legs of B⊗H⊗H");
    let chain = |ys: &[&LegElement]| LegElement::product_chain(ys, &algs).expect("same legs");
    let x01 = on(x, &[0, 1]);
    let x02 = on(x, &[0, 2]);
    let r12 = on(&q.r, &[1, 2]);
    let r21 = on(&q.r, &[2, 1]);
    let r12i = on(&q.rinv, &[1, 2]);
    let dk = on(&q.d_pow(k), &[1, 2]);
    let lhs = x.substitute(1, &q.h.delta_images());
    let rhs = chain(&[&dk, &r12i, &x02, &r12, &x01]);
    rep.record("k_reflection", lhs.first_diff(&rhs));
    let re_l = chain(&[&r21, &x02, &r12, &x01]);
    let re_r = chain(&[&x01, &r21, &x02, &r12]);
    rep.record("reflection_equation", re_l.first_diff(&re_r));
    rep
}

/// An algebra isomorphism between twisted duals, f ↦ (c⊗1)▷f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftIso {
    pub map: LinMap,
    pub from: i32,
    pub to: i32,
}

/// The isomorphism given by acting with c⊗1, where c = ν for `step` 2 and
/// c = v (the ribbon element) for `step` 1. Multiplicativity decides
/// whether it maps ~H_k to ~H_{k−step} or to ~H_{k+step}.
pub fn shift_iso(q: &QT, act: &Arc<DualAction>, k: i32, step: u32) -> Result<ShiftIso, Error> {
    let c = match step {
        2 => q.nu.clone(),
        1 => q.ribbon.clone().ok_or(Error::NoRibbon)?,
        _ => return Err(Error::IsoCheckFailed(format!("unsupported step {step}"))),
    };
    let d = q.dim();
    let n = q.conductor();
    let elt = LegElement::from_vec(n, d, &c).tensor(&q.h.unit_leg()).to_flat();
    let map = act.matrix(&elt);
    if map.inverse().is_err() {
        return Err(Error::IsoCheckFailed(format!("shift by {step} is singular")));
    }
    let src = build_braided_dual_with(q, act.clone(), k)?;
    let s = step as i32;
    for to in [k - s, k + s] {
        let dst = build_braided_dual_with(q, act.clone(), to)?;
        if check_algebra_map(&map, &src.alg, &dst.alg).is_none() {
            return Ok(ShiftIso { map, from: k, to });
        }
    }
    Err(Error::IsoCheckFailed(format!("shift of ~H_{k} by {step} is not multiplicative in either direction")))
}

/// φ: H* → H, f ↦ (id⊗f)(D).
pub fn factorization_map(q: &QT) -> LinMap {
    let d = q.dim();
    let n = q.conductor();
    let entries = q.d.terms().map(|(idx, v)| (idx[0], idx[1], v.clone()));
    LinMap::from_entries(d, d, n, entries)
}

pub fn is_factorizable(q: &QT) -> bool {
    factorization_map(q).rank() == q.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Scalar;
    use crate::hopf::{cyclic_table, example_drinfeld_double, example_group_algebra, example_sweedler};
    use crate::quasitriangular::find_ribbon;

    fn h4(l: i64) -> QT {
        let (h, r) = example_sweedler(&Scalar::from_int(1, l));
        QT::new(h, r).unwrap()
    }

    fn dz2() -> QT {
        let (h, r) = example_drinfeld_double(&cyclic_table(2), 1).unwrap();
        QT::new(h, r).unwrap()
    }

    #[test]
    fn trivial_r_gives_plain_dual() {
        let h = example_group_algebra(&cyclic_table(2), 1).unwrap();
        let q = QT::trivial(h).unwrap();
        let dual = dual_hopf(&q.h);
        for k in [0, 1, 2] {
            let b = build_braided_dual(&q, k).unwrap();
            assert_eq!(b.alg.mult, dual.alg.mult);
            assert!(b.alg.is_commutative());
        }
    }

    #[test]
    fn sweedler_twisted_product_differs_from_dual() {
        let q = h4(1);
        let b = build_braided_dual(&q, 0).unwrap();
        let dual = dual_hopf(&q.h);
        assert!(!dual.alg.is_commutative());
        assert_ne!(b.alg.mult, dual.alg.mult);
        assert_eq!(b.alg.check_associativity(), None);
        // D = 1 for the triangular Sweedler structure, so ~H_k does not depend on k.
        assert_eq!(build_braided_dual(&q, 1).unwrap().alg.mult, b.alg.mult);
    }

    #[test]
    fn unit_is_counit() {
        let q = dz2();
        let b = build_braided_dual(&q, 1).unwrap();
        assert_eq!(b.alg.unit, SVec::from_dense(&q.h.counit));
    }

    #[test]
    fn reflection_on_fixtures() {
        for q in [h4(1), h4(0), dz2()] {
            let x = canonical_x(q.dim(), q.conductor());
            for k in [0, 1, 2] {
                let b = build_braided_dual(&q, k).unwrap();
                let rep = check_k_reflection(&q, &b.alg, &x, k);
                assert!(rep.all_pass(), "k = {k}: {:?}", rep.failures().collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn mismatched_k_fails() {
        let q = dz2();
        let b0 = build_braided_dual(&q, 0).unwrap();
        let x = canonical_x(4, 1);
        assert!(check_k_reflection(&q, &b0.alg, &x, 0).all_pass());
        assert!(!check_k_reflection(&q, &b0.alg, &x, 1).holds("k_reflection"));
    }

    #[test]
    fn shift_isomorphisms() {
        let q = h4(0);
        let act = Arc::new(he_action_on_dual(&q.h).unwrap());
        let s = shift_iso(&q, &act, 2, 2).unwrap();
        assert_eq!((s.from, s.to), (2, 0));

        let q = dz2();
        let v = find_ribbon(&q).unwrap();
        let q = q.with_ribbon(Some(v));
        let act = Arc::new(he_action_on_dual(&q.h).unwrap());
        let s = shift_iso(&q, &act, 1, 1).unwrap();
        assert_eq!(s.from, 1);
        assert!(s.to == 0 || s.to == 2);
        assert!(shift_iso(&q, &act, 0, 2).is_ok());
    }

    #[test]
    fn factorization_ranks() {
        let h = example_group_algebra(&cyclic_table(2), 1).unwrap();
        assert_eq!(factorization_map(&QT::trivial(h).unwrap()).rank(), 1);
        assert_eq!(factorization_map(&h4(0)).rank(), 1);
        assert!(is_factorizable(&dz2()));
    }

    #[test]
    fn phi_is_multiplicative_from_reflection_algebra() {
        for q in [h4(1), dz2()] {
            let b = build_braided_dual(&q, 0).unwrap();
            let phi = factorization_map(&q);
            assert_eq!(check_algebra_map(&phi, &b.alg, &q.h.alg), None);
        }
    }
}
