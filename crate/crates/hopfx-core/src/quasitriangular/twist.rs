//! Twists of H^e = H^coop ⊗ H, stored on four H-legs (the first H^e factor
//! on legs 0,1, the second on legs 2,3).

use alloc::vec;

use super::{he_coproduct, DualAction, QT};
use crate::error::Error;
use crate::report::Report;
use crate::tensorcore::{LegElement, LinMap, SVec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistData {
    pub f: LegElement,
}

/// R¹³R¹⁴ in 1-based leg notation.
pub fn r13r14_twist(q: &QT) -> TwistData {
    TwistData { f: q.chain(&[&q.on(&q.r, &[0, 2], 4), &q.on(&q.r, &[0, 3], 4)]) }
}

/// The twist that defines the k-twisted braided dual:
/// F_k = (D²⁴)^{-k} R⁴² R³² (1-based legs).
pub fn twist_k(q: &QT, k: i32) -> TwistData {
    let dk = q.on(&q.d_pow(-k), &[1, 3], 4);
    let r42 = q.on(&q.r, &[3, 1], 4);
    let r32 = q.on(&q.r, &[2, 1], 4);
    TwistData { f: q.chain(&[&dk, &r42, &r32]) }
}

/// Cocycle F^{12,3}F^{1,2} = F^{1,23}F^{2,3} over the H^e coproduct, and the
/// counit normalisations (ε⊗id)F = 1 = (id⊗ε)F.
pub fn check_twist(q: &QT, t: &TwistData) -> Report {
    let mut rep = Report::new();
    let f = &t.f;
    let cop = he_coproduct(&q.h);
    let lhs = q.chain(&[&cop.apply(f, 0), &q.on(f, &[0, 1, 2, 3], 6)]);
    let rhs = q.chain(&[&cop.apply(f, 2), &q.on(f, &[2, 3, 4, 5], 6)]);
    rep.record("cocycle", lhs.first_diff(&rhs));
    let unit2 = q.h.unit_leg().tensor(&q.h.unit_leg());
    let left = q.h.eps_on_leg(&q.h.eps_on_leg(f, 0), 0);
    let right = q.h.eps_on_leg(&q.h.eps_on_leg(f, 3), 2);
    rep.record("counit_left", left.first_diff(&unit2));
    rep.record("counit_right", right.first_diff(&unit2));
    rep.pass("invertible", f.inverse(&q.hs(4)).is_ok());
    rep
}

/// The map f ↦ x▷f for an equivalence element x ∈ H^e (invertible with
/// ε(x) = 1).
pub fn twist_equiv_map(q: &QT, act: &DualAction, x: &SVec) -> Result<LinMap, Error> {
    let n = q.conductor();
    let d = q.dim();
    let xe = LegElement::from_flat(n, vec![d, d], x);
    xe.inverse(&q.hs(2)).map_err(|_| Error::NotInvertible("equivalence element".into()))?;
    let eps = q.h.eps_on_leg(&q.h.eps_on_leg(&xe, 0), 0);
    if eps != LegElement::scalar(crate::exactfield::Scalar::one(n)) {
        return Err(Error::PreconditionFailed { check: "counit".into(), witness: None });
    }
    Ok(act.matrix(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Scalar;
    use crate::hopf::{cyclic_table, example_drinfeld_double, example_group_algebra, example_sweedler};

    #[test]
    fn unit_is_a_twist() {
        let h = example_group_algebra(&cyclic_table(2), 1).unwrap();
        let q = QT::trivial(h).unwrap();
        let one = LegElement::unit(&q.hs(4));
        assert!(check_twist(&q, &TwistData { f: one }).all_pass());
    }

    #[test]
    fn twists_on_fixtures() {
        let (h4, r) = example_sweedler(&Scalar::one(1));
        let q = QT::new(h4, r).unwrap();
        let rep = check_twist(&q, &r13r14_twist(&q));
        assert!(rep.all_pass(), "{:?}", rep.failures().collect::<alloc::vec::Vec<_>>());
        for k in [0, 1, 2] {
            assert!(check_twist(&q, &twist_k(&q, k)).all_pass(), "k = {k}");
        }
        let (dz, r) = example_drinfeld_double(&cyclic_table(2), 1).unwrap();
        let q = QT::new(dz, r).unwrap();
        for k in [0, 1, 2] {
            assert!(check_twist(&q, &twist_k(&q, k)).all_pass(), "k = {k}");
        }
    }

    #[test]
    fn equivalence_by_nu() {
        let (h4, r) = example_sweedler(&Scalar::one(1));
        let q = QT::new(h4, r).unwrap();
        let act = super::super::he_action_on_dual(&q.h).unwrap();
        let x = LegElement::from_vec(1, 4, &q.nu).tensor(&q.h.unit_leg()).to_flat();
        let m = twist_equiv_map(&q, &act, &x).unwrap();
        assert!(m.inverse().is_ok());
        let zero = SVec::new();
        assert!(twist_equiv_map(&q, &act, &zero).is_err());
    }
}
