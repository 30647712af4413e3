//! The four-leg element T = (R³²)⁻¹(R³¹)⁻¹(R⁴²)⁻¹R¹⁴ (1-based legs) and its
//! hexagon identities over the H^[2],coop coproduct.

use crate::quasitriangular::{PairCoproduct, QT};
use crate::report::Report;
use crate::tensorcore::LegElement;

/// Which T to build. `Uninverted(i)` replaces the i-th inverse factor
/// (0: R³², 1: R³¹, 2: R⁴²) by R itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TVariant {
    Standard,
    Uninverted(usize),
}

pub fn build_t(q: &QT) -> LegElement {
    build_t_variant(q, TVariant::Standard)
}

pub fn build_t_variant(q: &QT, v: TVariant) -> LegElement {
    let legs = [[2, 1], [2, 0], [3, 1]];
    let inv: alloc::vec::Vec<LegElement> = legs
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let base = if v == TVariant::Uninverted(i) { &q.r } else { &q.rinv };
            q.on(base, l, 4)
        })
        .collect();
    let r14 = q.on(&q.r, &[0, 3], 4);
    q.chain(&[&inv[0], &inv[1], &inv[2], &r14])
}

/// (id⊗Δ)T = T^{12}T^{13} and (Δ⊗id)T = T^{23}T^{13}, where each index
/// names one H⊗H pair of legs.
pub fn check_t_hexagons(q: &QT, t: &LegElement, cop: &PairCoproduct) -> Report {
    let mut rep = Report::new();
    let t12 = q.on(t, &[0, 1, 2, 3], 6);
    let t13 = q.on(t, &[0, 1, 4, 5], 6);
    let t23 = q.on(t, &[2, 3, 4, 5], 6);
    rep.record("T_hexagon_1", cop.apply(t, 2).first_diff(&q.chain(&[&t12, &t13])));
    rep.record("T_hexagon_2", cop.apply(t, 0).first_diff(&q.chain(&[&t23, &t13])));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Scalar;
    use crate::hopf::{cyclic_table, example_drinfeld_double, example_group_algebra, example_sweedler};
    use crate::quasitriangular::build_h2coop;

    fn fixtures() -> alloc::vec::Vec<QT> {
        let z2 = example_group_algebra(&cyclic_table(2), 1).unwrap();
        let mut v = alloc::vec![QT::trivial(z2).unwrap()];
        for l in [0, 1] {
            let (h, r) = example_sweedler(&Scalar::from_int(1, l));
            v.push(QT::new(h, r).unwrap());
        }
        let (h, r) = example_drinfeld_double(&cyclic_table(2), 1).unwrap();
        v.push(QT::new(h, r).unwrap());
        v
    }

    #[test]
    fn trivial_t_is_unit() {
        let q = &fixtures()[0];
        assert_eq!(build_t(q), LegElement::unit(&q.hs(4)));
    }

    #[test]
    fn hexagons_hold() {
        for q in fixtures() {
            let cop = build_h2coop(&q).unwrap();
            let rep = check_t_hexagons(&q, &build_t(&q), &cop);
            assert!(rep.all_pass(), "{:?}", rep.failures().collect::<alloc::vec::Vec<_>>());
        }
    }

    #[test]
    fn dropped_inverse_detected() {
        let q = &fixtures()[2];
        let cop = build_h2coop(q).unwrap();
        for i in 0..3 {
            let t = build_t_variant(q, TVariant::Uninverted(i));
            assert!(!check_t_hexagons(q, &t, &cop).all_pass(), "factor {i}");
        }
    }

    #[test]
    fn involutive_r_makes_mutation_a_no_op() {
        for q in [&fixtures()[1], &fixtures()[3]] {
            assert_eq!(q.r, q.rinv);
            assert_eq!(build_t_variant(q, TVariant::Uninverted(0)), build_t(q));
        }
    }
}
