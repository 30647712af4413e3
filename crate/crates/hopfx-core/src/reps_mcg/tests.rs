use alloc::vec::Vec;

use super::*;
use crate::braided_dual::build_braided_dual;
use crate::doubles::{build_elliptic, build_t, EllipticDouble};
use crate::error::Error;
use crate::exactfield::Scalar;
use crate::hopf::{cyclic_table, example_drinfeld_double, example_group_algebra, example_sweedler, ModuleData};
use crate::quasitriangular::QT;
use crate::tensorcore::Algebra;

fn z2() -> QT {
    QT::trivial(example_group_algebra(&cyclic_table(2), 1).unwrap()).unwrap()
}

fn h4(l: i64) -> QT {
    let (h, r) = example_sweedler(&Scalar::from_int(1, l));
    QT::new(h, r).unwrap()
}

fn dz2() -> QT {
    let (h, r) = example_drinfeld_double(&cyclic_table(2), 1).unwrap();
    QT::new(h, r).unwrap()
}

fn elliptic(q: &QT, k: i32) -> EllipticDouble {
    build_elliptic(q, &build_braided_dual(q, k).unwrap(), &build_t(q)).unwrap()
}

fn regular_rep(q: &QT, e: &EllipticDouble, n: usize, v: SigmaVariant) -> BraidRep {
    let m = ModuleData::regular(&e.alg);
    let vm = ModuleData::regular(&q.h);
    build_braid_rep(q, &e.alg, &e.x, &e.y, &m, &vm, n, v).unwrap()
}

fn assert_pass(rep: &crate::report::Report) {
    assert!(rep.all_pass(), "{:?}", rep.failures().collect::<Vec<_>>());
}

#[test]
fn n1_trivial_x_y_commute() {
    let q = z2();
    let e = elliptic(&q, 0);
    let r = regular_rep(&q, &e, 1, SigmaVariant::Standard);
    assert_eq!(r.x[0].compose(&r.y[0]), r.y[0].compose(&r.x[0]));
    assert_pass(&check_presentation(&r));
}

#[test]
fn presentation_n2_all_fixtures() {
    for q in [z2(), h4(0), h4(1), dz2()] {
        let e = elliptic(&q, 0);
        let r = regular_rep(&q, &e, 2, SigmaVariant::Standard);
        assert_eq!(r.dim(), e.alg.dim() * q.dim() * q.dim());
        assert_pass(&check_presentation(&r));
    }
}

#[test]
fn presentation_n3_sweedler_and_double() {
    for q in [h4(1), dz2()] {
        let e = elliptic(&q, 0);
        let r = regular_rep(&q, &e, 3, SigmaVariant::Standard);
        assert_eq!(r.dim(), 1024);
        assert_pass(&check_presentation(&r));
    }
}

#[test]
fn sigma_without_flip_breaks_conjugation() {
    let q = h4(1);
    let e = elliptic(&q, 0);
    let r = regular_rep(&q, &e, 2, SigmaVariant::NoFlip);
    assert!(!check_presentation(&r).holds("X_conjugation"));
}

#[test]
fn bad_module_rejected() {
    let q = h4(1);
    let e = elliptic(&q, 0);
    let mut m = ModuleData::regular(&e.alg);
    m.act.swap(1, 2);
    let vm = ModuleData::regular(&q.h);
    let err = build_braid_rep(&q, &e.alg, &e.x, &e.y, &m, &vm, 1, SigmaVariant::Standard).unwrap_err();
    assert!(matches!(err, Error::ModuleAxiomFailed { .. }));
}

#[test]
fn mcg_relations_on_fixtures() {
    for q in [z2(), h4(0), h4(1), dz2()] {
        let e1 = elliptic(&q, 1);
        let act = build_mcg_action(&q, &e1).unwrap();
        assert_pass(&check_mcg_relations(&act));
        assert_pass(&check_automorphisms(&act, &e1));
    }
}

#[test]
fn trivial_z_is_identity() {
    let q = z2();
    let act = build_mcg_action(&q, &elliptic(&q, 1)).unwrap();
    assert!(act.z.is_identity());
}

#[test]
fn mutated_b_breaks_relation() {
    let q = h4(1);
    let e1 = elliptic(&q, 1);
    let act = build_mcg_action_variant(&q, &e1, BVariant::LeftInverse).unwrap();
    assert!(!check_mcg_relations(&act).holds("A4_eq_AB3"));
}

#[test]
fn fourier_on_double() {
    let fd = fourier_transform(&dz2()).unwrap();
    assert_eq!(fd.f.src, 16);
    assert_pass(&check_fourier(&fd));
}

#[test]
fn fourier_needs_factorizable() {
    assert!(matches!(fourier_transform(&z2()), Err(Error::NotFactorizable)));
}
