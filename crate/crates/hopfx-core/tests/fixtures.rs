//! Hopf and quasitriangular layer on the standard fixtures.

use hopfx_core::exactfield::Scalar;
use hopfx_core::hopf::{
    cyclic_table, dual_hopf, example_drinfeld_double, example_drinfeld_double_of, example_group_algebra,
    example_sweedler, symmetric_table, validate_hopf, HopfData, ModuleData,
};
use hopfx_core::quasitriangular::{
    build_h2coop, build_he, center, check_ribbon, check_twist, compute_u_nu, find_ribbon, r13r14_twist, twist_k, TwistData,
    validate_qt, QT,
};
use hopfx_core::tensorcore::{Algebra, LegElement, LinMap, SVec};

fn fixtures() -> Vec<(&'static str, QT)> {
    let z2 = example_group_algebra(&cyclic_table(2), 1).unwrap();
    let mut v = vec![("Q[Z2]", QT::trivial(z2).unwrap())];
    for (name, l) in [("H4(0)", 0), ("H4(1)", 1)] {
        let (h, r) = example_sweedler(&Scalar::from_int(1, l));
        v.push((name, QT::new(h, r).unwrap()));
    }
    let (h, r) = example_drinfeld_double(&cyclic_table(2), 1).unwrap();
    v.push(("D(Z2)", QT::new(h, r).unwrap()));
    v
}

#[test]
fn all_fixtures_validate() {
    for (name, q) in fixtures() {
        let hr = validate_hopf(&q.h);
        assert!(hr.all_pass(), "{name}: {:?}", hr.failures().collect::<Vec<_>>());
        let qr = validate_qt(&q);
        assert!(qr.all_pass(), "{name}: {:?}", qr.failures().collect::<Vec<_>>());
        assert!(qr.holds("yang_baxter") && qr.holds("antipode_inverse_identity"));
        assert_eq!(ModuleData::regular(&q.h).check(&q.h), None);
    }
}

#[test]
fn corrupted_antipode_is_caught() {
    let (h, _) = example_sweedler(&Scalar::one(1));
    let mut cols = h.antipode.cols.clone();
    cols[2] = SVec::basis(2, 1); // S(x) = x
    let bad =
        HopfData::new(h.alg.clone(), h.comult.clone(), h.counit.clone(), LinMap::from_cols(4, 4, 1, cols)).unwrap();
    let rep = validate_hopf(&bad);
    let c = rep.get("antipode").unwrap();
    assert!(!c.holds);
    assert_eq!(c.witness.as_deref(), Some(&[2][..]));
}

#[test]
fn group_algebra_examples() {
    let z2 = example_group_algebra(&cyclic_table(2), 1).unwrap();
    assert_eq!(z2.dim(), 2);
    assert_eq!(z2.antipode.apply(&SVec::basis(1, 1)), SVec::basis(1, 1));
    let s3 = example_group_algebra(&symmetric_table(3), 1).unwrap();
    assert_eq!(s3.dim(), 6);
    assert!(s3.counit.iter().all(Scalar::is_one));
    let z4 = example_group_algebra(&cyclic_table(4), 4).unwrap();
    assert_eq!((z4.dim(), z4.conductor()), (4, 4));
    assert!(validate_hopf(&z4).all_pass());
}

#[test]
fn sweedler_examples() {
    let (h, r) = example_sweedler(&Scalar::zero(1));
    let algs: Vec<&dyn Algebra> = vec![&h; 2];
    assert_eq!(r.permute(&[1, 0]), r);
    assert_eq!(r.product(&r, &algs).unwrap(), LegElement::unit(&algs));
    assert!(h.counit[2].is_zero() && h.counit[1].is_one());
}

#[test]
fn sign_mutation_breaks_hexagon() {
    let (h, r) = example_sweedler(&Scalar::one(1));
    let terms = r.terms().map(|(i, v)| {
        let v = if i == [3, 2] { -v } else { v.clone() };
        (i, v)
    });
    let bad = LegElement::from_terms(1, vec![4, 4], terms).unwrap();
    let rep = validate_qt(&QT::new(h, bad).unwrap());
    assert!(!rep.holds("hexagon_1") || !rep.holds("hexagon_2"));
}

#[test]
fn double_of_s3() {
    let (h, r) = example_drinfeld_double(&symmetric_table(3), 1).unwrap();
    assert_eq!(h.dim(), 36);
    let q = QT::new(h, r).unwrap();
    assert!(validate_qt(&q).all_pass());
}

#[test]
fn double_of_sweedler() {
    let (h4, _) = example_sweedler(&Scalar::one(1));
    let (h, r) = example_drinfeld_double_of(&h4).unwrap();
    assert_eq!(h.dim(), 16);
    assert!(validate_qt(&QT::new(h, r).unwrap()).all_pass());
}

#[test]
fn dual_is_involutive_and_pairs() {
    for (_, q) in fixtures() {
        let dd = dual_hopf(&dual_hopf(&q.h));
        assert_eq!(dd.alg.mult, q.h.alg.mult);
        assert_eq!(dd.comult, q.h.comult);
        assert_eq!(dd.antipode, q.h.antipode);
        assert!(validate_hopf(&dual_hopf(&q.h)).all_pass());
    }
    // ⟨e^i e^j, x⟩ = ⟨e^i⊗e^j, Δx⟩ on D(Z2)
    let (h, _) = example_drinfeld_double(&cyclic_table(2), 1).unwrap();
    let dual = dual_hopf(&h);
    for i in 0..4 {
        for j in 0..4 {
            let prod = &dual.alg.mult[i * 4 + j];
            for x in 0..4 {
                let lhs = prod.get(x).cloned().unwrap_or_else(|| Scalar::zero(1));
                let rhs = h.comult[x].get(i * 4 + j).cloned().unwrap_or_else(|| Scalar::zero(1));
                assert_eq!(lhs, rhs);
            }
        }
    }
    // dual of Q[Z2] has idempotent δ-basis
    let z2 = example_group_algebra(&cyclic_table(2), 1).unwrap();
    let f = dual_hopf(&z2);
    for i in 0..2 {
        assert_eq!(f.alg.mult[i * 2 + i], SVec::basis(i, 1));
    }
}

#[test]
fn u_and_nu() {
    let fx = fixtures();
    let (u, nu) = compute_u_nu(&fx[0].1).unwrap();
    assert_eq!((u, nu), (SVec::basis(0, 1), SVec::basis(0, 1)));
    let q = &fx[1].1;
    let (_, nu) = compute_u_nu(q).unwrap();
    let nl = LegElement::from_vec(1, 4, &nu);
    assert_eq!(LegElement::from_flat(1, vec![4, 4], &q.h.delta(&nu)), nl.tensor(&nl));
    assert!(compute_u_nu(&fx[3].1).is_ok());
}

#[test]
fn ribbon_search() {
    let fx = fixtures();
    assert_eq!(find_ribbon(&fx[0].1), Some(SVec::basis(0, 1)));
    let q = &fx[3].1;
    let v = find_ribbon(q).expect("D(Z2) is ribbon");
    assert!(check_ribbon(q, &v).all_pass());
    // H4(1): only consistency is asserted
    let q = &fx[2].1;
    if let Some(v) = find_ribbon(q) {
        assert!(check_ribbon(q, &v).all_pass());
        let qr = q.clone().with_ribbon(Some(v));
        assert!(validate_qt(&qr).all_pass());
    }
    assert_eq!(center(&fx[3].1.h).len(), 4);
}

#[test]
fn auxiliary_hopf_algebras() {
    let fx = fixtures();
    assert_eq!(build_he(&fx[0].1.h).unwrap().dim(), 4);
    assert_eq!(build_he(&fx[2].1.h).unwrap().dim(), 16);
    assert!(validate_hopf(&build_he(&fx[3].1.h).unwrap()).all_pass());
    for (_, q) in &fx {
        let c = build_h2coop(q).unwrap();
        assert!(c.check(&q.h).all_pass());
    }
}

#[test]
fn twists() {
    let fx = fixtures();
    let q = &fx[2].1;
    assert!(check_twist(q, &r13r14_twist(q)).all_pass());
    let q = &fx[3].1;
    for k in 0..3 {
        assert!(check_twist(q, &twist_k(q, k)).all_pass());
    }
}

#[test]
fn r_twist_times_d13_powers() {
    let q = &fixtures()[3].1;
    let f = r13r14_twist(q);
    for k in 1..=2 {
        let dk = q.on(&q.d_pow(k), &[0, 2], 4);
        let g = TwistData { f: q.chain(&[&f.f, &dk]) };
        let rep = check_twist(q, &g);
        assert!(rep.all_pass(), "k = {k}: {:?}", rep.failures().collect::<Vec<_>>());
    }
}
