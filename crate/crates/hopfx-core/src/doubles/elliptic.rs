//! The elliptic double E^(k): ~H_k ⊗ ~H_k with cross relation
//! (1⊗g)(f⊗1) = T▷(f⊗g), i.e.
//! (f⊗g)(f′⊗g′) = Σ (f·T₁₂▷f′) ⊗ (T₃₄▷g·g′).

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::crossed::{outer, CrossedProduct};
use crate::braided_dual::{BraidedDual, ASSOC_SEED};
use crate::error::Error;
use crate::exactfield::Scalar;
use crate::par;
use crate::quasitriangular::QT;
use crate::report::Report;
use crate::tensorcore::{Acc, Algebra, LegElement};

#[derive(Clone, Debug)]
pub struct EllipticDouble {
    pub k: i32,
    pub d: usize,
    pub alg: CrossedProduct,
    /// Σ (e^i⊗ε)⊗e_i on legs (E, H).
    pub x: LegElement,
    /// Σ (ε⊗e^i)⊗e_i on legs (E, H).
    pub y: LegElement,
}

/// Build E^(k) from ~H_k and T. The unit law, both factor inclusions and
/// associativity are asserted (exhaustive up to dimension 64, otherwise
/// 10⁴ seeded triples).
pub fn build_elliptic(q: &QT, hk: &BraidedDual, t: &LegElement) -> Result<EllipticDouble, Error> {
    let e = build_elliptic_unchecked(q, hk, t);
    let rep = e.alg.check(ASSOC_SEED);
    if let Some(c) = rep.failures().next() {
        return Err(Error::InternalConventionError(format!("E^({}): {} fails at {:?}", hk.k, c.name, c.witness)));
    }
    Ok(e)
}

pub fn build_elliptic_unchecked(q: &QT, hk: &BraidedDual, t: &LegElement) -> EllipticDouble {
    let d = q.dim();
    let n = q.conductor();
    let act = &hk.action;
    let groups = act.grouped(t);
    let one = Scalar::one(n);
    let cross = par::map_range(d * d, |p| {
        let (g, f) = (p / d, p % d);
        let mut acc = Acc::new(n);
        for (ab, grp) in &groups {
            outer(&act.act[*ab].cols[f], &grp.cols[g], d, &one, &mut acc);
        }
        acc.into_svec()
    });
    let left = Arc::new(hk.alg.clone());
    let alg = CrossedProduct::new(left.clone(), left, cross);
    let (x, y) = canonical_pair(q);
    EllipticDouble { k: hk.k, d, alg, x, y }
}

/// X = Σ(e^i⊗ε)⊗e_i and Y = Σ(ε⊗e^i)⊗e_i.
fn canonical_pair(q: &QT) -> (LegElement, LegElement) {
    let d = q.dim();
    let n = q.conductor();
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for i in 0..d {
        for (j, c) in q.h.counit.iter().enumerate() {
            if !c.is_zero() {
                xs.push((vec![i * d + j, i], c.clone()));
                ys.push((vec![j * d + i, i], c.clone()));
            }
        }
    }
    let mk = |t| LegElement::from_terms(n, vec![d * d, d], t).expect("indices in range");
    (mk(xs), mk(ys))
}

/// X^{0,1}R^{2,1}Y^{0,2} = R^{2,1}Y^{0,2}R^{1,2}X^{0,1}R^{2,1} in B⊗H⊗H.
pub fn check_elliptic_relation(q: &QT, b: &dyn Algebra, x: &LegElement, y: &LegElement) -> Report {
    let mut rep = Report::new();
    let mut algs: Vec<&dyn Algebra> = vec![b];
    algs.extend(q.hs(2));
    let on = |z: &LegElement, t: &[usize]| z.embed(t, &algs).expect("legs of B⊗H⊗H");
    let chain = |zs: &[&LegElement]| LegElement::product_chain(zs, &algs).expect("same legs");
    let x01 = on(x, &[0, 1]);
    let y02 = on(y, &[0, 2]);
    let r21 = on(&q.r, &[2, 1]);
    let r12 = on(&q.r, &[1, 2]);
    let lhs = chain(&[&x01, &r21, &y02]);
    let rhs = chain(&[&r21, &y02, &r12, &x01, &r21]);
    rep.record("elliptic_relation", lhs.first_diff(&rhs));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided_dual::{build_braided_dual, check_k_reflection};
    use crate::doubles::build_t;
    use crate::hopf::{cyclic_table, example_drinfeld_double, example_group_algebra, example_sweedler};
    use crate::tensorcore::check_algebra_map;
    use crate::tensorcore::LinMap;

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

    #[test]
    fn trivial_r_gives_commutative_square() {
        let h = example_group_algebra(&cyclic_table(2), 1).unwrap();
        let q = QT::trivial(h).unwrap();
        let e = elliptic(&q, 0);
        assert_eq!(e.alg.dim(), 4);
        assert!(e.alg.to_algebra_data().is_commutative());
        assert!(check_elliptic_relation(&q, &e.alg, &e.x, &e.y).all_pass());
    }

    #[test]
    fn elliptic_relation_on_fixtures() {
        for q in [h4(1), h4(0), dz2()] {
            for k in [0, 1] {
                let e = elliptic(&q, k);
                assert_eq!(e.alg.dim(), 16);
                assert!(check_elliptic_relation(&q, &e.alg, &e.x, &e.y).all_pass(), "k = {k}");
                assert!(check_k_reflection(&q, &e.alg, &e.x, k).all_pass());
                assert!(check_k_reflection(&q, &e.alg, &e.y, k).all_pass());
            }
        }
    }

    #[test]
    fn swapped_roles_fail() {
        let (h, r) = example_drinfeld_double(&cyclic_table(3), 1).unwrap();
        let q = QT::new(h, r).unwrap();
        let e = elliptic(&q, 0);
        assert!(!check_elliptic_relation(&q, &e.alg, &e.y, &e.x).all_pass());
    }

    #[test]
    fn inclusions_are_algebra_maps() {
        let q = dz2();
        let hk = build_braided_dual(&q, 0).unwrap();
        let e = elliptic(&q, 0);
        let n = q.conductor();
        let l = LinMap::from_cols(
            4,
            16,
            n,
            (0..4).map(|i| e.alg.embed_left(&crate::tensorcore::SVec::basis(i, n))).collect(),
        );
        let r = LinMap::from_cols(
            4,
            16,
            n,
            (0..4).map(|i| e.alg.embed_right(&crate::tensorcore::SVec::basis(i, n))).collect(),
        );
        assert_eq!(check_algebra_map(&l, &hk.alg, &e.alg), None);
        assert_eq!(check_algebra_map(&r, &hk.alg, &e.alg), None);
    }
}
