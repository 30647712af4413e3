//! The Heisenberg double D_H = ~H_0 ⋊ H: the subalgebra of the smash
//! product with H^[2],coop generated by ~H_0 and H⊗1, with cross relation
//! (1⊗h)(f⊗1) = Σ (h₍₁₎▷f) ⊗ h₍₂₎.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::crossed::{outer, CrossedProduct};
use crate::braided_dual::{BraidedDual, ASSOC_SEED};
use crate::error::Error;
use crate::par;
use crate::quasitriangular::{PairCoproduct, QT};
use crate::tensorcore::{Acc, LegElement, SVec};

#[derive(Clone, Debug)]
pub struct HeisenbergDouble {
    pub d: usize,
    pub alg: CrossedProduct,
    /// Σ (e^i⊗1)⊗e_i on legs (D_H, H).
    pub x: LegElement,
    /// Σ (ε⊗D₁)⊗D₂: the double braiding on legs (D_H, H).
    pub y: LegElement,
}

/// Δ(h⊗1) for every basis h, after checking that it lies in
/// (H⊗H)⊗(H⊗1); returned with the last leg dropped.
fn coideal_images(q: &QT, cop: &PairCoproduct) -> Result<Vec<LegElement>, Error> {
    let d = q.dim();
    let n = q.conductor();
    let unit = q.h.unit_vec();
    let unit_leg = q.h.unit_leg();
    let imgs = par::map_range(d, |h| {
        let mut z = LegElement::zero(n, vec![d; 4]);
        for (b, c) in unit.iter() {
            z = z.add(&cop.images[h * d + b].scale(c));
        }
        let w = q.h.eps_on_leg(&z, 3);
        (w.tensor(&unit_leg) == z).then_some(w).ok_or(h)
    });
    imgs.into_iter().collect::<Result<Vec<_>, usize>>().map_err(|h| Error::CoidealCheckFailed { witness: vec![h] })
}

/// Build D_H from ~H_0 and the H^[2],coop coproduct. The coideal property
/// is checked rather than assumed; unit, inclusions and associativity are
/// asserted.
pub fn build_heisenberg(q: &QT, h0: &BraidedDual, cop: &PairCoproduct) -> Result<HeisenbergDouble, Error> {
    let d = q.dim();
    let n = q.conductor();
    let act = &h0.action;
    let imgs = coideal_images(q, cop)?;
    let cross = par::map_range(d * d, |p| {
        let (h, f) = (p / d, p % d);
        let mut acc = Acc::new(n);
        for (idx, v) in imgs[h].terms() {
            let col = &act.basis(idx[0], idx[1]).cols[f];
            outer(col, &SVec::basis(idx[2], n), d, v, &mut acc);
        }
        acc.into_svec()
    });
    let alg = CrossedProduct::new(Arc::new(h0.alg.clone()), Arc::new(q.h.alg.clone()), cross);
    let rep = alg.check(ASSOC_SEED);
    if let Some(c) = rep.failures().next() {
        return Err(Error::InternalConventionError(format!("D_H: {} fails at {:?}", c.name, c.witness)));
    }
    let unit = q.h.unit_vec();
    let mut xs = Vec::new();
    for i in 0..d {
        for (u, c) in unit.iter() {
            xs.push((vec![i * d + u, i], c.clone()));
        }
    }
    let mut ys = Vec::new();
    for (idx, v) in q.d.terms() {
        for (j, e) in q.h.counit.iter().enumerate() {
            if !e.is_zero() {
                ys.push((vec![j * d + idx[0], idx[1]], e * v));
            }
        }
    }
    let mk = |t| LegElement::from_terms(n, vec![d * d, d], t).expect("indices in range");
    Ok(HeisenbergDouble { d, alg, x: mk(xs), y: mk(ys) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided_dual::{build_braided_dual, check_k_reflection};
    use crate::doubles::check_elliptic_relation;
    use crate::exactfield::Scalar;
    use crate::hopf::{cyclic_table, example_drinfeld_double, example_group_algebra, example_sweedler};
    use crate::quasitriangular::build_h2coop;
    use crate::tensorcore::Algebra;

    fn heis(q: &QT) -> HeisenbergDouble {
        let h0 = build_braided_dual(q, 0).unwrap();
        build_heisenberg(q, &h0, &build_h2coop(q).unwrap()).unwrap()
    }

    #[test]
    fn heisenberg_on_fixtures() {
        let z2 = example_group_algebra(&cyclic_table(2), 1).unwrap();
        let mut qs = vec![QT::trivial(z2).unwrap()];
        for l in [0, 1] {
            let (h, r) = example_sweedler(&Scalar::from_int(1, l));
            qs.push(QT::new(h, r).unwrap());
        }
        let (h, r) = example_drinfeld_double(&cyclic_table(2), 1).unwrap();
        qs.push(QT::new(h, r).unwrap());
        for q in qs {
            let dh = heis(&q);
            assert_eq!(dh.alg.dim(), q.dim() * q.dim());
            assert!(check_k_reflection(&q, &dh.alg, &dh.x, 0).all_pass());
            assert!(check_k_reflection(&q, &dh.alg, &dh.y, 0).all_pass());
            assert!(check_elliptic_relation(&q, &dh.alg, &dh.x, &dh.y).all_pass());
        }
    }

    #[test]
    fn trivial_x_is_multiplicative() {
        let z2 = example_group_algebra(&cyclic_table(2), 1).unwrap();
        let q = QT::trivial(z2).unwrap();
        let dh = heis(&q);
        let rep = check_k_reflection(&q, &dh.alg, &dh.x, 0);
        assert!(rep.holds("k_reflection"));
    }
}
