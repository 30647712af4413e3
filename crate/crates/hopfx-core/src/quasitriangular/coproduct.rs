//! Coproducts on H⊗H stored as four-leg images: the one of H^e and the
//! R-conjugated one of H^[2],coop.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::QT;
use crate::error::Error;
use crate::hopf::HopfData;
use crate::par;
use crate::report::Report;
use crate::tensorcore::{LegElement, SVec};

/// A coproduct on the pair space H⊗H: `images[a·d + b]` is Δ(e_a⊗e_b) on
/// legs (x₍₁₎, y₍₁₎, x₍₂₎, y₍₂₎).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCoproduct {
    pub d: usize,
    pub images: Vec<LegElement>,
}

impl PairCoproduct {
    /// Apply Δ to the pair of legs (leg, leg+1); the result has two more legs.
    pub fn apply(&self, x: &LegElement, leg: usize) -> LegElement {
        x.merge_legs(leg).substitute(leg, &self.images)
    }

    /// Δ(x) for x ∈ H⊗H given as a flat vector.
    pub fn of(&self, x: &SVec, n: u32) -> LegElement {
        let mut acc = LegElement::zero(n, vec![self.d; 4]);
        for (p, c) in x.iter() {
            acc = acc.add(&self.images[p].scale(c));
        }
        acc
    }

    /// First basis pair where (Δ⊗id)Δ ≠ (id⊗Δ)Δ.
    pub fn check_coassociative(&self) -> Option<Vec<usize>> {
        let d = self.d;
        par::find_first(d * d, |p| {
            let img = &self.images[p];
            (self.apply(img, 0) != self.apply(img, 2)).then(|| vec![p / d, p % d])
        })
    }

    /// Counit ε⊗ε on both sides.
    pub fn check_counit(&self, h: &HopfData) -> Option<Vec<usize>> {
        let d = self.d;
        let n = h.conductor();
        (0..d * d)
            .find(|&p| {
                let target = LegElement::from_flat(n, vec![d, d], &SVec::basis(p, n));
                let img = &self.images[p];
                let left = h.eps_on_leg(&h.eps_on_leg(img, 0), 0);
                let right = h.eps_on_leg(&h.eps_on_leg(img, 3), 2);
                left != target || right != target
            })
            .map(|p| vec![p / d, p % d])
    }

    pub fn check(&self, h: &HopfData) -> Report {
        let mut rep = Report::new();
        rep.record("coassociativity", self.check_coassociative());
        rep.record("counit", self.check_counit(h));
        rep
    }
}

/// Δ(x⊗y) = Σ x₂⊗y₁⊗x₁⊗y₂, the coproduct of H^coop ⊗ H.
pub fn he_coproduct(h: &HopfData) -> PairCoproduct {
    let d = h.dim();
    let n = h.conductor();
    let images = par::map_range(d * d, |p| {
        let (a, b) = (p / d, p % d);
        let mut terms = Vec::new();
        for (s, x) in h.comult[a].iter() {
            for (t, y) in h.comult[b].iter() {
                terms.push((vec![s % d, t / d, s / d, t % d], x * y));
            }
        }
        LegElement::from_terms(n, vec![d; 4], terms).expect("indices in range")
    });
    PairCoproduct { d, images }
}

/// H^[2],coop: Δ(x⊗y) = (R³²)⁻¹ (x₂⊗y₂⊗x₁⊗y₁) R³². Coassociativity and the
/// counit laws are asserted.
pub fn build_h2coop(q: &QT) -> Result<PairCoproduct, Error> {
    let h = &q.h;
    let d = q.dim();
    let n = q.conductor();
    let r32 = q.on(&q.r, &[2, 1], 4);
    let r32i = q.on(&q.rinv, &[2, 1], 4);
    let images = par::map_range(d * d, |p| {
        let (a, b) = (p / d, p % d);
        let mut terms = Vec::new();
        for (s, x) in h.comult[a].iter() {
            for (t, y) in h.comult[b].iter() {
                terms.push((vec![s % d, t % d, s / d, t / d], x * y));
            }
        }
        let mid = LegElement::from_terms(n, vec![d; 4], terms).expect("indices in range");
        q.chain(&[&r32i, &mid, &r32])
    });
    let cop = PairCoproduct { d, images };
    let rep = cop.check(h);
    if let Some(c) = rep.failures().next() {
        return Err(Error::InternalConventionError(format!("H^[2],coop {} fails at {:?}", c.name, c.witness)));
    }
    Ok(cop)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Scalar;
    use crate::hopf::{cyclic_table, example_drinfeld_double, example_group_algebra, example_sweedler};

    #[test]
    fn trivial_r_gives_flipped_tensor_coproduct() {
        let h = example_group_algebra(&cyclic_table(2), 1).unwrap();
        let q = QT::trivial(h).unwrap();
        let c = build_h2coop(&q).unwrap();
        // grouplikes: Δ(g⊗1) = (g⊗1)⊗(g⊗1)
        let t = LegElement::from_terms(1, vec![2; 4], [(vec![1, 0, 1, 0], Scalar::one(1))]).unwrap();
        assert_eq!(c.images[2], t);
    }

    #[test]
    fn h2coop_coassociative_on_fixtures() {
        let (h4, r) = example_sweedler(&Scalar::one(1));
        let q = QT::new(h4, r).unwrap();
        assert!(build_h2coop(&q).is_ok());
        let (dz, r) = example_drinfeld_double(&cyclic_table(2), 1).unwrap();
        let q = QT::new(dz, r).unwrap();
        let c = build_h2coop(&q).unwrap();
        assert_eq!(c.check_counit(&q.h), None);
    }

    #[test]
    fn he_coproduct_matches_he_hopf() {
        let (h4, _) = example_sweedler(&Scalar::one(1));
        let c = he_coproduct(&h4);
        assert_eq!(c.check_coassociative(), None);
        let he = super::super::build_he(&h4).unwrap();
        for p in 0..16 {
            let flat = LegElement::from_flat(1, vec![16, 16], &he.comult[p]).split_leg(1, 4, 4).split_leg(0, 4, 4);
            assert_eq!(flat, c.images[p]);
        }
    }
}
