//! The SL2(Z)~ action on E^(1): A·X = Y, A·Y = YX⁻¹Y⁻¹, B·X = X,
//! B·Y = YX⁻¹, each extended by the universal property.

use crate::doubles::{universal_map, universal_morphism, EllipticDouble};
use crate::error::Error;
use crate::quasitriangular::QT;
use crate::report::Report;
use crate::tensorcore::{Algebra, LegElement, LinMap};

/// Which image of Y defines B.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BVariant {
    /// B·Y = YX⁻¹
    Standard,
    /// B·Y = X⁻¹Y, imposed without the precondition checks
    LeftInverse,
}

#[derive(Clone, Debug)]
pub struct MCGAction {
    pub a: LinMap,
    pub b: LinMap,
    /// Z = A⁴
    pub z: LinMap,
    x: LegElement,
    y: LegElement,
    images: [LegElement; 4],
}

impl MCGAction {
    /// The prescribed images of X and Y under A and B, in the order
    /// A·X, A·Y, B·X, B·Y.
    pub fn prescribed(&self) -> &[LegElement; 4] {
        &self.images
    }
}

pub fn build_mcg_action(q: &QT, e1: &EllipticDouble) -> Result<MCGAction, Error> {
    build_mcg_action_variant(q, e1, BVariant::Standard)
}

pub fn build_mcg_action_variant(q: &QT, e1: &EllipticDouble, variant: BVariant) -> Result<MCGAction, Error> {
    let algs: [&dyn Algebra; 2] = [&e1.alg, &q.h];
    let x = &e1.x;
    let y = &e1.y;
    let xi = x.inverse(&algs).map_err(|_| Error::NotInvertible("X".into()))?;
    let yi = y.inverse(&algs).map_err(|_| Error::NotInvertible("Y".into()))?;
    let chain = |zs: &[&LegElement]| LegElement::product_chain(zs, &algs).expect("E⊗H legs");
    let ay = chain(&[y, &xi, &yi]);
    let by = match variant {
        BVariant::Standard => chain(&[y, &xi]),
        BVariant::LeftInverse => chain(&[&xi, y]),
    };
    let a = universal_morphism(q, e1, &e1.alg, y, &ay)?;
    let b = match variant {
        BVariant::Standard => universal_morphism(q, e1, &e1.alg, x, &by)?,
        BVariant::LeftInverse => universal_map(e1.d, &e1.alg, x, &by),
    };
    if variant == BVariant::Standard {
        for m in [&a, &b] {
            m.inverse().map_err(|_| Error::NotInvertible("mapping class generator".into()))?;
        }
    }
    let z = a.pow(4);
    let images = [y.clone(), ay, x.clone(), by];
    Ok(MCGAction { a, b, z, x: x.clone(), y: y.clone(), images })
}

/// A⁴ = (AB)³, A²B = BA², Z = A⁴ central in ⟨A, B⟩, and the defining
/// images (A⊗id)X = Y etc. as round trips.
pub fn check_mcg_relations(act: &MCGAction) -> Report {
    let mut rep = Report::new();
    let d = |l: &LinMap, r: &LinMap| l.first_diff(r).map(|w| w.to_vec());
    let (a, b, z) = (&act.a, &act.b, &act.z);
    let ab = a.compose(b);
    rep.record("A4_eq_AB3", d(z, &ab.pow(3)));
    let a2 = a.pow(2);
    rep.record("A2B_comm", d(&a2.compose(b), &b.compose(&a2)));
    rep.record("Z_comm_A", d(&z.compose(a), &a.compose(z)));
    rep.record("Z_comm_B", d(&z.compose(b), &b.compose(z)));
    let names = ["A_on_X", "A_on_Y", "B_on_X", "B_on_Y"];
    let srcs: [(&LinMap, &LegElement); 4] = [(a, &act.x), (a, &act.y), (b, &act.x), (b, &act.y)];
    for ((name, (m, src)), want) in names.iter().zip(srcs).zip(act.images.iter()) {
        rep.record(name, src.map_leg(0, m).first_diff(want));
    }
    rep
}

/// A and B as bijective unital algebra endomorphisms of E^(1).
pub fn check_automorphisms(act: &MCGAction, e1: &EllipticDouble) -> Report {
    let mut rep = Report::new();
    for (name, m) in [("A", &act.a), ("B", &act.b)] {
        rep.record(&alloc::format!("{name}_multiplicative"), crate::tensorcore::check_algebra_map(m, &e1.alg, &e1.alg));
        rep.pass(&alloc::format!("{name}_bijective"), m.inverse().is_ok());
    }
    rep
}
