//! R-matrices: quasitriangularity, the Drinfeld element, ribbon elements,
//! and the auxiliary Hopf algebras H^e and H^[2],coop with their action on
//! the dual.

mod action;
mod coproduct;
mod ribbon;
mod twist;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

pub use action::{build_he, check_dual_action, he_action_on_dual, DualAction};
pub use coproduct::{build_h2coop, he_coproduct, PairCoproduct};
pub use ribbon::{center, check_ribbon, find_ribbon, grouplikes_in};
pub use twist::{check_twist, r13r14_twist, twist_equiv_map, twist_k, TwistData};

use crate::error::Error;
use crate::hopf::HopfData;
use crate::par;
use crate::report::Report;
use crate::tensorcore::{Acc, Algebra, LegElement, SVec};

/// A Hopf algebra with R-matrix and the derived elements R⁻¹, D = R²¹R¹²,
/// D⁻¹, u and ν = u·S(u). Leg indices are 0-based throughout.
#[derive(Clone, Debug)]
pub struct QT {
    pub h: HopfData,
    pub r: LegElement,
    pub rinv: LegElement,
    pub d: LegElement,
    pub dinv: LegElement,
    pub u: SVec,
    pub nu: SVec,
    pub ribbon: Option<SVec>,
}

impl QT {
    /// Derive R⁻¹, D, u and ν. Does not validate; see [`validate_qt`].
    pub fn new(h: HopfData, r: LegElement) -> Result<Self, Error> {
        let dim = h.dim();
        if r.dims() != [dim, dim] {
            return Err(Error::DimMismatch);
        }
        let algs = [&h as &dyn Algebra, &h];
        let rinv = r.inverse(&algs).map_err(|_| Error::NotInvertible(String::from("R")))?;
        let d = r.permute(&[1, 0]).product(&r, &algs)?;
        let dinv = rinv.product(&rinv.permute(&[1, 0]), &algs)?;
        let u = drinfeld_u(&h, &r);
        let nu = h.alg.mul(&u, &h.s(&u));
        Ok(QT { h, r, rinv, d, dinv, u, nu, ribbon: None })
    }

    /// Trivial R = 1⊗1.
    pub fn trivial(h: HopfData) -> Result<Self, Error> {
        let unit = h.unit_leg();
        let r = unit.tensor(&unit);
        Self::new(h, r)
    }

    pub fn dim(&self) -> usize {
        self.h.dim()
    }

    pub fn conductor(&self) -> u32 {
        self.h.conductor()
    }

    /// `m` copies of H, for leg products.
    pub fn hs(&self, m: usize) -> Vec<&dyn Algebra> {
        vec![&self.h as &dyn Algebra; m]
    }

    /// Place `x` on legs `targets` of H^⊗m.
    pub fn on(&self, x: &LegElement, targets: &[usize], m: usize) -> LegElement {
        x.embed(targets, &self.hs(m)).expect("leg placement within H^⊗m")
    }

    /// Left-to-right product of elements of H^⊗m.
    pub fn chain(&self, xs: &[&LegElement]) -> LegElement {
        let m = xs[0].arity();
        LegElement::product_chain(xs, &self.hs(m)).expect("factors share the leg structure")
    }

    /// D^k (negative k uses D⁻¹).
    pub fn d_pow(&self, k: i32) -> LegElement {
        let base = if k < 0 { &self.dinv } else { &self.d };
        let algs = self.hs(2);
        let mut acc = LegElement::unit(&algs);
        for _ in 0..k.unsigned_abs() {
            acc = acc.product(base, &algs).expect("two legs");
        }
        acc
    }

    /// Attach a ribbon element (checked separately by [`check_ribbon`]).
    pub fn with_ribbon(mut self, v: Option<SVec>) -> Self {
        self.ribbon = v;
        self
    }

    pub fn is_trivial(&self) -> bool {
        let unit = self.h.unit_leg();
        self.r == unit.tensor(&unit)
    }
}

/// u = m((S⊗id)(R²¹)) = Σ S(r₂) r₁.
fn drinfeld_u(h: &HopfData, r: &LegElement) -> SVec {
    let n = h.conductor();
    let mut acc = Acc::new(n);
    for (idx, v) in r.terms() {
        let p = h.alg.mul(&h.antipode.cols[idx[1]], &SVec::basis(idx[0], n));
        acc.add_svec(&p, v);
    }
    acc.into_svec()
}

/// Every quasitriangular identity with the first failing index as witness.
pub fn validate_qt(q: &QT) -> Report {
    let h = &q.h;
    let n = q.conductor();
    let dim = q.dim();
    let mut rep = Report::new();
    let di = h.delta_images();
    let diff = |a: &LegElement, b: &LegElement| a.first_diff(b);

    let r13 = q.on(&q.r, &[0, 2], 3);
    let r12 = q.on(&q.r, &[0, 1], 3);
    let r23 = q.on(&q.r, &[1, 2], 3);
    rep.record("hexagon_1", diff(&q.r.substitute(0, &di), &q.chain(&[&r13, &r23])));
    rep.record("hexagon_2", diff(&q.r.substitute(1, &di), &q.chain(&[&r13, &r12])));

    let intertwining = par::find_first(dim, |x| {
        let dx = &di[x];
        let lhs = q.chain(&[&q.r, dx]);
        let rhs = q.chain(&[&dx.permute(&[1, 0]), &q.r]);
        lhs.first_diff(&rhs).map(|mut w| {
            w.insert(0, x);
            w
        })
    });
    rep.record("intertwining", intertwining);

    let unit1 = h.unit_leg();
    let c0 = h.eps_on_leg(&q.r, 0);
    let c1 = h.eps_on_leg(&q.r, 1);
    rep.record("counit_R", diff(&c0, &unit1).or_else(|| diff(&c1, &unit1)));

    rep.record("yang_baxter", diff(&q.chain(&[&r12, &r13, &r23]), &q.chain(&[&r23, &r13, &r12])));
    rep.record("antipode_inverse_identity", diff(&inverse_identity(q), &unit1.tensor(&unit1)));

    let d_comm = par::find_first(dim, |x| {
        let dx = &di[x];
        q.chain(&[&q.d, dx]).first_diff(&q.chain(&[dx, &q.d])).map(|mut w| {
            w.insert(0, x);
            w
        })
    });
    rep.record("D_commutes_delta", d_comm);

    let nu_central = (0..dim).find(|&i| {
        let e = SVec::basis(i, n);
        h.alg.mul(&q.nu, &e) != h.alg.mul(&e, &q.nu)
    });
    rep.record("nu_central", nu_central.map(|i| vec![i]));
    let nu_leg = LegElement::from_vec(n, dim, &q.nu);
    let lhs = LegElement::from_flat(n, vec![dim, dim], &h.delta(&q.nu));
    let rhs = q.chain(&[&q.d_pow(-2), &nu_leg.tensor(&nu_leg)]);
    rep.record("delta_nu", diff(&lhs, &rhs));

    if let Some(v) = &q.ribbon {
        rep.extend(check_ribbon(q, v));
    }
    rep
}

/// Σ S⁻¹(r₁)r₁′ ⊗ r₂′r₂, which must equal 1⊗1.
fn inverse_identity(q: &QT) -> LegElement {
    let h = &q.h;
    let n = q.conductor();
    let dim = q.dim();
    let Some(si) = h.antipode_inv() else {
        return LegElement::zero(n, vec![dim, dim]);
    };
    let terms: Vec<(Vec<usize>, &crate::exactfield::Scalar)> = q.r.terms().collect();
    let mut acc = Acc::new(n);
    for (a, x) in &terms {
        for (b, y) in &terms {
            let first = h.alg.mul(&si.cols[a[0]], &SVec::basis(b[0], n));
            let second = h.alg.mul_basis(b[1], a[1]);
            let c = *x * *y;
            for (i, p) in first.iter() {
                for (j, s) in second.iter() {
                    acc.add(i * dim + j, &(&c * &(p * s)));
                }
            }
        }
    }
    LegElement::from_flat(n, vec![dim, dim], &acc.into_svec())
}

/// u and ν, asserting that ν is central and Δ(ν) = D⁻²(ν⊗ν).
pub fn compute_u_nu(q: &QT) -> Result<(SVec, SVec), Error> {
    let rep = validate_qt(&QT { ribbon: None, ..q.clone() });
    for name in ["nu_central", "delta_nu"] {
        if !rep.holds(name) {
            return Err(Error::InternalConventionError(alloc::format!("{name} fails")));
        }
    }
    Ok((q.u.clone(), q.nu.clone()))
}
