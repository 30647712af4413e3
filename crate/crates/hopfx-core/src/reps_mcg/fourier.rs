//! The quantum Fourier transform on D_H: the A-generator of the SL2(Z)~
//! action, moved to E^(0) through the ribbon shift and then to D_H via Φ.

use alloc::format;
use alloc::sync::Arc;

use super::mcg::{build_mcg_action, MCGAction};
use crate::braided_dual::{build_braided_dual_with, is_factorizable, shift_iso};
use crate::doubles::{build_elliptic, build_heisenberg, build_phi, build_t, HeisenbergDouble, PhiData};
use crate::error::Error;
use crate::quasitriangular::{build_h2coop, find_ribbon, he_action_on_dual, QT};
use crate::report::Report;
use crate::tensorcore::{check_algebra_map, LinMap};

#[derive(Clone, Debug)]
pub struct FourierData {
    /// F = ΦΘ⁻¹AΘΦ⁻¹ on D_H.
    pub f: LinMap,
    /// B transported the same way.
    pub b: LinMap,
    /// Θ: E^(0) → E^(1), the ribbon shift on both tensor slots.
    pub theta: LinMap,
    pub phi: PhiData,
    pub heisenberg: HeisenbergDouble,
    pub mcg: MCGAction,
}

/// The ribbon shift ~H_0 → ~H_1 (inverting the other direction if that is
/// the verified one).
fn shift_0_to_1(q: &QT, act: &Arc<crate::quasitriangular::DualAction>) -> Result<LinMap, Error> {
    let s = shift_iso(q, act, 0, 1)?;
    if s.to == 1 {
        return Ok(s.map);
    }
    let s = shift_iso(q, act, 1, 1)?;
    if s.to == 0 {
        return s.map.inverse().map_err(|_| Error::IsoCheckFailed("ribbon shift not invertible".into()));
    }
    Err(Error::IsoCheckFailed("no ribbon shift between ~H_0 and ~H_1".into()))
}

pub fn fourier_transform(q: &QT) -> Result<FourierData, Error> {
    if !is_factorizable(q) {
        return Err(Error::NotFactorizable);
    }
    let q = match &q.ribbon {
        Some(_) => q.clone(),
        None => q.clone().with_ribbon(Some(find_ribbon(q).ok_or(Error::NoRibbon)?)),
    };
    let act = Arc::new(he_action_on_dual(&q.h)?);
    let h0 = build_braided_dual_with(&q, act.clone(), 0)?;
    let h1 = build_braided_dual_with(&q, act.clone(), 1)?;
    let t = build_t(&q);
    let e0 = build_elliptic(&q, &h0, &t)?;
    let e1 = build_elliptic(&q, &h1, &t)?;
    let s = shift_0_to_1(&q, &act)?;
    let theta = s.kron(&s);
    if let Some(w) = check_algebra_map(&theta, &e0.alg, &e1.alg) {
        return Err(Error::IsoCheckFailed(format!("Θ is not multiplicative at {w:?}")));
    }
    let theta_inv = theta.inverse().map_err(|_| Error::IsoCheckFailed("Θ not invertible".into()))?;
    let dh = build_heisenberg(&q, &h0, &build_h2coop(&q)?)?;
    let phi = build_phi(&q, &e0, &dh)?;
    let phi_inv = phi.inverse.clone().ok_or(Error::NotFactorizable)?;
    let mcg = build_mcg_action(&q, &e1)?;
    let transport = |m: &LinMap| phi.map.compose(&theta_inv).compose(m).compose(&theta).compose(&phi_inv);
    let f = transport(&mcg.a);
    let b = transport(&mcg.b);
    Ok(FourierData { f, b, theta, phi, heisenberg: dh, mcg })
}

/// F and B_D as algebra automorphisms of D_H and the transported relations
/// F⁴ = (F B_D)³, F² B_D = B_D F².
pub fn check_fourier(fd: &FourierData) -> Report {
    let mut rep = Report::new();
    let dh = &fd.heisenberg.alg;
    rep.record("F_multiplicative", check_algebra_map(&fd.f, dh, dh));
    rep.pass("F_bijective", fd.f.inverse().is_ok());
    rep.record("B_D_multiplicative", check_algebra_map(&fd.b, dh, dh));
    let d = |l: &LinMap, r: &LinMap| l.first_diff(r).map(|w| w.to_vec());
    rep.record("F4_eq_FB3", d(&fd.f.pow(4), &fd.f.compose(&fd.b).pow(3)));
    let f2 = fd.f.pow(2);
    rep.record("F2B_comm", d(&f2.compose(&fd.b), &fd.b.compose(&f2)));
    rep
}
