//! The universal property of E^(k): a pair (X_B, Y_B) in B⊗H satisfying
//! the k-reflection identity and the elliptic relation induces the algebra
//! map e^i⊗e^j ↦ (id⊗e^i)(X_B) · (id⊗e^j)(Y_B).

use alloc::string::String;

use super::elliptic::{check_elliptic_relation, EllipticDouble};
use super::heisenberg::HeisenbergDouble;
use crate::braided_dual::{check_k_reflection, factorization_map};
use crate::error::Error;
use crate::par;
use crate::quasitriangular::QT;
use crate::report::Report;
use crate::tensorcore::{check_algebra_map, Algebra, LegElement, LinMap};

/// The preconditions: k-reflection for X_B and Y_B, and the elliptic
/// relation for the pair.
pub fn universal_preconditions(q: &QT, k: i32, b: &dyn Algebra, xb: &LegElement, yb: &LegElement) -> Report {
    let mut rep = Report::new();
    for (tag, z) in [("X", xb), ("Y", yb)] {
        for c in check_k_reflection(q, b, z, k).checks {
            rep.record(&alloc::format!("{tag}_{}", c.name), c.witness);
        }
    }
    rep.extend(check_elliptic_relation(q, b, xb, yb));
    rep
}

/// The linear map alone, with no checks.
pub fn universal_map(d: usize, b: &dyn Algebra, xb: &LegElement, yb: &LegElement) -> LinMap {
    let n = b.conductor();
    let xs: alloc::vec::Vec<_> = (0..d).map(|i| xb.slice(1, i).to_flat()).collect();
    let ys: alloc::vec::Vec<_> = (0..d).map(|j| yb.slice(1, j).to_flat()).collect();
    let cols = par::map_range(d * d, |p| b.mul(&xs[p / d], &ys[p % d]));
    LinMap::from_cols(d * d, b.dim(), n, cols)
}

/// The induced algebra map E^(k) → B. Preconditions are checked first;
/// multiplicativity and unitality are verified on all basis pairs.
pub fn universal_morphism(
    q: &QT,
    e: &EllipticDouble,
    b: &dyn Algebra,
    xb: &LegElement,
    yb: &LegElement,
) -> Result<LinMap, Error> {
    let pre = universal_preconditions(q, e.k, b, xb, yb);
    if let Some(c) = pre.failures().next() {
        return Err(Error::PreconditionFailed { check: String::from(&c.name[..]), witness: c.witness.clone() });
    }
    let map = universal_map(e.d, b, xb, yb);
    if let Some(w) = check_algebra_map(&map, &e.alg, b) {
        return Err(Error::HomomorphismCheckFailed { witness: w });
    }
    Ok(map)
}

/// Φ: E^(0) → D_H with its rank; bijective (inverse stored) exactly when H
/// is factorizable.
#[derive(Clone, Debug)]
pub struct PhiData {
    pub map: LinMap,
    pub rank: usize,
    pub inverse: Option<LinMap>,
}

pub fn build_phi(q: &QT, e0: &EllipticDouble, dh: &HeisenbergDouble) -> Result<PhiData, Error> {
    let map = universal_morphism(q, e0, &dh.alg, &dh.x, &dh.y)?;
    let rank = map.rank();
    let expected = q.dim() * factorization_map(q).rank();
    if rank != expected {
        return Err(Error::InternalConventionError(alloc::format!("rank Φ = {rank}, expected {expected}")));
    }
    let inverse = map.inverse().ok();
    Ok(PhiData { map, rank, inverse })
}
