//! Finite-dimensional Hopf algebras by structure constants.

mod examples;
mod module;

use core::fmt;

use alloc::borrow::Cow;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

pub use examples::{
    cyclic_table, example_drinfeld_double, example_drinfeld_double_of, example_group_algebra, example_sweedler,
    symmetric_table, GroupTable,
};
pub use module::ModuleData;

use crate::exactfield::Scalar;
use crate::par;
use crate::report::Report;
use crate::tensorcore::{Acc, Algebra, AlgebraData, LegElement, LinMap, SVec, TensorError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfError {
    NotAGroup(String),
    DimMismatch,
    NotInvertible,
    /// Built-in constructions that fail their own validators.
    InternalConventionError(String),
}

impl fmt::Display for HopfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HopfError::NotAGroup(why) => write!(f, "not a group: {why}"),
            HopfError::DimMismatch => f.write_str("dimension mismatch"),
            HopfError::NotInvertible => f.write_str("not invertible"),
            HopfError::InternalConventionError(why) => write!(f, "internal convention error: {why}"),
        }
    }
}

impl From<TensorError> for HopfError {
    fn from(e: TensorError) -> Self {
        match e {
            TensorError::DimMismatch => HopfError::DimMismatch,
            TensorError::NotInvertible => HopfError::NotInvertible,
        }
    }
}

/// Structure constants of a Hopf algebra. `comult[i]` is Δ(e_i) over the
/// flattened index `j·d + k` of e_j ⊗ e_k; column j of `antipode` is S(e_j).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    pub alg: AlgebraData,
    pub comult: Vec<SVec>,
    pub counit: Vec<Scalar>,
    pub antipode: LinMap,
    antipode_inv: Option<LinMap>,
}

impl HopfData {
    /// Assemble and invert the antipode. A singular antipode is kept (so the
    /// validator can report it) but leaves `antipode_inv` empty.
    pub fn new(alg: AlgebraData, comult: Vec<SVec>, counit: Vec<Scalar>, antipode: LinMap) -> Result<Self, HopfError> {
        let d = alg.dim;
        if comult.len() != d
            || counit.len() != d
            || antipode.src != d
            || antipode.dst != d
            || comult.iter().any(|c| c.max_index().is_some_and(|m| m >= d * d))
        {
            return Err(HopfError::DimMismatch);
        }
        let antipode_inv = antipode.inverse().ok();
        Ok(HopfData { alg, comult, counit, antipode, antipode_inv })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim
    }

    pub fn conductor(&self) -> u32 {
        self.alg.n
    }

    pub fn unit_vec(&self) -> &SVec {
        &self.alg.unit
    }

    pub fn antipode_inv(&self) -> Option<&LinMap> {
        self.antipode_inv.as_ref()
    }

    /// S⁻¹; only call on validated data.
    pub fn s_inv(&self) -> &LinMap {
        self.antipode_inv.as_ref().expect("antipode is not invertible")
    }

    /// Δ(x) over the flattened pair index.
    pub fn delta(&self, x: &SVec) -> SVec {
        let mut acc = Acc::new(self.conductor());
        for (i, v) in x.iter() {
            acc.add_svec(&self.comult[i], v);
        }
        acc.into_svec()
    }

    /// Δ(e_i) as a two-leg element.
    pub fn delta_leg(&self, i: usize) -> LegElement {
        let d = self.dim();
        LegElement::from_flat(self.conductor(), vec![d, d], &self.comult[i])
    }

    pub fn delta_images(&self) -> Vec<LegElement> {
        (0..self.dim()).map(|i| self.delta_leg(i)).collect()
    }

    pub fn eps(&self, x: &SVec) -> Scalar {
        x.pair(&self.counit, self.conductor())
    }

    pub fn counit_images(&self) -> Vec<LegElement> {
        self.counit.iter().map(|v| LegElement::scalar(v.clone())).collect()
    }

    pub fn s(&self, x: &SVec) -> SVec {
        self.antipode.apply(x)
    }

    pub fn unit_leg(&self) -> LegElement {
        LegElement::from_vec(self.conductor(), self.dim(), self.unit_vec())
    }

    /// Apply Δ to one leg of an element (the leg becomes two).
    pub fn delta_on_leg(&self, x: &LegElement, leg: usize) -> LegElement {
        x.substitute(leg, &self.delta_images())
    }

    /// Apply ε to one leg (the leg disappears).
    pub fn eps_on_leg(&self, x: &LegElement, leg: usize) -> LegElement {
        x.contract(leg, &self.counit)
    }

    /// Change of basis: columns of `p` are the new basis vectors written in
    /// the old basis. Returns the transformed Hopf data and the map P⁻¹.
    pub fn change_basis(&self, p: &LinMap) -> Result<(HopfData, LinMap), HopfError> {
        let n = self.conductor();
        let d = self.dim();
        let pinv = p.inverse()?;
        let mult = par::map_range(d * d, |k| {
            let (i, j) = (k / d, k % d);
            pinv.apply(&self.alg.mul(&p.cols[i], &p.cols[j]))
        });
        let alg = AlgebraData::new(n, d, mult, pinv.apply(self.unit_vec()))?;
        let pp = pinv.kron(&pinv);
        let comult = (0..d).map(|i| pp.apply(&self.delta(&p.cols[i]))).collect();
        let counit = (0..d).map(|i| self.eps(&p.cols[i])).collect();
        let antipode = pinv.compose(&self.antipode).compose(p);
        Ok((HopfData::new(alg, comult, counit, antipode)?, pinv))
    }

    /// Re-base so that e_0 is the unit (no-op if it already is). Returns the
    /// new data and the old→new coordinate map.
    pub fn normalize_unit(&self) -> Result<(HopfData, LinMap), HopfError> {
        let n = self.conductor();
        let d = self.dim();
        if *self.unit_vec() == SVec::basis(0, n) {
            return Ok((self.clone(), LinMap::identity(d, n)));
        }
        let (pivot, _) = self.unit_vec().iter().next().ok_or(HopfError::NotInvertible)?;
        let mut cols: Vec<SVec> = (0..d).map(|i| SVec::basis(i, n)).collect();
        cols[pivot] = SVec::basis(0, n);
        cols[0] = self.unit_vec().clone();
        self.change_basis(&LinMap::from_cols(d, d, n, cols))
    }
}

impl Algebra for HopfData {
    fn dim(&self) -> usize {
        self.alg.dim
    }
    fn conductor(&self) -> u32 {
        self.alg.n
    }
    fn unit(&self) -> SVec {
        self.alg.unit.clone()
    }
    fn mul_basis(&self, i: usize, j: usize) -> Cow<'_, SVec> {
        self.alg.mul_basis(i, j)
    }
}

/// Check every Hopf axiom; each entry carries the first failing basis index.
pub fn validate_hopf(h: &HopfData) -> Report {
    let n = h.conductor();
    let d = h.dim();
    let one = Scalar::one(n);
    let mut rep = Report::new();
    let basis = |i: usize| SVec::basis(i, n);

    rep.record("unit", h.alg.check_unit().map(|i| vec![i]));
    rep.record("associativity", h.alg.check_associativity().map(|t| t.to_vec()));

    let dimg = h.delta_images();
    let coassoc = par::find_first(d, |i| {
        let l = dimg[i].substitute(0, &dimg);
        let r = dimg[i].substitute(1, &dimg);
        (l != r).then(|| vec![i])
    });
    rep.record("coassociativity", coassoc);

    let counit_fail = (0..d).find(|&i| {
        let e = LegElement::from_vec(n, d, &basis(i));
        h.eps_on_leg(&dimg[i], 0) != e || h.eps_on_leg(&dimg[i], 1) != e
    });
    rep.record("counit", counit_fail.map(|i| vec![i]));

    let hh = crate::tensorcore::TensorAlg::new(vec![h as &dyn Algebra, h]);
    let delta_mult = par::find_first(d * d, |k| {
        let (i, j) = (k / d, k % d);
        let lhs = h.delta(&h.alg.mult[k]);
        let rhs = hh.mul(&h.comult[i], &h.comult[j]);
        (lhs != rhs).then(|| vec![i, j])
    });
    rep.record("comult_multiplicative", delta_mult);
    rep.pass("comult_unital", h.delta(h.unit_vec()) == hh.unit());

    let eps_mult = (0..d * d).find(|&k| {
        let (i, j) = (k / d, k % d);
        h.eps(&h.alg.mult[k]) != &h.counit[i] * &h.counit[j]
    });
    rep.record("counit_multiplicative", eps_mult.map(|k| vec![k / d, k % d]));
    rep.pass("counit_unital", h.eps(h.unit_vec()) == one);

    // m(S⊗id)Δ = m(id⊗S)Δ = η∘ε
    let antipode = (0..d).find(|&i| {
        let mut l = Acc::new(n);
        let mut r = Acc::new(n);
        for (k, c) in h.comult[i].iter() {
            let (a, b) = (k / d, k % d);
            l.add_svec(&h.alg.mul(&h.antipode.cols[a], &basis(b)), c);
            r.add_svec(&h.alg.mul(&basis(a), &h.antipode.cols[b]), c);
        }
        let target = h.unit_vec().scale(&h.counit[i]);
        l.into_svec() != target || r.into_svec() != target
    });
    rep.record("antipode", antipode.map(|i| vec![i]));

    let inv_ok = h
        .antipode_inv
        .as_ref()
        .is_some_and(|si| si.compose(&h.antipode).is_identity() && h.antipode.compose(si).is_identity());
    rep.pass("antipode_invertible", inv_ok);
    rep
}

/// The full linear dual with the dual basis e^i: the product is the
/// transposed coproduct and the coproduct the transposed product.
pub fn dual_hopf(h: &HopfData) -> HopfData {
    let n = h.conductor();
    let d = h.dim();
    // e^i e^j = Σ_k c_k^{ij} e^k
    let mut mult: Vec<Acc> = (0..d * d).map(|_| Acc::new(n)).collect();
    for (k, c) in h.comult.iter().enumerate() {
        for (ij, v) in c.iter() {
            mult[ij].add(k, v);
        }
    }
    // Δ(e^k) = Σ m_{ij}^k e^i ⊗ e^j
    let mut comult: Vec<Acc> = (0..d).map(|_| Acc::new(n)).collect();
    for (ij, m) in h.alg.mult.iter().enumerate() {
        for (k, v) in m.iter() {
            comult[k].add(ij, v);
        }
    }
    let unit = SVec::from_dense(&h.counit);
    let alg = AlgebraData { n, dim: d, mult: mult.into_iter().map(Acc::into_svec).collect(), unit };
    let counit = h.unit_vec().to_dense(d, n);
    HopfData::new(alg, comult.into_iter().map(Acc::into_svec).collect(), counit, h.antipode.transpose())
        .expect("dual of well-formed data is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_dual_is_identity_on_constants() {
        let (h, _) = example_sweedler(&Scalar::one(1));
        assert_eq!(dual_hopf(&dual_hopf(&h)), h);
    }

    #[test]
    fn dual_of_z2_has_idempotent_basis_after_change() {
        let h = example_group_algebra(&cyclic_table(2), 1).unwrap();
        let f = dual_hopf(&h);
        assert!(validate_hopf(&f).all_pass());
        // δ_e = (e^0), δ_g = (e^1) are orthogonal idempotents
        let e0 = SVec::basis(0, 1);
        let e1 = SVec::basis(1, 1);
        assert_eq!(f.alg.mul(&e0, &e0), e0);
        assert_eq!(f.alg.mul(&e1, &e1), e1);
        assert!(f.alg.mul(&e0, &e1).is_zero());
    }

    #[test]
    fn normalize_keeps_validity() {
        let h = example_group_algebra(&cyclic_table(3), 1).unwrap();
        let d = dual_hopf(&h);
        let (nd, _) = d.normalize_unit().unwrap();
        assert_eq!(*nd.unit_vec(), SVec::basis(0, 1));
        assert!(validate_hopf(&nd).all_pass());
    }
}
