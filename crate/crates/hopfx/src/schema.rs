//! JSON interchange: algebra files and matrix bundles. Scalars are strings
//! in the exact-field grammar.

use std::collections::BTreeMap;

use hopfx_core::exactfield::Scalar;
use hopfx_core::hopf::HopfData;
use hopfx_core::quasitriangular::QT;
use hopfx_core::tensorcore::{Algebra, AlgebraData, LegElement, LinMap, SVec};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum SchemaError {
    #[error("bad scalar {text:?}: {why}")]
    Scalar { text: String, why: String },
    #[error("{what}: index {index} out of range (dim {dim})")]
    Index { what: &'static str, index: usize, dim: usize },
    #[error("{0}: wrong length")]
    Length(&'static str),
    #[error("file has no {0}")]
    Missing(&'static str),
    #[error("inconsistent structure: {0}")]
    Structure(String),
    #[error("conductor must be positive")]
    Conductor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Field {
    pub conductor: u32,
}

/// Structure constants of a (Hopf) algebra. Only `mult` and `unit` are
/// required; a Hopf algebra adds `comult`, `counit`, `antipode`, and a
/// quasitriangular one `R` (and optionally a ribbon element).
///
/// Index conventions: `mult` `[i,j,k,c]` means e_i e_j ∋ c·e_k; `comult`
/// `[i,j,k,c]` means Δ(e_i) ∋ c·e_j⊗e_k; `antipode` `[i,j,c]` means
/// S(e_i) ∋ c·e_j; `R` `[i,j,c]` means R ∋ c·e_i⊗e_j.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: Field,
    pub dim: usize,
    pub unit: Vec<String>,
    pub mult: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<(usize, usize, usize, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<(usize, usize, String)>>,
    #[serde(rename = "R", default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<(usize, usize, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ribbon: Option<Vec<String>>,
}

/// What an algebra file decodes to.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Loaded {
    Algebra(AlgebraData),
    Hopf(HopfData),
    Quasitriangular(QT),
}

fn scalar(text: &str, n: u32) -> Result<Scalar, SchemaError> {
    Scalar::parse(text, n).map_err(|e| SchemaError::Scalar { text: text.into(), why: e.to_string() })
}

fn check_index(what: &'static str, index: usize, dim: usize) -> Result<(), SchemaError> {
    if index < dim {
        Ok(())
    } else {
        Err(SchemaError::Index { what, index, dim })
    }
}

fn dense(what: &'static str, xs: &[String], dim: usize, n: u32) -> Result<Vec<Scalar>, SchemaError> {
    if xs.len() != dim {
        return Err(SchemaError::Length(what));
    }
    xs.iter().map(|s| scalar(s, n)).collect()
}

fn sparse_text(v: &SVec) -> impl Iterator<Item = (usize, String)> + '_ {
    v.iter().map(|(i, c)| (i, c.to_string()))
}

fn dense_text(v: &SVec, dim: usize, n: u32) -> Vec<String> {
    v.to_dense(dim, n).iter().map(Scalar::to_string).collect()
}

/// Accumulate `[i, j, k, c]` entries into per-`i` sparse vectors over the
/// flat index `j·inner + k`.
fn rows3(
    what: &'static str,
    entries: &[(usize, usize, usize, String)],
    dim: usize,
    inner: usize,
    n: u32,
) -> Result<Vec<SVec>, SchemaError> {
    let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); dim * if what == "mult" { dim } else { 1 }];
    for (i, j, k, c) in entries {
        check_index(what, *i, dim)?;
        check_index(what, *j, dim)?;
        check_index(what, *k, dim)?;
        let v = scalar(c, n)?;
        // mult is keyed by the pair (i, j); comult by i with flat (j, k)
        let (row, col) = if what == "mult" { (i * dim + j, *k) } else { (*i, j * inner + k) };
        let slot = acc[row].entry(col).or_insert_with(|| Scalar::zero(n));
        *slot = &*slot + &v;
    }
    Ok(acc.into_iter().map(|m| SVec::from_pairs(n, m)).collect())
}

impl AlgebraFile {
    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    pub fn from_algebra(a: &dyn Algebra) -> Self {
        let n = a.conductor();
        let d = a.dim();
        let mut mult = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let p = a.mul_basis(i, j);
                mult.extend(sparse_text(&p).map(|(k, c)| (i, j, k, c)));
            }
        }
        AlgebraFile {
            field: Field { conductor: n },
            dim: d,
            unit: dense_text(&a.unit(), d, n),
            mult,
            comult: None,
            counit: None,
            antipode: None,
            r: None,
            ribbon: None,
        }
    }

    pub fn from_hopf(h: &HopfData) -> Self {
        let d = h.dim();
        let mut f = Self::from_algebra(&h.alg);
        let mut comult = Vec::new();
        for (i, img) in h.comult.iter().enumerate() {
            comult.extend(sparse_text(img).map(|(p, c)| (i, p / d, p % d, c)));
        }
        f.comult = Some(comult);
        f.counit = Some(h.counit.iter().map(Scalar::to_string).collect());
        let mut antipode = Vec::new();
        for (i, col) in h.antipode.cols.iter().enumerate() {
            antipode.extend(sparse_text(col).map(|(j, c)| (i, j, c)));
        }
        f.antipode = Some(antipode);
        f
    }

    pub fn from_qt(q: &QT) -> Self {
        let mut f = Self::from_hopf(&q.h);
        f.r = Some(q.r.terms().map(|(idx, c)| (idx[0], idx[1], c.to_string())).collect());
        f.ribbon = q.ribbon.as_ref().map(|v| dense_text(v, q.dim(), q.conductor()));
        f
    }

    pub fn to_algebra(&self) -> Result<AlgebraData, SchemaError> {
        let n = self.conductor();
        if n == 0 {
            return Err(SchemaError::Conductor);
        }
        let d = self.dim;
        let unit = SVec::from_dense(&dense("unit", &self.unit, d, n)?);
        let mult = rows3("mult", &self.mult, d, d, n)?;
        AlgebraData::new(n, d, mult, unit).map_err(|e| SchemaError::Structure(e.to_string()))
    }

    pub fn is_hopf(&self) -> bool {
        self.comult.is_some() || self.counit.is_some() || self.antipode.is_some()
    }

    pub fn to_hopf(&self) -> Result<HopfData, SchemaError> {
        let n = self.conductor();
        let d = self.dim;
        let alg = self.to_algebra()?;
        let comult = rows3("comult", self.comult.as_deref().ok_or(SchemaError::Missing("comult"))?, d, d, n)?;
        let counit = dense("counit", self.counit.as_deref().ok_or(SchemaError::Missing("counit"))?, d, n)?;
        let mut cols = vec![BTreeMap::new(); d];
        for (i, j, c) in self.antipode.as_deref().ok_or(SchemaError::Missing("antipode"))? {
            check_index("antipode", *i, d)?;
            check_index("antipode", *j, d)?;
            let slot = cols[*i].entry(*j).or_insert_with(|| Scalar::zero(n));
            *slot = &*slot + &scalar(c, n)?;
        }
        let antipode = LinMap::from_cols(d, d, n, cols.into_iter().map(|m| SVec::from_pairs(n, m)).collect());
        HopfData::new(alg, comult, counit, antipode).map_err(|e| SchemaError::Structure(e.to_string()))
    }

    pub fn to_qt(&self) -> Result<QT, SchemaError> {
        let n = self.conductor();
        let d = self.dim;
        let h = self.to_hopf()?;
        let mut terms = Vec::new();
        for (i, j, c) in self.r.as_deref().ok_or(SchemaError::Missing("R"))? {
            check_index("R", *i, d)?;
            check_index("R", *j, d)?;
            terms.push((vec![*i, *j], scalar(c, n)?));
        }
        let r = LegElement::from_terms(n, vec![d, d], terms).map_err(|e| SchemaError::Structure(e.to_string()))?;
        let ribbon = match &self.ribbon {
            Some(v) => Some(SVec::from_dense(&dense("ribbon", v, d, n)?)),
            None => None,
        };
        let q = QT::new(h, r).map_err(|e| SchemaError::Structure(e.to_string()))?;
        Ok(q.with_ribbon(ribbon))
    }

    /// Decode to the richest structure the file carries.
    pub fn load(&self) -> Result<Loaded, SchemaError> {
        if self.r.is_some() {
            Ok(Loaded::Quasitriangular(self.to_qt()?))
        } else if self.is_hopf() {
            Ok(Loaded::Hopf(self.to_hopf()?))
        } else {
            Ok(Loaded::Algebra(self.to_algebra()?))
        }
    }
}

/// One sparse matrix; `[i, j, c]` is the entry in row i, column j.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, String)>,
}

impl MatrixJson {
    pub fn from_linmap(m: &LinMap) -> Self {
        let mut entries: Vec<(usize, usize, String)> = m.entries().map(|(i, j, c)| (i, j, c.to_string())).collect();
        entries.sort_by_key(|e| (e.0, e.1));
        MatrixJson { rows: m.dst, cols: m.src, entries }
    }

    pub fn to_linmap(&self, n: u32) -> Result<LinMap, SchemaError> {
        let mut es = Vec::with_capacity(self.entries.len());
        for (i, j, c) in &self.entries {
            check_index("matrix row", *i, self.rows)?;
            check_index("matrix column", *j, self.cols)?;
            es.push((*i, *j, scalar(c, n)?));
        }
        Ok(LinMap::from_entries(self.cols, self.rows, n, es))
    }
}

/// Named matrices over a common field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixBundle {
    pub field: Field,
    pub matrices: BTreeMap<String, MatrixJson>,
}

impl MatrixBundle {
    pub fn new(n: u32) -> Self {
        MatrixBundle { field: Field { conductor: n }, matrices: BTreeMap::new() }
    }

    pub fn insert(&mut self, name: impl Into<String>, m: &LinMap) {
        self.matrices.insert(name.into(), MatrixJson::from_linmap(m));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfx_core::hopf::{cyclic_table, example_drinfeld_double, example_sweedler};

    #[test]
    fn qt_round_trip() {
        let (h, r) = example_sweedler(&Scalar::one(1));
        let q = QT::new(h, r).unwrap();
        let f = AlgebraFile::from_qt(&q);
        let text = serde_json::to_string(&f).unwrap();
        let back: AlgebraFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
        let q2 = back.to_qt().unwrap();
        assert_eq!(q2.h.alg.mult, q.h.alg.mult);
        assert_eq!(q2.h.comult, q.h.comult);
        assert_eq!(q2.h.antipode, q.h.antipode);
        assert_eq!(q2.r, q.r);
    }

    #[test]
    fn cyclotomic_scalars_survive() {
        let (h, r) = example_drinfeld_double(&cyclic_table(3), 3).unwrap();
        let q = QT::new(h, r).unwrap();
        let f = AlgebraFile::from_qt(&q);
        assert_eq!(f.to_qt().unwrap().r, q.r);
    }

    #[test]
    fn rejects_bad_input() {
        let (h, _) = example_sweedler(&Scalar::one(1));
        let mut f = AlgebraFile::from_hopf(&h);
        f.mult.push((9, 0, 0, "1".into()));
        assert!(matches!(f.to_algebra(), Err(SchemaError::Index { .. })));
        let mut f = AlgebraFile::from_hopf(&h);
        f.unit[0] = "1/0".into();
        assert!(matches!(f.to_algebra(), Err(SchemaError::Scalar { .. })));
        let f = AlgebraFile::from_hopf(&h);
        assert!(matches!(f.to_qt(), Err(SchemaError::Missing("R"))));
    }

    #[test]
    fn matrix_round_trip() {
        let m = LinMap::from_entries(3, 2, 1, [(0, 2, Scalar::from_frac(1, -1, 2)), (1, 0, Scalar::one(1))]);
        let j = MatrixJson::from_linmap(&m);
        assert_eq!((j.rows, j.cols), (2, 3));
        assert_eq!(j.to_linmap(1).unwrap(), m);
    }
}
