use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::hopf::HopfError;
use crate::tensorcore::TensorError;

/// Errors of the constructions above the Hopf layer. Failed identities that
/// are the *subject* of a check are reported, not raised; these variants are
/// for constructions that cannot proceed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    Hopf(HopfError),
    DimMismatch,
    NotInvertible(String),
    /// A built-in construction failed its own postcondition.
    InternalConventionError(String),
    IsoCheckFailed(String),
    PreconditionFailed {
        check: String,
        witness: Option<Vec<usize>>,
    },
    HomomorphismCheckFailed {
        witness: Vec<usize>,
    },
    CoidealCheckFailed {
        witness: Vec<usize>,
    },
    ModuleAxiomFailed {
        witness: Vec<usize>,
    },
    NotFactorizable,
    NoRibbon,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Hopf(e) => write!(f, "{e}"),
            Error::DimMismatch => f.write_str("dimension mismatch"),
            Error::NotInvertible(what) => write!(f, "{what} is not invertible"),
            Error::InternalConventionError(why) => write!(f, "internal convention error: {why}"),
            Error::IsoCheckFailed(why) => write!(f, "isomorphism check failed: {why}"),
            Error::PreconditionFailed { check, witness } => write!(f, "precondition {check} failed at {witness:?}"),
            Error::HomomorphismCheckFailed { witness } => write!(f, "not an algebra map at {witness:?}"),
            Error::CoidealCheckFailed { witness } => write!(f, "coideal check failed at {witness:?}"),
            Error::ModuleAxiomFailed { witness } => write!(f, "module axiom failed at {witness:?}"),
            Error::NotFactorizable => f.write_str("not factorizable"),
            Error::NoRibbon => f.write_str("no ribbon element"),
        }
    }
}

impl From<HopfError> for Error {
    fn from(e: HopfError) -> Self {
        Error::Hopf(e)
    }
}

impl From<TensorError> for Error {
    fn from(e: TensorError) -> Self {
        match e {
            TensorError::DimMismatch => Error::DimMismatch,
            TensorError::NotInvertible => Error::NotInvertible("element".into()),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
