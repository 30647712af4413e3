//! Sparse leg-indexed multilinear algebra: vectors, matrices, algebras given
//! by structure constants, elements of tensor products, and exact solving.

mod algebra;
mod leg;
pub mod linalg;
mod linmap;
mod svec;

use core::fmt;

pub use algebra::{
    check_algebra_map, check_associativity_exhaustive, check_associativity_sampled, check_associativity_scaled, kron,
    linmap_of_left_mult, solve_in_algebra, Algebra, AlgebraData, TensorAlg, ASSOC_SAMPLES, EXHAUSTIVE_ASSOC_DIM,
};
pub use leg::LegElement;
pub use linmap::LinMap;
pub use svec::{Acc, SVec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TensorError {
    DimMismatch,
    NotInvertible,
}

impl fmt::Display for TensorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorError::DimMismatch => f.write_str("dimension mismatch"),
            TensorError::NotInvertible => f.write_str("element is not invertible"),
        }
    }
}
