//! Exact braided duals, elliptic doubles and Heisenberg doubles of
//! finite-dimensional quasitriangular Hopf algebras.
//!
//! Everything here is exact over ℚ(ζ_N); there are no floats anywhere. The
//! crate is `no_std` and needs only `alloc`; the `parallel` feature pulls in
//! std and rayon for the per-basis-pair constructions.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod braided_dual;
pub mod doubles;
mod error;
pub mod exactfield;
pub mod hopf;
mod par;
pub mod quasitriangular;
pub mod report;
pub mod reps_mcg;
pub mod tensorcore;

pub use error::Error;
