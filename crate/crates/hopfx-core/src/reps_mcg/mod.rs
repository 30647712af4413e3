//! Punctured-torus braid group representations, the SL2(Z)~ action on the
//! elliptic double and the quantum Fourier transform on D_H.

mod braid;
mod fourier;
mod mcg;

pub use braid::{build_braid_rep, check_presentation, flip_operator, leg_operator, BraidRep, SigmaVariant};
pub use fourier::{check_fourier, fourier_transform, FourierData};
pub use mcg::{
    build_mcg_action, build_mcg_action_variant, check_automorphisms, check_mcg_relations, BVariant, MCGAction,
};

#[cfg(test)]
mod tests;
