//! T, the elliptic double E^(k), the Heisenberg double D_H, the universal
//! morphism out of E^(k), and Φ: E^(0) → D_H.

mod crossed;
mod elliptic;
mod heisenberg;
mod t_elem;
mod universal;

pub use crossed::{CrossedProduct, MATERIALIZE_DIM};
pub use elliptic::{build_elliptic, build_elliptic_unchecked, check_elliptic_relation, EllipticDouble};
pub use heisenberg::{build_heisenberg, HeisenbergDouble};
pub use t_elem::{build_t, build_t_variant, check_t_hexagons, TVariant};
pub use universal::{build_phi, universal_map, universal_morphism, universal_preconditions, PhiData};
