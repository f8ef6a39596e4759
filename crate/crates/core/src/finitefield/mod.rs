//! Prime fields, their quadratic extensions, and small-degree polynomials
//! over them.

mod deuring;
mod ext;
mod poly;
mod prime;
mod quartic;

pub use deuring::{
    deuring_poly, elliptic_point_count, supersingular_param, supersingular_params,
    SupersingularParam,
};
pub use ext::{Fp2Element, QuadraticExtension};
pub use poly::FpPoly;
pub use prime::PrimeField;
pub use quartic::{factor_small, quartic_factor_pattern};
