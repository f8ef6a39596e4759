//! `GSp4(F_ℓ)` for the form `J = [[0, I], [-I, 0]]`: matrix arithmetic,
//! transvections, subgroup closure and the characteristic-polynomial
//! criterion for generating all of `Sp4(F_ℓ)`.

mod closure;
mod criterion;
mod matrix;

pub use closure::{closure, qualifying_pair, sp4_order, ClosureReport};
pub use criterion::{thm34_check, CharPolyQuartic, Thm34Report};
pub use matrix::{gsp_order, SpMatrix};
