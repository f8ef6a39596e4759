//! Discriminants, Igusa invariants and reduction types of integer sextics.
//!
//! Sextics are passed as coefficient slices indexed by the power of `x`.

mod binform;
mod classify;
mod disc;
mod guards;
mod invariants;

pub use classify::{classify_invariants, classify_reduction, ReductionType};
pub use disc::{discriminant, poly_discriminant};
pub use guards::{
    reduction_guards, GuardPattern, GuardReport, GUARD_MOD16, GUARD_MOD25, GUARD_MOD3,
    GUARD_PATTERNS,
};
pub use invariants::{
    igusa_clebsch, igusa_invariants, igusa_invariants_rational, IgusaInvariants,
};
