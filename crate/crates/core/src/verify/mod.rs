//! Re-verification of synthesized curves from first principles, and the
//! fixed `ℓ = 5` curve.
//!
//! Nothing here calls into selection or search: every hypothesis is
//! recomputed with arithmetic, finite-field, invariant, point-count and
//! group primitives only.

mod blocks;
mod certificate;
mod ell5;
mod report;

pub use certificate::{verify_certificate, verify_curve, AuxInput, DiagnosticInput};
pub use ell5::{verify_ell5, verify_ell5_curve, ELL5_CURVE, ELL5_PRIMES, ELL5_REFERENCE};
pub use report::{Check, CheckReport, Status};
