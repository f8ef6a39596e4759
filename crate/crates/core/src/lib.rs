//! Exact arithmetic and algorithms for building genus-2 curves over the
//! rationals whose 4-dimensional mod-ℓ Galois representation is a tamely
//! ramified realization of `GSp4(F_ℓ)`.
//!
//! The pipeline, end to end:
//!
//! 1. pick a supersingular parameter `a` from the Deuring polynomial
//!    ([`finitefield::supersingular_param`]);
//! 2. pick two auxiliary primes `q1`, `q2 ≡ 1 (mod ℓ)` and Frobenius data
//!    for them ([`weilselect::select_aux`]);
//! 3. find curves over `F_q1`, `F_q2` with those point counts
//!    ([`weilselect::search_curve`]);
//! 4. glue everything together with the Chinese remainder theorem
//!    ([`synth::synthesize`]);
//! 5. re-check every hypothesis from scratch ([`verify::verify_certificate`]).
//!
//! The crate is `no_std` and only needs an allocator. File formats, the
//! command line and multi-threaded search live in the `forge` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
pub mod error;
pub mod finitefield;
pub mod hypercurve;
pub mod igusa;
pub mod synth;
pub mod sympgroup;
pub mod verify;
pub mod weilselect;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
