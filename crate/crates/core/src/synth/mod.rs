//! Gluing the local data into one integer sextic: the prime set, the
//! congruence system, CRT, and the resulting certificate.

mod congruence;
mod pipeline;

pub use congruence::{build_congruences, CongruenceRow, CongruenceSystem, RowKind};
pub use pipeline::{
    assemble, plan, prime_set, synthesize, Certificate, Plan, SynthOptions, Witness,
};
