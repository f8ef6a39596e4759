use num_bigint::BigInt;
use num_traits::Zero;

use super::{igusa_invariants, IgusaInvariants};
use crate::arith::valuation_or_inf;
use crate::{Error, Result};

/// Stable reduction type at an odd prime, as far as the invariants decide it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionType {
    Good,
    /// Irreducible with one node; `e` is the order of the component group.
    TypeII { e: u64 },
    Other,
}

/// `v(x^5 / J10^i)`-style combination `k·v(x) - i·v(y)`, with `+∞` for `x = 0`.
fn weighted(vx: Option<i64>, k: i64, vy: i64, i: i64) -> Option<i64> {
    vx.map(|v| k * v - i * vy)
}

/// Classifies from precomputed invariants. `p` must be an odd prime.
pub fn classify_invariants(inv: &IgusaInvariants, p: u64) -> Result<ReductionType> {
    if p % 2 == 0 {
        return Err(Error::OutOfContract("reduction type is only classified at odd primes".into()));
    }
    let p = BigInt::from(p);
    let vj: [Option<i64>; 5] = inv.js().map(|j| valuation_or_inf(j, &p));
    let v10 = vj[4].ok_or(Error::MultipleRoot)?;

    let good = (1..=5i64).all(|i| weighted(vj[i as usize - 1], 5, v10, i).map_or(true, |v| v >= 0));
    if good {
        return Ok(ReductionType::Good);
    }
    if inv.i12.is_zero() {
        return Ok(ReductionType::Other);
    }
    let v12 = valuation_or_inf(&inv.i12, &p).expect("nonzero");
    let integral = (1..=5i64).all(|i| weighted(vj[i as usize - 1], 6, v12, i).map_or(true, |v| v >= 0));
    let six_e = 6 * v10 - 5 * v12;
    if !integral || six_e <= 0 {
        return Ok(ReductionType::Other);
    }
    if six_e % 6 != 0 {
        return Err(Error::NonIntegralExponent { six_e });
    }
    Ok(ReductionType::TypeII { e: (six_e / 6) as u64 })
}

/// Good / type (II) / other at the odd prime `p` for an integer sextic
/// given low-first.
pub fn classify_reduction(f: &[BigInt], p: u64) -> Result<ReductionType> {
    classify_invariants(&igusa_invariants(f)?, p)
}
