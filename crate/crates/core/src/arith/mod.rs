//! Exact integer and rational arithmetic shared by every other module.

mod crt;
mod factor;
mod prime;

pub use crt::crt_solve;
pub(crate) use crt::modulus_product;
pub use factor::{factorize, factorize_with, Factorization, FactorizeOptions, DEFAULT_BUDGET};
pub use prime::{is_prime, is_prime_u64, primes_one_mod, MILLER_RABIN_LIMIT};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

/// Exact square root of `n`, if `n` is a perfect square.
pub fn is_perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// `p`-adic valuation of a nonzero integer.
pub fn int_valuation(n: &BigInt, p: &BigInt) -> Result<i64> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut v = 0;
    let mut m = n.abs();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return Ok(v);
        }
        m = q;
        v += 1;
    }
}

/// `p`-adic valuation of a nonzero rational; negative when `p` divides the
/// denominator.
pub fn padic_valuation(x: &BigRational, p: &BigInt) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(int_valuation(x.numer(), p)? - int_valuation(x.denom(), p)?)
}

/// Same as [`padic_valuation`] but with `None` standing for `+∞` at zero.
pub fn valuation_or_inf(x: &BigRational, p: &BigInt) -> Option<i64> {
    padic_valuation(x, p).ok()
}

/// Least non-negative residue of `n` modulo `m > 0`.
pub fn modulo(n: &BigInt, m: &BigInt) -> BigInt {
    n.mod_floor(m)
}

/// Least non-negative residue of `n` modulo a machine-sized `m`.
pub fn modulo_u64(n: &BigInt, m: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(m));
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

/// Checks that `A`, `A - 4ℓ`, `A - 8ℓ` are not all perfect squares.
///
/// Always `true` for positive `A` and prime `ℓ`; this is a runtime check of
/// that fact rather than a filter.
pub fn lemma_aside_check(a: &BigInt, ell: &BigInt) -> bool {
    let step = ell * 4u32;
    let all_squares = (0..3u32).all(|k| is_perfect_square(&(a - &step * k)).is_some());
    !all_squares
}
