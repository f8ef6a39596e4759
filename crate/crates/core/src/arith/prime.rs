use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// The first thirteen primes form a deterministic Miller-Rabin witness set
/// for every n below this bound.
pub const MILLER_RABIN_LIMIT: u128 = 3_317_044_064_679_887_385_961_981;

const WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Deterministic primality test; errors above [`MILLER_RABIN_LIMIT`].
pub fn is_prime(n: &BigInt) -> Result<bool> {
    if *n < BigInt::from(2) {
        return Ok(false);
    }
    if *n >= BigInt::from(MILLER_RABIN_LIMIT) {
        return Err(Error::PrimalityRange(n.clone()));
    }
    for &w in &WITNESSES {
        if *n == BigInt::from(w) {
            return Ok(true);
        }
        if (n % w).is_zero() {
            return Ok(false);
        }
    }
    let n_minus_one: BigInt = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'witness: for &w in &WITNESSES {
        let mut x = BigInt::from(w).modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x).mod_floor(n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic primality test for machine integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        let w = w as u64;
        if n == w {
            return true;
        }
        if n % w == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &w in &WITNESSES {
        let mut x = pow_mod(w as u64, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes `q ≡ 1 (mod ell)` in increasing order.
pub fn primes_one_mod(ell: u64) -> impl Iterator<Item = u64> {
    (1u64..)
        .map_while(move |k| k.checked_mul(ell).and_then(|v| v.checked_add(1)))
        .filter(|&q| is_prime_u64(q))
}
