use num_bigint::BigInt;

use crate::arith::{is_prime_u64, modulo_u64};
use crate::{Error, Result};

/// The prime field `F_p`. Elements are plain `u64` values in `[0, p)`; the
/// modulus lives here rather than in each element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Primes up to 2^63 are accepted.
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime_u64(p) || p >= 1 << 63 {
            return Err(Error::NotPrime(p.into()));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        x % self.p
    }

    pub fn from_i64(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn from_i128(&self, x: i128) -> u64 {
        x.rem_euclid(self.p as i128) as u64
    }

    pub fn from_bigint(&self, x: &BigInt) -> u64 {
        modulo_u64(x, self.p)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut b: u64, mut e: u128) -> u64 {
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    /// Inverse of a nonzero element.
    pub fn inv(&self, a: u64) -> Option<u64> {
        (a % self.p != 0).then(|| self.pow(a, (self.p - 2) as u128))
    }

    /// Euler's criterion: 0 at zero, +1 on nonzero squares, -1 otherwise.
    pub fn quadratic_character(&self, x: u64) -> i8 {
        let x = x % self.p;
        if x == 0 {
            return 0;
        }
        if self.p == 2 {
            return 1;
        }
        if self.pow(x, ((self.p - 1) / 2) as u128) == 1 {
            1
        } else {
            -1
        }
    }

    pub fn is_square(&self, x: u64) -> bool {
        self.quadratic_character(x) >= 0
    }

    /// Table of χ(x) for every x in F_p.
    pub fn character_table(&self) -> alloc::vec::Vec<i8> {
        let mut t = alloc::vec![-1i8; self.p as usize];
        t[0] = 0;
        for x in 1..self.p {
            t[self.mul(x, x) as usize] = 1;
        }
        t
    }

    pub fn elements(&self) -> core::ops::Range<u64> {
        0..self.p
    }
}
