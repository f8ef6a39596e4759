use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::prime::is_prime;
use crate::{Error, Result};

/// Default work budget for [`factorize`], in basic loop iterations.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

const TRIAL_BOUND: u32 = 10_000;

/// Prime factorization with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    pub factors: Vec<(BigInt, u32)>,
}

impl Factorization {
    pub fn value(&self) -> BigInt {
        self.factors
            .iter()
            .fold(BigInt::one(), |acc, (p, e)| acc * num_traits::pow(p.clone(), *e as usize))
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|(p, _)| p)
    }

    fn push(&mut self, p: BigInt, e: u32) {
        match self.factors.binary_search_by(|(q, _)| q.cmp(&p)) {
            Ok(i) => self.factors[i].1 += e,
            Err(i) => self.factors.insert(i, (p, e)),
        }
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct FactorizeOptions {
    pub budget: u64,
    /// Primes tried before anything else.
    pub hints: Vec<BigInt>,
}

impl Default for FactorizeOptions {
    fn default() -> Self {
        FactorizeOptions {
            budget: DEFAULT_BUDGET,
            hints: Vec::new(),
        }
    }
}

pub fn factorize(n: &BigInt) -> Result<Factorization> {
    factorize_with(n, &FactorizeOptions::default())
}

/// Trial division followed by Brent's variant of Pollard rho.
pub fn factorize_with(n: &BigInt, opts: &FactorizeOptions) -> Result<Factorization> {
    if !n.is_positive() {
        return Err(Error::OutOfContract(alloc::format!(
            "factorize expects n >= 1, got {n}"
        )));
    }
    let mut out = Factorization::default();
    let mut m = n.clone();
    let mut work = 0u64;

    let strip = |m: &mut BigInt, p: &BigInt, out: &mut Factorization| {
        let mut e = 0;
        loop {
            let (q, r) = m.div_rem(p);
            if !r.is_zero() {
                break;
            }
            *m = q;
            e += 1;
        }
        if e > 0 {
            out.push(p.clone(), e);
        }
    };

    for h in &opts.hints {
        if *h > BigInt::one() && is_prime(h).unwrap_or(false) {
            strip(&mut m, h, &mut out);
        }
    }

    let mut d = 2u32;
    while d <= TRIAL_BOUND && BigInt::from(d) * BigInt::from(d) <= m {
        work += 1;
        strip(&mut m, &BigInt::from(d), &mut out);
        d += if d == 2 { 1 } else { 2 };
    }
    if m.is_one() {
        return Ok(out);
    }

    let mut stack = alloc::vec![m];
    while let Some(c) = stack.pop() {
        if c.is_one() {
            continue;
        }
        if is_prime(&c)? {
            out.push(c, 1);
            continue;
        }
        let remaining = opts.budget.saturating_sub(work);
        let (d, used) = brent_rho(&c, remaining).ok_or(Error::FactorizationTimeout {
            n: n.clone(),
            budget: opts.budget,
        })?;
        work += used;
        let other = &c / &d;
        stack.push(d);
        stack.push(other);
    }
    Ok(out)
}

/// Returns a nontrivial factor of the composite `n` and the iterations used.
fn brent_rho(n: &BigInt, budget: u64) -> Option<(BigInt, u64)> {
    if n.is_even() {
        return Some((BigInt::from(2), 1));
    }
    let mut used = 0u64;
    for c in 1u32.. {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c).mod_floor(n);
        let mut y = BigInt::from(2);
        let mut r = 1u64;
        let mut q = BigInt::one();
        let mut g = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        const BATCH: u64 = 64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = f(&y);
                    q = (q * (&x - &y).abs()).mod_floor(n);
                }
                g = q.gcd(n);
                k += BATCH;
                used += BATCH;
                if used > budget {
                    return None;
                }
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                used += 1;
                if !g.is_one() || used > budget {
                    break;
                }
            }
        }
        if g != *n && !g.is_one() {
            return Some((g, used));
        }
        if used > budget {
            return None;
        }
    }
    None
}
