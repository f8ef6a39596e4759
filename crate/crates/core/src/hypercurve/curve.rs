use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::finitefield::{FpPoly, PrimeField};
use crate::igusa::poly_discriminant;
use crate::{Error, Result};

/// Integer sextic `f`, coefficients indexed by power of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperCurve {
    f: [BigInt; 7],
}

impl HyperCurve {
    /// Checks `f6 ≠ 0` and `disc(f) ≠ 0`.
    pub fn new(f: [BigInt; 7]) -> Result<Self> {
        if f[6].is_zero() {
            return Err(Error::DegreeMismatch {
                expected: 6,
                found: f.iter().rposition(|c| !c.is_zero()).map_or(-1, |i| i as isize),
            });
        }
        if poly_discriminant(&f)?.is_zero() {
            return Err(Error::MultipleRoot);
        }
        Ok(HyperCurve { f })
    }

    /// No checks at all; for diagnosing curves that may be degenerate.
    pub fn new_unchecked(f: [BigInt; 7]) -> Self {
        HyperCurve { f }
    }

    /// `[f6, f5, ..., f0]`.
    pub fn from_high_first(coeffs: [BigInt; 7]) -> Result<Self> {
        let mut f = coeffs;
        f.reverse();
        Self::new(f)
    }

    pub fn coeffs(&self) -> &[BigInt; 7] {
        &self.f
    }

    /// `f_i`, the coefficient of `x^i`.
    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.f[i]
    }

    pub fn high_first(&self) -> [BigInt; 7] {
        let mut h = self.f.clone();
        h.reverse();
        h
    }

    pub fn discriminant(&self) -> BigInt {
        poly_discriminant(&self.f).unwrap_or_else(|_| BigInt::zero())
    }
}

impl fmt::Display for HyperCurve {
    /// `[f6,f5,f4,f3,f2,f1,f0]`.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str("[")?;
        for (k, c) in self.f.iter().rev().enumerate() {
            if k > 0 {
                out.write_str(",")?;
            }
            write!(out, "{c}")?;
        }
        out.write_str("]")
    }
}

/// `f mod p` for an odd prime `p` of good reduction.
pub fn reduce_curve(c: &HyperCurve, p: u64) -> Result<FpPoly> {
    if p == 2 {
        return Err(Error::OutOfContract("reduction is only taken at odd primes".into()));
    }
    let field = PrimeField::new(p)?;
    let g = FpPoly::new(field, c.f.iter().map(|x| field.from_bigint(x)));
    if g.degree() != Some(6) {
        return Err(Error::DegenerateLeading(p));
    }
    // with the leading term intact, p | disc(f) iff f mod p is not squarefree
    if !g.is_squarefree() {
        return Err(Error::BadReduction(p));
    }
    Ok(g)
}
