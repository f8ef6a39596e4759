use alloc::vec::Vec;
use core::fmt;

use super::PrimeField;

/// Dense polynomial over `F_p`, lowest degree first, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl FpPoly {
    /// Coefficients are reduced mod p; lowest degree first.
    pub fn new(field: PrimeField, coeffs: impl IntoIterator<Item = u64>) -> Self {
        let coeffs = coeffs.into_iter().map(|c| field.reduce(c)).collect();
        let mut p = FpPoly { field, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(field: PrimeField, coeffs: &[i64]) -> Self {
        FpPoly::new(field, coeffs.iter().map(|&c| field.from_i64(c)))
    }

    /// Coefficients given highest degree first, as in `x^6 + x^5 + 17x + 5`.
    pub fn from_high_first(field: PrimeField, coeffs: &[u64]) -> Self {
        FpPoly::new(field, coeffs.iter().rev().copied())
    }

    pub fn zero(field: PrimeField) -> Self {
        FpPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        FpPoly::new(field, [1])
    }

    /// `x - r`
    pub fn linear(field: PrimeField, r: u64) -> Self {
        FpPoly::new(field, [field.neg(field.reduce(r)), 1])
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `-1` for the zero polynomial.
    pub fn signed_degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn add(&self, other: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        FpPoly::new(
            self.field,
            (0..n).map(|i| self.field.add(self.coeff(i), other.coeff(i))),
        )
    }

    pub fn sub(&self, other: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        FpPoly::new(
            self.field,
            (0..n).map(|i| self.field.sub(self.coeff(i), other.coeff(i))),
        )
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.field);
        }
        let f = &self.field;
        let mut out = alloc::vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        FpPoly::new(self.field, out)
    }

    pub fn scale(&self, c: u64) -> FpPoly {
        FpPoly::new(self.field, self.coeffs.iter().map(|&a| self.field.mul(a, c)))
    }

    pub fn monic(&self) -> FpPoly {
        match self.field.inv(self.leading()) {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, divisor: &FpPoly) -> (FpPoly, FpPoly) {
        let f = &self.field;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv_lead = f.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (FpPoly::zero(self.field), self.clone());
        }
        let mut quot = alloc::vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], inv_lead);
            quot[k] = c;
            if c != 0 {
                for (j, &d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = f.sub(rem[k + j], f.mul(c, d));
                }
            }
        }
        rem.truncate(dd);
        (FpPoly::new(self.field, quot), FpPoly::new(self.field, rem))
    }

    pub fn divides(&self, other: &FpPoly) -> bool {
        other.div_rem(self).1.is_zero()
    }

    pub fn derivative(&self) -> FpPoly {
        FpPoly::new(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.field.mul(self.field.reduce(i as u64), c)),
        )
    }

    /// Monic gcd; zero only if both inputs are zero.
    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// No repeated factor over the algebraic closure.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Roots in `F_p`, by exhaustive evaluation.
    pub fn roots(&self) -> Vec<u64> {
        self.field.elements().filter(|&x| self.eval(x) == 0).collect()
    }

    pub fn has_root(&self) -> bool {
        self.field.elements().any(|x| self.eval(x) == 0)
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}
