use alloc::vec::Vec;

use super::{FpPoly, PrimeField};
use crate::{Error, Result};

/// `H_ℓ(x) = Σ_{j=0}^{m} C(m, j)² x^j` over `F_ℓ`, `m = (ℓ - 1)/2`.
pub fn deuring_poly(ell: u64) -> Result<FpPoly> {
    let field = PrimeField::new(ell)?;
    if ell == 2 {
        return Err(Error::OutOfContract("the Deuring polynomial needs odd ell".into()));
    }
    let m = (ell - 1) / 2;
    let mut coeffs = Vec::with_capacity(m as usize + 1);
    // C(m, j) mod ℓ, built up by C(m, j) = C(m, j-1)·(m-j+1)/j; j < ℓ is invertible.
    let mut binom = 1u64;
    for j in 0..=m {
        if j > 0 {
            binom = field.mul(binom, m - j + 1);
            binom = field.mul(binom, field.inv(j).expect("j < ell"));
        }
        coeffs.push(field.mul(binom, binom));
    }
    Ok(FpPoly::new(field, coeffs))
}

/// Supersingular parameter `a` together with the residue `(1 - a)/a` that the
/// x⁴ and x² coefficients of the synthesized sextic must take mod ℓ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupersingularParam {
    pub ell: u64,
    pub a: u64,
    /// `(1 - a)/a mod ℓ`, least non-negative.
    pub f4_residue: u64,
}

/// Every `a` in `[0, ℓ)` with `x² - x + a` dividing `H_ℓ`.
pub fn supersingular_params(ell: u64) -> Result<Vec<u64>> {
    let h = deuring_poly(ell)?;
    let field = *h.field();
    Ok(field
        .elements()
        .filter(|&a| FpPoly::new(field, [a, field.neg(1), 1]).divides(&h))
        .collect())
}

/// `#E(F_p)` for `y² = x³ + c2·x² + c1·x + c0`, including the point at infinity.
pub fn elliptic_point_count(field: &PrimeField, c2: u64, c1: u64, c0: u64) -> u64 {
    let cubic = FpPoly::new(*field, [c0, c1, c2, 1]);
    let sum: i64 = field
        .elements()
        .map(|x| field.quadratic_character(cubic.eval(x)) as i64)
        .sum();
    (field.modulus() as i64 + 1 + sum) as u64
}

/// Smallest `a` with `x² - x + a | H_ℓ`, cross-checked by counting points on
/// `y² = x³ + c·x² + c·x + 1`, `c = (1 - a)/a`, which must be supersingular.
pub fn supersingular_param(ell: u64) -> Result<SupersingularParam> {
    if ell < 5 {
        return Err(Error::OutOfContract("supersingular_param needs ell >= 5".into()));
    }
    let field = PrimeField::new(ell)?;
    let a = supersingular_params(ell)?
        .into_iter()
        .next()
        .ok_or(Error::NoSupersingularParam(ell))?;
    let inv = field.inv(a).ok_or(Error::NoSupersingularParam(ell))?;
    let c = field.mul(field.sub(1, a), inv);
    if elliptic_point_count(&field, c, c, 1) != ell + 1 {
        return Err(Error::NoSupersingularParam(ell));
    }
    Ok(SupersingularParam {
        ell,
        a,
        f4_residue: c,
    })
}
