use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::binform::BinaryForm;
use super::disc::discriminant;
use crate::{Error, Result};

/// Igusa invariants `J2..J10` with the derived `I4`, `I12`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IgusaInvariants {
    pub j2: BigRational,
    pub j4: BigRational,
    pub j6: BigRational,
    pub j8: BigRational,
    pub j10: BigRational,
    pub i4: BigRational,
    pub i12: BigRational,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Igusa–Clebsch invariants `[I2, I4, I6, I10]` of a sextic given low-first.
///
/// `I10` is the discriminant of `f`.
pub fn igusa_clebsch(f: &[BigRational]) -> Result<[BigRational; 4]> {
    if f.len() != 7 || f[6].is_zero() {
        let found = f.iter().rposition(|c| !c.is_zero()).map_or(-1, |i| i as isize);
        return Err(Error::DegreeMismatch { expected: 6, found });
    }
    let f = BinaryForm::new(f.to_vec());
    let i = f.transvectant(&f, 4);
    let delta = i.transvectant(&i, 2);
    let y1 = f.transvectant(&i, 4);
    let y2 = i.transvectant(&y1, 2);
    let y3 = i.transvectant(&y2, 2);
    let a = f.transvectant(&f, 6).constant().clone();
    let b = i.transvectant(&i, 4).constant().clone();
    let c = i.transvectant(&delta, 4).constant().clone();
    let d = y3.transvectant(&y1, 2).constant().clone();

    let a2 = &a * &a;
    let a3 = &a2 * &a;
    let a5 = &a3 * &a2;
    let i2 = rat(-120) * &a;
    let i4 = rat(-720) * &a2 + rat(6750) * &b;
    let i6 = rat(8640) * &a3 - rat(108000) * &a * &b + rat(202500) * &c;
    let i10 = rat(-62208) * a5 + rat(972000) * &a3 * &b + rat(1620000) * &a2 * &c
        - rat(3037500) * &a * &b * &b
        - rat(6075000) * &b * &c
        - rat(4556250) * d;
    Ok([i2, i4, i6, i10])
}

impl IgusaInvariants {
    /// Converts Igusa–Clebsch invariants to the `J` normalization.
    pub fn from_igusa_clebsch(ic: &[BigRational; 4]) -> Self {
        let [i2, i4p, i6p, i10] = ic;
        let j2 = i2 / rat(8);
        let j4 = (rat(4) * &j2 * &j2 - i4p) / rat(96);
        let j6 = (rat(8) * &j2 * &j2 * &j2 - rat(160) * &j2 * &j4 - i6p) / rat(576);
        let j8 = (&j2 * &j6 - &j4 * &j4) / rat(4);
        let j10 = i10 / rat(4096);
        let (i4, i12) = derived(&j2, &j4, &j6, &j8);
        Self {
            j2,
            j4,
            j6,
            j8,
            j10,
            i4,
            i12,
        }
    }

    /// `[J2, J4, J6, J8, J10]`, indexed so that entry `k` has weight `2(k+1)`.
    pub fn js(&self) -> [&BigRational; 5] {
        [&self.j2, &self.j4, &self.j6, &self.j8, &self.j10]
    }

    /// Recomputes `I4`, `I12` from the `J`s and compares with the stored fields.
    pub fn is_consistent(&self) -> bool {
        let four_j8 = rat(4) * &self.j8 == &self.j2 * &self.j6 - &self.j4 * &self.j4;
        four_j8 && derived(&self.j2, &self.j4, &self.j6, &self.j8) == (self.i4.clone(), self.i12.clone())
    }
}

/// `I4 = J2² - 24 J4`, `I12 = -8 J4³ + 9 J2 J4 J6 - 27 J6² - J2² J8`.
fn derived(
    j2: &BigRational,
    j4: &BigRational,
    j6: &BigRational,
    j8: &BigRational,
) -> (BigRational, BigRational) {
    let i4 = j2 * j2 - rat(24) * j4;
    let i12 = rat(-8) * j4 * j4 * j4 + rat(9) * j2 * j4 * j6 - rat(27) * j6 * j6 - j2 * j2 * j8;
    (i4, i12)
}

/// Invariants of a squarefree integer sextic, coefficients low-first.
pub fn igusa_invariants(f: &[BigInt]) -> Result<IgusaInvariants> {
    let q: Vec<BigRational> = f.iter().cloned().map(BigRational::from_integer).collect();
    igusa_invariants_rational(&q)
}

/// Same as [`igusa_invariants`] for rational coefficients.
pub fn igusa_invariants_rational(f: &[BigRational]) -> Result<IgusaInvariants> {
    let ic = igusa_clebsch(f)?;
    // clear denominators only to test for a repeated root
    let den = f.iter().fold(BigInt::from(1), |acc, c| num_integer::lcm(acc, c.denom().clone()));
    let ints: Vec<BigInt> = f.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
    if discriminant(&ints)?.is_zero() {
        return Err(Error::MultipleRoot);
    }
    Ok(IgusaInvariants::from_igusa_clebsch(&ic))
}
