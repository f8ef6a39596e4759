use num_bigint::BigInt;

use crate::finitefield::{FpPoly, PrimeField};
use crate::{Error, Result};

/// Frobenius data of a genus-2 curve over `F_q`: the characteristic
/// polynomial is `X⁴ + aX³ + bX² + aqX + q²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeilData {
    pub q: u64,
    pub a: i64,
    pub b: i64,
    pub n1: u64,
    pub n2: u64,
}

/// `a = N1 - q - 1`, `b = (N2 - q² - 1 + a²)/2`.
pub fn frobenius_data(q: u64, n1: u64, n2: u64) -> Result<WeilData> {
    let (qi, n1i, n2i) = (q as i128, n1 as i128, n2 as i128);
    let a = n1i - qi - 1;
    let twice_b = n2i - qi * qi - 1 + a * a;
    if twice_b % 2 != 0 {
        return Err(Error::ParityViolation { q, n1, n2 });
    }
    let to64 = |v: i128| i64::try_from(v).map_err(|_| Error::OutOfContract("Frobenius data overflows i64".into()));
    Ok(WeilData {
        q,
        a: to64(a)?,
        b: to64(twice_b / 2)?,
        n1,
        n2,
    })
}

impl WeilData {
    /// `a² - 4b + 8q`.
    pub fn delta0(&self) -> BigInt {
        let (a, b, q) = (BigInt::from(self.a), BigInt::from(self.b), BigInt::from(self.q));
        &a * &a - b * 4 + q * 8
    }

    /// `|a| ≤ 4√q` and `2|a|√q - 2q ≤ b ≤ a²/4 + 2q`, compared as integers.
    pub fn within_weil_bounds(&self) -> bool {
        let (a, b, q) = (self.a as i128, self.b as i128, self.q as i128);
        let bq = b + 2 * q;
        a * a <= 16 * q && bq >= 0 && 4 * a * a * q <= bq * bq && 4 * b <= a * a + 8 * q
    }

    /// `[q², aq, b, a, 1]`, by power of `X`.
    pub fn charpoly(&self) -> [BigInt; 5] {
        let (a, b, q) = (BigInt::from(self.a), BigInt::from(self.b), BigInt::from(self.q));
        [&q * &q, &a * &q, b, a, BigInt::from(1)]
    }

    /// The characteristic polynomial reduced mod `ell`.
    pub fn charpoly_mod(&self, ell: u64) -> Result<FpPoly> {
        let field = PrimeField::new(ell)?;
        Ok(FpPoly::new(field, self.charpoly().iter().map(|c| field.from_bigint(c))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finitefield::quartic_factor_pattern;
    use alloc::string::ToString;

    #[test]
    fn examples() {
        let w = frobenius_data(19, 22, 410).unwrap();
        assert_eq!((w.a, w.b), (2, 26));
        assert_eq!(w.charpoly().map(|c| c.to_string()), ["361", "38", "26", "2", "1"]);
        let p5 = w.charpoly_mod(5).unwrap();
        assert_eq!(p5.coeffs(), [1, 3, 1, 2, 1]);
        assert_eq!(quartic_factor_pattern(&p5).unwrap(), [4]);

        let w = frobenius_data(29, 31, 843).unwrap();
        assert_eq!((w.a, w.b), (1, 1));
        assert_eq!(w.delta0(), BigInt::from(229));
        let w = frobenius_data(43, 45, 1855).unwrap();
        assert_eq!((w.a, w.b), (1, 3));
        assert_eq!(w.delta0(), BigInt::from(333));

        for q in [3u64, 29, 101] {
            let w = frobenius_data(q, q + 1, q * q + 1).unwrap();
            assert_eq!((w.a, w.b), (0, 0));
        }
        assert_eq!(
            frobenius_data(29, 31, 844),
            Err(Error::ParityViolation { q: 29, n1: 31, n2: 844 })
        );
    }

    #[test]
    fn bounds() {
        assert!(frobenius_data(29, 31, 843).unwrap().within_weil_bounds());
        let w = WeilData { q: 29, a: 25, b: 0, n1: 0, n2: 0 };
        assert!(!w.within_weil_bounds());
        // a = 20: the admissible b form [157.4, 158]
        let at = |b| WeilData { q: 29, a: 20, b, n1: 0, n2: 0 }.within_weil_bounds();
        assert!(at(158));
        assert!(!at(157));
        assert!(!at(159));
    }
}
