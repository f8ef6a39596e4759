use num_bigint::BigInt;

use crate::arith::is_perfect_square;
use crate::hypercurve::WeilData;

/// `a² - 4b + 8m`.
pub fn delta0(a: i64, b: i64, m: i64) -> BigInt {
    let (a, b, m) = (BigInt::from(a), BigInt::from(b), BigInt::from(m));
    &a * &a - b * 4 + m * 8
}

/// Each hypothesis under which `X⁴ + aX³ + bX² + aqX + q²` is the Frobenius
/// polynomial of some genus-2 curve over `F_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeilAdmissibility {
    pub weil_bounds: bool,
    pub delta0_not_square: bool,
    pub q_not_dividing_b: bool,
    /// `a² ∉ {0, q + b, 2b, 3(b - q)}`.
    pub a_squared_allowed: bool,
}

impl WeilAdmissibility {
    pub fn all(&self) -> bool {
        self.weil_bounds && self.delta0_not_square && self.q_not_dividing_b && self.a_squared_allowed
    }
}

pub fn weil_admissible(q: u64, a: i64, b: i64) -> WeilAdmissibility {
    let w = WeilData { q, a, b, n1: 0, n2: 0 };
    let (qi, a2, bi) = (q as i128, (a as i128) * (a as i128), b as i128);
    WeilAdmissibility {
        weil_bounds: w.within_weil_bounds(),
        delta0_not_square: is_perfect_square(&delta0(a, b, q as i64)).is_none(),
        q_not_dividing_b: bi % qi != 0,
        a_squared_allowed: ![0, qi + bi, 2 * bi, 3 * (bi - qi)].contains(&a2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: float-free brute force over the closed definitions.
    fn brute(q: u64, a: i64, b: i64) -> [bool; 4] {
        let (q, a, b) = (q as i64, a, b);
        // |a| <= 4 sqrt q  <=>  no integer s with s > ... ; compare squares directly
        let bounds = {
            let lower_ok = b + 2 * q >= 0 && (2 * a.abs()).pow(2) * q <= (b + 2 * q).pow(2);
            a * a <= 16 * q && lower_ok && 4 * b <= a * a + 8 * q
        };
        let d = a * a - 4 * b + 8 * q;
        let square = d >= 0 && (0..=d).any(|r| r * r == d);
        [
            bounds,
            !square,
            b % q != 0,
            a * a != 0 && a * a != q + b && a * a != 2 * b && a * a != 3 * (b - q),
        ]
    }

    #[test]
    fn examples() {
        assert_eq!(delta0(1, 1, 29), BigInt::from(229));
        assert_eq!(delta0(1, 3, 43), BigInt::from(333));
        assert_eq!(delta0(1, 1, 1), BigInt::from(5));
        assert!(weil_admissible(29, 1, 1).all());
        assert!(weil_admissible(43, 1, 3).all());
        let bad = weil_admissible(29, 25, 0);
        assert!(!bad.weil_bounds);
        assert!(!bad.q_not_dividing_b);
    }

    #[test]
    fn against_brute_force() {
        for q in [3u64, 5, 7, 11, 13] {
            for a in -20i64..=20 {
                for b in -60i64..=80 {
                    let r = weil_admissible(q, a, b);
                    assert_eq!(
                        [r.weil_bounds, r.delta0_not_square, r.q_not_dividing_b, r.a_squared_allowed],
                        brute(q, a, b),
                        "q={q} a={a} b={b}"
                    );
                }
            }
        }
    }
}
