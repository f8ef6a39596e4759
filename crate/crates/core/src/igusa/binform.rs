//! Binary forms over Q and their transvectants.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `Σ c_i X^i Y^(n-i)` with a formal degree `n`, so that a form which
/// happens to vanish still carries its degree through a transvectant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BinaryForm {
    coeffs: Vec<BigRational>,
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `s (s-1) ⋯ (s-k+1)`.
fn falling(s: usize, k: usize) -> BigInt {
    if k > s {
        return BigInt::zero();
    }
    (s - k + 1..=s).fold(BigInt::one(), |acc, v| acc * v)
}

fn binomial(n: usize, k: usize) -> BigInt {
    falling(n, k) / factorial(k)
}

impl BinaryForm {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form has degree >= 0");
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The value of a degree-0 form.
    pub fn constant(&self) -> &BigRational {
        debug_assert_eq!(self.degree(), 0);
        &self.coeffs[0]
    }

    /// `∂^(dx + dy) / ∂X^dx ∂Y^dy`.
    fn derivative(&self, dx: usize, dy: usize) -> BinaryForm {
        let n = self.degree();
        let m = n - dx - dy;
        let coeffs = (0..=m)
            .map(|a| {
                // X^(a+dx) Y^(n-a-dx) is the only monomial landing on X^a Y^(m-a)
                let s = a + dx;
                let t = n - s;
                let scale = falling(s, dx) * falling(t, dy);
                &self.coeffs[s] * BigRational::from_integer(scale)
            })
            .collect();
        BinaryForm { coeffs }
    }

    fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        BinaryForm { coeffs }
    }

    fn add_scaled(&mut self, other: &BinaryForm, c: &BigRational) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * c;
        }
    }

    /// `k`-th transvectant, normalized by `(m-k)!(n-k)!/(m! n!)`.
    pub fn transvectant(&self, other: &BinaryForm, k: usize) -> BinaryForm {
        let (m, n) = (self.degree(), other.degree());
        assert!(k <= m && k <= n, "transvectant order exceeds a degree");
        let mut acc = BinaryForm {
            coeffs: vec![BigRational::zero(); m + n - 2 * k + 1],
        };
        for i in 0..=k {
            let term = self.derivative(k - i, i).mul(&other.derivative(i, k - i));
            let mut c = BigRational::from_integer(binomial(k, i));
            if i % 2 == 1 {
                c = -c;
            }
            acc.add_scaled(&term, &c);
        }
        let norm = BigRational::new(
            factorial(m - k) * factorial(n - k),
            factorial(m) * factorial(n),
        );
        for c in &mut acc.coeffs {
            *c *= &norm;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(c: &[i64]) -> BinaryForm {
        BinaryForm::new(c.iter().map(|&v| BigRational::from_integer(v.into())).collect())
    }

    #[test]
    fn first_transvectant_is_jacobian() {
        // (f, g)_1 = (f_X g_Y - f_Y g_X)/(m n)
        // f = X, g = Y  ->  1
        let f = form(&[0, 1]);
        let g = form(&[1, 0]);
        assert_eq!(f.transvectant(&g, 1), form(&[1]));
        assert_eq!(g.transvectant(&f, 1), form(&[-1]));
    }

    #[test]
    fn quadratic_discriminant() {
        // (q, q)_2 = (q_XX q_YY - q_XY^2)/2 = (4ac - b^2)/2 for q = aX^2 + bXY + cY^2
        let q = form(&[3, 5, 7]);
        let d = q.transvectant(&q, 2);
        assert_eq!(d.degree(), 0);
        assert_eq!(d.constant(), &BigRational::new((4 * 7 * 3 - 25).into(), 2.into()));
    }

    #[test]
    fn zero_form_keeps_degree() {
        let z = form(&[0, 0, 0, 0, 0]);
        let t = z.transvectant(&z, 2);
        assert_eq!(t.degree(), 4);
    }
}
