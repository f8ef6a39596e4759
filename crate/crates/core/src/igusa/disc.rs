use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination.
pub(crate) fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                // exact by Sylvester's identity
                m[i][j] = v.div_floor(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

fn trimmed(f: &[BigInt]) -> &[BigInt] {
    let len = f.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1);
    &f[..len]
}

/// Resultant of two integer polynomials (low-first) with positive degrees.
pub(crate) fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (k, c) in f.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (k, c) in g.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    bareiss_det(rows)
}

/// Discriminant `(-1)^(n(n-1)/2) Res(f, f') / a_n` of a polynomial of any
/// positive degree, coefficients low-first.
pub fn discriminant(f: &[BigInt]) -> Result<BigInt> {
    let f = trimmed(f);
    if f.len() < 2 {
        return Err(Error::DegreeMismatch {
            expected: 1,
            found: f.len() as isize - 1,
        });
    }
    let n = f.len() - 1;
    if n == 1 {
        return Ok(BigInt::one());
    }
    let df: Vec<BigInt> = f.iter().enumerate().skip(1).map(|(i, c)| c * i).collect();
    let res = resultant(f, &df);
    let (q, r) = res.div_rem(&f[n]);
    debug_assert!(r.is_zero());
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
}

/// Discriminant of a sextic given low-first; zero iff `f` has a multiple root.
pub fn poly_discriminant(f: &[BigInt]) -> Result<BigInt> {
    let t = trimmed(f);
    if t.len() != 7 {
        return Err(Error::DegreeMismatch {
            expected: 6,
            found: t.len() as isize - 1,
        });
    }
    discriminant(t)
}
