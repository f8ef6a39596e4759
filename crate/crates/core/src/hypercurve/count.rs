use alloc::vec::Vec;

use crate::finitefield::{FpPoly, QuadraticExtension};
use crate::{Error, Result};

/// Point counting on `y² = f(x)` over `F_q` and `F_{q²}` for a fixed odd
/// prime `q < 2^32`, with the quadratic character tabulated once.
///
/// Coefficient arrays are indexed by power of `x` and already reduced.
#[derive(Debug, Clone)]
pub struct PointCounter {
    q: u64,
    ns: u64,
    chi: Vec<i8>,
}

impl PointCounter {
    pub fn new(q: u64) -> Result<Self> {
        let field = crate::finitefield::PrimeField::new(q)?;
        if q == 2 || q >= 1 << 32 {
            return Err(Error::OutOfContract("point counting needs an odd prime below 2^32".into()));
        }
        let ext = QuadraticExtension::new(field);
        Ok(PointCounter {
            q,
            ns: ext.nonresidue(),
            chi: field.character_table(),
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `#C(F_q)` on the smooth model: affine points plus `1 + χ(f6)` at infinity.
    #[inline]
    pub fn n1(&self, f: &[u64; 7]) -> u64 {
        let q = self.q;
        let mut total = 1 + self.chi[f[6] as usize] as i64;
        for x in 0..q {
            let mut acc = f[6];
            for i in (0..6).rev() {
                acc = (acc * x + f[i]) % q;
            }
            total += 1 + self.chi[acc as usize] as i64;
        }
        total as u64
    }

    /// `#C(F_{q²})`. The character of `z ∈ F_{q²}` equals the base character
    /// of its norm.
    pub fn n2(&self, f: &[u64; 7]) -> u64 {
        let (q, ns) = (self.q, self.ns);
        // the leading coefficient lies in F_q, so it is a square in F_{q²}
        let mut total: i64 = if f[6] == 0 { 1 } else { 2 };
        for x1 in 0..q {
            for x0 in 0..q {
                let (mut a0, mut a1) = (f[6], 0u64);
                for i in (0..6).rev() {
                    let b0 = (a0 * x0 + ns * (a1 * x1 % q)) % q;
                    let b1 = (a0 * x1 + a1 * x0) % q;
                    a0 = (b0 + f[i]) % q;
                    a1 = b1;
                }
                let norm = (a0 * a0 + q * q - ns * (a1 * a1 % q) % q) % q;
                total += 1 + self.chi[norm as usize] as i64;
            }
        }
        total as u64
    }
}

fn as_array(f: &FpPoly) -> [u64; 7] {
    core::array::from_fn(|i| f.coeff(i))
}

/// `(N1, N2)` for a squarefree sextic over an odd prime field.
pub fn count_points(f: &FpPoly) -> Result<(u64, u64)> {
    let q = f.field().modulus();
    if f.degree() != Some(6) {
        return Err(Error::DegreeMismatch {
            expected: 6,
            found: f.signed_degree(),
        });
    }
    if !f.is_squarefree() {
        return Err(Error::SingularCurve(q));
    }
    let pc = PointCounter::new(q)?;
    let a = as_array(f);
    Ok((pc.n1(&a), pc.n2(&a)))
}
