use core::fmt;

use num_bigint::BigInt;
use rand::Rng;

use crate::finitefield::{FpPoly, PrimeField};
use crate::{Error, Result};

/// `(q - 1) q^(n²) Π_{j=1}^{n} (q^(2j) - 1)`, the order of `GSp_2n(F_q)`.
pub fn gsp_order(n: u32, q: u64) -> BigInt {
    let q = BigInt::from(q);
    let mut order = (&q - 1u32) * q.pow(n * n);
    for j in 1..=n {
        order *= q.pow(2 * j) - 1u32;
    }
    order
}

/// A 4×4 matrix over `F_ℓ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpMatrix {
    field: PrimeField,
    m: [[u64; 4]; 4],
}

impl fmt::Debug for SpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod {}", self.m, self.field.modulus())
    }
}

/// The fixed form `J`.
fn form(field: PrimeField) -> SpMatrix {
    let mut m = [[0; 4]; 4];
    m[0][2] = 1;
    m[1][3] = 1;
    m[2][0] = field.neg(1);
    m[3][1] = field.neg(1);
    SpMatrix { field, m }
}

impl SpMatrix {
    pub fn new(field: PrimeField, entries: [[i64; 4]; 4]) -> Self {
        SpMatrix {
            field,
            m: entries.map(|row| row.map(|x| field.from_i64(x))),
        }
    }

    pub fn identity(field: PrimeField) -> Self {
        let mut m = [[0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        SpMatrix { field, m }
    }

    /// `x ↦ x + λ⟨v, x⟩ v`, i.e. `I + λ v (vᵀ J)`.
    pub fn transvection(field: PrimeField, v: [u64; 4], lambda: u64) -> Self {
        let f = field;
        let v = v.map(|x| f.reduce(x));
        // row vector vᵀJ = (-v3, -v4, v1, v2)
        let w = [f.neg(v[2]), f.neg(v[3]), v[0], v[1]];
        let mut out = Self::identity(field);
        for i in 0..4 {
            for j in 0..4 {
                out.m[i][j] = f.add(out.m[i][j], f.mul(lambda, f.mul(v[i], w[j])));
            }
        }
        out
    }

    /// `diag(t1, t2, t1⁻¹, t2⁻¹)`.
    pub fn torus(field: PrimeField, t1: u64, t2: u64) -> Option<Self> {
        let (i1, i2) = (field.inv(t1)?, field.inv(t2)?);
        let mut out = Self::identity(field);
        for (k, t) in [t1, t2, i1, i2].into_iter().enumerate() {
            out.m[k][k] = field.reduce(t);
        }
        Some(out)
    }

    /// A product of `steps` random transvections; transvections generate
    /// `Sp4`, so long products spread over the whole group.
    pub fn random_symplectic<R: Rng + ?Sized>(field: PrimeField, steps: usize, rng: &mut R) -> Self {
        let p = field.modulus();
        let mut acc = Self::identity(field);
        for _ in 0..steps {
            let v = loop {
                let v: [u64; 4] = core::array::from_fn(|_| rng.random_range(0..p));
                if v.iter().any(|&x| x != 0) {
                    break v;
                }
            };
            let lambda = rng.random_range(1..p);
            acc = acc.mul(&Self::transvection(field, v, lambda));
        }
        acc
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn entries(&self) -> &[[u64; 4]; 4] {
        &self.m
    }

    pub fn mul(&self, other: &SpMatrix) -> SpMatrix {
        let p = self.field.modulus();
        let mut m = [[0u64; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                let mut s: u128 = 0;
                for k in 0..4 {
                    s += self.m[i][k] as u128 * other.m[k][j] as u128;
                }
                *out = (s % p as u128) as u64;
            }
        }
        SpMatrix { field: self.field, m }
    }

    pub fn transpose(&self) -> SpMatrix {
        let mut m = [[0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                *out = self.m[j][i];
            }
        }
        SpMatrix { field: self.field, m }
    }

    /// `m` with `MᵀJM = m·J`, if there is one.
    pub fn multiplier(&self) -> Option<u64> {
        let j = form(self.field);
        let lhs = self.transpose().mul(&j).mul(self);
        let m = lhs.m[0][2];
        let scaled = SpMatrix {
            field: self.field,
            m: j.m.map(|row| row.map(|x| self.field.mul(x, m))),
        };
        (m != 0 && lhs == scaled).then_some(m)
    }

    pub fn is_symplectic(&self) -> bool {
        self.multiplier() == Some(1)
    }

    /// Inverse of a symplectic matrix: `M⁻¹ = -J Mᵀ J`.
    pub fn symplectic_inverse(&self) -> Result<SpMatrix> {
        if !self.is_symplectic() {
            return Err(Error::NotSymplectic);
        }
        let j = form(self.field);
        let f = self.field;
        let t = j.mul(&self.transpose()).mul(&j);
        Ok(SpMatrix { field: f, m: t.m.map(|row| row.map(|x| f.neg(x))) })
    }

    fn minus_identity(&self) -> [[u64; 4]; 4] {
        let mut m = self.m;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = self.field.sub(row[i], 1);
        }
        m
    }

    /// Rank over `F_ℓ` by Gaussian elimination.
    pub fn rank_of(field: &PrimeField, mut m: [[u64; 4]; 4]) -> usize {
        let mut rank = 0;
        for col in 0..4 {
            let Some(piv) = (rank..4).find(|&r| m[r][col] != 0) else { continue };
            m.swap(rank, piv);
            let inv = field.inv(m[rank][col]).expect("nonzero pivot");
            for r in 0..4 {
                if r != rank && m[r][col] != 0 {
                    let c = field.mul(m[r][col], inv);
                    for k in 0..4 {
                        m[r][k] = field.sub(m[r][k], field.mul(c, m[rank][k]));
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// `M ≠ I`, `(M - I)² = 0` and `rank(M - I) = 1`.
    pub fn is_transvection(&self) -> Result<bool> {
        if !self.is_symplectic() {
            return Err(Error::NotSymplectic);
        }
        let n = SpMatrix { field: self.field, m: self.minus_identity() };
        let zero = [[0u64; 4]; 4];
        Ok(n.m != zero && n.mul(&n).m == zero && Self::rank_of(&self.field, n.m) == 1)
    }

    /// `det(X·I - M)` by power of `X`, from sums of principal minors.
    pub fn charpoly(&self) -> FpPoly {
        let f = self.field;
        let m = &self.m;
        let det2 = |i: usize, j: usize| f.sub(f.mul(m[i][i], m[j][j]), f.mul(m[i][j], m[j][i]));
        let det3 = |r: [usize; 3]| {
            let e = |a: usize, b: usize| m[r[a]][r[b]];
            let t1 = f.mul(e(0, 0), f.sub(f.mul(e(1, 1), e(2, 2)), f.mul(e(1, 2), e(2, 1))));
            let t2 = f.mul(e(0, 1), f.sub(f.mul(e(1, 0), e(2, 2)), f.mul(e(1, 2), e(2, 0))));
            let t3 = f.mul(e(0, 2), f.sub(f.mul(e(1, 0), e(2, 1)), f.mul(e(1, 1), e(2, 0))));
            f.add(f.sub(t1, t2), t3)
        };
        let trace = (0..4).fold(0, |s, i| f.add(s, m[i][i]));
        let mut c2 = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                c2 = f.add(c2, det2(i, j));
            }
        }
        let c3 = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
            .into_iter()
            .fold(0, |s, r| f.add(s, det3(r)));
        let det = (0..4).fold(0, |s, k| {
            // cofactor expansion along the first row
            let rows = [1, 2, 3];
            let cols: [usize; 3] = match k {
                0 => [1, 2, 3],
                1 => [0, 2, 3],
                2 => [0, 1, 3],
                _ => [0, 1, 2],
            };
            let e = |a: usize, b: usize| m[rows[a]][cols[b]];
            let minor = f.add(
                f.sub(
                    f.mul(e(0, 0), f.sub(f.mul(e(1, 1), e(2, 2)), f.mul(e(1, 2), e(2, 1)))),
                    f.mul(e(0, 1), f.sub(f.mul(e(1, 0), e(2, 2)), f.mul(e(1, 2), e(2, 0)))),
                ),
                f.mul(e(0, 2), f.sub(f.mul(e(1, 0), e(2, 1)), f.mul(e(1, 1), e(2, 0)))),
            );
            let term = f.mul(m[0][k], minor);
            if k % 2 == 0 {
                f.add(s, term)
            } else {
                f.sub(s, term)
            }
        });
        FpPoly::new(f, [det, f.neg(c3), c2, f.neg(trace), 1])
    }

    /// Entries packed 4 bits each; only for `ℓ < 16`.
    pub(crate) fn pack(&self) -> u64 {
        let mut key = 0u64;
        for row in &self.m {
            for &x in row {
                key = (key << 4) | x;
            }
        }
        key
    }

    #[cfg(test)]
    pub(crate) fn unpack(field: PrimeField, mut key: u64) -> SpMatrix {
        let mut m = [[0u64; 4]; 4];
        for i in (0..4).rev() {
            for j in (0..4).rev() {
                m[i][j] = key & 0xf;
                key >>= 4;
            }
        }
        SpMatrix { field, m }
    }
}
