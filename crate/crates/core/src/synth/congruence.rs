use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::arith::modulus_product;
use crate::igusa::{GUARD_MOD16, GUARD_MOD25, GUARD_MOD3};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowKind {
    Mod16,
    Mod3,
    Mod25,
    /// `ℓ⁴`, canonicalized to the supersingular symmetric sextic.
    Ell4,
    Q1,
    Q2,
    /// A remaining prime of the group order, where `f ≡ x⁶ + 1`.
    Residual,
}

impl RowKind {
    pub fn label(self) -> &'static str {
        match self {
            RowKind::Mod16 => "mod 16",
            RowKind::Mod3 => "mod 3",
            RowKind::Mod25 => "mod 25",
            RowKind::Ell4 => "mod ell^4",
            RowKind::Q1 => "mod q1",
            RowKind::Q2 => "mod q2",
            RowKind::Residual => "residual",
        }
    }
}

/// One modulus with a residue for every coefficient, by power of `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceRow {
    pub kind: RowKind,
    pub modulus: BigInt,
    pub residues: [BigInt; 7],
}

/// The same set of pairwise coprime moduli for all seven coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceSystem {
    pub rows: Vec<CongruenceRow>,
}

impl CongruenceSystem {
    pub fn modulus(&self) -> BigInt {
        modulus_product(self.rows.iter().map(|r| &r.modulus))
    }

    pub fn moduli(&self) -> Vec<BigInt> {
        self.rows.iter().map(|r| r.modulus.clone()).collect()
    }

    /// `(residue, modulus)` pairs for the coefficient of `x^i`.
    pub fn coefficient(&self, i: usize) -> Vec<(BigInt, BigInt)> {
        self.rows.iter().map(|r| (r.residues[i].clone(), r.modulus.clone())).collect()
    }

    pub fn row(&self, kind: RowKind) -> Option<&CongruenceRow> {
        self.rows.iter().find(|r| r.kind == kind)
    }

    fn check_coprime(&self) -> Result<()> {
        for (i, a) in self.rows.iter().enumerate() {
            for (j, b) in self.rows.iter().enumerate().skip(i + 1) {
                if !a.modulus.gcd(&b.modulus).is_one() {
                    return Err(Error::NonCoprimeModuli {
                        i,
                        j,
                        first: a.modulus.clone(),
                        second: b.modulus.clone(),
                    });
                }
            }
        }
        Ok(())
    }
}

fn row(kind: RowKind, modulus: impl Into<BigInt>, residues: [u64; 7]) -> CongruenceRow {
    CongruenceRow {
        kind,
        modulus: modulus.into(),
        residues: residues.map(BigInt::from),
    }
}

/// Rows mod 16, 3, 25, `ℓ⁴`, `q1`, `q2`, then one per leftover prime of
/// `primes`. `a_lift` is the least non-negative lift of `(1 - a)/a mod ℓ`;
/// the witness curves are given by power of `x`.
pub fn build_congruences(
    ell: u64,
    a_lift: u64,
    q1: u64,
    curve1: &[u64; 7],
    q2: u64,
    curve2: &[u64; 7],
    primes: &[u64],
) -> Result<CongruenceSystem> {
    let ell4 = BigInt::from(ell).pow(4);
    let mut rows = alloc::vec![
        row(RowKind::Mod16, GUARD_MOD16.modulus, GUARD_MOD16.by_power),
        row(RowKind::Mod3, GUARD_MOD3.modulus, GUARD_MOD3.by_power),
        row(RowKind::Mod25, GUARD_MOD25.modulus, GUARD_MOD25.by_power),
        row(RowKind::Ell4, ell4, [1, 0, a_lift, 0, a_lift, 0, 1]),
        row(RowKind::Q1, q1, *curve1),
        row(RowKind::Q2, q2, *curve2),
    ];
    for &p in primes {
        if ![2, 3, 5, ell, q1, q2].contains(&p) {
            rows.push(row(RowKind::Residual, p, [1, 0, 0, 0, 0, 0, 1]));
        }
    }
    let system = CongruenceSystem { rows };
    system.check_coprime()?;
    Ok(system)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn by_power(high_first: [u64; 7]) -> [u64; 7] {
        let mut f = high_first;
        f.reverse();
        f
    }

    fn ell7() -> CongruenceSystem {
        build_congruences(
            7,
            2,
            29,
            &by_power([1, 1, 0, 0, 0, 17, 5]),
            43,
            &by_power([1, 1, 0, 0, 3, 13, 21]),
            &[2, 3, 5, 7],
        )
        .unwrap()
    }

    #[test]
    fn coefficient_columns() {
        let s = ell7();
        let col = |i: usize| -> Vec<(i64, i64)> {
            s.coefficient(i)
                .into_iter()
                .map(|(r, m)| (r.try_into().unwrap(), m.try_into().unwrap()))
                .collect()
        };
        assert_eq!(col(4), [(4, 16), (1, 3), (0, 25), (2, 2401), (0, 29), (0, 43)]);
        assert_eq!(col(0), [(1, 16), (1, 3), (1, 25), (1, 2401), (5, 29), (21, 43)]);
        assert_eq!(s.modulus(), BigInt::from(16u64 * 3 * 25 * 2401 * 29 * 43));
        assert_eq!(s.modulus(), BigInt::from(3592856400u64));
    }

    #[test]
    fn residual_rows() {
        let s = build_congruences(11, 0, 23, &[1; 7], 67, &[1; 7], &[2, 3, 5, 11, 61]).unwrap();
        let r = s.row(RowKind::Residual).unwrap();
        assert_eq!(r.modulus, BigInt::from(61));
        assert_eq!(r.residues, [1, 0, 0, 0, 0, 0, 1].map(BigInt::from));
        assert_eq!(s.rows.len(), 7);
    }

    #[test]
    fn overlapping_moduli() {
        assert!(matches!(
            build_congruences(7, 2, 29, &[1; 7], 29, &[1; 7], &[]),
            Err(Error::NonCoprimeModuli { .. })
        ));
    }
}
