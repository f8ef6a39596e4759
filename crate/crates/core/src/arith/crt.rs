use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Solves `x ≡ r_i (mod m_i)` for pairwise coprime moduli, returning the
/// least non-negative solution.
pub fn crt_solve(residues: &[(BigInt, BigInt)]) -> Result<BigInt> {
    let two = BigInt::from(2);
    for (_, m) in residues {
        if *m < two {
            return Err(Error::InvalidModulus(m.clone()));
        }
    }
    for (i, (_, mi)) in residues.iter().enumerate() {
        for (j, (_, mj)) in residues.iter().enumerate().skip(i + 1) {
            if !mi.gcd(mj).is_one() {
                return Err(Error::NonCoprimeModuli {
                    i,
                    j,
                    first: mi.clone(),
                    second: mj.clone(),
                });
            }
        }
    }

    let mut x = BigInt::zero();
    let mut modulus = BigInt::one();
    for (r, m) in residues {
        // x + modulus * t ≡ r (mod m)
        let inv = mod_inverse(&modulus.mod_floor(m), m).expect("coprimality checked above");
        let t = ((r - &x).mod_floor(m) * inv).mod_floor(m);
        x += &modulus * t;
        modulus *= m;
    }
    Ok(x.mod_floor(&modulus))
}

pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Product of all moduli.
pub(crate) fn modulus_product<'a>(moduli: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    moduli.into_iter().fold(BigInt::one(), |acc, m| acc * m)
}
