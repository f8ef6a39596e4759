use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashSet;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{gsp_order, SpMatrix};
use crate::finitefield::{quartic_factor_pattern, PrimeField};
use crate::{Error, Result};

/// `|Sp4(F_ℓ)| = ℓ⁴(ℓ² - 1)(ℓ⁴ - 1)`.
pub fn sp4_order(ell: u64) -> BigInt {
    gsp_order(2, ell) / (ell - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureReport {
    pub size: u64,
    pub is_full_sp4: bool,
}

/// Order of the subgroup generated by `gens` (all with multiplier 1), by
/// breadth-first search over products. Refuses when `|Sp4(F_ℓ)|` exceeds
/// `cap`. The matrices are packed into a `u64`, so `ℓ < 16`.
pub fn closure(gens: &[SpMatrix], cap: &BigInt) -> Result<ClosureReport> {
    let Some(first) = gens.first() else {
        return Err(Error::OutOfContract("closure needs at least one generator".into()));
    };
    let field = *first.field();
    let ell = field.modulus();
    if ell >= 16 || gens.iter().any(|g| g.field().modulus() != ell) {
        return Err(Error::OutOfContract("closure supports a single field with ell < 16".into()));
    }
    for g in gens {
        match g.multiplier() {
            Some(1) => {}
            Some(m) => return Err(Error::MultiplierNotOne(m)),
            None => return Err(Error::NotSymplectic),
        }
    }
    let full = sp4_order(ell);
    if &full > cap {
        return Err(Error::CapExceeded { order: full, cap: cap.clone() });
    }

    let identity = SpMatrix::identity(field);
    let mut seen: HashSet<u64> = HashSet::new();
    seen.insert(identity.pack());
    let mut frontier = vec![identity];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = x.mul(g);
                if seen.insert(y.pack()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    let size = seen.len() as u64;
    Ok(ClosureReport { size, is_full_sp4: BigInt::from(size) == full })
}

/// A random transvection and a random element of `Sp4(F_ℓ)` whose
/// characteristic polynomial is irreducible. Pair `index` of a given seed is
/// always the same.
pub fn qualifying_pair(field: PrimeField, seed: u64, index: u64) -> [SpMatrix; 2] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let p = field.modulus();
    let t = loop {
        let v: [u64; 4] = core::array::from_fn(|_| rng.random_range(0..p));
        if v.iter().any(|&x| x != 0) {
            break SpMatrix::transvection(field, v, rng.random_range(1..p));
        }
    };
    let g = loop {
        let g = SpMatrix::random_symplectic(field, 20, &mut rng);
        if quartic_factor_pattern(&g.charpoly()).is_ok_and(|pat| pat == [4]) {
            break g;
        }
    };
    [t, g]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finitefield::PrimeField;
    fn cap() -> BigInt {
        BigInt::from(10_000_000u64)
    }

    #[test]
    fn orders() {
        assert_eq!(sp4_order(2), BigInt::from(720));
        assert_eq!(sp4_order(3), BigInt::from(51840));
        assert_eq!(sp4_order(5), BigInt::from(9360000));
    }

    #[test]
    fn trivial_and_cyclic() {
        let field = PrimeField::new(3).unwrap();
        let r = closure(&[SpMatrix::identity(field)], &cap()).unwrap();
        assert_eq!(r, ClosureReport { size: 1, is_full_sp4: false });
        let t = SpMatrix::transvection(field, [1, 0, 0, 0], 1);
        assert_eq!(closure(&[t], &cap()).unwrap().size, 3);
    }

    #[test]
    fn errors() {
        let field = PrimeField::new(3).unwrap();
        let t = SpMatrix::transvection(field, [1, 0, 0, 0], 1);
        assert!(matches!(closure(&[t], &BigInt::from(100)), Err(Error::CapExceeded { .. })));
        let scaled = SpMatrix::new(field, [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert_eq!(closure(&[scaled], &cap()), Err(Error::MultiplierNotOne(2)));
    }

    #[test]
    fn generated_by_transvection_and_irreducible_element() {
        let field = PrimeField::new(3).unwrap();
        for k in 0..10 {
            let pair = qualifying_pair(field, 34, k);
            assert_eq!(quartic_factor_pattern(&pair[1].charpoly()).unwrap(), [4]);
            assert_eq!(pair[0].is_transvection(), Ok(true));
            let r = closure(&pair, &cap()).unwrap();
            assert_eq!(r, ClosureReport { size: 51840, is_full_sp4: true });
        }
    }

    #[test]
    fn sp4_f2() {
        let field = PrimeField::new(2).unwrap();
        let mut best = 0;
        for k in 0..20 {
            let pair = qualifying_pair(field, 2, k);
            let r = closure(&pair, &cap()).unwrap();
            assert!(r.size <= 720 && 720 % r.size == 0);
            best = best.max(r.size);
        }
        assert_eq!(best, 720);
        // every element of the closure keeps multiplier 1
        let pair = qualifying_pair(field, 2, 99);
        let mut x = SpMatrix::identity(field);
        for k in 0..50 {
            x = x.mul(&pair[k % 2]);
            assert!(x.is_symplectic());
        }
    }
}
