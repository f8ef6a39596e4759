use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{delta0, weil_admissible};
use crate::arith::{is_perfect_square, lemma_aside_check, modulo_u64, primes_one_mod};
use crate::finitefield::{quartic_factor_pattern, FpPoly, PrimeField};
use crate::{Error, Result};

/// Auxiliary primes are looked for below `SCAN_LIMIT · ℓ`.
pub const SCAN_LIMIT: u64 = 100_000;

/// Auxiliary primes `q1`, `q2` with Frobenius traces `a1 = a2 = 1` and the
/// middle coefficients `b1`, `b2`; `z` is the helper residue behind `b2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuxiliarySelection {
    pub ell: u64,
    pub q1: u64,
    pub a1: i64,
    pub b1: i64,
    pub q2: u64,
    pub a2: i64,
    pub b2: i64,
    pub z: u64,
}

/// Smallest-first choice of `(q1, q2, b1, z, b2)` avoiding the primes in
/// `excluded`.
pub fn select_aux(ell: u64, excluded: &[u64]) -> Result<AuxiliarySelection> {
    if ell < 7 {
        return Err(Error::OutOfContract(alloc::format!(
            "auxiliary selection needs ell >= 7, got {ell}"
        )));
    }
    let field = PrimeField::new(ell)?;
    let limit = ell.saturating_mul(SCAN_LIMIT);
    let mut candidates = primes_one_mod(ell)
        .take_while(|&q| q < limit)
        .filter(|q| !excluded.contains(q));
    let exhausted = |what| Error::SelectionExhausted { ell, reached: limit, what };
    let q1 = candidates.next().ok_or_else(|| exhausted("q1"))?;
    let q2 = candidates.find(|&q| q > 3 * ell).ok_or_else(|| exhausted("q2"))?;

    let residue = |v: BigInt| modulo_u64(&v, ell);
    let b1 = (1..q1 as i64)
        .find(|&b| field.quadratic_character(residue(delta0(1, b, q1 as i64))) == -1)
        .ok_or(Error::SelectionExhausted { ell, reached: q1, what: "b1" })?;

    let sixteen_q2 = field.mul(16, field.reduce(q2));
    let mut z = (1..ell)
        .find(|&z| field.quadratic_character(field.sub(field.mul(z, z), sixteen_q2)) == -1)
        .ok_or(Error::SelectionExhausted { ell, reached: ell, what: "z" })?;
    if field.mul(z, z) == 1 {
        z = 1;
    }

    // 1 - 4 b2 + 8 q2 ≡ (z + 1)² fixes b2 mod ℓ; three consecutive lifts
    // cannot all give perfect squares
    let z1 = field.add(z, 1);
    let rhs = field.sub(field.add(1, field.mul(8, field.reduce(q2))), field.mul(z1, z1));
    let r = field.mul(rhs, field.inv(4).expect("ell odd")) as i64;
    let b2 = (0..4)
        .map(|k| r + k * ell as i64)
        .filter(|&b| b > 0 && b < q2 as i64)
        .find(|&b| is_perfect_square(&delta0(1, b, q2 as i64)).is_none() && b % q2 as i64 != 0)
        .ok_or(Error::SelectionExhausted { ell, reached: r as u64 + 3 * ell, what: "b2" })?;

    let sel = AuxiliarySelection { ell, q1, a1: 1, b1, q2, a2: 1, b2, z };
    if let Err(failing) = check_selection(&sel, excluded) {
        return Err(Error::VerificationFailed {
            failing: failing.into_iter().map(Into::into).collect(),
        });
    }
    Ok(sel)
}

/// Every invariant of an [`AuxiliarySelection`], recomputed from scratch.
/// Returns the names of the failing ones.
pub fn check_selection(s: &AuxiliarySelection, excluded: &[u64]) -> core::result::Result<(), Vec<&'static str>> {
    let mut failing = Vec::new();
    let mut require = |ok: bool, name: &'static str| {
        if !ok {
            failing.push(name);
        }
    };
    let field = match PrimeField::new(s.ell) {
        Ok(f) => f,
        Err(_) => return Err(alloc::vec!["ell prime"]),
    };
    let ell = s.ell;
    let chi = |v: &BigInt| field.quadratic_character(modulo_u64(v, ell));
    let d1 = delta0(s.a1, s.b1, s.q1 as i64);
    let d2 = delta0(s.a2, s.b2, s.q2 as i64);

    require(crate::arith::is_prime_u64(s.q1) && crate::arith::is_prime_u64(s.q2), "q1, q2 prime");
    require(s.q1 % ell == 1 && s.q2 % ell == 1, "q1 ≡ q2 ≡ 1 mod ell");
    require(s.q1 != s.q2, "q1 != q2");
    require(s.q2 > 3 * ell, "q2 > 3 ell");
    require(!excluded.contains(&s.q1) && !excluded.contains(&s.q2), "q1, q2 outside P");
    require(chi(&d1) == -1, "Δ0(P1) nonresidue mod ell");
    require(s.a1.rem_euclid(ell as i64) != 0, "a1 ≢ 0 mod ell");
    require(chi(&d2) == 1, "Δ0(P2) nonzero square mod ell");
    require(is_perfect_square(&d2).is_none(), "Δ0(P2) not a square in Z");
    require(s.b2 % s.q2 as i64 != 0, "q2 ∤ b2");
    let z = field.reduce(s.z);
    require(
        field.quadratic_character(field.sub(field.mul(z, z), field.mul(16, field.reduce(s.q2)))) == -1,
        "z² - 16 q2 nonresidue mod ell",
    );
    let z1 = field.add(z, 1);
    require(
        modulo_u64(&delta0(1, s.b2, s.q2 as i64), ell) == field.mul(z1, z1),
        "1 - 4 b2 + 8 q2 ≡ (z+1)² mod ell",
    );
    require(weil_admissible(s.q1, s.a1, s.b1).all(), "(q1, a1, b1) admissible");
    require(weil_admissible(s.q2, s.a2, s.b2).all(), "(q2, a2, b2) admissible");
    // Δ0 mod ℓ only sees q mod ℓ, so both agree with the unit-multiplier Δ0
    for (a, b, q, d) in [(s.a1, s.b1, s.q1, &d1), (s.a2, s.b2, s.q2, &d2)] {
        require(
            modulo_u64(d, ell) == modulo_u64(&delta0(a, b, (q % ell) as i64), ell),
            "Δ0 mod ell matches the unit-multiplier form",
        );
    }
    // P2 mod ℓ must keep an irreducible quadratic factor
    let p2 = FpPoly::new(
        field,
        [1, field.from_i64(s.a2), field.from_i64(s.b2), field.from_i64(s.a2), 1],
    );
    require(
        quartic_factor_pattern(&p2).is_ok_and(|pat| pat != [1, 1, 1, 1]),
        "P2 not split into linear factors mod ell",
    );
    let ell_b = BigInt::from(ell);
    require(lemma_aside_check(&delta0(1, s.b2.rem_euclid(ell as i64), s.q2 as i64), &ell_b), "lemma aside");

    if failing.is_empty() {
        Ok(())
    } else {
        Err(failing)
    }
}
