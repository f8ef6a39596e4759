//! The `ℓ = 5` curve, whose residual image is handled by a separate
//! argument: `y² = x⁶ + 391300x⁴ + 1170x³ + 1300x² + 1`.

use alloc::format;

use num_bigint::BigInt;
use num_traits::Zero;

use super::blocks::{divides_deuring, pattern_block};
use super::CheckReport;
use crate::arith::{int_valuation, is_prime, modulo};
use crate::finitefield::{quartic_factor_pattern, PrimeField};
use crate::hypercurve::{count_points, frobenius_data, reduce_curve, HyperCurve};
use crate::igusa::{classify_reduction, ReductionType, GUARD_MOD16};

/// High-first coefficients.
pub const ELL5_CURVE: [u64; 7] = [1, 0, 391_300, 1170, 1300, 0, 1];
/// The supersingular symmetric sextic it is congruent to mod `5⁴`.
pub const ELL5_REFERENCE: [u64; 7] = [1, 0, 1300, 1170, 1300, 0, 1];
/// Primes of bad reduction with conductor exponent 1.
pub const ELL5_PRIMES: [u128; 2] = [27_792_683, 195_476_205_803_858_674_906_021];

const COUNT_PRIME: u64 = 19;
const COUNTS: (u64, u64) = (22, 410);

fn high_first(c: [u64; 7]) -> [BigInt; 7] {
    c.map(BigInt::from)
}

pub fn verify_ell5() -> CheckReport {
    let c = HyperCurve::from_high_first(high_first(ELL5_CURVE)).expect("fixed curve is squarefree");
    verify_ell5_curve(&c)
}

pub fn verify_ell5_curve(c: &HyperCurve) -> CheckReport {
    let mut r = CheckReport::default();
    let f = c.coeffs();
    pattern_block(&mut r, f, &GUARD_MOD16);

    let m = BigInt::from(625u32);
    let reference = HyperCurve::from_high_first(high_first(ELL5_REFERENCE)).expect("reference is squarefree");
    for i in (0..7).rev() {
        let diff = modulo(&(&f[i] - reference.coeff(i)), &m);
        r.push("mod 5^4", format!("f{i} ≡ reference"), diff.is_zero(), format!("f{i} - ref ≡ {diff}"));
    }
    for (i, j) in [(6, 0), (5, 1), (4, 2)] {
        let diff = modulo(&(&f[i] - &f[j]), &m);
        r.push("mod 5^4", format!("f{i} ≡ f{j}"), diff.is_zero(), format!("f{i} - f{j} ≡ {diff}"));
    }
    let fixed = high_first(ELL5_CURVE);
    r.push("mod 5^4", "equals the fixed equation", c.high_first() == fixed, format!("{c}"));

    let f5 = PrimeField::new(5).expect("5 is prime");
    r.push("supersingular", "x² - x + 1 divides the Deuring polynomial", divides_deuring(&f5, 1), "a = 1");
    let f4 = f5.from_bigint(&f[4]);
    r.push("supersingular", "f4 ≡ (1 - a)/a = 0", f4 == 0, format!("f4 ≡ {f4} (mod 5)"));

    let disc = c.discriminant();
    for p in ELL5_PRIMES {
        let pb = BigInt::from(p);
        let v = if disc.is_zero() { None } else { int_valuation(&disc, &pb).ok() };
        r.push("bad primes", format!("{p} prime"), is_prime(&pb).unwrap_or(false), "");
        r.push("bad primes", format!("v_{p}(disc) = 1"), v == Some(1), format!("valuation {v:?}"));
    }
    let t = classify_reduction(f, ELL5_PRIMES[0] as u64);
    r.push(
        "bad primes",
        format!("type II with e = 1 at {}", ELL5_PRIMES[0]),
        t == Ok(ReductionType::TypeII { e: 1 }),
        format!("{t:?}"),
    );

    let counts = reduce_curve(c, COUNT_PRIME).and_then(|g| count_points(&g));
    let evidence = match &counts {
        Ok((n1, n2)) => format!("(N1, N2) = ({n1}, {n2})"),
        Err(e) => format!("{e}"),
    };
    r.push("frobenius", format!("point counts over F_{COUNT_PRIME}"), counts.as_ref().ok() == Some(&COUNTS), evidence);
    let reduced = counts
        .ok()
        .and_then(|(n1, n2)| frobenius_data(COUNT_PRIME, n1, n2).ok())
        .and_then(|w| w.charpoly_mod(5).ok());
    let (irreducible, evidence) = match reduced {
        Some(p) => {
            let pat = quartic_factor_pattern(&p).unwrap_or_default();
            (pat.as_slice() == [4], format!("{p} mod 5, factor degrees {pat:?}"))
        }
        None => (false, "no Frobenius data".into()),
    };
    r.push("frobenius", "characteristic polynomial irreducible mod 5", irreducible, evidence);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_curve_passes() {
        let r = verify_ell5();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn charpoly_of_the_count() {
        let w = frobenius_data(19, 22, 410).unwrap();
        assert_eq!(w.charpoly(), [361, 38, 26, 2, 1].map(BigInt::from));
    }

    #[test]
    fn perturbation_keeps_symmetry_but_breaks_the_equation() {
        let mut hf = high_first(ELL5_CURVE);
        hf[3] += 625;
        let c = HyperCurve::from_high_first(hf).unwrap();
        let r = verify_ell5_curve(&c);
        for name in ["f6 ≡ f0", "f5 ≡ f1", "f4 ≡ f2", "f3 ≡ reference"] {
            assert_eq!(r.find("mod 5^4", name).unwrap().status, super::super::Status::Pass, "{name}");
        }
        assert_eq!(r.find("mod 5^4", "equals the fixed equation").unwrap().status, super::super::Status::Fail);
        assert!(!r.passed());
    }
}
