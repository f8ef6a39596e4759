//! Check builders shared by certificate and diagnostic verification.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::CheckReport;
use crate::arith::{int_valuation, is_perfect_square, is_prime_u64, modulo};
use crate::finitefield::{deuring_poly, quartic_factor_pattern, FpPoly, PrimeField};
use crate::hypercurve::{count_points, frobenius_data, reduce_curve, HyperCurve, WeilData};
use crate::igusa::{classify_reduction, GuardPattern, ReductionType};
use crate::sympgroup::{thm34_check, CharPolyQuartic};

pub(crate) fn curve_block(r: &mut CheckReport, c: &HyperCurve) -> bool {
    let lead = !c.coeff(6).is_zero();
    r.push("curve", "f6 ≠ 0", lead, format!("f6 = {}", c.coeff(6)));
    let disc = c.discriminant();
    let ok = lead && !disc.is_zero();
    r.push("curve", "squarefree", ok, format!("disc has {} bits", disc.bits()));
    ok
}

pub(crate) fn pattern_block(r: &mut CheckReport, f: &[BigInt; 7], g: &GuardPattern) {
    let m = BigInt::from(g.modulus);
    for i in (0..7).rev() {
        let got = modulo(&f[i], &m);
        let want = g.by_power[i];
        r.push(g.name, format!("f{i} ≡ {want}"), got == BigInt::from(want), format!("f{i} ≡ {got} (mod {})", g.modulus));
    }
}

/// `f6 ≡ f0`, `f5 ≡ f1`, `f4 ≡ f2` mod `ℓ⁴`.
pub(crate) fn ell4_block(r: &mut CheckReport, f: &[BigInt; 7], ell: u64) {
    let m = BigInt::from(ell).pow(4);
    for (i, j) in [(6, 0), (5, 1), (4, 2)] {
        let diff = modulo(&(&f[i] - &f[j]), &m);
        r.push("mod ell^4", format!("f{i} ≡ f{j}"), diff.is_zero(), format!("f{i} - f{j} ≡ {diff} (mod {m})"));
    }
}

/// `f6 ≡ 1`, `f5 ≡ 0`, `f3 ≡ 0` and `f4 ≡ (1 - a)/a` mod `ℓ`, for one of the
/// allowed values of `a`.
pub(crate) fn ell_block(r: &mut CheckReport, f: &[BigInt; 7], field: &PrimeField, allowed_a: &[u64]) {
    let ell = field.modulus();
    let red = |i: usize| field.from_bigint(&f[i]);
    for (i, want) in [(6usize, 1u64), (5, 0), (3, 0)] {
        r.push("mod ell", format!("f{i} ≡ {want}"), red(i) == want, format!("f{i} ≡ {} (mod {ell})", red(i)));
    }
    let targets: Vec<(u64, u64)> = allowed_a
        .iter()
        .filter_map(|&a| field.inv(a).map(|inv| (a, field.mul(field.sub(1, a), inv))))
        .collect();
    let hit = targets.iter().find(|(_, t)| *t == red(4));
    let evidence = match hit {
        Some((a, t)) => format!("f4 ≡ {t} = (1 - {a})/{a} (mod {ell})"),
        None => format!("f4 ≡ {} (mod {ell}), allowed {:?}", red(4), targets),
    };
    r.push("mod ell", "f4 ≡ (1 - a)/a", hit.is_some(), evidence);
}

/// Does `x² - x + a` divide the Deuring polynomial?
pub(crate) fn divides_deuring(field: &PrimeField, a: u64) -> bool {
    match deuring_poly(field.modulus()) {
        Ok(h) => FpPoly::new(*field, [field.reduce(a), field.neg(1), 1]).divides(&h),
        Err(_) => false,
    }
}

pub(crate) fn coefficient_block(r: &mut CheckReport, block: &str, f: &[BigInt; 7], q: u64, witness: &[u64; 7]) {
    let m = BigInt::from(q);
    for i in (0..7).rev() {
        let got = modulo(&f[i], &m);
        r.push(
            block,
            format!("f{i} ≡ {}", witness[i]),
            got == BigInt::from(witness[i]),
            format!("f{i} ≡ {got} (mod {q})"),
        );
    }
}

/// Counts points on `f mod q` and, if given, on the witness; returns the
/// Frobenius data of the reduction.
pub(crate) fn frobenius_block(
    r: &mut CheckReport,
    block: &str,
    c: &HyperCurve,
    q: u64,
    witness: Option<(&[u64; 7], (u64, u64))>,
) -> Option<WeilData> {
    if let Some((w, expected)) = witness {
        let counts = PrimeField::new(q).ok().and_then(|field| count_points(&FpPoly::new(field, w.iter().copied())).ok());
        r.push(
            block,
            "witness point counts",
            counts == Some(expected),
            format!("witness counts {counts:?}, recorded {expected:?}"),
        );
    }
    let reduced = reduce_curve(c, q).and_then(|g| count_points(&g));
    let data = reduced.clone().ok().and_then(|(n1, n2)| frobenius_data(q, n1, n2).ok());
    let evidence = match (&reduced, &data) {
        (Ok((n1, n2)), Some(w)) => format!("(N1, N2) = ({n1}, {n2}), a = {}, b = {}", w.a, w.b),
        (Err(e), _) => format!("{e}"),
        _ => String::from("parity violation"),
    };
    let counts_ok = match witness {
        Some((_, expected)) => reduced.as_ref().ok() == Some(&expected),
        None => data.is_some(),
    };
    r.push(block, "curve mod q point counts", counts_ok, evidence);
    data
}

/// The hypotheses under which a Weil polynomial is realized by a genus-2
/// curve, recomputed with integer arithmetic only.
pub(crate) fn admissibility(r: &mut CheckReport, block: &str, w: &WeilData) {
    let (q, a, b) = (w.q as i128, w.a as i128, w.b as i128);
    r.push(block, "Weil bounds", w.within_weil_bounds(), format!("q = {q}, a = {a}, b = {b}"));
    let d0 = BigInt::from(a * a - 4 * b + 8 * q);
    r.push(block, "Δ0 not a square in Z", is_perfect_square(&d0).is_none(), format!("Δ0 = {d0}"));
    r.push(block, "q ∤ b", b % q != 0, format!("b = {b}"));
    let forbidden = [0, q + b, 2 * b, 3 * (b - q)];
    r.push(block, "a² ∉ {0, q+b, 2b, 3(b-q)}", !forbidden.contains(&(a * a)), format!("a² = {}", a * a));
}

pub(crate) fn first_condition(r: &mut CheckReport, block: &str, w: &WeilData, field: &PrimeField) {
    let p = CharPolyQuartic::from_weil(w, *field);
    let d = p.delta0();
    r.push(block, "Δ0(P1) nonresidue mod ell", field.quadratic_character(d) == -1, format!("Δ0 ≡ {d}"));
    r.push(block, "a1 ≢ 0 mod ell", p.a != 0, format!("a ≡ {}", p.a));
}

pub(crate) fn second_condition(r: &mut CheckReport, block: &str, w: &WeilData, field: &PrimeField) {
    let p = CharPolyQuartic::from_weil(w, *field);
    let d = p.delta0();
    r.push(block, "Δ0(P2) nonzero square mod ell", field.quadratic_character(d) == 1, format!("Δ0 ≡ {d}"));
    let pattern = quartic_factor_pattern(&p.poly()).ok();
    r.push(
        block,
        "P2 not a product of linear factors mod ell",
        pattern.as_deref().is_some_and(|pat| pat != [1, 1, 1, 1]),
        format!("P2 = {} with factor degrees {pattern:?}", p.poly()),
    );
}

pub(crate) fn aux_primes_block(r: &mut CheckReport, ell: u64, q1: u64, q2: u64, excluded: &[u64]) {
    r.push("aux primes", "q1, q2 prime", is_prime_u64(q1) && is_prime_u64(q2), format!("q1 = {q1}, q2 = {q2}"));
    r.push("aux primes", "q1 ≡ q2 ≡ 1 mod ell", q1 % ell == 1 && q2 % ell == 1, format!("ell = {ell}"));
    r.push("aux primes", "q1 ≠ q2", q1 != q2, String::new());
    r.push("aux primes", "q2 > 3 ell", q2 > 3 * ell, format!("3 ell = {}", 3 * ell));
    r.push(
        "aux primes",
        "q1, q2 outside the prime set",
        !excluded.contains(&q1) && !excluded.contains(&q2),
        format!("{excluded:?}"),
    );
}

/// The mod-25 pattern forces type (II) reduction at 5 with trivial
/// component group; confirm it from the invariants.
pub(crate) fn reduction_at_5(r: &mut CheckReport, c: &HyperCurve) {
    let t = classify_reduction(c.coeffs(), 5);
    r.push("reduction at 5", "type II with e = 1", t == Ok(ReductionType::TypeII { e: 1 }), format!("{t:?}"));
}

pub(crate) fn generation_block(r: &mut CheckReport, w1: &WeilData, w2: &WeilData, field: &PrimeField) {
    let p1 = CharPolyQuartic::from_weil(w1, *field);
    let p2 = CharPolyQuartic::from_weil(w2, *field);
    match thm34_check(&p1, &p2) {
        Ok(t) => {
            r.push("generation", "condition on P1", t.condition1, format!("P1 = {}", p1.poly()));
            r.push("generation", "condition on P2", t.condition2, format!("P2 = {}", p2.poly()));
        }
        Err(e) => r.push("generation", "multiplier 1", false, format!("{e}")),
    }
}

/// `f ≡ x⁶ + 1` mod every residual prime, hence good reduction there.
pub(crate) fn residual_block(r: &mut CheckReport, c: &HyperCurve, primes: &[u64]) {
    let target = [1u64, 0, 0, 0, 0, 0, 1];
    for &p in primes {
        let m = BigInt::from(p);
        let ok = (0..7).all(|i| modulo(c.coeff(i), &m) == BigInt::from(target[i]));
        r.push("residual", format!("f ≡ x^6 + 1 (mod {p})"), ok, String::new());
        let disc = c.discriminant();
        let v = if disc.is_zero() { None } else { int_valuation(&disc, &m).ok() };
        r.push("residual", format!("disc ≢ 0 (mod {p})"), v == Some(0), format!("v_{p}(disc) = {v:?}"));
    }
}
