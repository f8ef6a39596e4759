use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::blocks::*;
use super::CheckReport;
use crate::arith::{factorize, is_prime_u64, modulo};
use crate::finitefield::{supersingular_params, PrimeField};
use crate::hypercurve::{HyperCurve, WeilData};
use crate::igusa::{GUARD_MOD16, GUARD_MOD25, GUARD_MOD3};
use crate::sympgroup::gsp_order;
use crate::synth::Certificate;

/// An auxiliary prime for diagnostic verification, with an optional
/// witness curve (coefficients by power of `x`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxInput {
    pub q: u64,
    pub witness: Option<[u64; 7]>,
}

/// What is known about an arbitrary curve handed to the verifier.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiagnosticInput {
    pub ell: u64,
    /// Supersingular parameter; any valid one is accepted when absent.
    pub a: Option<u64>,
    pub q1: Option<AuxInput>,
    pub q2: Option<AuxInput>,
    /// Prime set of the group order; recomputed when absent.
    pub primes: Option<Vec<u64>>,
}

/// Re-checks every hypothesis recorded in a certificate. Nothing stored in
/// the certificate is trusted beyond the numbers it claims.
pub fn verify_certificate(cert: &Certificate) -> CheckReport {
    let mut r = CheckReport::default();
    let c = &cert.curve;
    let f = c.coeffs();
    let ell = cert.ell;
    curve_block(&mut r, c);

    for g in [&GUARD_MOD16, &GUARD_MOD3, &GUARD_MOD25] {
        pattern_block(&mut r, f, g);
    }

    let field = match PrimeField::new(ell) {
        Ok(field) if ell >= 7 => field,
        _ => {
            r.push("supersingular", "ell prime, ell ≥ 7", false, format!("ell = {ell}"));
            return r;
        }
    };
    ell4_block(&mut r, f, ell);
    ell_block(&mut r, f, &field, &[cert.a]);
    r.push(
        "supersingular",
        "x² - x + a divides the Deuring polynomial",
        divides_deuring(&field, cert.a),
        format!("a = {}", cert.a),
    );
    let lift = field.inv(cert.a).map(|inv| field.mul(field.sub(1, cert.a), inv));
    r.push("supersingular", "recorded f4 residue", lift == Some(cert.a_lift), format!("(1 - a)/a = {lift:?}"));

    let sel = &cert.selection;
    prime_set_block(&mut r, ell, &cert.primes, Some(&cert.group_order));
    aux_primes_block(&mut r, ell, sel.q1, sel.q2, &cert.primes);

    let mut data: [Option<WeilData>; 2] = [None, None];
    for (k, w) in cert.witnesses.iter().enumerate() {
        let (block, q, a, b) = if k == 0 { ("mod q1", sel.q1, sel.a1, sel.b1) } else { ("mod q2", sel.q2, sel.a2, sel.b2) };
        r.push(block, "witness prime", w.q == q, format!("witness over F_{}, selected q = {q}", w.q));
        coefficient_block(&mut r, block, f, q, &w.coeffs);
        let d = frobenius_block(&mut r, block, c, q, Some((&w.coeffs, (w.n1, w.n2))));
        let matches = d.as_ref().is_some_and(|d| d.a == a && d.b == b);
        r.push(block, "Frobenius data matches selection", matches, format!("selected a = {a}, b = {b}"));
        data[k] = d;
    }
    weil_blocks(&mut r, &data, &field);

    residual_block(&mut r, c, &residual_primes(ell, &cert.primes));

    for row in &cert.congruences.rows {
        let ok = (0..7).all(|i| modulo(&f[i], &row.modulus) == modulo(&row.residues[i], &row.modulus));
        r.push("system", format!("{} (mod {})", row.kind.label(), row.modulus), ok, "");
    }
    reduction_at_5(&mut r, c);
    r
}

/// Checks an arbitrary curve against whatever hypotheses can be evaluated
/// from `input`; the rest are reported as skipped.
pub fn verify_curve(c: &HyperCurve, input: &DiagnosticInput) -> CheckReport {
    let mut r = CheckReport::default();
    let f = c.coeffs();
    let ell = input.ell;
    curve_block(&mut r, c);
    for g in [&GUARD_MOD16, &GUARD_MOD3, &GUARD_MOD25] {
        pattern_block(&mut r, f, g);
    }
    let field = match PrimeField::new(ell) {
        Ok(field) if ell >= 5 => field,
        _ => {
            r.push("supersingular", "ell prime, ell ≥ 5", false, format!("ell = {ell}"));
            return r;
        }
    };
    ell4_block(&mut r, f, ell);
    let allowed = match input.a {
        Some(a) => alloc::vec![a],
        None => supersingular_params(ell).unwrap_or_default(),
    };
    ell_block(&mut r, f, &field, &allowed);
    if let Some(a) = input.a {
        r.push("supersingular", "x² - x + a divides the Deuring polynomial", divides_deuring(&field, a), format!("a = {a}"));
    }

    let primes = match &input.primes {
        Some(p) => {
            prime_set_block(&mut r, ell, p, None);
            p.clone()
        }
        None => recomputed_primes(ell).unwrap_or_default(),
    };

    let mut data: [Option<WeilData>; 2] = [None, None];
    for (k, aux) in [&input.q1, &input.q2].into_iter().enumerate() {
        let block = if k == 0 { "mod q1" } else { "mod q2" };
        let Some(aux) = aux else {
            r.skip(block, "auxiliary prime", "not given", false);
            continue;
        };
        let q = aux.q;
        if !is_prime_u64(q) || q < 3 {
            r.push(block, "q prime", false, format!("q = {q}"));
            continue;
        }
        r.push(block, "q ≡ 1 mod ell", q % ell == 1, format!("q = {q}"));
        r.push(block, "q outside the prime set", !primes.contains(&q), format!("q = {q}"));
        if let Some(w) = &aux.witness {
            coefficient_block(&mut r, block, f, q, w);
        }
        data[k] = frobenius_block(&mut r, block, c, q, None);
    }
    if let (Some(a1), Some(a2)) = (&input.q1, &input.q2) {
        r.push("aux primes", "q2 > 3 ell", a2.q > 3 * ell, format!("q1 = {}, q2 = {}", a1.q, a2.q));
    }
    weil_blocks(&mut r, &data, &field);

    residual_block(&mut r, c, &residual_primes(ell, &primes));
    reduction_at_5(&mut r, c);
    r
}

fn weil_blocks(r: &mut CheckReport, data: &[Option<WeilData>; 2], field: &PrimeField) {
    if let Some(d) = &data[0] {
        admissibility(r, "weil q1", d);
        first_condition(r, "weil q1", d, field);
    }
    if let Some(d) = &data[1] {
        admissibility(r, "weil q2", d);
        second_condition(r, "weil q2", d, field);
    }
    if let [Some(d1), Some(d2)] = data {
        generation_block(r, d1, d2, field);
    }
}

fn recomputed_primes(ell: u64) -> Option<Vec<u64>> {
    let fac = factorize(&gsp_order(2, ell)).ok()?;
    fac.primes().map(|p| p.to_u64()).collect()
}

fn prime_set_block(r: &mut CheckReport, ell: u64, primes: &[u64], order: Option<&BigInt>) {
    let expected = gsp_order(2, ell);
    if let Some(order) = order {
        r.push("prime set", "group order", *order == expected, format!("|GSp4(F_{ell})| = {expected}"));
    }
    let recomputed = recomputed_primes(ell);
    r.push(
        "prime set",
        "primes of the group order",
        recomputed.as_deref() == Some(primes),
        format!("recomputed {recomputed:?}"),
    );
}

fn residual_primes(ell: u64, primes: &[u64]) -> Vec<u64> {
    primes.iter().copied().filter(|&p| ![2, 3, 5, ell].contains(&p)).collect()
}
