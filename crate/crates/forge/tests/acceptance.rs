//! Acceptance suite: one line per criterion, with its time budget.
//!
//! Set `FORGE_ACCEPT_ELL5_CLOSURE=1` to also run the `Sp4(F_5)` closure,
//! which needs several hundred MB and minutes of CPU.

use std::collections::{BTreeMap, BTreeSet};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use forge::search::parallel_search;
use forge_core::arith::{crt_solve, factorize, int_valuation, is_prime_u64, modulo};
use forge_core::finitefield::{deuring_poly, factor_small, quartic_factor_pattern, FpPoly, PrimeField};
use forge_core::hypercurve::{count_points, frobenius_data, reduce_curve, HyperCurve};
use forge_core::igusa::{classify_reduction, igusa_invariants, poly_discriminant, ReductionType};
use forge_core::sympgroup::{closure, gsp_order, qualifying_pair, sp4_order};
use forge_core::synth::{Certificate, RowKind, SynthOptions};
use forge_core::verify::{verify_certificate, verify_curve, verify_ell5, AuxInput, CheckReport, DiagnosticInput, Status};
use forge_core::weilselect::{select_aux, RandomSearch, SearchTarget};
use forge_core::{BigInt, BigRational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Criteria that are known not to hold as stated; see the README.
const EXPECTED_RED: &[u32] = &[10];

struct Line {
    id: u32,
    ok: bool,
}

fn criterion(lines: &mut Vec<Line>, id: u32, name: &str, budget: Duration, f: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    let ok = result.is_ok() && in_time;
    let detail = match &result {
        Ok(d) | Err(d) => d.clone(),
    };
    let timing = format!("{:.3?} of {:?}", elapsed, budget);
    let mark = match (ok, EXPECTED_RED.contains(&id)) {
        (true, _) => "PASS",
        (false, true) => "FAIL (expected)",
        (false, false) => "FAIL",
    };
    let late = if in_time { "" } else { " OVER TIME" };
    println!("[{mark}] {id:>2}. {name} ({timing}{late}): {detail}");
    lines.push(Line { id, ok });
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(int(n), int(d))
}

fn by_power<T: Copy>(high_first: [T; 7]) -> [T; 7] {
    let mut f = high_first;
    f.reverse();
    f
}

fn sextic(high_first: [i64; 7]) -> [BigInt; 7] {
    by_power(high_first).map(BigInt::from)
}

fn forge(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_forge")).args(args).output().expect("run forge")
}

fn c1_deuring() -> Outcome {
    let h = deuring_poly(7).map_err(|e| e.to_string())?;
    ensure(h == FpPoly::from_high_first(PrimeField::new(7).unwrap(), &[1, 2, 2, 1]), format!("H_7 = {h}"))?;
    let roots: BTreeSet<u64> = factor_small(&h).iter().map(|(g, _)| (7 - g.coeff(0)) % 7).collect();
    ensure(roots == BTreeSet::from([6, 4, 2]), format!("roots {roots:?}"))?;
    Ok(format!("H_7 = {h}, roots {{2, 4, 6}}"))
}

fn c1_cli() -> Outcome {
    let out = forge(&["deuring", "--ell", "7"]);
    let text = String::from_utf8_lossy(&out.stdout);
    let first = text.lines().next().unwrap_or_default();
    ensure(out.status.success() && first == "x^3+2x^2+2x+1 = (x+1)(x+3)(x+5) mod 7", format!("printed `{first}`"))?;
    Ok(first.to_string())
}

fn golden_sextic() -> [BigInt; 7] {
    sextic([1, 1, 0, 1, 0, 1, 1])
}

fn c2_igusa() -> Outcome {
    let inv = igusa_invariants(&golden_sextic()).map_err(|e| e.to_string())?;
    let want = [
        ("J2", &inv.j2, rat(-97, 4)),
        ("J4", &inv.j4, rat(1323, 128)),
        ("J6", &inv.j6, rat(-14515, 1024)),
        ("J8", &inv.j8, rat(3881491, 65536)),
        ("J10", &inv.j10, rat(6845, 256)),
        ("I12", &inv.i12, rat(-1095163, 64)),
    ];
    for (name, got, want) in &want {
        ensure(*got == want, format!("{name} = {got}, want {want}"))?;
    }
    Ok("J2..J10 and I12 exact".into())
}

fn c3_classify() -> Outcome {
    let f = golden_sextic();
    let t5 = classify_reduction(&f, 5).map_err(|e| e.to_string())?;
    ensure(t5 == ReductionType::TypeII { e: 1 }, format!("p = 5: {t5:?}"))?;
    let inv = igusa_invariants(&f).map_err(|e| e.to_string())?;
    let five = int(5);
    let v = |x: &BigRational| {
        int_valuation(x.numer(), &five).unwrap() - int_valuation(x.denom(), &five).unwrap()
    };
    let six_e = 6 * v(&inv.j10) - 5 * v(&inv.i12);
    ensure(six_e == 6, format!("v5(J10^6 / I12^5) = {six_e}"))?;
    let t7 = classify_reduction(&f, 7).map_err(|e| e.to_string())?;
    ensure(t7 == ReductionType::Good, format!("p = 7: {t7:?}"))?;
    Ok("p = 5 type II with e = 1 and v5 = 6; p = 7 good".into())
}

fn counts(q: u64, high_first: [i64; 7]) -> Result<(u64, u64), String> {
    let c = HyperCurve::new_unchecked(sextic(high_first));
    reduce_curve(&c, q).and_then(|g| count_points(&g)).map_err(|e| e.to_string())
}

fn c5_frobenius() -> Outcome {
    let w = frobenius_data(19, 22, 410).map_err(|e| e.to_string())?;
    ensure(w.charpoly() == [361, 38, 26, 2, 1].map(int), format!("L = {:?}", w.charpoly()))?;
    let p = w.charpoly_mod(5).map_err(|e| e.to_string())?;
    let pat = quartic_factor_pattern(&p).map_err(|e| e.to_string())?;
    ensure(pat == [4], format!("{p} has pattern {pat:?}"))?;
    Ok(format!("X^4+2X^3+26X^2+38X+361, mod 5 {p} irreducible"))
}

fn c6_orders() -> Outcome {
    for (q, order, factors) in [
        (7u64, 1659571200u64, vec![(2u64, 10u32), (3, 3), (5, 2), (7, 4)]),
        (5, 37440000, vec![(2, 9), (3, 2), (5, 4), (13, 1)]),
    ] {
        let n = gsp_order(2, q);
        ensure(n == BigInt::from(order), format!("|GSp4(F_{q})| = {n}"))?;
        let fac = factorize(&n).map_err(|e| e.to_string())?;
        let want: Vec<(BigInt, u32)> = factors.into_iter().map(|(p, e)| (BigInt::from(p), e)).collect();
        ensure(fac.factors == want, format!("{n} = {fac}"))?;
    }
    Ok("1659571200 = 2^10 * 3^3 * 5^2 * 7^4, 37440000 = 2^9 * 3^2 * 5^4 * 13".into())
}

fn c7_select() -> Outcome {
    let s = select_aux(7, &[2, 3, 5, 7]).map_err(|e| e.to_string())?;
    let got = (s.q1, s.q2, s.b1, s.z, s.b2);
    ensure(got == (29, 43, 1, 1, 3), format!("(q1, q2, b1, z, b2) = {got:?}"))?;
    Ok("(q1, q2, b1, z, b2) = (29, 43, 1, 1, 3)".into())
}

fn c8_search(q: u64, n1: u64, n2: u64, witness: [u64; 7]) -> Outcome {
    let target = SearchTarget::new(q, n1, n2).map_err(|e| e.to_string())?;
    ensure(target.accepts(&by_power(witness)), "example witness rejected")?;
    let f = parallel_search(&RandomSearch::new(target, forge::cli::DEFAULT_SEED), 1 << 32, 4).map_err(|e| e.to_string())?;
    let recount = count_points(&f).map_err(|e| e.to_string())?;
    ensure(recount == (n1, n2), format!("{f} recounts to {recount:?}"))?;
    Ok(format!("found {f}, example witness validates"))
}

/// The target congruence conditions for ell = 7, as conditions on `f` (by power).
fn proposition_holds(f: &[BigInt; 7]) -> Result<(), String> {
    let fixed: [(u64, [Option<i64>; 7]); 5] = [
        (16, by_power([1, 0, 4, 2, 4, 0, 1].map(Some))),
        (3, by_power([1, 0, 1, 0, 1, 0, 1].map(Some))),
        (25, by_power([1, 1, 0, 1, 0, 1, 1].map(Some))),
        (29, by_power([1, 1, 0, 0, 0, 17, 5].map(Some))),
        (43, by_power([1, 1, 0, 0, 3, 13, 21].map(Some))),
    ];
    for (m, residues) in fixed {
        for (i, r) in residues.iter().enumerate() {
            if let Some(r) = r {
                let got = modulo(&f[i], &BigInt::from(m));
                ensure(got == int(*r), format!("f{i} ≡ {got} (mod {m}), want {r}"))?;
            }
        }
    }
    let m = int(2401);
    for (i, j) in [(6, 0), (5, 1), (4, 2)] {
        ensure(modulo(&(&f[i] - &f[j]), &m) == int(0), format!("f{i} ≢ f{j} (mod 7^4)"))?;
    }
    for (i, r) in [(6, 1), (5, 0), (4, 2), (3, 0)] {
        ensure(modulo(&f[i], &int(7)) == int(r), format!("f{i} ≢ {r} (mod 7)"))?;
    }
    Ok(())
}

fn rows_match_proposition(cert: &Certificate) -> Result<(), String> {
    let kinds: Vec<(RowKind, BigInt)> = cert.congruences.rows.iter().map(|r| (r.kind, r.modulus.clone())).collect();
    let want = [
        (RowKind::Mod16, 16),
        (RowKind::Mod3, 3),
        (RowKind::Mod25, 25),
        (RowKind::Ell4, 2401),
        (RowKind::Q1, 29),
        (RowKind::Q2, 43),
    ]
    .map(|(k, m)| (k, int(m)));
    ensure(kinds == want, format!("rows {kinds:?}"))?;
    // Each row on its own must satisfy the proposition's conditions at its
    // modulus; checking the glued curve covers all of them at once.
    proposition_holds(cert.curve.coeffs())
}

fn c9_end_to_end() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("cert.json");
    let path = path.to_str().unwrap();
    let out = forge(&["--json", path, "synth", "--ell", "7"]);
    ensure(out.status.success(), format!("synth exited {:?}", out.status.code()))?;
    let verify = forge(&["verify", "--cert", path]);
    ensure(verify.status.success(), "verify --cert failed on the searched certificate")?;
    let doc = forge::cert::CertificateDoc::from_json(&std::fs::read_to_string(path).unwrap()).map_err(|e| e.to_string())?;
    let searched = doc.to_certificate().map_err(|e| e.to_string())?;
    let report = verify_certificate(&searched);
    ensure(report.passed(), format!("searched certificate: {:?}", report.failing().next()))?;

    let opts = SynthOptions { lex_prefix: Some(vec![1, 1]), ..SynthOptions::default() };
    let cert = forge::search::synthesize_parallel(7, &opts, 4).map_err(|e| e.to_string())?;
    ensure(verify_certificate(&cert).passed(), "lexicographic certificate fails verification")?;
    rows_match_proposition(&cert)?;
    ensure(cert.curve.coeff(0) == &BigInt::from(3382528801u64), format!("f0 = {}", cert.curve.coeff(0)))?;
    Ok(format!(
        "searched certificate verifies ({} checks); f6 = f5 = 1 scan reproduces every target row, f0 = 3382528801",
        report.checks.len()
    ))
}

fn status(r: &CheckReport, block: &str, name: &str) -> Option<Status> {
    r.find(block, name).map(|c| c.status)
}

fn c10_diagnostic() -> Outcome {
    let c = HyperCurve::new(sextic([1, 9757776, 8853700, 10422426, 677292100, 3179077776, 342862800]))
        .map_err(|e| e.to_string())?;
    let input = DiagnosticInput {
        ell: 7,
        a: Some(5),
        q1: Some(AuxInput { q: 29, witness: Some(by_power([1, 1, 0, 0, 0, 17, 5])) }),
        q2: Some(AuxInput { q: 43, witness: Some(by_power([1, 1, 0, 0, 3, 13, 21])) }),
        primes: None,
    };
    let r = verify_curve(&c, &input);
    let mut wrong = Vec::new();
    for block in ["mod 3", "mod 25", "mod q1", "mod q2"] {
        if r.block_passed(block) != Some(true) {
            let failing: Vec<String> =
                r.block(block).filter(|c| c.status != Status::Pass).map(|c| format!("{} [{}]", c.name, c.evidence)).collect();
            wrong.push(format!("{block} block fails: {}", failing.join("; ")));
        }
    }
    for (block, name, want) in [
        ("mod ell^4", "f4 ≡ f2", Status::Pass),
        ("mod ell^4", "f5 ≡ f1", Status::Pass),
        ("mod 16", "f0 ≡ 1", Status::Fail),
        ("mod ell^4", "f6 ≡ f0", Status::Fail),
        ("mod 16", "f3 ≡ 2", Status::Fail),
    ] {
        let got = status(&r, block, name);
        if got != Some(want) {
            wrong.push(format!("{block} {name}: {got:?}, want {want:?}"));
        }
    }
    if wrong.is_empty() {
        Ok("every claimed pass and fail reproduced".into())
    } else {
        Err(wrong.join(" | "))
    }
}

fn c11_ell5() -> Outcome {
    let r = verify_ell5();
    ensure(r.passed(), format!("failing: {:?}", r.failing().map(|c| &c.name).collect::<Vec<_>>()))?;
    for p in ["27792683", "195476205803858674906021"] {
        ensure(status(&r, "bad primes", &format!("v_{p}(disc) = 1")) == Some(Status::Pass), format!("v_{p}"))?;
    }
    ensure(status(&r, "bad primes", "type II with e = 1 at 27792683") == Some(Status::Pass), "type II")?;
    Ok(format!("{} checks pass", r.checks.len()))
}

fn c12_closure(ell: u64, pairs: u64) -> Outcome {
    let field = PrimeField::new(ell).map_err(|e| e.to_string())?;
    let order = sp4_order(ell);
    for k in 0..pairs {
        let pair = qualifying_pair(field, forge::cli::DEFAULT_SEED, k);
        ensure(pair[0].is_transvection() == Ok(true), format!("pair {k}: not a transvection"))?;
        let r = closure(&pair, &order).map_err(|e| e.to_string())?;
        ensure(r.is_full_sp4, format!("pair {k} generates a subgroup of order {}", r.size))?;
    }
    Ok(format!("{pairs} of {pairs} pairs generate Sp4(F_{ell}) of order {order}"))
}

fn random_sextic_mod(rng: &mut ChaCha8Rng, q: u64) -> [u64; 7] {
    let mut f: [u64; 7] = std::array::from_fn(|_| rng.random_range(0..q));
    f[6] = rng.random_range(1..q);
    f
}

fn c13_weil(rng: &mut ChaCha8Rng) -> Outcome {
    let primes: Vec<u64> = (3..=50).filter(|&q| is_prime_u64(q)).collect();
    let mut done = 0;
    while done < 50 {
        let q = primes[rng.random_range(0..primes.len())];
        let field = PrimeField::new(q).unwrap();
        let f = FpPoly::new(field, random_sextic_mod(rng, q));
        if !f.is_squarefree() {
            continue;
        }
        let (n1, n2) = count_points(&f).map_err(|e| e.to_string())?;
        let w = frobenius_data(q, n1, n2).map_err(|e| e.to_string())?;
        ensure(w.within_weil_bounds(), format!("{f} over F_{q}: a = {}, b = {}", w.a, w.b))?;
        done += 1;
    }
    Ok("50 curves".into())
}

fn c13_crt(rng: &mut ChaCha8Rng) -> Outcome {
    let primes: Vec<u64> = (2..2000).filter(|&p| is_prime_u64(p)).collect();
    for _ in 0..10_000 {
        let k = rng.random_range(1..6);
        let mut chosen = BTreeSet::new();
        while chosen.len() < k {
            chosen.insert(primes[rng.random_range(0..primes.len())]);
        }
        let system: Vec<(BigInt, BigInt)> = chosen
            .iter()
            .map(|&p| {
                let m = p.pow(rng.random_range(1..3));
                (BigInt::from(rng.random_range(0..m)), BigInt::from(m))
            })
            .collect();
        let x = crt_solve(&system).map_err(|e| e.to_string())?;
        let product: BigInt = system.iter().map(|(_, m)| m).product();
        ensure(x >= int(0) && x < product, format!("{x} outside [0, {product})"))?;
        for (r, m) in &system {
            ensure(modulo(&x, m) == *r, format!("{x} ≢ {r} (mod {m})"))?;
        }
    }
    Ok("10^4 systems".into())
}

fn c13_j8(rng: &mut ChaCha8Rng) -> Outcome {
    let mut done = 0;
    while done < 100 {
        let f: [BigInt; 7] = std::array::from_fn(|i| {
            let c = rng.random_range(-50i64..=50);
            if i == 6 && c == 0 {
                int(1)
            } else {
                int(c)
            }
        });
        if poly_discriminant(&f).map_err(|e| e.to_string())? == int(0) {
            continue;
        }
        let inv = igusa_invariants(&f).map_err(|e| e.to_string())?;
        let lhs = &inv.j8 * BigRational::from_integer(int(4));
        let rhs = &inv.j2 * &inv.j6 - &inv.j4 * &inv.j4;
        ensure(lhs == rhs, format!("4 J8 ≠ J2 J6 - J4^2 for {f:?}"))?;
        done += 1;
    }
    Ok("100 sextics".into())
}

/// Low-first coefficient vectors of all monic polynomials of degree `d`.
fn monic(p: u64, d: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![1u64]];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|tail| {
                (0..p).map(move |c| {
                    let mut v = vec![c];
                    v.extend(&tail);
                    v
                })
            })
            .collect();
    }
    out
}

fn mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Pattern of every monic quartic, found by multiplying out all shapes.
fn quartic_oracle(p: u64) -> BTreeMap<Vec<u64>, Vec<u32>> {
    let mut irreducible: Vec<Vec<Vec<u64>>> = vec![Vec::new()];
    for d in 1..=4 {
        let mut reducible = BTreeSet::new();
        for k in 1..d {
            for a in monic(p, k) {
                for b in monic(p, d - k) {
                    reducible.insert(mul(p, &a, &b));
                }
            }
        }
        irreducible.push(monic(p, d).into_iter().filter(|f| !reducible.contains(f)).collect());
    }
    let mut table = BTreeMap::new();
    for shape in [vec![1, 1, 1, 1], vec![1, 1, 2], vec![2, 2], vec![1, 3], vec![4]] {
        let mut partial: Vec<Vec<u64>> = vec![vec![1]];
        for &d in &shape {
            partial = partial.iter().flat_map(|f| irreducible[d as usize].iter().map(move |g| mul(p, f, g))).collect();
        }
        for f in partial {
            table.insert(f, shape.clone());
        }
    }
    table
}

fn c13_quartic() -> Outcome {
    for p in [3u64, 5] {
        let field = PrimeField::new(p).unwrap();
        let table = quartic_oracle(p);
        ensure(table.len() as u64 == p.pow(4), format!("oracle covers {} quartics over F_{p}", table.len()))?;
        for (f, want) in &table {
            let got = quartic_factor_pattern(&FpPoly::new(field, f.iter().copied())).map_err(|e| e.to_string())?;
            ensure(&got == want, format!("{f:?} over F_{p}: {got:?}, oracle {want:?}"))?;
        }
    }
    Ok("all monic quartics over F_3 and F_5".into())
}

fn main() -> ExitCode {
    let ms = Duration::from_millis;
    let s = Duration::from_secs;
    let mut lines = Vec::new();

    criterion(&mut lines, 1, "Deuring polynomial for ell = 7", ms(1), c1_deuring);
    criterion(&mut lines, 1, "`deuring --ell 7` output", s(5), c1_cli);
    criterion(&mut lines, 2, "Igusa invariants of x^6+x^5+x^3+x+1", ms(10), c2_igusa);
    criterion(&mut lines, 3, "reduction type at 5 and 7", ms(10), c3_classify);
    for (label, q, f, want) in [
        ("x^6+x^5+17x+5 over F_29", 29, [1, 1, 0, 0, 0, 17, 5], (31, 843)),
        ("x^6+x^5+3x^2+13x+21 over F_43", 43, [1, 1, 0, 0, 3, 13, 21], (45, 1855)),
        ("ell = 5 curve mod 19", 19, [1, 0, 391300, 1170, 1300, 0, 1], (22, 410)),
    ] {
        criterion(&mut lines, 4, &format!("point counts of {label}"), ms(100), || {
            let got = counts(q, f)?;
            ensure(got == want, format!("{got:?}"))?;
            Ok(format!("{got:?}"))
        });
    }
    criterion(&mut lines, 5, "Frobenius data (19, 22, 410)", ms(10), c5_frobenius);
    criterion(&mut lines, 6, "group orders for ell = 7 and 5", s(1), c6_orders);
    criterion(&mut lines, 7, "auxiliary selection for ell = 7", s(1), c7_select);
    criterion(&mut lines, 8, "curve search over F_29", s(60), || c8_search(29, 31, 843, [1, 1, 0, 0, 0, 17, 5]));
    criterion(&mut lines, 8, "curve search over F_43", s(120), || c8_search(43, 45, 1855, [1, 1, 0, 0, 3, 13, 21]));
    criterion(&mut lines, 9, "end-to-end synthesis for ell = 7", s(300), c9_end_to_end);
    criterion(&mut lines, 10, "diagnostic on the example ell = 7 curve", s(1), c10_diagnostic);
    criterion(&mut lines, 11, "ell = 5 curve", s(30), c11_ell5);
    criterion(&mut lines, 12, "closure of 100 random pairs in Sp4(F_3)", s(300), || c12_closure(3, 100));
    if std::env::var_os("FORGE_ACCEPT_ELL5_CLOSURE").is_some() {
        criterion(&mut lines, 12, "closure of a random pair in Sp4(F_5)", s(1800), || c12_closure(5, 1));
    } else {
        println!("[SKIP] 12. closure in Sp4(F_5): set FORGE_ACCEPT_ELL5_CLOSURE=1 to run");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    criterion(&mut lines, 13, "Weil bounds on random curves", s(60), || c13_weil(&mut rng));
    criterion(&mut lines, 13, "CRT round trips", s(60), || c13_crt(&mut rng));
    criterion(&mut lines, 13, "4 J8 = J2 J6 - J4^2", s(60), || c13_j8(&mut rng));
    criterion(&mut lines, 13, "quartic factor patterns, exhaustive", s(60), c13_quartic);

    let unexpected: Vec<u32> = lines.iter().filter(|l| l.ok == EXPECTED_RED.contains(&l.id)).map(|l| l.id).collect();
    let passed = lines.iter().filter(|l| l.ok).count();
    println!("{passed} of {} criterion lines pass; expected red: {EXPECTED_RED:?}", lines.len());
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
