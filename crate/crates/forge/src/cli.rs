//! Command-line front end. Every subcommand produces a human-readable text
//! and a JSON value; `--json PATH` writes the latter.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use forge_core::arith::factorize;
use forge_core::finitefield::{deuring_poly, factor_small, supersingular_params, PrimeField};
use forge_core::hypercurve::{count_points, frobenius_data, reduce_curve, HyperCurve};
use forge_core::igusa::{classify_reduction, igusa_clebsch, igusa_invariants, ReductionType};
use forge_core::sympgroup::{closure, gsp_order, qualifying_pair, sp4_order, SpMatrix};
use forge_core::synth::{prime_set, SynthOptions};
use forge_core::verify::{verify_certificate, verify_curve, verify_ell5, AuxInput, CheckReport, DiagnosticInput};
use forge_core::weilselect::{select_aux, search_curve, RandomSearch, SearchStrategy, SearchTarget};
use forge_core::{BigInt, BigRational, Error};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::cert::{CertificateDoc, ReportDoc};
use crate::format::{format_curve, format_sextic, parse_sextic};
use crate::search::{parallel_search, synthesize_parallel, thread_count};

pub const DEFAULT_SEED: u64 = 0x5eed_6a10;

#[derive(Debug, Parser)]
#[command(name = "forge", version, about = "Genus-2 curves with tame GSp4(F_ell) images: synthesis, verification and the pieces in between")]
pub struct Cli {
    /// Write the machine-readable result here (`-` for standard output).
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads for curve search (falls back to FORGE_THREADS).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[arg(long, short, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a curve for ell and print its certificate.
    Synth(SynthArgs),
    /// Re-verify a certificate, or check an arbitrary curve.
    Verify(VerifyArgs),
    /// Check the fixed curve for ell = 5.
    Ell5,
    /// Igusa-Clebsch and Igusa invariants of a sextic.
    Igusa {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Reduction type at an odd prime.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        p: u64,
    },
    /// Point counts over F_q and F_q^2.
    Count {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// The Deuring polynomial mod ell and its factorization.
    Deuring {
        #[arg(long)]
        ell: u64,
    },
    /// Find a sextic over F_q with prescribed point counts.
    Search(SearchArgs),
    /// Order of GSp_2n(F_q) and its factorization.
    GroupOrder {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
    },
    /// Order of the subgroup of Sp4(F_ell) generated by matrices.
    Closure(ClosureArgs),
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long)]
    pub ell: u64,
    /// Symmetric residues instead of least non-negative ones.
    #[arg(long)]
    pub minimize: bool,
    /// Random-search trials per witness.
    #[arg(long, default_value_t = 1 << 32)]
    pub budget: u64,
    /// Scan witnesses in lexicographic order instead of sampling.
    #[arg(long)]
    pub lex: bool,
    /// Fixed leading coefficients f6, f5, ... for --lex.
    #[arg(long, requires = "lex", value_delimiter = ',')]
    pub prefix: Vec<u64>,
    /// Use this curve over F_q1 instead of searching (requires --witness2).
    #[arg(long, requires = "witness2", value_name = "CURVE")]
    pub witness1: Option<String>,
    #[arg(long, requires = "witness1", value_name = "CURVE")]
    pub witness2: Option<String>,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("input").required(true).args(["cert", "curve"]))]
pub struct VerifyArgs {
    #[arg(long, value_name = "FILE")]
    pub cert: Option<PathBuf>,
    #[arg(long, requires_all = ["ell", "diagnostic"], value_name = "CURVE", allow_hyphen_values = true)]
    pub curve: Option<String>,
    #[arg(long)]
    pub ell: Option<u64>,
    /// Check whatever can be checked on a bare curve.
    #[arg(long, requires = "curve")]
    pub diagnostic: bool,
    /// Supersingular parameter; any valid one is accepted if omitted.
    #[arg(long)]
    pub a: Option<u64>,
    /// Auxiliary primes; the smallest-first selection is used if omitted.
    #[arg(long)]
    pub q1: Option<u64>,
    #[arg(long)]
    pub q2: Option<u64>,
    /// Witness curves the reductions should match.
    #[arg(long, requires = "q1", value_name = "CURVE")]
    pub w1: Option<String>,
    #[arg(long, requires = "q2", value_name = "CURVE")]
    pub w2: Option<String>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long)]
    pub n1: u64,
    #[arg(long)]
    pub n2: u64,
    /// Enumerate in order instead of sampling.
    #[arg(long)]
    pub lex: bool,
    /// Fixed leading coefficients f6, f5, ... for --lex.
    #[arg(long, requires = "lex", value_delimiter = ',')]
    pub prefix: Vec<u64>,
    #[arg(long, default_value_t = 1 << 32)]
    pub budget: u64,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("generators").required(true).args(["gens", "random_pairs"]))]
pub struct ClosureArgs {
    #[arg(long)]
    pub ell: u64,
    /// JSON list of 4x4 integer matrices.
    #[arg(long, value_name = "FILE")]
    pub gens: Option<PathBuf>,
    /// Check this many random (transvection, irreducible) pairs instead.
    #[arg(long)]
    pub random_pairs: Option<u64>,
    /// Allow groups larger than Sp4(F_3); ell = 5 needs several hundred MB.
    #[arg(long)]
    pub allow_large: bool,
}

/// Bad input from the user; exit code 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

pub struct Outcome {
    pub human: String,
    pub json: Value,
    /// `false` turns into exit code 1.
    pub passed: bool,
}

impl Outcome {
    fn ok(human: String, json: Value) -> Self {
        Outcome { human, json, passed: true }
    }
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code().clamp(0, 255) as u8);
        }
    };
    ExitCode::from(run(&cli))
}

/// Runs a parsed invocation, printing as it goes, and returns the exit code.
pub fn run(cli: &Cli) -> u8 {
    let start = Instant::now();
    let result = dispatch(cli).and_then(|out| {
        emit(cli, &out)?;
        Ok(out)
    });
    if cli.verbose {
        eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(out) if out.passed => 0,
        Ok(_) => 1,
        Err(e) => {
            eprintln!("error: {e:#}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<UsageError>().is_some() || e.downcast_ref::<crate::format::FormatError>().is_some() {
        return 2;
    }
    let mut core = e.downcast_ref::<Error>();
    while let Some(Error::Stage { source, .. }) = core {
        core = Some(source);
    }
    match core {
        Some(Error::VerificationFailed { .. }) => 1,
        Some(
            Error::NotPrime(_)
            | Error::InvalidModulus(_)
            | Error::DegreeMismatch { .. }
            | Error::MultipleRoot
            | Error::OutOfContract(_)
            | Error::InconsistentTarget { .. }
            | Error::DegenerateLeading(_)
            | Error::BadReduction(_)
            | Error::CapExceeded { .. }
            | Error::PrimalityRange(_),
        ) => 2,
        _ => 3,
    }
}

fn emit(cli: &Cli, out: &Outcome) -> anyhow::Result<()> {
    let to_stdout = cli.json.as_deref().is_some_and(|p| p.as_os_str() == "-");
    if !to_stdout {
        print!("{}", out.human);
    }
    if let Some(path) = &cli.json {
        let mut text = serde_json::to_string_pretty(&out.json)?;
        text.push('\n');
        if to_stdout {
            print!("{text}");
        } else {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Synth(args) => synth(cli, args),
        Command::Verify(args) => verify(args),
        Command::Ell5 => Ok(report_outcome(verify_ell5(), json!({"ell": "5"}))),
        Command::Igusa { poly } => igusa(poly),
        Command::Classify { poly, p } => classify(poly, *p),
        Command::Count { q, poly } => count(*q, poly),
        Command::Deuring { ell } => deuring(*ell),
        Command::Search(args) => search(cli, args),
        Command::GroupOrder { n, q } => group_order(*n, *q),
        Command::Closure(args) => closure_cmd(cli, args),
    }
}

/// A witness curve over `F_q`, coefficients reduced into `[0, q)`.
fn witness_coeffs(s: &str, q: u64) -> anyhow::Result<[u64; 7]> {
    let f = parse_sextic(s)?;
    let m = BigInt::from(q);
    Ok(std::array::from_fn(|i| forge_core::arith::modulo(&f[i], &m).to_u64().expect("reduced mod q")))
}

fn synth(cli: &Cli, args: &SynthArgs) -> anyhow::Result<Outcome> {
    let mut opts = SynthOptions { seed: cli.seed, minimize: args.minimize, budget: args.budget, witnesses: None, lex_prefix: None };
    if args.lex {
        opts.lex_prefix = Some(args.prefix.clone());
    }
    if let (Some(w1), Some(w2)) = (&args.witness1, &args.witness2) {
        let plan = forge_core::synth::plan(args.ell)?;
        let s = plan.selection;
        opts.witnesses = Some([witness_coeffs(w1, s.q1)?, witness_coeffs(w2, s.q2)?]);
    }
    let cert = synthesize_parallel(args.ell, &opts, thread_count(cli.threads))?;
    let doc = CertificateDoc::from_certificate(&cert);
    let s = &cert.selection;
    let mut h = String::new();
    writeln!(h, "ell = {}, a = {}, (1 - a)/a = {}", cert.ell, cert.a, cert.a_lift)?;
    writeln!(h, "|GSp4(F_{})| = {} = {}", cert.ell, cert.group_order, cert.factorization)?;
    for (w, (a, b)) in cert.witnesses.iter().zip([(s.a1, s.b1), (s.a2, s.b2)]) {
        writeln!(h, "q = {}: a = {a}, b = {b}, (N1, N2) = ({}, {}), witness {}", w.q, w.n1, w.n2, format_sextic(&w.coeffs))?;
    }
    for row in &cert.congruences.rows {
        writeln!(h, "  {} (mod {}): {}", row.kind.label(), row.modulus, format_sextic(&row.residues))?;
    }
    writeln!(h, "M = {}", cert.congruences.modulus())?;
    writeln!(h, "curve: {}", format_curve(&cert.curve))?;
    writeln!(h, "checks: {} passed", cert.checks.checks.len())?;
    Ok(Outcome::ok(h, serde_json::to_value(&doc)?))
}

fn report_outcome(r: CheckReport, context: Value) -> Outcome {
    let doc = ReportDoc::from(&r);
    let mut json = serde_json::to_value(&doc).expect("plain data serializes");
    if let (Value::Object(map), Value::Object(ctx)) = (&mut json, context) {
        map.extend(ctx);
    }
    Outcome { human: format!("{r}\n"), json, passed: r.passed() }
}

fn verify(args: &VerifyArgs) -> anyhow::Result<Outcome> {
    if let Some(path) = &args.cert {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let doc = CertificateDoc::from_json(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let cert = doc.to_certificate().map_err(|e| usage(format!("{}: {e}", path.display())))?;
        return Ok(report_outcome(verify_certificate(&cert), json!({"curve": doc.curve})));
    }
    let (Some(curve), Some(ell)) = (&args.curve, args.ell) else {
        return Err(usage("--curve needs --ell and --diagnostic"));
    };
    let f = parse_sextic(curve)?;
    let c = HyperCurve::new(f.clone()).unwrap_or_else(|_| HyperCurve::new_unchecked(f));
    let default = if args.q1.is_none() || args.q2.is_none() {
        prime_set(ell).ok().and_then(|p| select_aux(ell, &p).ok())
    } else {
        None
    };
    let aux = |q: Option<u64>, fallback: Option<u64>, w: &Option<String>| -> anyhow::Result<Option<AuxInput>> {
        let Some(q) = q.or(fallback) else { return Ok(None) };
        let witness = w.as_deref().map(|s| witness_coeffs(s, q)).transpose()?;
        Ok(Some(AuxInput { q, witness }))
    };
    let input = DiagnosticInput {
        ell,
        a: args.a,
        q1: aux(args.q1, default.map(|s| s.q1), &args.w1)?,
        q2: aux(args.q2, default.map(|s| s.q2), &args.w2)?,
        primes: None,
    };
    let r = verify_curve(&c, &input);
    let ctx = json!({
        "curve": format_curve(&c),
        "ell": ell.to_string(),
        "q1": input.q1.as_ref().map(|a| a.q.to_string()),
        "q2": input.q2.as_ref().map(|a| a.q.to_string()),
    });
    Ok(report_outcome(r, ctx))
}

fn igusa(poly: &str) -> anyhow::Result<Outcome> {
    let f = parse_sextic(poly)?;
    let inv = igusa_invariants(&f)?;
    let rational: Vec<BigRational> = f.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    let ic = igusa_clebsch(&rational)?;
    let names = ["J2", "J4", "J6", "J8", "J10"];
    let mut h = String::new();
    let mut json = serde_json::Map::new();
    for (name, v) in names.iter().zip(inv.js()).chain([("I12", &inv.i12)].iter().map(|(n, v)| (n, *v))) {
        writeln!(h, "{name} = {v}")?;
        json.insert((*name).into(), Value::String(v.to_string()));
    }
    for (name, v) in ["I2", "I4", "I6", "I10"].iter().zip(&ic) {
        writeln!(h, "{name} = {v}")?;
        json.insert((*name).into(), Value::String(v.to_string()));
    }
    Ok(Outcome::ok(h, Value::Object(json)))
}

fn classify(poly: &str, p: u64) -> anyhow::Result<Outcome> {
    let f = parse_sextic(poly)?;
    let t = classify_reduction(&f, p)?;
    let (name, e) = match t {
        ReductionType::Good => ("good", None),
        ReductionType::TypeII { e } => ("II", Some(e)),
        ReductionType::Other => ("other", None),
    };
    let h = match e {
        Some(e) => format!("p = {p}: type II, component group of order {e}\n"),
        None => format!("p = {p}: {name}\n"),
    };
    Ok(Outcome::ok(h, json!({"p": p.to_string(), "type": name, "e": e.map(|e| e.to_string())})))
}

fn count(q: u64, poly: &str) -> anyhow::Result<Outcome> {
    let c = HyperCurve::new_unchecked(parse_sextic(poly)?);
    let (n1, n2) = count_points(&reduce_curve(&c, q)?)?;
    let w = frobenius_data(q, n1, n2)?;
    let cp: Vec<String> = w.charpoly().iter().rev().map(BigInt::to_string).collect();
    let h = format!("N1 = {n1}, N2 = {n2}, a = {}, b = {}, L(X) = [{}]\n", w.a, w.b, cp.join(","));
    let json = json!({
        "q": q.to_string(), "n1": n1.to_string(), "n2": n2.to_string(),
        "a": w.a.to_string(), "b": w.b.to_string(), "charpoly": cp,
    });
    Ok(Outcome::ok(h, json))
}

fn deuring(ell: u64) -> anyhow::Result<Outcome> {
    let h_poly = deuring_poly(ell)?;
    let mut factors = String::new();
    let mut parts = factor_small(&h_poly);
    parts.sort_by_key(|(g, _)| (g.coeffs().len(), g.coeffs().iter().rev().copied().collect::<Vec<_>>()));
    for (g, k) in parts {
        write!(factors, "({g})")?;
        if k > 1 {
            write!(factors, "^{k}")?;
        }
    }
    let params = supersingular_params(ell)?;
    let field = PrimeField::new(ell)?;
    let mut h = format!("{h_poly} = {factors} mod {ell}\n");
    let mut lifts = Vec::new();
    for &a in &params {
        let lift = field.inv(a).map(|inv| field.mul(field.sub(1, a), inv));
        if let Some(l) = lift {
            writeln!(h, "a = {a}: x^2 - x + {a} divides H, (1 - a)/a = {l}")?;
        }
        lifts.push(json!({"a": a.to_string(), "f4_residue": lift.map(|l| l.to_string())}));
    }
    let json = json!({"ell": ell.to_string(), "poly": h_poly.to_string(), "factors": factors, "params": lifts});
    Ok(Outcome::ok(h, json))
}

fn search(cli: &Cli, args: &SearchArgs) -> anyhow::Result<Outcome> {
    let f = if args.lex {
        search_curve(args.q, args.n1, args.n2, &SearchStrategy::Lexicographic { prefix: args.prefix.clone() })?
    } else {
        let target = SearchTarget::new(args.q, args.n1, args.n2)?;
        parallel_search(&RandomSearch::new(target, cli.seed), args.budget, thread_count(cli.threads))?
    };
    let coeffs: [u64; 7] = std::array::from_fn(|i| f.coeff(i));
    let curve = format_sextic(&coeffs);
    let json = json!({
        "q": args.q.to_string(), "n1": args.n1.to_string(), "n2": args.n2.to_string(),
        "strategy": if args.lex { "lexicographic" } else { "random" }, "curve": curve,
    });
    Ok(Outcome::ok(format!("{curve}\n"), json))
}

fn group_order(n: u32, q: u64) -> anyhow::Result<Outcome> {
    if n == 0 || q < 2 {
        return Err(usage("group-order needs n >= 1 and q >= 2"));
    }
    let order = gsp_order(n, q);
    let fac = factorize(&order)?;
    let factors: Vec<Value> = fac.factors.iter().map(|(p, e)| json!({"p": p.to_string(), "e": e})).collect();
    let json = json!({"n": n, "q": q.to_string(), "order": order.to_string(), "factors": factors});
    Ok(Outcome::ok(format!("{order} = {fac}\n"), json))
}

fn closure_cmd(cli: &Cli, args: &ClosureArgs) -> anyhow::Result<Outcome> {
    let field = PrimeField::new(args.ell)?;
    let cap = if args.allow_large { sp4_order(args.ell) } else { sp4_order(3) };
    let sets: Vec<Vec<SpMatrix>> = match (&args.gens, args.random_pairs) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let raw: Vec<[[i64; 4]; 4]> =
                serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            vec![raw.into_iter().map(|m| SpMatrix::new(field, m)).collect()]
        }
        (None, Some(n)) => (0..n).map(|k| qualifying_pair(field, cli.seed, k).to_vec()).collect(),
        (None, None) => return Err(usage("closure needs --gens or --random-pairs")),
    };
    let order = sp4_order(args.ell);
    let mut sizes = Vec::with_capacity(sets.len());
    let mut h = String::new();
    for gens in &sets {
        let r = closure(gens, &cap).map_err(|e| match e {
            Error::CapExceeded { .. } => usage(format!("{e}; pass --allow-large to go ahead")),
            e => e.into(),
        })?;
        if cli.verbose {
            writeln!(h, "size {}{}", r.size, if r.is_full_sp4 { " (Sp4)" } else { "" })?;
        }
        sizes.push(r);
    }
    let full = sizes.iter().filter(|r| r.is_full_sp4).count();
    writeln!(h, "{full} of {} generated Sp4(F_{}) of order {order}", sizes.len(), args.ell)?;
    let json = json!({
        "ell": args.ell.to_string(),
        "sp4_order": order.to_string(),
        "sizes": sizes.iter().map(|r| r.size.to_string()).collect::<Vec<_>>(),
        "full": full,
    });
    let passed = args.random_pairs.is_none() || full == sizes.len();
    Ok(Outcome { human: h, json, passed })
}
