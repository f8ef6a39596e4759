use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::congruence::{build_congruences, CongruenceSystem};
use crate::arith::{crt_solve, factorize, Factorization};
use crate::finitefield::{supersingular_param, SupersingularParam};
use crate::hypercurve::HyperCurve;
use crate::sympgroup::gsp_order;
use crate::verify::{verify_certificate, CheckReport};
use crate::weilselect::{search_curve, select_aux, AuxiliarySelection, SearchStrategy};
use crate::{Error, Result};

/// Primes dividing `|GSp4(F_ℓ)|`, ascending.
pub fn prime_set(ell: u64) -> Result<Vec<u64>> {
    Ok(primes_of(&factorize(&gsp_order(2, ell))?))
}

fn primes_of(fac: &Factorization) -> Vec<u64> {
    fac.primes().map(|p| p.to_u64().expect("prime divisors of a small group order")).collect()
}

/// A curve over `F_q` with its point counts; coefficients by power of `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub q: u64,
    pub coeffs: [u64; 7],
    pub n1: u64,
    pub n2: u64,
}

/// Everything decided before the curve searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plan {
    pub ell: u64,
    pub param: SupersingularParam,
    pub group_order: BigInt,
    pub factorization: Factorization,
    pub primes: Vec<u64>,
    pub selection: AuxiliarySelection,
}

impl Plan {
    /// `(q, N1, N2)` for both witnesses, from `N1 = q + 1 + a` and
    /// `N2 = q² + 1 + 2b - a²`.
    pub fn targets(&self) -> [(u64, u64, u64); 2] {
        let s = &self.selection;
        let t = |q: u64, a: i64, b: i64| {
            let (qi, a, b) = (q as i64, a, b);
            (q, (qi + 1 + a) as u64, (qi * qi + 1 + 2 * b - a * a) as u64)
        };
        [t(s.q1, s.a1, s.b1), t(s.q2, s.a2, s.b2)]
    }
}

/// The self-contained record of a synthesized curve and every hypothesis
/// it was checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub ell: u64,
    pub a: u64,
    /// `(1 - a)/a mod ℓ`, least non-negative.
    pub a_lift: u64,
    pub selection: AuxiliarySelection,
    pub witnesses: [Witness; 2],
    pub primes: Vec<u64>,
    pub group_order: BigInt,
    pub factorization: Factorization,
    pub congruences: CongruenceSystem,
    pub curve: HyperCurve,
    /// How many times the global modulus was added to `f0` to avoid a
    /// vanishing discriminant.
    pub f0_shifts: u32,
    pub checks: CheckReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthOptions {
    pub seed: u64,
    /// Symmetric CRT lifts instead of least non-negative ones.
    pub minimize: bool,
    /// Random-search trials per witness.
    pub budget: u64,
    /// Use these witness curves (by power of `x`) instead of searching.
    pub witnesses: Option<[[u64; 7]; 2]>,
    /// Scan in lexicographic order with these leading coefficients
    /// (`f6, f5, ...`) instead of sampling.
    pub lex_prefix: Option<Vec<u64>>,
}

impl Default for SynthOptions {
    fn default() -> Self {
        SynthOptions { seed: 0x5eed_6a10, minimize: false, budget: 1 << 32, witnesses: None, lex_prefix: None }
    }
}

const MAX_F0_SHIFTS: u32 = 5;

pub fn plan(ell: u64) -> Result<Plan> {
    if ell < 7 {
        return Err(Error::OutOfContract(alloc::format!(
            "synthesis needs ell >= 7 (ell = 5 has its own verification path), got {ell}"
        )));
    }
    let param = supersingular_param(ell).map_err(Error::at("supersingular parameter"))?;
    let group_order = gsp_order(2, ell);
    let factorization = factorize(&group_order).map_err(Error::at("prime set"))?;
    let primes = primes_of(&factorization);
    let selection = select_aux(ell, &primes).map_err(Error::at("auxiliary selection"))?;
    Ok(Plan { ell, param, group_order, factorization, primes, selection })
}

/// Glues the plan and the two witnesses into a certificate and verifies it.
pub fn assemble(plan: &Plan, witnesses: [Witness; 2], minimize: bool) -> Result<Certificate> {
    let sel = &plan.selection;
    let congruences = build_congruences(
        plan.ell,
        plan.param.f4_residue,
        sel.q1,
        &witnesses[0].coeffs,
        sel.q2,
        &witnesses[1].coeffs,
        &plan.primes,
    )
    .map_err(Error::at("congruences"))?;
    let modulus = congruences.modulus();
    let half = &modulus / 2u32;
    let mut f: [BigInt; 7] = Default::default();
    for (i, c) in f.iter_mut().enumerate() {
        let mut x = crt_solve(&congruences.coefficient(i)).map_err(Error::at("crt"))?;
        if minimize && x > half {
            x -= &modulus;
        }
        *c = x;
    }
    let mut f0_shifts = 0;
    let curve = loop {
        match HyperCurve::new(f.clone()) {
            Ok(c) => break c,
            Err(Error::MultipleRoot) if f0_shifts < MAX_F0_SHIFTS => {
                f[0] += &modulus;
                f0_shifts += 1;
            }
            Err(e) => return Err(Error::at("curve")(e)),
        }
    };

    let mut cert = Certificate {
        ell: plan.ell,
        a: plan.param.a,
        a_lift: plan.param.f4_residue,
        selection: *sel,
        witnesses,
        primes: plan.primes.clone(),
        group_order: plan.group_order.clone(),
        factorization: plan.factorization.clone(),
        congruences,
        curve,
        f0_shifts,
        checks: CheckReport::default(),
    };
    let report = verify_certificate(&cert);
    if !report.passed() {
        return Err(Error::VerificationFailed {
            failing: report.failing().map(|c| alloc::format!("{}: {}", c.block, c.name)).collect(),
        });
    }
    cert.checks = report;
    Ok(cert)
}

/// The whole pipeline with a sequential seeded search.
pub fn synthesize(ell: u64, opts: &SynthOptions) -> Result<Certificate> {
    let plan = plan(ell)?;
    let mut found = [Witness { q: 0, coeffs: [0; 7], n1: 0, n2: 0 }; 2];
    for (k, (q, n1, n2)) in plan.targets().into_iter().enumerate() {
        let coeffs = match &opts.witnesses {
            Some(w) => w[k],
            None => {
                let stage = if k == 0 { "search q1" } else { "search q2" };
                let strategy = match &opts.lex_prefix {
                    Some(prefix) => SearchStrategy::Lexicographic { prefix: prefix.clone() },
                    None => SearchStrategy::Randomized { seed: opts.seed, budget: opts.budget },
                };
                let f = search_curve(q, n1, n2, &strategy).map_err(Error::at(stage))?;
                core::array::from_fn(|i| f.coeff(i))
            }
        };
        found[k] = Witness { q, coeffs, n1, n2 };
    }
    assemble(&plan, found, opts.minimize)
}
