//! Certificate documents. Every integer is a decimal string so that nothing
//! is lost to JSON number precision.

use forge_core::arith::Factorization;
use forge_core::hypercurve::HyperCurve;
use forge_core::synth::{Certificate, CongruenceRow, CongruenceSystem, RowKind, Witness};
use forge_core::verify::{Check, CheckReport, Status};
use forge_core::weilselect::AuxiliarySelection;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::format::{format_sextic, parse_sextic, FormatError};

pub const CERT_FORMAT: &str = "forge-certificate/v1";

#[derive(Debug, thiserror::Error)]
pub enum CertError {
    #[error("unsupported certificate format `{0}`")]
    Version(String),
    #[error("field `{field}`: bad integer `{value}`")]
    Integer { field: &'static str, value: String },
    #[error("field `{field}`: {source}")]
    Curve { field: &'static str, source: FormatError },
    #[error("unknown congruence row `{0}`")]
    RowKind(String),
    #[error("unknown check status `{0}`")]
    Status(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub format: String,
    pub ell: String,
    pub a: String,
    pub a_lift: String,
    pub curve: String,
    pub f0_shifts: u32,
    pub selection: SelectionDoc,
    pub witnesses: [WitnessDoc; 2],
    pub primes: Vec<String>,
    pub group_order: String,
    pub factorization: Vec<FactorDoc>,
    pub congruences: Vec<RowDoc>,
    pub checks: Vec<CheckDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelectionDoc {
    pub q1: String,
    pub a1: String,
    pub b1: String,
    pub q2: String,
    pub a2: String,
    pub b2: String,
    pub z: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub q: String,
    pub curve: String,
    pub n1: String,
    pub n2: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub p: String,
    pub e: u32,
}

/// Residues are listed high-first, like the curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowDoc {
    pub kind: String,
    pub modulus: String,
    pub residues: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub block: String,
    pub name: String,
    pub status: String,
    pub evidence: String,
    pub mandatory: bool,
}

/// A verification report on its own, as written by `verify` and `ell5`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub passed: bool,
    pub checks: Vec<CheckDoc>,
}

impl From<&Check> for CheckDoc {
    fn from(c: &Check) -> Self {
        CheckDoc {
            block: c.block.clone(),
            name: c.name.clone(),
            status: c.status.as_str().into(),
            evidence: c.evidence.clone(),
            mandatory: c.mandatory,
        }
    }
}

impl From<&CheckReport> for ReportDoc {
    fn from(r: &CheckReport) -> Self {
        ReportDoc { passed: r.passed(), checks: r.checks.iter().map(CheckDoc::from).collect() }
    }
}

fn row_kind(label: &str) -> Result<RowKind, CertError> {
    use RowKind::*;
    [Mod16, Mod3, Mod25, Ell4, Q1, Q2, Residual]
        .into_iter()
        .find(|k| k.label() == label)
        .ok_or_else(|| CertError::RowKind(label.into()))
}

fn status(s: &str) -> Result<Status, CertError> {
    [Status::Pass, Status::Fail, Status::Skipped]
        .into_iter()
        .find(|k| k.as_str() == s)
        .ok_or_else(|| CertError::Status(s.into()))
}

fn num<T: std::str::FromStr>(field: &'static str, s: &str) -> Result<T, CertError> {
    s.parse().map_err(|_| CertError::Integer { field, value: s.into() })
}

fn sextic(field: &'static str, s: &str) -> Result<[BigInt; 7], CertError> {
    parse_sextic(s).map_err(|source| CertError::Curve { field, source })
}

impl CertificateDoc {
    pub fn from_certificate(c: &Certificate) -> Self {
        let s = &c.selection;
        let w = |w: &Witness| WitnessDoc {
            q: w.q.to_string(),
            curve: format_sextic(&w.coeffs),
            n1: w.n1.to_string(),
            n2: w.n2.to_string(),
        };
        CertificateDoc {
            format: CERT_FORMAT.into(),
            ell: c.ell.to_string(),
            a: c.a.to_string(),
            a_lift: c.a_lift.to_string(),
            curve: format_sextic(c.curve.coeffs()),
            f0_shifts: c.f0_shifts,
            selection: SelectionDoc {
                q1: s.q1.to_string(),
                a1: s.a1.to_string(),
                b1: s.b1.to_string(),
                q2: s.q2.to_string(),
                a2: s.a2.to_string(),
                b2: s.b2.to_string(),
                z: s.z.to_string(),
            },
            witnesses: [w(&c.witnesses[0]), w(&c.witnesses[1])],
            primes: c.primes.iter().map(u64::to_string).collect(),
            group_order: c.group_order.to_string(),
            factorization: c.factorization.factors.iter().map(|(p, e)| FactorDoc { p: p.to_string(), e: *e }).collect(),
            congruences: c
                .congruences
                .rows
                .iter()
                .map(|r| RowDoc {
                    kind: r.kind.label().into(),
                    modulus: r.modulus.to_string(),
                    residues: r.residues.iter().rev().map(BigInt::to_string).collect(),
                })
                .collect(),
            checks: c.checks.checks.iter().map(CheckDoc::from).collect(),
        }
    }

    /// Rebuilds the certificate. The curve is taken as written, even if it
    /// is singular, so that verification can report on it.
    pub fn to_certificate(&self) -> Result<Certificate, CertError> {
        if self.format != CERT_FORMAT {
            return Err(CertError::Version(self.format.clone()));
        }
        let s = &self.selection;
        let selection = AuxiliarySelection {
            ell: num("ell", &self.ell)?,
            q1: num("selection.q1", &s.q1)?,
            a1: num("selection.a1", &s.a1)?,
            b1: num("selection.b1", &s.b1)?,
            q2: num("selection.q2", &s.q2)?,
            a2: num("selection.a2", &s.a2)?,
            b2: num("selection.b2", &s.b2)?,
            z: num("selection.z", &s.z)?,
        };
        let mut witnesses = [Witness { q: 0, coeffs: [0; 7], n1: 0, n2: 0 }; 2];
        for (out, doc) in witnesses.iter_mut().zip(&self.witnesses) {
            let f = sextic("witnesses.curve", &doc.curve)?;
            let mut coeffs = [0u64; 7];
            for (c, x) in coeffs.iter_mut().zip(&f) {
                *c = num("witnesses.curve", &x.to_string())?;
            }
            *out = Witness { q: num("witnesses.q", &doc.q)?, coeffs, n1: num("witnesses.n1", &doc.n1)?, n2: num("witnesses.n2", &doc.n2)? };
        }
        let mut rows = Vec::with_capacity(self.congruences.len());
        for r in &self.congruences {
            let joined = format!("[{}]", r.residues.join(","));
            rows.push(CongruenceRow {
                kind: row_kind(&r.kind)?,
                modulus: num("congruences.modulus", &r.modulus)?,
                residues: sextic("congruences.residues", &joined)?,
            });
        }
        let mut factors = Vec::with_capacity(self.factorization.len());
        for f in &self.factorization {
            factors.push((num("factorization.p", &f.p)?, f.e));
        }
        let mut checks = CheckReport::default();
        for c in &self.checks {
            checks.checks.push(Check {
                block: c.block.clone(),
                name: c.name.clone(),
                status: status(&c.status)?,
                evidence: c.evidence.clone(),
                mandatory: c.mandatory,
            });
        }
        Ok(Certificate {
            ell: selection.ell,
            a: num("a", &self.a)?,
            a_lift: num("a_lift", &self.a_lift)?,
            selection,
            witnesses,
            primes: self.primes.iter().map(|p| num("primes", p)).collect::<Result<_, _>>()?,
            group_order: num("group_order", &self.group_order)?,
            factorization: Factorization { factors },
            congruences: CongruenceSystem { rows },
            curve: HyperCurve::new_unchecked(sextic("curve", &self.curve)?),
            f0_shifts: self.f0_shifts,
            checks,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, CertError> {
        Ok(serde_json::from_str(s)?)
    }
}
