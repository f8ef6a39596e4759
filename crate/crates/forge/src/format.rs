//! The `g2:v1:[f6,f5,f4,f3,f2,f1,f0]` curve format.

use forge_core::hypercurve::HyperCurve;
use num_bigint::BigInt;

pub const PREFIX: &str = "g2:v1:";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("expected `{PREFIX}[f6,...,f0]`, got `{0}`")]
    Syntax(String),
    #[error("expected 7 coefficients, got {0}")]
    Arity(usize),
    #[error("bad integer `{0}`")]
    Integer(String),
}

/// Parses a curve string into coefficients by power of `x`. The prefix is
/// optional so that bare `[1,0,...]` and `1,0,...` lists are accepted too.
pub fn parse_sextic(s: &str) -> Result<[BigInt; 7], FormatError> {
    let coeffs = parse_coeffs(s)?;
    let n = coeffs.len();
    let mut by_power: [BigInt; 7] = coeffs.try_into().map_err(|_| FormatError::Arity(n))?;
    by_power.reverse();
    Ok(by_power)
}

/// High-first integer list in any of the accepted spellings.
pub fn parse_coeffs(s: &str) -> Result<Vec<BigInt>, FormatError> {
    let body = s.trim();
    let body = body.strip_prefix(PREFIX).unwrap_or(body).trim();
    let body = match (body.strip_prefix('['), body.ends_with(']')) {
        (Some(rest), true) => &rest[..rest.len() - 1],
        (None, false) => body,
        _ => return Err(FormatError::Syntax(s.into())),
    };
    if body.trim().is_empty() {
        return Err(FormatError::Syntax(s.into()));
    }
    body.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<BigInt>().map_err(|_| FormatError::Integer(t.into()))
        })
        .collect()
}

/// Formats coefficients given by power of `x`.
pub fn format_sextic<T: ToString>(by_power: &[T; 7]) -> String {
    let items: Vec<String> = by_power.iter().rev().map(T::to_string).collect();
    format!("{PREFIX}[{}]", items.join(","))
}

pub fn format_curve(c: &HyperCurve) -> String {
    format_sextic(c.coeffs())
}
