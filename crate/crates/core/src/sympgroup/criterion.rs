use crate::finitefield::{quartic_factor_pattern, FpPoly, PrimeField};
use crate::hypercurve::WeilData;
use crate::{Error, Result};

/// `X⁴ + aX³ + bX² + amX + m²` over `F_ℓ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharPolyQuartic {
    pub field: PrimeField,
    pub a: u64,
    pub b: u64,
    pub m: u64,
}

impl CharPolyQuartic {
    pub fn new(field: PrimeField, a: i64, b: i64, m: i64) -> Self {
        CharPolyQuartic {
            field,
            a: field.from_i64(a),
            b: field.from_i64(b),
            m: field.from_i64(m),
        }
    }

    /// Reduction mod `ℓ` of a Weil polynomial; the multiplier is `q mod ℓ`.
    pub fn from_weil(w: &WeilData, field: PrimeField) -> Self {
        CharPolyQuartic {
            field,
            a: field.from_i64(w.a),
            b: field.from_i64(w.b),
            m: field.reduce(w.q),
        }
    }

    pub fn poly(&self) -> FpPoly {
        let f = &self.field;
        FpPoly::new(*f, [f.mul(self.m, self.m), f.mul(self.a, self.m), self.b, self.a, 1])
    }

    /// `a² - 4b + 8` in `F_ℓ`.
    pub fn delta0(&self) -> u64 {
        let f = &self.field;
        f.add(f.sub(f.mul(self.a, self.a), f.mul(4, self.b)), f.reduce(8))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Thm34Report {
    /// `Δ0(P1)` is a nonresidue and the trace is nonzero.
    pub condition1: bool,
    /// `Δ0(P2)` is a nonzero square and `P2` does not split into linear
    /// factors.
    pub condition2: bool,
}

impl Thm34Report {
    pub fn both(&self) -> bool {
        self.condition1 && self.condition2
    }
}

/// The two characteristic-polynomial conditions which, together with a
/// transvection, force a subgroup of `Sp4(F_ℓ)` to be everything.
pub fn thm34_check(p1: &CharPolyQuartic, p2: &CharPolyQuartic) -> Result<Thm34Report> {
    for p in [p1, p2] {
        if p.m != 1 {
            return Err(Error::MultiplierNotOne(p.m));
        }
    }
    let f1 = &p1.field;
    let condition1 = f1.quadratic_character(p1.delta0()) == -1 && p1.a != 0;
    let f2 = &p2.field;
    let condition2 = f2.quadratic_character(p2.delta0()) == 1
        && quartic_factor_pattern(&p2.poly())? != [1, 1, 1, 1];
    Ok(Thm34Report { condition1, condition2 })
}
