use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::modulo;
use crate::finitefield::PrimeField;

/// A fixed residue pattern for all seven coefficients, stored by power of `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GuardPattern {
    pub name: &'static str,
    pub modulus: u64,
    pub by_power: [u64; 7],
}

/// Semistable type (II) reduction at 2.
pub const GUARD_MOD16: GuardPattern = GuardPattern {
    name: "mod 16",
    modulus: 16,
    by_power: [1, 0, 4, 2, 4, 0, 1],
};

/// Good reduction at 3.
pub const GUARD_MOD3: GuardPattern = GuardPattern {
    name: "mod 3",
    modulus: 3,
    by_power: [1, 0, 1, 0, 1, 0, 1],
};

/// Type (II) reduction at 5 with trivial component group.
pub const GUARD_MOD25: GuardPattern = GuardPattern {
    name: "mod 25",
    modulus: 25,
    by_power: [1, 1, 0, 1, 0, 1, 1],
};

pub const GUARD_PATTERNS: [GuardPattern; 3] = [GUARD_MOD16, GUARD_MOD3, GUARD_MOD25];

impl GuardPattern {
    /// Per-coefficient agreement, indexed by power.
    pub fn check(&self, f: &[BigInt; 7]) -> [bool; 7] {
        let m = BigInt::from(self.modulus);
        core::array::from_fn(|i| modulo(&f[i], &m) == BigInt::from(self.by_power[i]))
    }
}

/// Outcome of every congruence guard on a sextic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuardReport {
    pub mod16: [bool; 7],
    pub mod3: [bool; 7],
    pub mod25: [bool; 7],
    /// `f6 ≡ f0`, `f5 ≡ f1`, `f4 ≡ f2` mod `ℓ⁴`.
    pub ell4_pairs: [bool; 3],
    /// `f6 ≡ 1`, `f5 ≡ 0`, `f4 ≡ (1-a)/a`, `f3 ≡ 0` mod `ℓ`.
    pub mod_ell: [bool; 4],
}

impl GuardReport {
    pub fn all_pass(&self) -> bool {
        [&self.mod16[..], &self.mod3, &self.mod25, &self.ell4_pairs, &self.mod_ell]
            .iter()
            .all(|row| row.iter().all(|&b| b))
    }
}

/// Evaluates every guard on `f` (by power of `x`) for prime `ℓ` and
/// supersingular parameter `a`.
pub fn reduction_guards(f: &[BigInt; 7], ell: u64, a: u64) -> GuardReport {
    let ell4 = BigInt::from(ell).pow(4);
    let pair = |i: usize, j: usize| modulo(&(&f[i] - &f[j]), &ell4).is_zero();
    let mod_ell = match PrimeField::new(ell) {
        Ok(field) => {
            let target = field
                .inv(field.reduce(a))
                .map(|inv| field.mul(field.sub(1, field.reduce(a)), inv));
            let r = |i: usize| field.from_bigint(&f[i]);
            [
                r(6) == 1,
                r(5) == 0,
                target == Some(r(4)),
                r(3) == 0,
            ]
        }
        Err(_) => [false; 4],
    };
    GuardReport {
        mod16: GUARD_MOD16.check(f),
        mod3: GUARD_MOD3.check(f),
        mod25: GUARD_MOD25.check(f),
        ell4_pairs: [pair(6, 0), pair(5, 1), pair(4, 2)],
        mod_ell,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sextic(high_first: [i64; 7]) -> [BigInt; 7] {
        core::array::from_fn(|i| BigInt::from(high_first[6 - i]))
    }

    #[test]
    fn ell5_curve() {
        let f = sextic([1, 0, 1300, 1170, 1300, 0, 1]);
        let r = reduction_guards(&f, 5, 1);
        assert_eq!(r.ell4_pairs, [true; 3]);
        assert_eq!(r.mod_ell, [true; 4]);
        let g = sextic([1, 0, 391300, 1170, 1300, 0, 1]);
        assert_eq!(reduction_guards(&g, 5, 1).mod16, [true; 7]);
    }

    #[test]
    fn example_curve() {
        let f = sextic([1, 9757776, 8853700, 10422426, 677292100, 3179077776, 342862800]);
        let r = reduction_guards(&f, 7, 5);
        // f0 is the only coefficient off the mod-3 and mod-25 patterns
        assert_eq!(r.mod3, [false, true, true, true, true, true, true]);
        assert_eq!(r.mod25, [false, true, true, true, true, true, true]);
        assert_eq!(r.mod16, [false, true, true, false, true, true, true]);
        assert_eq!(r.ell4_pairs, [false, true, true]);
        assert_eq!(r.mod_ell, [true; 4]);
        // f0 + 1 repairs everything except f3 mod 16
        let mut g = f.clone();
        g[0] += 1;
        let r = reduction_guards(&g, 7, 5);
        assert_eq!(r.mod16, [true, true, true, false, true, true, true]);
        assert!(r.ell4_pairs.iter().all(|&b| b));
    }

    #[test]
    fn zero_polynomial() {
        let r = reduction_guards(&sextic([0; 7]), 7, 5);
        assert!(!r.all_pass());
        assert_eq!(r.mod16, [false, true, false, false, false, true, false]);
        assert!(!r.mod_ell[0]);
    }

    #[test]
    fn pattern_tables() {
        for g in GUARD_PATTERNS {
            // palindromic, so the storage order is immaterial
            let mut rev = g.by_power;
            rev.reverse();
            assert_eq!(rev, g.by_power, "{}", g.name);
        }
    }
}
