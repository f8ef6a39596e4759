use super::PrimeField;

/// `c0 + c1·t` in `F_p[t]/(t² - ns)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp2Element {
    pub c0: u64,
    pub c1: u64,
}

/// `F_{p²}` modeled as `F_p[t]/(t² - ns)` with `ns` the least positive
/// quadratic nonresidue mod `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadraticExtension {
    base: PrimeField,
    ns: u64,
}

impl QuadraticExtension {
    /// Panics for `p = 2`, which has no quadratic nonresidue.
    pub fn new(base: PrimeField) -> Self {
        let ns = (2..base.modulus())
            .find(|&x| base.quadratic_character(x) == -1)
            .expect("odd characteristic");
        debug_assert_eq!(base.quadratic_character(ns), -1);
        QuadraticExtension { base, ns }
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    pub fn nonresidue(&self) -> u64 {
        self.ns
    }

    pub fn from_base(&self, x: u64) -> Fp2Element {
        Fp2Element { c0: x, c1: 0 }
    }

    #[inline]
    pub fn add(&self, a: Fp2Element, b: Fp2Element) -> Fp2Element {
        Fp2Element {
            c0: self.base.add(a.c0, b.c0),
            c1: self.base.add(a.c1, b.c1),
        }
    }

    #[inline]
    pub fn mul(&self, a: Fp2Element, b: Fp2Element) -> Fp2Element {
        let f = &self.base;
        Fp2Element {
            c0: f.add(f.mul(a.c0, b.c0), f.mul(self.ns, f.mul(a.c1, b.c1))),
            c1: f.add(f.mul(a.c0, b.c1), f.mul(a.c1, b.c0)),
        }
    }

    pub fn pow(&self, mut b: Fp2Element, mut e: u128) -> Fp2Element {
        let mut r = self.from_base(1);
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    /// Norm to `F_p`: `c0² - ns·c1²`.
    #[inline]
    pub fn norm(&self, a: Fp2Element) -> u64 {
        let f = &self.base;
        f.sub(f.mul(a.c0, a.c0), f.mul(self.ns, f.mul(a.c1, a.c1)))
    }

    /// Quadratic character of `F_{p²}` by exponentiation to `(p² - 1)/2`.
    pub fn quadratic_character(&self, a: Fp2Element) -> i8 {
        if a == Fp2Element::default() {
            return 0;
        }
        let p = self.base.modulus() as u128;
        if self.pow(a, (p * p - 1) / 2) == self.from_base(1) {
            1
        } else {
            -1
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Fp2Element> + '_ {
        let p = self.base.modulus();
        (0..p).flat_map(move |c1| (0..p).map(move |c0| Fp2Element { c0, c1 }))
    }
}
