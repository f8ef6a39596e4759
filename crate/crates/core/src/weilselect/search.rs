use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::finitefield::{FpPoly, PrimeField};
use crate::hypercurve::{count_points, frobenius_data, PointCounter};
use crate::{Error, Result};

/// A prescribed pair `(N1, N2)` over `F_q`, already checked against the
/// Weil bounds.
#[derive(Debug, Clone)]
pub struct SearchTarget {
    pub q: u64,
    pub n1: u64,
    pub n2: u64,
    counter: PointCounter,
    field: PrimeField,
}

impl SearchTarget {
    pub fn new(q: u64, n1: u64, n2: u64) -> Result<Self> {
        let counter = PointCounter::new(q)?;
        let inconsistent = Error::InconsistentTarget { q, n1, n2 };
        let w = frobenius_data(q, n1, n2).map_err(|_| inconsistent.clone())?;
        if !w.within_weil_bounds() {
            return Err(inconsistent);
        }
        Ok(SearchTarget { q, n1, n2, counter, field: PrimeField::new(q)? })
    }

    /// Full test of a candidate: cheap `N1` first, then `N2`, then
    /// squarefreeness.
    #[inline]
    pub fn accepts(&self, f: &[u64; 7]) -> bool {
        f[6] != 0
            && self.counter.n1(f) == self.n1
            && self.counter.n2(f) == self.n2
            && self.poly(f).is_squarefree()
    }

    pub fn poly(&self, f: &[u64; 7]) -> FpPoly {
        FpPoly::new(self.field, f.iter().copied())
    }

    /// Recount through the general-purpose path before handing a hit out.
    fn confirm(&self, f: &[u64; 7]) -> Result<FpPoly> {
        let g = self.poly(f);
        let counts = count_points(&g)?;
        if counts != (self.n1, self.n2) {
            return Err(Error::OutOfContract(alloc::format!("search hit {g} recounts to {counts:?}")));
        }
        Ok(g)
    }
}

/// Uniform random coefficient vectors. Trial `t` draws from its own ChaCha
/// stream, so the outcome of a trial does not depend on which worker ran it.
#[derive(Debug, Clone)]
pub struct RandomSearch {
    target: SearchTarget,
    seed: u64,
}

impl RandomSearch {
    pub fn new(target: SearchTarget, seed: u64) -> Self {
        RandomSearch { target, seed }
    }

    pub fn target(&self) -> &SearchTarget {
        &self.target
    }

    /// The candidate drawn by trial `t`, by power of `x`.
    pub fn candidate(&self, t: u64) -> [u64; 7] {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(t);
        let q = self.target.q;
        let mut f = [0u64; 7];
        for c in f.iter_mut().take(6) {
            *c = rng.random_range(0..q);
        }
        f[6] = rng.random_range(1..q);
        f
    }

    pub fn trial(&self, t: u64) -> Option<[u64; 7]> {
        let f = self.candidate(t);
        self.target.accepts(&f).then_some(f)
    }

    /// Recounts a hit from [`Self::trial`] and returns it as a polynomial.
    pub fn finish(&self, f: &[u64; 7]) -> Result<FpPoly> {
        self.target.confirm(f)
    }

    /// Sequential scan of trials `0..budget`; the first hit wins.
    pub fn run(&self, budget: u64) -> Result<FpPoly> {
        for t in 0..budget {
            if let Some(f) = self.trial(t) {
                return self.finish(&f);
            }
        }
        Err(Error::BudgetExceeded { q: self.target.q, trials: budget })
    }
}

/// Every hit in monic-first order: `f6` runs from 1, then `f5` down to `f0`
/// with `f0` varying fastest. A prefix pins `f6, f5, ...` in that order.
#[derive(Debug, Clone)]
pub struct LexicographicSearch {
    target: SearchTarget,
    prefix_len: usize,
    next: Option<[u64; 7]>,
}

impl LexicographicSearch {
    pub fn new(target: SearchTarget, prefix: &[u64]) -> Result<Self> {
        if prefix.len() > 7 || prefix.iter().any(|&c| c >= target.q) || prefix.first() == Some(&0) {
            return Err(Error::OutOfContract("invalid coefficient prefix".into()));
        }
        let mut start = [0u64; 7];
        start[6] = 1;
        for (k, &c) in prefix.iter().enumerate() {
            start[6 - k] = c;
        }
        Ok(LexicographicSearch { target, prefix_len: prefix.len(), next: Some(start) })
    }

    /// Advances the odometer over the free positions; `false` once exhausted.
    fn advance(&self, f: &mut [u64; 7]) -> bool {
        let q = self.target.q;
        let free = 7 - self.prefix_len;
        for pos in 0..free {
            let floor = if pos == 6 { 1 } else { 0 };
            if f[pos] + 1 < q {
                f[pos] += 1;
                return true;
            }
            f[pos] = floor;
        }
        false
    }
}

impl Iterator for LexicographicSearch {
    type Item = FpPoly;

    fn next(&mut self) -> Option<FpPoly> {
        while let Some(f) = self.next {
            let mut succ = f;
            self.next = self.advance(&mut succ).then_some(succ);
            if self.target.accepts(&f) {
                return self.target.confirm(&f).ok();
            }
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStrategy {
    Randomized { seed: u64, budget: u64 },
    Lexicographic { prefix: Vec<u64> },
}

/// A squarefree sextic over `F_q` with exactly `(N1, N2)` points.
pub fn search_curve(q: u64, n1: u64, n2: u64, strategy: &SearchStrategy) -> Result<FpPoly> {
    let target = SearchTarget::new(q, n1, n2)?;
    match strategy {
        SearchStrategy::Randomized { seed, budget } => RandomSearch::new(target, *seed).run(*budget),
        SearchStrategy::Lexicographic { prefix } => LexicographicSearch::new(target, prefix)?
            .next()
            .ok_or(Error::NotFound(q)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn witness(high_first: [u64; 7]) -> [u64; 7] {
        let mut f = high_first;
        f.reverse();
        f
    }

    #[test]
    fn example_witnesses_accepted() {
        let t = SearchTarget::new(29, 31, 843).unwrap();
        assert!(t.accepts(&witness([1, 1, 0, 0, 0, 17, 5])));
        let t = SearchTarget::new(43, 45, 1855).unwrap();
        assert!(t.accepts(&witness([1, 1, 0, 0, 3, 13, 21])));
    }

    #[test]
    fn inconsistent_targets() {
        assert_eq!(
            SearchTarget::new(29, 200, 843).unwrap_err(),
            Error::InconsistentTarget { q: 29, n1: 200, n2: 843 }
        );
        assert!(matches!(
            SearchTarget::new(29, 31, 844),
            Err(Error::InconsistentTarget { .. })
        ));
    }

    #[test]
    fn lexicographic_with_prefix_finds_witness_region() {
        let t = SearchTarget::new(29, 31, 843).unwrap();
        let mut it = LexicographicSearch::new(t, &[1, 1, 0, 0, 0]).unwrap();
        let first = it.next().unwrap();
        assert_eq!(count_points(&first), Ok((31, 843)));
        assert_eq!((first.coeff(6), first.coeff(5)), (1, 1));
        // the example witness lies in this slice and is reached in order
        let example = FpPoly::new(PrimeField::new(29).unwrap(), [5, 17, 0, 0, 0, 1, 1]);
        let all: Vec<FpPoly> = core::iter::once(first).chain(it).collect();
        assert!(all.contains(&example));
        for w in all.windows(2) {
            let key = |f: &FpPoly| (f.coeff(1), f.coeff(0));
            assert!(key(&w[0]) < key(&w[1]));
        }
    }

    #[test]
    fn randomized_is_reproducible() {
        let strategy = SearchStrategy::Randomized { seed: 7, budget: 10_000_000 };
        let f = search_curve(29, 31, 843, &strategy).unwrap();
        assert_eq!(count_points(&f), Ok((31, 843)));
        assert_eq!(search_curve(29, 31, 843, &strategy).unwrap(), f);
        let g = search_curve(29, 31, 843, &SearchStrategy::Randomized { seed: 8, budget: 10_000_000 }).unwrap();
        assert_eq!(count_points(&g), Ok((31, 843)));
    }

    #[test]
    fn budget() {
        let t = SearchTarget::new(29, 31, 843).unwrap();
        assert_eq!(
            RandomSearch::new(t, 1).run(0),
            Err(Error::BudgetExceeded { q: 29, trials: 0 })
        );
    }

    #[test]
    fn exhausted_lexicographic() {
        // a full prefix leaves a single candidate
        let t = SearchTarget::new(29, 31, 843).unwrap();
        let it = LexicographicSearch::new(t, &[1, 1, 0, 0, 0, 17, 4]).unwrap();
        assert_eq!(it.count(), 0);
        assert_eq!(
            search_curve(29, 31, 843, &SearchStrategy::Lexicographic { prefix: alloc::vec![1, 1, 0, 0, 0, 17, 4] }),
            Err(Error::NotFound(29))
        );
    }
}
