//! Multi-threaded random search with the same result as the sequential one.

use std::sync::atomic::{AtomicU64, Ordering};
use std::thread;

use forge_core::finitefield::FpPoly;
use forge_core::synth::{assemble, plan, Certificate, SynthOptions, Witness};
use forge_core::weilselect::{search_curve, RandomSearch, SearchStrategy, SearchTarget};
use forge_core::{Error, Result};

/// Worker count: the flag, else `FORGE_THREADS`, else the available
/// parallelism.
pub fn thread_count(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var("FORGE_THREADS").ok()?.parse().ok())
        .or_else(|| thread::available_parallelism().ok().map(|n| n.get()))
        .unwrap_or(1)
        .max(1)
}

/// Runs trials `0..budget` on `threads` workers and returns the hit with the
/// smallest trial index, i.e. exactly what [`RandomSearch::run`] returns.
pub fn parallel_search(search: &RandomSearch, budget: u64, threads: usize) -> Result<FpPoly> {
    let threads = threads.max(1) as u64;
    let best = AtomicU64::new(u64::MAX);
    let hits: Vec<Option<(u64, [u64; 7])>> = thread::scope(|s| {
        let workers: Vec<_> = (0..threads)
            .map(|w| {
                let best = &best;
                s.spawn(move || {
                    let mut t = w;
                    while t < budget && t < best.load(Ordering::Relaxed) {
                        if let Some(f) = search.trial(t) {
                            best.fetch_min(t, Ordering::Relaxed);
                            return Some((t, f));
                        }
                        t += threads;
                    }
                    None
                })
            })
            .collect();
        workers.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
    });
    match hits.into_iter().flatten().min_by_key(|(t, _)| *t) {
        Some((_, f)) => search.finish(&f),
        None => Err(Error::BudgetExceeded { q: search.target().q, trials: budget }),
    }
}

/// The synthesis pipeline with both witness searches run in parallel.
pub fn synthesize_parallel(ell: u64, opts: &SynthOptions, threads: usize) -> Result<Certificate> {
    let plan = plan(ell)?;
    let mut found = [Witness { q: 0, coeffs: [0; 7], n1: 0, n2: 0 }; 2];
    for (k, (q, n1, n2)) in plan.targets().into_iter().enumerate() {
        let coeffs = match &opts.witnesses {
            Some(w) => w[k],
            None => {
                let stage = if k == 0 { "search q1" } else { "search q2" };
                let wrap = |e| Error::Stage { stage, source: Box::new(e) };
                let f = match &opts.lex_prefix {
                    Some(prefix) => search_curve(q, n1, n2, &SearchStrategy::Lexicographic { prefix: prefix.clone() }),
                    None => SearchTarget::new(q, n1, n2)
                        .and_then(|t| parallel_search(&RandomSearch::new(t, opts.seed), opts.budget, threads)),
                }
                .map_err(wrap)?;
                std::array::from_fn(|i| f.coeff(i))
            }
        };
        found[k] = Witness { q, coeffs, n1, n2 };
    }
    assemble(&plan, found, opts.minimize)
}
