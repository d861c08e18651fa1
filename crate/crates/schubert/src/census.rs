//! Exhaustive enumeration of `S_n` with per-permutation verdicts.
//!
//! Permutations are generated in place in lexicographic order, sharded by
//! first value so the work splits across threads with no shared state; the
//! merge is integer addition, so counts are identical for any thread count.

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::classify;
use crate::divisor;
use crate::perm::{next_permutation, Permutation};

#[derive(Debug, Clone)]
pub struct CensusOptions {
    /// Also count factorial and Fano varieties (the Smith-normal-form test
    /// dominates the running time, so this is opt-in).
    pub full: bool,
    /// Cross-check the combinatorial test against the linear-system solver
    /// on every permutation and fail on any disagreement.
    pub oracle: bool,
    pub threads: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        Self {
            full: false,
            oracle: false,
            threads: 1,
        }
    }
}

/// One census line for `S_n`.
#[derive(Debug, Clone, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub total: u64,
    pub gorenstein: u64,
    pub smooth: u64,
    pub factorial: Option<u64>,
    pub fano: Option<u64>,
    pub seconds: f64,
}

impl CensusRow {
    pub fn csv_header(&self) -> &'static str {
        if self.factorial.is_some() {
            "n,total,gorenstein,smooth,factorial,fano,seconds"
        } else {
            "n,total,gorenstein,smooth,seconds"
        }
    }

    pub fn to_csv(&self) -> String {
        match (self.factorial, self.fano) {
            (Some(factorial), Some(fano)) => format!(
                "{},{},{},{},{},{},{:.3}",
                self.n, self.total, self.gorenstein, self.smooth, factorial, fano, self.seconds
            ),
            _ => format!(
                "{},{},{},{},{:.3}",
                self.n, self.total, self.gorenstein, self.smooth, self.seconds
            ),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("census rows serialize")
    }
}

impl std::fmt::Display for CensusRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "n={} total={} gorenstein={} smooth={}",
            self.n, self.total, self.gorenstein, self.smooth
        )?;
        if let (Some(factorial), Some(fano)) = (self.factorial, self.fano) {
            write!(f, " factorial={factorial} fano={fano}")?;
        }
        write!(f, " seconds={:.3}", self.seconds)
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CensusError {
    #[error("the combinatorial test and the linear-system oracle disagree on {w}")]
    OracleDisagreement { w: Permutation },
}

#[derive(Debug, Default, Clone, Copy)]
struct Counts {
    total: u64,
    gorenstein: u64,
    smooth: u64,
    factorial: u64,
    fano: u64,
}

impl Counts {
    fn merge(self, other: Counts) -> Counts {
        Counts {
            total: self.total + other.total,
            gorenstein: self.gorenstein + other.gorenstein,
            smooth: self.smooth + other.smooth,
            factorial: self.factorial + other.factorial,
            fano: self.fano + other.fano,
        }
    }
}

/// Sweeps all of `S_n` and tallies the verdicts.
pub fn census(n: usize, opts: &CensusOptions) -> Result<CensusRow, CensusError> {
    assert!(n >= 1, "the census needs n >= 1");
    let start = Instant::now();
    let threads = opts.threads.max(1).min(n);

    let counts = if threads == 1 {
        let mut acc = Counts::default();
        for first in 1..=n {
            acc = acc.merge(census_block(n, first, opts)?);
        }
        acc
    } else {
        std::thread::scope(|scope| {
            let workers: Vec<_> = (0..threads)
                .map(|t| {
                    scope.spawn(move || {
                        let mut acc = Counts::default();
                        let mut first = t + 1;
                        while first <= n {
                            acc = acc.merge(census_block(n, first, opts)?);
                            first += threads;
                        }
                        Ok(acc)
                    })
                })
                .collect();
            workers
                .into_iter()
                .try_fold(Counts::default(), |acc, worker| {
                    let partial: Result<Counts, CensusError> =
                        worker.join().expect("census worker panicked");
                    Ok(acc.merge(partial?))
                })
        })?
    };

    Ok(CensusRow {
        n,
        total: counts.total,
        gorenstein: counts.gorenstein,
        smooth: counts.smooth,
        factorial: opts.full.then_some(counts.factorial),
        fano: opts.full.then_some(counts.fano),
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Tallies the block of permutations with `w(1) = first`, in lexicographic
/// order.
fn census_block(n: usize, first: usize, opts: &CensusOptions) -> Result<Counts, CensusError> {
    let mut word = Vec::with_capacity(n);
    word.push(first);
    word.extend((1..=n).filter(|&v| v != first));
    let mut acc = Counts::default();
    loop {
        tally(
            &Permutation::from_word_unchecked(word.clone()),
            opts,
            &mut acc,
        )?;
        if n < 2 || !next_permutation(&mut word[1..]) {
            break;
        }
    }
    Ok(acc)
}

fn tally(w: &Permutation, opts: &CensusOptions, acc: &mut Counts) -> Result<(), CensusError> {
    acc.total += 1;
    let gorenstein = classify::is_gorenstein(w);
    if gorenstein {
        acc.gorenstein += 1;
    }
    if classify::is_smooth(w) {
        acc.smooth += 1;
    }
    if opts.oracle {
        let system = divisor::build_system(w);
        let feasible = system.solve().is_some();
        let candidate_solves = divisor::candidate_alpha(w)
            .map(|a| system.verify(&a))
            .unwrap_or(false);
        if feasible != gorenstein || candidate_solves != feasible {
            return Err(CensusError::OracleDisagreement { w: w.clone() });
        }
    }
    if opts.full {
        if divisor::is_factorial(w) {
            acc.factorial += 1;
        }
        if classify::is_fano(w) == Some(true) {
            acc.fano += 1;
        }
    }
    Ok(())
}
