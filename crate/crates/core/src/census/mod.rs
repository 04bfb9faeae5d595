//! Exact labeled census by exhaustive sweep over edge masks, the extremal
//! branch-and-bound search, and the on-disk report cache.

mod cache;
mod extremal;
mod sweep;

pub use cache::{CacheComparison, CensusCache};
pub use extremal::{extremal_search, ExtremalBudget, ExtremalResult};
pub use sweep::{classify_mask, sweep_range, MaskClass, SweepCounts, SweepCursor};

use std::path::PathBuf;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::hypergraph::binom3;

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const DEFAULT_MAX_N: usize = 6;
pub const DEEP_MAX_N: usize = 7;
pub const DEFAULT_CHECKPOINT_INTERVAL: u64 = 1 << 30;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: usize,
    /// `2^C(n,3)`.
    pub total: u128,
    /// Systems with independent neighborhoods.
    pub i_n: u128,
    /// Semi-bipartite systems.
    pub s_n: u128,
    pub t5_free: u128,
    /// `i_n - s_n`: T5-free systems that are not semi-bipartite.
    pub extra: u128,
    /// Largest edge count among T5-free systems.
    pub max_t5_free_edges: usize,
    pub elapsed_ms: u64,
    pub workers: usize,
    pub version: String,
}

impl CensusReport {
    fn from_counts(n: usize, c: &SweepCounts, elapsed_ms: u64, workers: usize) -> Result<Self> {
        if c.i_n != c.t5_free {
            return Err(Error::Invariant(format!("I({n}) = {} but T5-free = {}", c.i_n, c.t5_free)));
        }
        if c.s_n > c.i_n || c.i_n > c.total {
            return Err(Error::Invariant(format!("counts out of order: {c:?}")));
        }
        Ok(CensusReport {
            n,
            total: c.total,
            i_n: c.i_n,
            s_n: c.s_n,
            t5_free: c.t5_free,
            extra: c.i_n - c.s_n,
            max_t5_free_edges: c.max_t5_free_edges,
            elapsed_ms,
            workers,
            version: ARTIFACT_VERSION.to_string(),
        })
    }

    /// The counts alone, without run metadata.
    pub fn counts(&self) -> (usize, u128, u128, u128, u128, u128, usize) {
        (self.n, self.total, self.i_n, self.s_n, self.t5_free, self.extra, self.max_t5_free_edges)
    }
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub workers: usize,
    /// Permits `n = 7` (`2^35` masks).
    pub deep: bool,
    /// Resumable cursor file, rewritten atomically after every interval.
    pub checkpoint: Option<PathBuf>,
    pub checkpoint_interval: u64,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            workers: rayon::current_num_threads(),
            deep: false,
            checkpoint: None,
            checkpoint_interval: DEFAULT_CHECKPOINT_INTERVAL,
        }
    }
}

impl CensusOptions {
    pub fn with_workers(workers: usize) -> Self {
        CensusOptions { workers, ..Default::default() }
    }
}

fn check_census_n(n: usize, deep: bool) -> Result<()> {
    if n < 3 {
        return invalid(format!("census needs n >= 3, got {n}"));
    }
    if n > DEEP_MAX_N || (n > DEFAULT_MAX_N && !deep) {
        return Err(Error::ResourceLimit(format!(
            "census at n={n} sweeps 2^{} masks; n <= {DEFAULT_MAX_N} by default, n = {DEEP_MAX_N} only with the deep flag",
            binom3(n)
        )));
    }
    Ok(())
}

/// Sweeps all `2^C(n,3)` systems on `{0..n-1}`.
pub fn full_census(n: usize, opts: &CensusOptions) -> Result<CensusReport> {
    check_census_n(n, opts.deep)?;
    if opts.workers == 0 {
        return invalid("worker count must be positive");
    }
    let start = Instant::now();
    let end = 1u64 << binom3(n);
    let counts = match &opts.checkpoint {
        None => sweep_range(n, 0, end, opts.workers)?,
        Some(path) => {
            let mut cursor = match SweepCursor::load(path)? {
                Some(c) if c.n == n && c.end == end => c,
                Some(c) => {
                    return invalid(format!(
                        "checkpoint {} is for n={} (end {}), not n={n}",
                        path.display(),
                        c.n,
                        c.end
                    ))
                }
                None => SweepCursor::new(n, end),
            };
            let interval = opts.checkpoint_interval.max(1);
            while cursor.next_mask < end {
                let stop = end.min(cursor.next_mask.saturating_add(interval));
                let block = sweep_range(n, cursor.next_mask, stop, opts.workers)?;
                cursor.advance(stop, &block);
                cursor.store(path)?;
            }
            cursor.counts
        }
    };
    let elapsed_ms = start.elapsed().as_millis() as u64;
    CensusReport::from_counts(n, &counts, elapsed_ms, opts.workers)
}

/// Exact check of `(1 + 2^{-4n}) S(n) < I(n)`, scaled to `2^{4n}(I - S) > S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountGapCheck {
    pub n: usize,
    pub holds: bool,
    /// `2^{4n}(I(n) - S(n)) - S(n)`.
    pub slack: i128,
}

pub fn check_count_gap(report: &CensusReport) -> Result<CountGapCheck> {
    let overflow = || Error::Invariant(format!("count-gap slack overflows at n={}", report.n));
    let scale = 1i128.checked_shl(4 * report.n as u32).ok_or_else(overflow)?;
    let gap = i128::try_from(report.i_n).map_err(|_| overflow())? - i128::try_from(report.s_n).map_err(|_| overflow())?;
    let lhs = scale.checked_mul(gap).ok_or_else(overflow)?;
    let slack = lhs - report.s_n as i128;
    Ok(CountGapCheck { n: report.n, holds: slack > 0, slack })
}
