use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::constructions::rng;
use crate::error::{invalid, Result};

/// `exp(-a^2 / (2pm))`, bounding `P(S < E[S] - a)` for a sum `S` of `m`
/// independent Bernoulli(`p`) trials.
pub fn chernoff_bound(m: u64, p: f64, a: f64) -> Result<f64> {
    if m == 0 || !(p > 0.0 && p <= 1.0) || a <= 0.0 || !a.is_finite() {
        return invalid(format!("chernoff bound needs m >= 1, 0 < p <= 1, a > 0; got m={m} p={p} a={a}"));
    }
    Ok((-a * a / (2.0 * p * m as f64)).exp())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChernoffEmpirical {
    pub m: u64,
    pub p: f64,
    pub a: f64,
    pub trials: u64,
    pub seed: u64,
    pub bound: f64,
    pub hits: u64,
    pub observed: f64,
    /// Three binomial standard errors at the bound.
    pub margin: f64,
    pub passes: bool,
}

/// Samples `trials` Bernoulli sums and compares the lower-tail frequency
/// with the bound plus a sampling margin.
pub fn chernoff_empirical(m: u64, p: f64, a: f64, trials: u64, seed: u64) -> Result<ChernoffEmpirical> {
    let bound = chernoff_bound(m, p, a)?;
    if trials == 0 {
        return invalid("empirical check needs at least one trial");
    }
    let cutoff = m as f64 * p - a;
    let mut rng = rng(seed);
    let mut hits = 0u64;
    for _ in 0..trials {
        let s = (0..m).filter(|_| rng.gen_bool(p)).count() as f64;
        hits += u64::from(s < cutoff);
    }
    let observed = hits as f64 / trials as f64;
    let margin = 3.0 * (bound * (1.0 - bound) / trials as f64).sqrt();
    Ok(ChernoffEmpirical { m, p, a, trials, seed, bound, hits, observed, margin, passes: observed < bound + margin })
}
