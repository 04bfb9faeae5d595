use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Parameter bundle `(η, μ, α, β)` used by the structural condition checks.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    pub eta: f64,
    pub mu: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl Thresholds {
    pub fn new(eta: f64, mu: f64, alpha: f64, beta: f64) -> Result<Self> {
        for (name, v) in [("eta", eta), ("mu", mu), ("alpha", alpha), ("beta", beta)] {
            if !(v > 0.0 && v < 1.0) {
                return invalid(format!("{name} = {v} is not in (0,1)"));
            }
        }
        Ok(Thresholds { eta, mu, alpha, beta })
    }

    /// A tuple satisfying all four hierarchy inequalities, found by
    /// [`crate::bounds::find_hierarchy_thresholds`] and frozen here.
    pub const SHIPPED: Thresholds = Thresholds { eta: 5.0e-48, mu: 1.0e-14, alpha: 7.0e-4, beta: 1.0e-10 };
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds::SHIPPED
    }
}
