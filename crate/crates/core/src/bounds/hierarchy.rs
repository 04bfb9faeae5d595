use serde::Serialize;

use super::entropy::entropy_unchecked as h;
use crate::constructions::Thresholds;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Inequality {
    pub name: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HierarchyReport {
    pub thresholds: Thresholds,
    pub inequalities: [Inequality; 4],
    pub holds: bool,
}

impl HierarchyReport {
    pub fn first_failure(&self) -> Option<&'static str> {
        self.inequalities.iter().find(|i| !i.holds).map(|i| i.name)
    }
}

fn strict(name: &'static str, lhs: f64, rhs: f64) -> Inequality {
    Inequality { name, lhs, rhs, holds: lhs > rhs }
}

/// The four parameter inequalities, evaluated literally.
pub fn threshold_hierarchy_check(t: &Thresholds) -> HierarchyReport {
    let Thresholds { eta, mu, alpha, beta } = *t;
    let inequalities = [
        strict("0.01 > H(alpha)", 0.01, h(alpha)),
        strict("alpha^2 > 100(H(beta) + H(2mu) + mu^2)", alpha * alpha, 100.0 * (h(beta) + h(2.0 * mu) + mu * mu)),
        strict("beta > 100 H(2mu)", beta, 100.0 * h(2.0 * mu)),
        Inequality { name: "mu^3 >= 1000 H(eta)", lhs: mu.powi(3), rhs: 1000.0 * h(eta), holds: mu.powi(3) >= 1000.0 * h(eta) },
    ];
    HierarchyReport { thresholds: *t, holds: inequalities.iter().all(|i| i.holds), inequalities }
}

/// Largest value `d * 10^-e` (one significant digit) with `ok` true,
/// scanning downward; `None` below `1e-300`.
fn largest_round_value(ok: impl Fn(f64) -> bool) -> Option<f64> {
    for e in 1..=300 {
        for d in (1..=9).rev() {
            let v: f64 = format!("{d}e-{e}").parse().expect("valid literal");
            if v < 1.0 && ok(v) {
                return Some(v);
            }
        }
    }
    None
}

/// Chooses `alpha`, then `beta`, `mu` and `eta`, each as the largest
/// one-digit value that leaves room for the later ones.
pub fn find_hierarchy_thresholds() -> Option<Thresholds> {
    let alpha = largest_round_value(|a| h(a) < 0.01)?;
    let budget = alpha * alpha / 100.0;
    let beta = largest_round_value(|b| h(b) < 0.9 * budget)?;
    let mu = largest_round_value(|m| beta > 100.0 * h(2.0 * m) && h(beta) + h(2.0 * m) + m * m < budget)?;
    let eta = largest_round_value(|e| mu.powi(3) >= 1000.0 * h(e))?;
    let t = Thresholds { eta, mu, alpha, beta };
    threshold_hierarchy_check(&t).holds.then_some(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_tuple_passes() {
        let r = threshold_hierarchy_check(&Thresholds::SHIPPED);
        assert!(r.holds, "{r:?}");
    }

    #[test]
    fn search_finds_valid_tuple() {
        let t = find_hierarchy_thresholds().unwrap();
        assert!(threshold_hierarchy_check(&t).holds);
    }

    #[test]
    fn all_tenths_fail_first() {
        let t = Thresholds::new(0.1, 0.1, 0.1, 0.1).unwrap();
        let r = threshold_hierarchy_check(&t);
        assert!(!r.holds);
        assert_eq!(r.first_failure(), Some("0.01 > H(alpha)"));
        assert!((r.inequalities[0].rhs - 0.468_995_593_589_281_2).abs() < 1e-12);
    }

    #[test]
    fn alpha_just_too_large() {
        let t = Thresholds { alpha: 1e-3, ..Thresholds::SHIPPED };
        assert_eq!(threshold_hierarchy_check(&t).first_failure(), Some("0.01 > H(alpha)"));
    }

    #[test]
    fn shrinking_eta_keeps_last_inequality() {
        let mut t = Thresholds::SHIPPED;
        assert!(threshold_hierarchy_check(&t).inequalities[3].holds);
        for _ in 0..40 {
            t.eta /= 3.0;
            assert!(threshold_hierarchy_check(&t).inequalities[3].holds);
        }
    }
}
