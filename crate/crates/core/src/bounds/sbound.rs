use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::constructions::consistent_triples;
use crate::error::{invalid, Result};

/// `27 * ((2/27) n^3 - (1/9) n^2 - (1/9) n)`, i.e. the bound scaled to an
/// integer number of bits.
pub fn s_bound_scaled(n: u64) -> i128 {
    let n = n as i128;
    2 * n * n * n - 3 * n * n - 3 * n
}

pub fn s_bound_log2(n: u64) -> f64 {
    s_bound_scaled(n) as f64 / 27.0
}

/// `S^27 >= 2^{27 * bound}`, i.e. `log2 S >= bound` exactly.
pub fn s_bound_holds(n: u64, s: u128) -> bool {
    let e = s_bound_scaled(n);
    if e <= 0 {
        return s >= 1;
    }
    BigUint::from(s).pow(27) >= BigUint::one() << e as u64
}

/// `S(n)^9 >= S(n-1)^9 * 2^{2n^2 - 5n + 1}`.
pub fn s_recursion_holds(n: u64, s_n: u128, s_prev: u128) -> bool {
    let e = 2 * (n as i128) * (n as i128) - 5 * n as i128 + 1;
    let left = BigUint::from(s_n).pow(9);
    let right = BigUint::from(s_prev).pow(9);
    if e >= 0 {
        left >= right << e as u64
    } else {
        left << (-e) as u64 >= right
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SBoundReport {
    pub n: u64,
    pub bound_log2: f64,
    pub exact_s: Option<u128>,
    pub exact_log2: Option<f64>,
    pub exact_holds: Option<bool>,
    /// `a = ceil(2n/3)` and `log2` of the `2^{C(a,2)(n-a)}` subsystems of
    /// the complete semi-bipartite system on that split.
    pub construction_a: u64,
    pub construction_log2: u64,
    pub construction_holds: bool,
    pub recursion_holds: Option<bool>,
}

/// Compares the bound with an exact count (if supplied), with the
/// construction count, and with the recursion from `S(n-1)`.
pub fn s_bound_check(n: u64, exact_s: Option<u128>, prev_s: Option<u128>) -> Result<SBoundReport> {
    if !(3..=64).contains(&n) {
        return invalid(format!("bound check needs 3 <= n <= 64, got {n}"));
    }
    let a = (2 * n).div_ceil(3);
    let construction_log2 = consistent_triples(n as usize, a as usize);
    let construction_holds = 27 * construction_log2 as i128 >= s_bound_scaled(n);
    let recursion_holds = match (exact_s, prev_s) {
        (Some(s), Some(p)) => Some(s_recursion_holds(n, s, p)),
        _ => None,
    };
    Ok(SBoundReport {
        n,
        bound_log2: s_bound_log2(n),
        exact_s,
        exact_log2: exact_s.map(|s| (s as f64).log2()),
        exact_holds: exact_s.map(|s| s_bound_holds(n, s)),
        construction_a: a,
        construction_log2,
        construction_holds,
        recursion_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert!((s_bound_log2(6) - (16.0 - 4.0 - 2.0 / 3.0)).abs() < 1e-12);
        assert!((s_bound_log2(3) - (2.0 - 1.0 - 1.0 / 3.0)).abs() < 1e-12);
        // S(3) = 2: the empty and the one-edge system.
        assert!(s_bound_holds(3, 2));
        assert!(!s_bound_holds(3, 1));
        assert!(s_bound_holds(4, 15));
    }

    #[test]
    fn exact_threshold() {
        // n = 3: 27 * bound = 18, so S >= 2^{18/27}, and 2^27 >= 2^18.
        assert!(s_bound_holds(3, 2));
        // n = 6: 27 * bound = 306; 2^11 fails, 2^12 holds.
        assert!(!s_bound_holds(6, 1 << 11));
        assert!(s_bound_holds(6, 1 << 12));
    }

    #[test]
    fn construction_beats_bound_up_to_64() {
        for n in 3..=64 {
            assert!(s_bound_check(n, None, None).unwrap().construction_holds, "n={n}");
        }
        assert!(s_bound_check(2, None, None).is_err());
    }

    #[test]
    fn recursion_arithmetic() {
        // n = 5: exponent 26; S(5)^9 >= S(4)^9 * 2^26.
        assert!(s_recursion_holds(5, 16, 1));
        assert!(!s_recursion_holds(5, 7, 1));
    }
}
