use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Width of the log-domain band inside which a verdict is recomputed exactly.
pub const LOG_BAND: f64 = 1e-9;

/// `-x log2 x - (1-x) log2 (1-x)` for `x` in `(0,1)`.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return invalid(format!("binary entropy needs 0 < x < 1, got {x}"));
    }
    Ok(entropy_unchecked(x))
}

pub(crate) fn entropy_unchecked(x: f64) -> f64 {
    let ln2 = std::f64::consts::LN_2;
    (-x * x.ln() - (1.0 - x) * (-x).ln_1p()) / ln2
}

/// A reduced fraction `num/den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return invalid("fraction with zero denominator");
        }
        let g = gcd(num, den);
        Ok(Fraction { num: num / g, den: den / g })
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `floor(self * n)`.
    pub fn floor_mul(self, n: u64) -> u64 {
        ((self.num as u128 * n as u128) / self.den as u128) as u64
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EvalMethod {
    LogDomain,
    Exact,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntropyFacts {
    pub n: u64,
    pub x: Fraction,
    /// `C(n, floor(xn)) < 2^{H(x) n}`.
    pub single: bool,
    /// `sum_{i <= floor(xn)} C(n, i) < 2^{H(x) n}`.
    pub tail: bool,
    /// `H(x) n - log2(lhs)` for each fact, in bits.
    pub single_margin: f64,
    pub tail_margin: f64,
    pub single_method: EvalMethod,
    pub tail_method: EvalMethod,
}

fn check_x(n: u64, x: Fraction) -> Result<()> {
    if n == 0 {
        return invalid("entropy facts need n >= 1");
    }
    if x.num == 0 || 2 * x.num >= x.den {
        return invalid(format!("entropy facts need 0 < x < 1/2, got {}/{}", x.num, x.den));
    }
    Ok(())
}

fn log2_binomials(n: u64, k: u64) -> (f64, f64) {
    // log2 C(n, i) for i = 0..=k, combined by log-sum-exp for the tail.
    let mut log_c = 0.0f64;
    let mut terms = Vec::with_capacity(k as usize + 1);
    terms.push(0.0);
    for i in 1..=k {
        log_c += ((n - i + 1) as f64).log2() - (i as f64).log2();
        terms.push(log_c);
    }
    let top = terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let tail = top + terms.iter().map(|t| (t - top).exp2()).sum::<f64>().log2();
    (log_c, tail)
}

fn binomials(n: u64, k: u64) -> (BigUint, BigUint) {
    let mut c = BigUint::one();
    let mut tail = BigUint::one();
    for i in 1..=k {
        c = c * BigUint::from(n - i + 1) / BigUint::from(i);
        tail += &c;
    }
    (c, tail)
}

/// Exact test of `lhs < 2^{H(x) n}` for `x = p/q`: raising both sides to the
/// power `q` gives `lhs^q * p^{pn} * (q-p)^{(q-p)n} < q^{qn}`.
fn below_entropy_power(lhs: &BigUint, n: u64, x: Fraction) -> bool {
    let (p, q) = (x.num, x.den);
    let left = lhs.pow(q as u32)
        * BigUint::from(p).pow((p * n) as u32)
        * BigUint::from(q - p).pow(((q - p) * n) as u32);
    let right = BigUint::from(q).pow((q * n) as u32);
    left < right
}

/// Both facts by exact big-integer comparison.
pub fn entropy_facts_exact(n: u64, x: Fraction) -> Result<(bool, bool)> {
    check_x(n, x)?;
    let (c, tail) = binomials(n, x.floor_mul(n));
    Ok((below_entropy_power(&c, n, x), below_entropy_power(&tail, n, x)))
}

/// Both facts in the log domain; a margin within [`LOG_BAND`] is settled
/// exactly.
pub fn entropy_facts_check(n: u64, x: Fraction) -> Result<EntropyFacts> {
    check_x(n, x)?;
    let rhs = entropy_unchecked(x.to_f64()) * n as f64;
    let (log_c, log_tail) = log2_binomials(n, x.floor_mul(n));
    let single_margin = rhs - log_c;
    let tail_margin = rhs - log_tail;
    let mut exact = None;
    let mut settle = |margin: f64, pick: fn((bool, bool)) -> bool| -> Result<(bool, EvalMethod)> {
        if margin.abs() > LOG_BAND {
            return Ok((margin > 0.0, EvalMethod::LogDomain));
        }
        let both = match exact {
            Some(b) => b,
            None => *exact.insert(entropy_facts_exact(n, x)?),
        };
        Ok((pick(both), EvalMethod::Exact))
    };
    let (single, single_method) = settle(single_margin, |b| b.0)?;
    let (tail, tail_method) = settle(tail_margin, |b| b.1)?;
    Ok(EntropyFacts { n, x, single, tail, single_margin, tail_margin, single_method, tail_method })
}

/// Largest grid point below which the tail fact holds at every grid point,
/// or `None` if it already fails at the first.
pub fn tail_threshold(n: u64, grid: &[Fraction]) -> Result<Option<Fraction>> {
    let mut last = None;
    for &x in grid {
        if !entropy_facts_exact(n, x)?.1 {
            break;
        }
        last = Some(x);
    }
    Ok(last)
}

/// `{0.05, 0.10, ..., 0.45}` as exact fractions.
pub fn entropy_grid() -> Vec<Fraction> {
    (1..=9).map(|k| Fraction::new(k, 20).unwrap()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn entropy_values() {
        assert_eq!(binary_entropy(0.5).unwrap(), 1.0);
        // 2 - (3/4) log2 3
        let expect = 2.0 - 0.75 * 3f64.log2();
        assert!((binary_entropy(0.25).unwrap() - expect).abs() < 1e-12);
        assert!((binary_entropy(0.25).unwrap() - 0.811_278_124_459_132_9).abs() < 1e-12);
        for bad in [0.0, 1.0, -0.1, 1.5, f64::NAN] {
            assert!(binary_entropy(bad).is_err());
        }
    }

    proptest! {
        #[test]
        fn entropy_symmetric(x in 1e-6f64..0.999_999) {
            let a = binary_entropy(x).unwrap();
            let b = binary_entropy(1.0 - x).unwrap();
            prop_assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn facts_at_64_quarter() {
        let x = Fraction::new(1, 4).unwrap();
        assert_eq!(entropy_facts_exact(64, x).unwrap(), (true, true));
        let f = entropy_facts_check(64, x).unwrap();
        assert!(f.single && f.tail);
    }

    #[test]
    fn large_n_single_fact() {
        let f = entropy_facts_check(100, Fraction::new(49, 100).unwrap()).unwrap();
        assert!(f.single);
        assert_eq!(f.single_method, EvalMethod::LogDomain);
    }

    #[test]
    fn rejects_half_and_zero() {
        assert!(entropy_facts_check(10, Fraction::new(1, 2).unwrap()).is_err());
        assert!(entropy_facts_check(10, Fraction::new(0, 3).unwrap()).is_err());
        assert!(entropy_facts_check(0, Fraction::new(1, 3).unwrap()).is_err());
        assert!(Fraction::new(1, 0).is_err());
    }

    #[test]
    fn exact_and_log_paths_agree() {
        for n in [32u64, 48, 64] {
            for x in entropy_grid() {
                let exact = entropy_facts_exact(n, x).unwrap();
                let f = entropy_facts_check(n, x).unwrap();
                assert_eq!((f.single, f.tail), exact, "n={n} x={x:?}");
            }
        }
    }

    #[test]
    fn exact_comparison_is_tight() {
        // C(4,1) = 4 against 2^{4 H(1/4)} = 256/27 ≈ 9.48.
        let x = Fraction::new(1, 4).unwrap();
        assert!(below_entropy_power(&BigUint::from(9u32), 4, x));
        assert!(!below_entropy_power(&BigUint::from(10u32), 4, x));
        assert_eq!(binomials(4, 1), (BigUint::from(4u32), BigUint::from(5u32)));
    }
}
