//! Colexicographic ranking of pairs and triples.
//!
//! A sorted triple `a < b < c` has rank `C(a,1) + C(b,2) + C(c,3)`; a sorted
//! pair `u < v` has rank `C(u,1) + C(v,2)`. Ranks do not depend on `n`, so a
//! system on `n` vertices occupies exactly the first `C(n,3)` ranks.

use crate::error::{invalid, Result};

#[inline]
pub const fn binom2(v: usize) -> usize {
    if v < 2 {
        0
    } else {
        v * (v - 1) / 2
    }
}

#[inline]
pub const fn binom3(v: usize) -> usize {
    if v < 3 {
        0
    } else {
        v * (v - 1) * (v - 2) / 6
    }
}

#[inline]
pub(crate) fn sort3(a: usize, b: usize, c: usize) -> (usize, usize, usize) {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    let (b, c) = if b < c { (b, c) } else { (c, b) };
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    (a, b, c)
}

/// Rank of a triple whose vertices are already sorted ascending.
#[inline]
pub fn triple_rank_sorted(a: usize, b: usize, c: usize) -> usize {
    debug_assert!(a < b && b < c);
    a + binom2(b) + binom3(c)
}

/// Colex rank of `{a, b, c}` among the triples of `{0..n-1}`.
pub fn triple_index(a: usize, b: usize, c: usize, n: usize) -> Result<usize> {
    if a == b || b == c || a == c {
        return invalid(format!("triple ({a},{b},{c}) has repeated vertices"));
    }
    if a >= n || b >= n || c >= n {
        return invalid(format!("triple ({a},{b},{c}) has a vertex >= n={n}"));
    }
    let (a, b, c) = sort3(a, b, c);
    Ok(triple_rank_sorted(a, b, c))
}

/// Largest `v` with `f(v) <= r`, searching upward from `lo`.
#[inline]
fn largest_at_most(r: usize, lo: usize, f: fn(usize) -> usize) -> usize {
    let mut v = lo;
    while f(v + 1) <= r {
        v += 1;
    }
    v
}

/// Inverse of [`triple_rank_sorted`]: the sorted triple with colex rank `r`.
pub fn triple_unrank(r: usize) -> [usize; 3] {
    // Cube-root estimate, then correct by stepping.
    let mut c = ((6.0 * r as f64).cbrt() as usize).max(2);
    while c > 2 && binom3(c) > r {
        c -= 1;
    }
    let c = largest_at_most(r, c, binom3);
    let r = r - binom3(c);
    let mut b = ((2.0 * r as f64).sqrt() as usize).max(1);
    while b > 1 && binom2(b) > r {
        b -= 1;
    }
    let b = largest_at_most(r, b, binom2);
    let a = r - binom2(b);
    [a, b, c]
}

#[inline]
pub fn pair_rank_sorted(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    u + binom2(v)
}

/// Colex rank of `{u, v}` among the pairs of `{0..n-1}`.
pub fn pair_index(u: usize, v: usize, n: usize) -> Result<usize> {
    if u == v {
        return invalid(format!("pair ({u},{v}) has repeated vertices"));
    }
    if u >= n || v >= n {
        return invalid(format!("pair ({u},{v}) has a vertex >= n={n}"));
    }
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    Ok(pair_rank_sorted(u, v))
}

pub fn pair_unrank(r: usize) -> [usize; 2] {
    let mut v = ((2.0 * r as f64).sqrt() as usize).max(1);
    while v > 1 && binom2(v) > r {
        v -= 1;
    }
    let v = largest_at_most(r, v, binom2);
    [r - binom2(v), v]
}
