use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::hypergraph::{binom2, pair_unrank};

pub const MATCHCOUNT_MAX_N: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchCountResult {
    pub n_vertices: usize,
    pub m: usize,
    /// Graphs on `N` vertices containing `M = {01, 23, ...}` with `M` maximum.
    pub exact: u128,
    /// `2^{2m^2-2m} (N - 2m + 2^{N-2m+1})^m`.
    pub bound: u128,
}

impl MatchCountResult {
    pub fn holds(&self) -> bool {
        self.exact <= self.bound
    }
}

pub fn matchcount_bound(n: usize, m: usize) -> u128 {
    let free = n - 2 * m;
    let base = free as u128 + (1u128 << (free + 1));
    (1u128 << (2 * m * m - 2 * m)) * base.pow(m as u32)
}

/// Does the graph given by adjacency masks have a matching with `k` edges
/// inside `avail`? Exhaustive: the lowest available vertex is either left
/// unmatched or matched to each available neighbor in turn.
fn has_matching(adj: &[u32], avail: u32, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if (avail.count_ones() as usize) < 2 * k {
        return false;
    }
    let v = avail.trailing_zeros() as usize;
    let rest = avail & !(1 << v);
    let mut nbrs = adj[v] & rest;
    while nbrs != 0 {
        let w = nbrs.trailing_zeros();
        nbrs &= nbrs - 1;
        if has_matching(adj, rest & !(1 << w), k - 1) {
            return true;
        }
    }
    has_matching(adj, rest, k)
}

pub fn max_matching_count(n: usize, m: usize) -> Result<MatchCountResult> {
    if n > MATCHCOUNT_MAX_N {
        return Err(Error::ResourceLimit(format!("matching count brute force needs N <= {MATCHCOUNT_MAX_N}, got {n}")));
    }
    if m == 0 || 2 * m > n {
        return invalid(format!("need 1 <= m and 2m <= N, got N={n} m={m}"));
    }
    let pairs: Vec<[usize; 2]> = (0..binom2(n)).map(pair_unrank).collect();
    let in_m = |[u, v]: [usize; 2]| u % 2 == 0 && v == u + 1 && v < 2 * m;
    let fixed: Vec<[usize; 2]> = pairs.iter().copied().filter(|&p| in_m(p)).collect();
    let free: Vec<[usize; 2]> = pairs.iter().copied().filter(|&p| !in_m(p)).collect();
    let mut base = vec![0u32; n];
    for &[u, v] in &fixed {
        base[u] |= 1 << v;
        base[v] |= 1 << u;
    }
    let all = (1u32 << n) - 1;
    let mut exact = 0u128;
    let mut adj = vec![0u32; n];
    for mask in 0u64..1 << free.len() {
        adj.copy_from_slice(&base);
        let mut rest = mask;
        while rest != 0 {
            let [u, v] = free[rest.trailing_zeros() as usize];
            rest &= rest - 1;
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        if !has_matching(&adj, all, m + 1) {
            exact += 1;
        }
    }
    Ok(MatchCountResult { n_vertices: n, m, exact, bound: matchcount_bound(n, m) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        let r = max_matching_count(3, 1).unwrap();
        assert_eq!((r.exact, r.bound), (4, 5));
        let r = max_matching_count(4, 2).unwrap();
        assert_eq!((r.exact, r.bound), (16, 64));
    }

    #[test]
    fn n4_m1_by_hand() {
        // Containing 01 with no two disjoint edges: 23 absent, and not both
        // of {02,13} nor both of {03,12}: 3 * 3 = 9.
        assert_eq!(max_matching_count(4, 1).unwrap().exact, 9);
    }

    #[test]
    fn argument_checks() {
        assert!(matches!(max_matching_count(9, 1), Err(Error::ResourceLimit(_))));
        assert!(max_matching_count(5, 3).is_err());
        assert!(max_matching_count(5, 0).is_err());
    }

    #[test]
    fn matching_search() {
        // Path 0-1-2-3 has a perfect matching; a star does not.
        let path = [0b0010, 0b0101, 0b1010, 0b0100];
        assert!(has_matching(&path, 0b1111, 2));
        let star = [0b1110, 0b0001, 0b0001, 0b0001];
        assert!(!has_matching(&star, 0b1111, 2));
    }
}
