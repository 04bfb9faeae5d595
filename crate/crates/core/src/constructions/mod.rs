//! Generators: the extremal semi-bipartite system, the non-semi-bipartite
//! T5-free family, and seeded random samplers.

mod thresholds;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use thresholds::Thresholds;

use crate::bits::VertexSet;
use crate::detection::{has_independent_neighborhoods, is_semibipartite};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::{binom2, OrderedPartition, TripleSystem};

/// Above this many vertices `ns_sample` skips its 2^n self-check by default.
pub const NS_VERIFY_BELOW: usize = 14;

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Number of triples with exactly two points in `X` when `|X| = a`.
pub fn consistent_triples(n: usize, a: usize) -> u64 {
    binom2(a) as u64 * (n - a) as u64
}

/// `max_a C(a,2)(n-a)` and the smallest maximizing `a`.
pub fn b3(n: usize) -> Result<(u64, usize)> {
    if n < 3 {
        return invalid(format!("b3 needs n >= 3, got {n}"));
    }
    let mut best = (0, 0);
    for a in 0..=n {
        let v = consistent_triples(n, a);
        if v > best.0 {
            best = (v, a);
        }
    }
    Ok(best)
}

/// All triples with exactly two points in `X = {0..a-1}`.
pub fn complete_semibipartite(n: usize, a: usize) -> Result<TripleSystem> {
    let mut h = TripleSystem::empty(n)?;
    for y in a..n {
        for u in 0..a {
            for v in u + 1..a {
                h.insert(u, v, y)?;
            }
        }
    }
    Ok(h)
}

/// The edge-maximum semi-bipartite system with its defining partition.
pub fn build_b3(n: usize) -> Result<(TripleSystem, OrderedPartition)> {
    let (_, a) = b3(n)?;
    Ok((complete_semibipartite(n, a)?, OrderedPartition::prefix(n, a)?))
}

/// Ingredients of the family `F ∪ G'`: `F` is every triple inside the special
/// 4-set `{0, 1, n-2, n-1}`; `G` is every triple with two points in
/// `X = {0..t-1}` and at most one point in the special set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NsFamilyBase {
    pub n: usize,
    pub t: usize,
    pub special: [usize; 4],
    pub f_edges: Vec<[usize; 3]>,
    pub g_edges: Vec<[usize; 3]>,
    /// `C(t,2)(n-t)`.
    pub s: u64,
}

impl NsFamilyBase {
    /// `s - (n - t + 4(t-2) + 2)`, the closed form quoted for `|G|`.
    pub fn quoted_pool_size(&self) -> i64 {
        let (n, t) = (self.n as i64, self.t as i64);
        self.s as i64 - (n - t + 4 * (t - 2) + 2)
    }

    /// `s - (n - t) - 4(t - 2)`: the consistent triples through both of `0, 1`
    /// (`n - t` of them) or through one of `0, 1` and one of `n-2, n-1`
    /// (`4(t-2)`) are exactly the ones excluded from `G`.
    pub fn exclusion_pool_size(&self) -> i64 {
        let (n, t) = (self.n as i64, self.t as i64);
        self.s as i64 - (n - t) - 4 * (t - 2)
    }

    pub fn partition(&self) -> OrderedPartition {
        OrderedPartition::prefix(self.n, self.t).expect("t <= n")
    }

    pub fn f_system(&self) -> TripleSystem {
        TripleSystem::from_triples(self.n, self.f_edges.iter().copied()).expect("valid triples")
    }
}

/// `t(n)`: the smallest `t >= n - t` maximizing `C(t,2)(n-t)`.
pub fn ns_class_size(n: usize) -> usize {
    let mut best = (0, n);
    for t in n.div_ceil(2)..=n {
        let v = consistent_triples(n, t);
        if v > best.0 {
            best = (v, t);
        }
    }
    best.1
}

pub fn ns_family_base(n: usize) -> Result<NsFamilyBase> {
    if n < 9 {
        return invalid(format!("the non-semi-bipartite family needs n >= 9, got {n}"));
    }
    crate::hypergraph::check_vertex_count(n)?;
    let t = ns_class_size(n);
    let special = [0, 1, n - 2, n - 1];
    let special_set = VertexSet::from_vertices(special);
    let x = VertexSet::full(t);
    let f_edges = vec![
        [special[0], special[1], special[2]],
        [special[0], special[1], special[3]],
        [special[0], special[2], special[3]],
        [special[1], special[2], special[3]],
    ];
    let g_edges: Vec<[usize; 3]> = TripleSystem::complete(n)?
        .edges()
        .filter(|&e| {
            let e = VertexSet::from_vertices(e);
            e.intersection(x).len() == 2 && e.intersection(special_set).len() <= 1
        })
        .collect();
    Ok(NsFamilyBase { n, t, special, f_edges, g_edges, s: consistent_triples(n, t) })
}

/// Which part of the `G` pool to keep.
#[derive(Clone, Debug)]
pub enum PoolSelection {
    /// Each pool triple kept independently with probability 1/2.
    Seed(u64),
    /// One flag per pool triple, in pool order.
    Mask(Vec<bool>),
}

pub fn ns_sample(base: &NsFamilyBase, selection: &PoolSelection) -> Result<TripleSystem> {
    ns_sample_checked(base, selection, base.n < NS_VERIFY_BELOW)
}

/// Builds `F ∪ G'`; with `verify`, re-checks that the result has independent
/// neighborhoods and is not semi-bipartite.
pub fn ns_sample_checked(base: &NsFamilyBase, selection: &PoolSelection, verify: bool) -> Result<TripleSystem> {
    let keep: Vec<bool> = match selection {
        PoolSelection::Seed(seed) => {
            let mut r = rng(*seed);
            base.g_edges.iter().map(|_| r.gen_bool(0.5)).collect()
        }
        PoolSelection::Mask(m) => {
            if m.len() != base.g_edges.len() {
                return invalid(format!("selection mask has {} flags, pool has {}", m.len(), base.g_edges.len()));
            }
            m.clone()
        }
    };
    let chosen = base.g_edges.iter().zip(&keep).filter(|(_, &k)| k).map(|(e, _)| *e);
    let h = TripleSystem::from_triples(base.n, base.f_edges.iter().copied().chain(chosen))?;
    if verify {
        if !has_independent_neighborhoods(&h) {
            return Err(Error::Invariant(format!("sample contains T5: {h}")));
        }
        if is_semibipartite(&h)?.is_some() {
            return Err(Error::Invariant(format!("sample is semi-bipartite: {h}")));
        }
    }
    Ok(h)
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return invalid(format!("probability {p} is not in [0,1]"));
    }
    Ok(())
}

/// Each consistent triple of `X = {0..a-1}` kept independently with probability `p`.
pub fn random_semibipartite(n: usize, a: usize, p: f64, seed: u64) -> Result<TripleSystem> {
    if a < 2 || a + 1 > n {
        return invalid(format!("X size {a} outside 2..={}", n.saturating_sub(1)));
    }
    check_probability(p)?;
    let full = complete_semibipartite(n, a)?;
    let mut r = rng(seed);
    Ok(full.filter_edges(|_| r.gen_bool(p)))
}

/// Each of the `C(n,3)` triples kept independently with probability `p`.
pub fn random_triple_system(n: usize, p: f64, seed: u64) -> Result<TripleSystem> {
    check_probability(p)?;
    let full = TripleSystem::complete(n)?;
    let mut r = rng(seed);
    Ok(full.filter_edges(|_| r.gen_bool(p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detection::{contains_t5, optimal_partitions};

    fn brute_b3(n: usize) -> (u64, usize) {
        (2..n).map(|a| (consistent_triples(n, a), a)).fold((0, 0), |best, c| if c.0 > best.0 { c } else { best })
    }

    #[test]
    fn b3_examples() {
        assert_eq!(b3(3).unwrap(), (1, 2));
        assert_eq!(b3(4).unwrap(), (3, 3));
        assert_eq!(b3(6).unwrap(), (12, 4));
        assert_eq!(b3(9).unwrap(), (45, 6));
        assert!(b3(2).is_err());
        for n in 3..200 {
            assert_eq!(b3(n).unwrap(), brute_b3(n));
        }
    }

    #[test]
    fn build_b3_examples() {
        for (n, edges) in [(3, 1), (4, 3), (6, 12)] {
            let (h, p) = build_b3(n).unwrap();
            assert_eq!(h.edge_count(), edges);
            assert_eq!(h.classify_edges(&p).unwrap().d_p, 0);
        }
        let (h6, _) = build_b3(6).unwrap();
        assert_eq!(optimal_partitions(&h6, 8).unwrap().d_h, 0);
    }

    #[test]
    fn family_base_small_cases() {
        let b9 = ns_family_base(9).unwrap();
        assert_eq!((b9.t, b9.s), (6, 45));
        assert_eq!(b9.quoted_pool_size(), 24);
        assert_eq!(b9.g_edges.len(), 26);
        assert_eq!(b9.exclusion_pool_size(), 26);
        let b12 = ns_family_base(12).unwrap();
        assert_eq!((b12.t, b12.s), (8, 112));
        assert_eq!(b12.quoted_pool_size(), 82);
        assert_eq!(b12.g_edges.len(), 84);
        assert!(ns_family_base(8).is_err());
    }

    #[test]
    fn family_base_invariants() {
        for n in 9..=40 {
            let b = ns_family_base(n).unwrap();
            let special = VertexSet::from_vertices(b.special);
            let p = b.partition();
            for &e in &b.f_edges {
                assert!(VertexSet::from_vertices(e).is_subset(special));
            }
            for &e in &b.g_edges {
                let e = VertexSet::from_vertices(e);
                assert_eq!(p.x_points(e), 2);
                assert!(e.intersection(special).len() <= 1);
            }
            assert!(b.t >= n - b.t);
            assert!((b.g_edges.len() as i64) >= b.s as i64 - 3 * n as i64);
        }
    }

    #[test]
    fn pure_f_is_t5_free_and_not_semibipartite() {
        let b = ns_family_base(9).unwrap();
        let f = ns_sample(&b, &PoolSelection::Mask(vec![false; b.g_edges.len()])).unwrap();
        assert_eq!(f.edge_count(), 4);
        assert!(!contains_t5(&f));
        assert_eq!(is_semibipartite(&f).unwrap(), None);
    }

    #[test]
    fn full_pool_at_nine() {
        let b = ns_family_base(9).unwrap();
        let h = ns_sample(&b, &PoolSelection::Mask(vec![true; b.g_edges.len()])).unwrap();
        assert_eq!(h.edge_count(), 4 + 26);
        assert!(!contains_t5(&h));
        assert!(ns_sample(&b, &PoolSelection::Mask(vec![true; 3])).is_err());
    }

    #[test]
    fn random_samplers_extremes_and_determinism() {
        assert!(random_triple_system(6, 0.0, 1).unwrap().is_empty());
        assert_eq!(random_triple_system(6, 1.0, 1).unwrap(), TripleSystem::complete(6).unwrap());
        assert_eq!(random_triple_system(5, 0.5, 42).unwrap(), random_triple_system(5, 0.5, 42).unwrap());
        assert!(random_triple_system(5, 1.5, 0).is_err());

        assert!(random_semibipartite(9, 6, 0.0, 3).unwrap().is_empty());
        assert_eq!(random_semibipartite(9, 6, 1.0, 3).unwrap(), complete_semibipartite(9, 6).unwrap());
        assert!(random_semibipartite(9, 1, 0.5, 3).is_err());
        assert!(random_semibipartite(9, 9, 0.5, 3).is_err());
    }

    #[test]
    fn random_semibipartite_concentration() {
        // s = 45; the window s/2 ± 3√s should hold in ≥ 99% of seeds.
        let s = 45.0f64;
        let (lo, hi) = (s / 2.0 - 3.0 * s.sqrt(), s / 2.0 + 3.0 * s.sqrt());
        let inside = (0..1000)
            .filter(|&seed| {
                let m = random_semibipartite(9, 6, 0.5, seed).unwrap().edge_count() as f64;
                (lo..=hi).contains(&m)
            })
            .count();
        assert!(inside >= 990, "{inside}/1000");
    }
}
