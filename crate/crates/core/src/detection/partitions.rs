//! Exhaustive search over the `2^n` ordered partitions.
//!
//! Vertices are decided from `n-1` down to `0`, `Y` before `X`, so leaves are
//! visited in ascending order of the `X` mask. An edge is scored when its
//! smallest vertex is decided; a branch is cut as soon as its partial
//! inconsistency count exceeds the best complete count seen so far.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::hypergraph::{OrderedPartition, TripleSystem};

pub const DEFAULT_VERTEX_CAP: usize = 24;
pub const DEFAULT_WITNESS_CAP: usize = 64;

/// Below this many vertices the search runs on the calling thread.
const PARALLEL_THRESHOLD: usize = 14;
const SPLIT_BITS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    pub max_vertices: usize,
    pub witness_cap: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_vertices: DEFAULT_VERTEX_CAP, witness_cap: DEFAULT_WITNESS_CAP }
    }
}

impl SearchLimits {
    fn check(&self, h: &TripleSystem) -> Result<()> {
        if h.n() > self.max_vertices {
            return Err(Error::ResourceLimit(format!(
                "partition search over 2^{} partitions exceeds the cap of {} vertices",
                h.n(),
                self.max_vertices
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalPartitionResult {
    /// Minimum number of inconsistent edges over all ordered partitions.
    pub d_h: usize,
    /// Optimal partitions in ascending `X`-mask order, at most `witness_cap` of them.
    pub witnesses: Vec<OrderedPartition>,
    /// Exact number of optimal partitions.
    pub total_witnesses: u64,
}

impl OptimalPartitionResult {
    pub fn truncated(&self) -> bool {
        (self.witnesses.len() as u64) < self.total_witnesses
    }
}

struct Search {
    n: usize,
    by_min: Vec<Vec<VertexSet>>,
}

struct Leaves {
    best: usize,
    count: u64,
    witnesses: Vec<u64>,
}

impl Search {
    fn new(h: &TripleSystem) -> Self {
        Search { n: h.n(), by_min: h.edges_by_min_vertex() }
    }

    #[inline]
    fn score(&self, v: usize, x: u64) -> usize {
        self.by_min[v].iter().filter(|e| (e.0 & x).count_ones() != 2).count()
    }

    /// Inconsistent edges among those whose smallest vertex is `>= lo`,
    /// given the decisions in `x` for vertices `lo..n`.
    fn prefix_score(&self, lo: usize, x: u64) -> usize {
        (lo..self.n).map(|v| self.score(v, x)).sum()
    }

    /// Collects all leaves whose count is minimal within this subtree, pruning
    /// against `shared` (a global upper bound that only decreases).
    fn collect(&self, v: usize, x: u64, acc: usize, shared: &AtomicUsize, cap: usize, out: &mut Leaves) {
        if acc > out.best || acc > shared.load(Ordering::Relaxed) {
            return;
        }
        if v == 0 {
            if acc < out.best {
                out.best = acc;
                out.count = 0;
                out.witnesses.clear();
                shared.fetch_min(acc, Ordering::Relaxed);
            }
            out.count += 1;
            if out.witnesses.len() < cap {
                out.witnesses.push(x);
            }
            return;
        }
        let v = v - 1;
        for bit in [0u64, 1u64 << v] {
            let x2 = x | bit;
            self.collect(v, x2, acc + self.score(v, x2), shared, cap, out);
        }
    }

    /// First leaf (in ascending `X` order) with zero inconsistent edges.
    fn first_zero(&self, v: usize, x: u64) -> Option<u64> {
        if v == 0 {
            return Some(x);
        }
        let v = v - 1;
        for bit in [0u64, 1u64 << v] {
            let x2 = x | bit;
            if self.score(v, x2) == 0 {
                if let Some(found) = self.first_zero(v, x2) {
                    return Some(found);
                }
            }
        }
        None
    }

    /// Visits every leaf with exactly `target` inconsistent edges.
    fn visit_exact(&self, v: usize, x: u64, acc: usize, target: usize, f: &mut dyn FnMut(u64)) {
        if acc > target {
            return;
        }
        if v == 0 {
            if acc == target {
                f(x);
            }
            return;
        }
        let v = v - 1;
        for bit in [0u64, 1u64 << v] {
            let x2 = x | bit;
            self.visit_exact(v, x2, acc + self.score(v, x2), target, f);
        }
    }

    fn optimal(&self, edge_count: usize, cap: usize) -> (usize, u64, Vec<u64>) {
        let shared = AtomicUsize::new(edge_count);
        if self.n < PARALLEL_THRESHOLD {
            let mut out = Leaves { best: edge_count, count: 0, witnesses: Vec::new() };
            self.collect(self.n, 0, 0, &shared, cap, &mut out);
            return (out.best, out.count, out.witnesses);
        }
        let lo = self.n - SPLIT_BITS;
        let parts: Vec<Leaves> = (0..1u64 << SPLIT_BITS)
            .into_par_iter()
            .map(|prefix| {
                let x = prefix << lo;
                let mut out = Leaves { best: usize::MAX, count: 0, witnesses: Vec::new() };
                self.collect(lo, x, self.prefix_score(lo, x), &shared, cap, &mut out);
                out
            })
            .collect();
        let best = parts.iter().map(|p| p.best).min().unwrap_or(edge_count);
        let mut count = 0;
        let mut witnesses = Vec::new();
        for p in parts.into_iter().filter(|p| p.best == best) {
            count += p.count;
            witnesses.extend(p.witnesses.into_iter().take(cap.saturating_sub(witnesses.len())));
        }
        (best, count, witnesses)
    }
}

/// A partition with no inconsistent edge, if one exists.
pub fn is_semibipartite(h: &TripleSystem) -> Result<Option<OrderedPartition>> {
    is_semibipartite_within(h, &SearchLimits::default())
}

pub fn is_semibipartite_within(h: &TripleSystem, limits: &SearchLimits) -> Result<Option<OrderedPartition>> {
    limits.check(h)?;
    let search = Search::new(h);
    Ok(search.first_zero(h.n(), 0).map(|x| OrderedPartition::from_raw(h.n(), x)))
}

/// Exact minimum inconsistency `D_H` with the optimal partitions.
pub fn optimal_partitions(h: &TripleSystem, witness_cap: usize) -> Result<OptimalPartitionResult> {
    optimal_partitions_within(h, &SearchLimits { witness_cap, ..SearchLimits::default() })
}

pub fn optimal_partitions_within(h: &TripleSystem, limits: &SearchLimits) -> Result<OptimalPartitionResult> {
    limits.check(h)?;
    let search = Search::new(h);
    let (d_h, total_witnesses, masks) = search.optimal(h.edge_count(), limits.witness_cap);
    Ok(OptimalPartitionResult {
        d_h,
        witnesses: masks.into_iter().map(|x| OrderedPartition::from_raw(h.n(), x)).collect(),
        total_witnesses,
    })
}

/// Calls `f` on every optimal partition in ascending `X`-mask order and
/// returns `D_H`. No truncation.
pub fn for_each_optimal_partition(
    h: &TripleSystem,
    limits: &SearchLimits,
    mut f: impl FnMut(&OrderedPartition),
) -> Result<usize> {
    let d_h = optimal_partitions_within(h, &SearchLimits { witness_cap: 0, ..*limits })?.d_h;
    let search = Search::new(h);
    let n = h.n();
    search.visit_exact(n, 0, 0, d_h, &mut |x| f(&OrderedPartition::from_raw(n, x)));
    Ok(d_h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::fixtures::t5;

    /// Independent oracle: score every partition with `inconsistent_count`.
    fn brute(h: &TripleSystem) -> (usize, Vec<u64>) {
        let n = h.n();
        let scores: Vec<usize> = (0..1u64 << n)
            .map(|x| h.inconsistent_count(&OrderedPartition::from_raw(n, x)).unwrap())
            .collect();
        let best = *scores.iter().min().unwrap();
        let arg = (0..1u64 << n).filter(|&x| scores[x as usize] == best).collect();
        (best, arg)
    }

    #[test]
    fn t5_optimum() {
        let h = t5();
        let r = optimal_partitions(&h, 64).unwrap();
        assert_eq!(r.d_h, 1);
        let (best, arg) = brute(&h);
        assert_eq!(best, 1);
        assert_eq!(r.total_witnesses, arg.len() as u64);
        assert!(r.witnesses.contains(&OrderedPartition::from_x(5, [0, 1]).unwrap()));
        for w in &r.witnesses {
            assert_eq!(h.classify_edges(w).unwrap().d_p, r.d_h);
        }
        assert_eq!(is_semibipartite(&h).unwrap(), None);
    }

    #[test]
    fn complete_four_vertex_system() {
        let k4 = TripleSystem::complete(4).unwrap();
        let r = optimal_partitions(&k4, 64).unwrap();
        let (best, arg) = brute(&k4);
        assert_eq!(r.d_h, best);
        assert!(r.d_h >= 1);
        assert_eq!(r.witnesses.iter().map(|p| p.x().0).collect::<Vec<_>>(), arg);
        assert_eq!(is_semibipartite(&k4).unwrap(), None);
    }

    #[test]
    fn empty_system_counts_every_partition() {
        let e = TripleSystem::empty(10).unwrap();
        let r = optimal_partitions(&e, 64).unwrap();
        assert_eq!(r.d_h, 0);
        assert_eq!(r.total_witnesses, 1 << 10);
        assert_eq!(r.witnesses.len(), 64);
        assert!(r.truncated());
        assert_eq!(r.witnesses[0].x(), VertexSet::EMPTY);
        assert!(is_semibipartite(&e).unwrap().is_some());
    }

    #[test]
    fn parallel_split_matches_sequential_order() {
        // 15 vertices triggers the split; a near-empty system has many optima.
        let h = TripleSystem::from_triples(15, [[0, 1, 14], [2, 3, 13]]).unwrap();
        let r = optimal_partitions(&h, 500).unwrap();
        assert_eq!(r.d_h, 0);
        let mut seen = Vec::new();
        for_each_optimal_partition(&h, &SearchLimits::default(), |p| {
            if seen.len() < 500 {
                seen.push(*p)
            }
        })
        .unwrap();
        assert_eq!(r.witnesses, seen);
        let exact = (0..1u64 << 15)
            .filter(|&x| h.inconsistent_count(&OrderedPartition::from_raw(15, x)).unwrap() == 0)
            .count() as u64;
        assert_eq!(r.total_witnesses, exact);
    }

    #[test]
    fn vertex_cap_is_enforced() {
        let h = TripleSystem::empty(25).unwrap();
        assert!(matches!(is_semibipartite(&h), Err(Error::ResourceLimit(_))));
        assert!(matches!(optimal_partitions(&h, 1), Err(Error::ResourceLimit(_))));
        let loose = SearchLimits { max_vertices: 25, witness_cap: 1 };
        assert!(is_semibipartite_within(&h, &loose).unwrap().is_some());
    }
}
