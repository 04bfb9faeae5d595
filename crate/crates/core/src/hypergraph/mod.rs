//! Triple systems, ordered partitions and pair graphs.

mod index;
mod pairs;
mod partition;
mod text;

pub use index::{
    binom2, binom3, pair_index, pair_rank_sorted, pair_unrank, triple_index, triple_rank_sorted,
    triple_unrank,
};
pub use pairs::PairGraph;
pub use partition::{EdgeClassification, OrderedPartition, Sides};

use crate::bits::{Bits, VertexSet};
use crate::error::{invalid, Result};
use index::sort3;

pub const MIN_VERTICES: usize = 3;
pub const MAX_VERTICES: usize = 64;

pub fn check_vertex_count(n: usize) -> Result<()> {
    if !(MIN_VERTICES..=MAX_VERTICES).contains(&n) {
        return invalid(format!("vertex count {n} outside {MIN_VERTICES}..={MAX_VERTICES}"));
    }
    Ok(())
}

/// A labeled 3-uniform hypergraph on `{0..n-1}`, stored as a membership
/// mask over all `C(n,3)` triples in colex order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TripleSystem {
    n: usize,
    edges: Bits,
}

impl TripleSystem {
    pub fn empty(n: usize) -> Result<Self> {
        check_vertex_count(n)?;
        Ok(TripleSystem { n, edges: Bits::new(binom3(n)) })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut h = Self::empty(n)?;
        for i in 0..binom3(n) {
            h.edges.set(i);
        }
        Ok(h)
    }

    pub fn from_triples<I>(n: usize, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = [usize; 3]>,
    {
        let mut h = Self::empty(n)?;
        for [a, b, c] in triples {
            h.insert(a, b, c)?;
        }
        Ok(h)
    }

    /// Wraps raw mask words (word 0 holds triple ranks 0..63).
    pub fn from_words(n: usize, words: Vec<u64>) -> Result<Self> {
        check_vertex_count(n)?;
        match Bits::from_words(binom3(n), words) {
            Some(edges) => Ok(TripleSystem { n, edges }),
            None => invalid(format!("edge mask does not fit C({n},3) = {} triples", binom3(n))),
        }
    }

    /// Single-word constructor used by the small-n sweeps (`n <= 7`).
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        Self::from_words(n, vec![mask])
    }

    pub(crate) fn from_bits(n: usize, edges: Bits) -> Self {
        debug_assert_eq!(edges.len(), binom3(n));
        TripleSystem { n, edges }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn mask(&self) -> &Bits {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.words().iter().all(|&w| w == 0)
    }

    /// Adds `{a,b,c}`; returns whether it was newly inserted.
    pub fn insert(&mut self, a: usize, b: usize, c: usize) -> Result<bool> {
        let i = triple_index(a, b, c, self.n)?;
        let fresh = !self.edges.get(i);
        self.edges.set(i);
        Ok(fresh)
    }

    pub fn remove(&mut self, a: usize, b: usize, c: usize) -> Result<bool> {
        let i = triple_index(a, b, c, self.n)?;
        let present = self.edges.get(i);
        self.edges.clear(i);
        Ok(present)
    }

    /// Membership test for three distinct in-range vertices, in any order.
    #[inline]
    pub fn contains(&self, a: usize, b: usize, c: usize) -> bool {
        debug_assert!(a != b && b != c && a != c);
        let (a, b, c) = sort3(a, b, c);
        c < self.n && self.edges.get(triple_rank_sorted(a, b, c))
    }

    #[inline]
    pub fn contains_index(&self, rank: usize) -> bool {
        rank < self.edges.len() && self.edges.get(rank)
    }

    /// Edges as sorted triples, in colex order.
    pub fn edges(&self) -> impl Iterator<Item = [usize; 3]> + '_ {
        self.edges.ones().map(triple_unrank)
    }

    pub fn edge_sets(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.edges().map(VertexSet::from_vertices)
    }

    pub fn is_subsystem_of(&self, other: &TripleSystem) -> bool {
        self.n == other.n && self.edges.is_subset(&other.edges)
    }

    /// `{ w : {u,v,w} is an edge }`.
    pub fn neighborhood(&self, u: usize, v: usize) -> Result<VertexSet> {
        self.check_pair(u, v)?;
        Ok(self.neighborhood_unchecked(u, v))
    }

    #[inline]
    pub(crate) fn neighborhood_unchecked(&self, u: usize, v: usize) -> VertexSet {
        let mut nb = VertexSet::EMPTY;
        for w in 0..self.n {
            if w != u && w != v && self.contains(u, v, w) {
                nb.insert(w);
            }
        }
        nb
    }

    /// `neighborhood(u, v) ∩ a`.
    pub fn pair_link_restricted(&self, u: usize, v: usize, a: VertexSet) -> Result<VertexSet> {
        Ok(self.neighborhood(u, v)?.intersection(a))
    }

    pub(crate) fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return invalid(format!("pair ({u},{v}) has repeated vertices"));
        }
        if u >= self.n || v >= self.n {
            return invalid(format!("pair ({u},{v}) has a vertex >= n={}", self.n));
        }
        Ok(())
    }

    pub(crate) fn check_vertex(&self, x: usize) -> Result<()> {
        if x >= self.n {
            return invalid(format!("vertex {x} >= n={}", self.n));
        }
        Ok(())
    }

    /// All edges whose smallest vertex is `v`, as vertex sets, bucketed by `v`.
    pub(crate) fn edges_by_min_vertex(&self) -> Vec<Vec<VertexSet>> {
        let mut by_min = vec![Vec::new(); self.n];
        for [a, b, c] in self.edges() {
            by_min[a].push(VertexSet::from_vertices([a, b, c]));
        }
        by_min
    }

    /// The subsystem consisting of edges for which `keep` holds.
    pub fn filter_edges(&self, mut keep: impl FnMut([usize; 3]) -> bool) -> TripleSystem {
        let mut bits = Bits::new(self.edges.len());
        for r in self.edges.ones() {
            if keep(triple_unrank(r)) {
                bits.set(r);
            }
        }
        TripleSystem::from_bits(self.n, bits)
    }

    /// Union of two systems on the same vertex set.
    pub fn union(&self, other: &TripleSystem) -> Result<TripleSystem> {
        if self.n != other.n {
            return invalid(format!("vertex counts differ: {} vs {}", self.n, other.n));
        }
        Ok(TripleSystem::from_bits(self.n, self.edges.or(&other.edges)))
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<TripleSystem> {
        if perm.len() != self.n || VertexSet::from_vertices(perm.iter().copied()) != self.vertices()
        {
            return invalid("relabeling is not a permutation of the vertex set");
        }
        TripleSystem::from_triples(self.n, self.edges().map(|[a, b, c]| [perm[a], perm[b], perm[c]]))
    }
}

impl std::fmt::Debug for TripleSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_list_form())
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::t5;
    use super::*;

    #[test]
    fn neighborhood_examples() {
        let h = t5();
        assert_eq!(h.neighborhood(0, 1).unwrap(), VertexSet::from_vertices([2, 3, 4]));
        assert_eq!(h.neighborhood(3, 4).unwrap(), VertexSet::from_vertices([2]));
        assert_eq!(h.neighborhood(2, 3).unwrap(), VertexSet::from_vertices([4]));
        let e = TripleSystem::empty(7).unwrap();
        assert!(e.neighborhood(1, 5).unwrap().is_empty());
        assert!(h.neighborhood(2, 2).is_err());
        assert!(h.neighborhood(0, 5).is_err());
    }

    #[test]
    fn t5_pair_34_scan() {
        // Scan of all triples containing {3,4}: only 234 is an edge.
        let h = t5();
        let brute: VertexSet =
            (0..5).filter(|&w| w != 3 && w != 4 && h.contains(3, 4, w)).collect();
        assert_eq!(h.neighborhood(3, 4).unwrap(), brute);
    }

    #[test]
    fn pair_link_restricted_examples() {
        let h = t5();
        let r = h.pair_link_restricted(0, 1, VertexSet::from_vertices([2, 3])).unwrap();
        assert_eq!(r, VertexSet::from_vertices([2, 3]));
        assert!(h.pair_link_restricted(0, 1, VertexSet::EMPTY).unwrap().is_empty());
        let full = h.pair_link_restricted(3, 4, h.vertices()).unwrap();
        assert_eq!(full, h.neighborhood(3, 4).unwrap());
        assert!(h.pair_link_restricted(1, 1, h.vertices()).is_err());
    }

    #[test]
    fn construction_and_counts() {
        let h = t5();
        assert_eq!(h.edge_count(), 4);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![[0, 1, 2], [0, 1, 3], [0, 1, 4], [2, 3, 4]]);
        assert!(TripleSystem::empty(2).is_err());
        assert!(TripleSystem::empty(65).is_err());
        assert_eq!(TripleSystem::complete(6).unwrap().edge_count(), 20);
        assert!(TripleSystem::from_mask(4, 1 << 4).is_err());
    }

    #[test]
    fn relabel_preserves_edge_count() {
        let h = t5();
        let g = h.relabel(&[4, 3, 2, 1, 0]).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert!(g.contains(4, 3, 2) && g.contains(2, 1, 0));
        assert!(h.relabel(&[0, 0, 1, 2, 3]).is_err());
    }
}
