use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::index::{binom2, pair_index, pair_rank_sorted, pair_unrank};
use crate::bits::{Bits, VertexSet};
use crate::error::{invalid, Result};

/// A simple graph on `{0..n-1}` (`n <= 64`), stored as a membership mask
/// over all `C(n,2)` pairs in colex order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PairGraph {
    n: usize,
    pairs: Bits,
}

impl PairGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > 64 {
            return invalid(format!("pair graph vertex count {n} outside 1..=64"));
        }
        Ok(PairGraph { n, pairs: Bits::new(binom2(n)) })
    }

    pub fn from_pairs<I: IntoIterator<Item = [usize; 2]>>(n: usize, pairs: I) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for [u, v] in pairs {
            g.insert(u, v)?;
        }
        Ok(g)
    }

    pub fn from_words(n: usize, words: Vec<u64>) -> Result<Self> {
        Self::empty(n)?;
        match Bits::from_words(binom2(n), words) {
            Some(pairs) => Ok(PairGraph { n, pairs }),
            None => invalid(format!("pair mask does not fit C({n},2) pairs")),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mask(&self) -> &Bits {
        &self.pairs
    }

    pub fn insert(&mut self, u: usize, v: usize) -> Result<bool> {
        let i = pair_index(u, v, self.n)?;
        let fresh = !self.pairs.get(i);
        self.pairs.set(i);
        Ok(fresh)
    }

    #[inline]
    pub fn contains(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        self.pairs.get(pair_rank_sorted(u, v))
    }

    pub fn edge_count(&self) -> usize {
        self.pairs.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_count() == 0
    }

    /// Sorted pairs in colex order.
    pub fn pairs(&self) -> impl Iterator<Item = [usize; 2]> + '_ {
        self.pairs.ones().map(pair_unrank)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        (0..self.n).filter(|&u| self.contains(u, v)).collect()
    }

    /// Neighbor set of every vertex.
    pub fn adjacency(&self) -> Vec<VertexSet> {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for [u, v] in self.pairs() {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        adj
    }

    /// Whether the pairs are pairwise vertex-disjoint.
    pub fn is_matching(&self) -> bool {
        let mut covered = VertexSet::EMPTY;
        for [u, v] in self.pairs() {
            if covered.contains(u) || covered.contains(v) {
                return false;
            }
            covered.insert(u);
            covered.insert(v);
        }
        true
    }

    pub fn is_subgraph_of(&self, other: &PairGraph) -> bool {
        self.n == other.n && self.pairs.is_subset(&other.pairs)
    }

    pub fn union(&self, other: &PairGraph) -> PairGraph {
        debug_assert_eq!(self.n, other.n);
        PairGraph { n: self.n, pairs: self.pairs.or(&other.pairs) }
    }
}

impl std::fmt::Debug for PairGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PairGraph(n={}) ", self.n)?;
        f.debug_list().entries(self.pairs()).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct PairGraphRepr {
    n: usize,
    pairs: Vec<[usize; 2]>,
}

impl Serialize for PairGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PairGraphRepr { n: self.n, pairs: self.pairs().collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PairGraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PairGraphRepr::deserialize(d)?;
        PairGraph::from_pairs(repr.n, repr.pairs).map_err(serde::de::Error::custom)
    }
}
