use std::fmt;

use serde::{Deserialize, Serialize};

use super::{check_vertex_count, PairGraph, TripleSystem};
use crate::bits::{Bits, VertexSet};
use crate::error::{invalid, Result};

/// An ordered bipartition `(X, Y)` of `{0..n-1}`, stored as the mask of `X`.
/// Either side may be empty.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrderedPartition {
    n: usize,
    x: VertexSet,
}

impl OrderedPartition {
    pub fn new(n: usize, x: VertexSet) -> Result<Self> {
        check_vertex_count(n)?;
        if !x.is_subset(VertexSet::full(n)) {
            return invalid(format!("X = {x:?} is not a subset of 0..{n}"));
        }
        Ok(OrderedPartition { n, x })
    }

    pub fn from_x<I: IntoIterator<Item = usize>>(n: usize, x: I) -> Result<Self> {
        let mut set = VertexSet::EMPTY;
        for v in x {
            if v >= n {
                return invalid(format!("vertex {v} >= n={n}"));
            }
            set.insert(v);
        }
        Self::new(n, set)
    }

    /// Partition with `X = {0..a-1}`.
    pub fn prefix(n: usize, a: usize) -> Result<Self> {
        if a > n {
            return invalid(format!("prefix size {a} exceeds n={n}"));
        }
        Self::new(n, VertexSet::full(a))
    }

    pub(crate) fn from_raw(n: usize, x_mask: u64) -> Self {
        debug_assert!(VertexSet(x_mask).is_subset(VertexSet::full(n)));
        OrderedPartition { n, x: VertexSet(x_mask) }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn x(&self) -> VertexSet {
        self.x
    }

    #[inline]
    pub fn y(&self) -> VertexSet {
        self.x.complement(self.n)
    }

    #[inline]
    pub fn in_x(&self, v: usize) -> bool {
        self.x.contains(v)
    }

    /// `|e ∩ X|` for an edge given as a vertex set.
    #[inline]
    pub fn x_points(&self, e: VertexSet) -> usize {
        e.intersection(self.x).len()
    }

    /// An edge is consistent with the partition iff it has exactly two points in `X`.
    #[inline]
    pub fn is_consistent(&self, e: VertexSet) -> bool {
        self.x_points(e) == 2
    }

    pub fn relabel(&self, perm: &[usize]) -> OrderedPartition {
        OrderedPartition { n: self.n, x: self.x.iter().map(|v| perm[v]).collect() }
    }
}

impl fmt::Debug for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X={:?} Y={:?}", self.x, self.y())
    }
}

/// Which sides of a partition the two non-pivot vertices of a link pair lie on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Sides {
    XX,
    XY,
    YY,
}

impl Sides {
    pub const ALL: [Sides; 3] = [Sides::XX, Sides::XY, Sides::YY];

    fn admits(self, p: &OrderedPartition, u: usize, v: usize) -> bool {
        let k = usize::from(p.in_x(u)) + usize::from(p.in_x(v));
        matches!((self, k), (Sides::XX, 2) | (Sides::XY, 1) | (Sides::YY, 0))
    }
}

/// Split of a system's edges into those consistent and inconsistent with a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassification {
    pub consistent: TripleSystem,
    pub inconsistent: TripleSystem,
    /// Number of inconsistent edges.
    pub d_p: usize,
}

impl TripleSystem {
    fn check_partition(&self, p: &OrderedPartition) -> Result<()> {
        if p.n() != self.n() {
            return invalid(format!("partition has n={} but system has n={}", p.n(), self.n()));
        }
        Ok(())
    }

    pub fn classify_edges(&self, p: &OrderedPartition) -> Result<EdgeClassification> {
        self.check_partition(p)?;
        let len = self.mask().len();
        let (mut good, mut bad) = (Bits::new(len), Bits::new(len));
        for r in self.mask().ones() {
            let e = VertexSet::from_vertices(super::triple_unrank(r));
            if p.is_consistent(e) {
                good.set(r);
            } else {
                bad.set(r);
            }
        }
        let d_p = bad.count_ones();
        Ok(EdgeClassification {
            consistent: TripleSystem::from_bits(self.n(), good),
            inconsistent: TripleSystem::from_bits(self.n(), bad),
            d_p,
        })
    }

    /// Number of edges with `|e ∩ X| != 2`.
    pub fn inconsistent_count(&self, p: &OrderedPartition) -> Result<usize> {
        self.check_partition(p)?;
        Ok(self.edge_sets().filter(|&e| !p.is_consistent(e)).count())
    }

    /// Pairs `{u,v}` with `{x,u,v}` an edge and `u, v` on the requested sides.
    pub fn link(&self, x: usize, p: &OrderedPartition, sides: Sides) -> Result<PairGraph> {
        self.check_vertex(x)?;
        self.check_partition(p)?;
        let mut g = PairGraph::empty(self.n())?;
        for [a, b, c] in self.edges() {
            let (u, v) = if a == x {
                (b, c)
            } else if b == x {
                (a, c)
            } else if c == x {
                (a, b)
            } else {
                continue;
            };
            if sides.admits(p, u, v) {
                g.insert(u, v)?;
            }
        }
        Ok(g)
    }

    /// Union over `y ∈ Y` of the `XY` link graphs of `y`: every pair `{x, y'}`
    /// (x ∈ X, y' ∈ Y) lying in an edge with exactly one point in `X`.
    pub fn shadow_graph(&self, p: &OrderedPartition) -> Result<PairGraph> {
        self.check_partition(p)?;
        let mut g = PairGraph::empty(self.n())?;
        for e in self.edge_sets() {
            if p.x_points(e) != 1 {
                continue;
            }
            let x = e.intersection(p.x()).iter().next().expect("one X point");
            for y in e.difference(p.x()) {
                g.insert(x, y)?;
            }
        }
        Ok(g)
    }
}
