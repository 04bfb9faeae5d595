use serde::{Deserialize, Serialize};

use crate::hypergraph::TripleSystem;

/// A copy of T5: the pair `{u,v}` and an edge `{a,b,c}` inside its neighborhood.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct T5Witness {
    pub pair: [usize; 2],
    pub edge: [usize; 3],
    /// `uva, uvb, uvc, abc`, each sorted.
    pub edges: [[usize; 3]; 4],
}

impl T5Witness {
    pub fn vertices(&self) -> [usize; 5] {
        let [u, v] = self.pair;
        let [a, b, c] = self.edge;
        [u, v, a, b, c]
    }

    /// Whether all four edges are present in `h`.
    pub fn is_valid_in(&self, h: &TripleSystem) -> bool {
        let mut vs = self.vertices();
        vs.sort_unstable();
        vs.windows(2).all(|w| w[0] != w[1])
            && vs[4] < h.n()
            && self.edges.iter().all(|&[a, b, c]| h.contains(a, b, c))
    }
}

fn sorted(mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    t
}

/// Searches for an edge `abc` and a disjoint pair `uv` with `uva, uvb, uvc` all
/// edges. Edges are scanned in colex order, pairs in lexicographic order.
pub fn find_t5(h: &TripleSystem) -> Option<T5Witness> {
    let n = h.n();
    for edge in h.edges() {
        let [a, b, c] = edge;
        for u in 0..n {
            if u == a || u == b || u == c {
                continue;
            }
            for v in u + 1..n {
                if v == a || v == b || v == c {
                    continue;
                }
                if h.contains(u, v, a) && h.contains(u, v, b) && h.contains(u, v, c) {
                    return Some(T5Witness {
                        pair: [u, v],
                        edge,
                        edges: [sorted([u, v, a]), sorted([u, v, b]), sorted([u, v, c]), edge],
                    });
                }
            }
        }
    }
    None
}

pub fn contains_t5(h: &TripleSystem) -> bool {
    find_t5(h).is_some()
}

/// For every pair `uv`, no edge lies inside `N(u,v)`. Scans pairs and the
/// triples inside each neighborhood, independently of [`find_t5`].
pub fn has_independent_neighborhoods(h: &TripleSystem) -> bool {
    let n = h.n();
    for u in 0..n {
        for v in u + 1..n {
            let nb = h.neighborhood_unchecked(u, v);
            if nb.len() < 3 {
                continue;
            }
            let members: Vec<usize> = nb.iter().collect();
            for (i, &a) in members.iter().enumerate() {
                for (j, &b) in members.iter().enumerate().skip(i + 1) {
                    for &c in &members[j + 1..] {
                        if h.contains(a, b, c) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}
