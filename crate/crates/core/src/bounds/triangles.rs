use rand::Rng;

use crate::bits::VertexSet;
use crate::constructions::rng;
use crate::error::{invalid, Result};
use crate::hypergraph::PairGraph;

/// Tripartite graph on parts `A`, `B`, `C` of `m` vertices each, stored as
/// one bit row per vertex for each of the three bipartite layers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripartiteCylinder {
    m: usize,
    words: usize,
    /// `ab[a]` holds the neighbors of `a` in `B`; likewise `ac[a]`, `bc[b]`.
    ab: Vec<u64>,
    ac: Vec<u64>,
    bc: Vec<u64>,
}

impl TripartiteCylinder {
    pub fn empty(m: usize) -> Self {
        let words = m.div_ceil(64);
        TripartiteCylinder { m, words, ab: vec![0; m * words], ac: vec![0; m * words], bc: vec![0; m * words] }
    }

    /// Every cross pair present independently with probability `density`.
    pub fn random(m: usize, density: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&density) {
            return invalid(format!("density {density} is not in [0,1]"));
        }
        let mut g = Self::empty(m);
        let mut rng = rng(seed);
        for layer in 0..3 {
            for i in 0..m {
                for j in 0..m {
                    if rng.gen_bool(density) {
                        g.set(layer, i, j);
                    }
                }
            }
        }
        Ok(g)
    }

    /// Splits `g` along three disjoint equal-size parts; each part's
    /// vertices are indexed in increasing order.
    pub fn from_pair_graph(parts: [VertexSet; 3], g: &PairGraph) -> Result<Self> {
        let m = parts[0].len();
        if parts.iter().any(|p| p.len() != m) {
            return invalid("tripartite parts must have equal sizes");
        }
        if !parts[0].intersection(parts[1]).is_empty()
            || !parts[0].intersection(parts[2]).is_empty()
            || !parts[1].intersection(parts[2]).is_empty()
        {
            return invalid("tripartite parts must be disjoint");
        }
        let locate = |v: usize| -> Option<(usize, usize)> {
            parts.iter().enumerate().find(|(_, p)| p.contains(v)).map(|(k, p)| (k, p.iter().take_while(|&w| w < v).count()))
        };
        let mut out = Self::empty(m);
        for [u, v] in g.pairs() {
            let (Some((pu, iu)), Some((pv, iv))) = (locate(u), locate(v)) else {
                return invalid(format!("edge {u}{v} leaves the three parts"));
            };
            match (pu, pv) {
                (x, y) if x == y => return invalid(format!("edge {u}{v} lies inside part {x}")),
                (0, 1) => out.set(0, iu, iv),
                (1, 0) => out.set(0, iv, iu),
                (0, 2) => out.set(1, iu, iv),
                (2, 0) => out.set(1, iv, iu),
                (1, 2) => out.set(2, iu, iv),
                _ => out.set(2, iv, iu),
            }
        }
        Ok(out)
    }

    pub fn part_size(&self) -> usize {
        self.m
    }

    fn set(&mut self, layer: usize, i: usize, j: usize) {
        let rows = match layer {
            0 => &mut self.ab,
            1 => &mut self.ac,
            _ => &mut self.bc,
        };
        rows[i * self.words + j / 64] |= 1 << (j % 64);
    }

    fn row(rows: &[u64], words: usize, i: usize) -> &[u64] {
        &rows[i * words..(i + 1) * words]
    }

    pub fn has_edge_ab(&self, a: usize, b: usize) -> bool {
        Self::row(&self.ab, self.words, a)[b / 64] >> (b % 64) & 1 == 1
    }

    pub fn has_edge_ac(&self, a: usize, c: usize) -> bool {
        Self::row(&self.ac, self.words, a)[c / 64] >> (c % 64) & 1 == 1
    }

    pub fn has_edge_bc(&self, b: usize, c: usize) -> bool {
        Self::row(&self.bc, self.words, b)[c / 64] >> (c % 64) & 1 == 1
    }

    /// Triangles `abc`: for each edge `ab`, the size of `N_C(a) ∩ N_C(b)`.
    pub fn triangle_count(&self) -> u64 {
        let w = self.words;
        let mut total = 0u64;
        for a in 0..self.m {
            let ac = Self::row(&self.ac, w, a);
            for (k, &word) in Self::row(&self.ab, w, a).iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let b = k * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let bc = Self::row(&self.bc, w, b);
                    total += ac.iter().zip(bc).map(|(x, y)| (x & y).count_ones() as u64).sum::<u64>();
                }
            }
        }
        total
    }
}

pub fn triangle_count_tripartite(parts: [VertexSet; 3], g: &PairGraph) -> Result<u64> {
    Ok(TripartiteCylinder::from_pair_graph(parts, g)?.triangle_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive(g: &TripartiteCylinder) -> u64 {
        let m = g.part_size();
        let mut t = 0;
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    t += u64::from(g.has_edge_ab(a, b) && g.has_edge_ac(a, c) && g.has_edge_bc(b, c));
                }
            }
        }
        t
    }

    fn parts(m: usize) -> [VertexSet; 3] {
        [0, 1, 2].map(|k| VertexSet::from_vertices(k * m..(k + 1) * m))
    }

    #[test]
    fn complete_and_empty() {
        let m = 4;
        let mut g = PairGraph::empty(3 * m).unwrap();
        for u in 0..3 * m {
            for v in u + 1..3 * m {
                if u / m != v / m {
                    g.insert(u, v).unwrap();
                }
            }
        }
        assert_eq!(triangle_count_tripartite(parts(m), &g).unwrap(), 64);
        assert_eq!(triangle_count_tripartite(parts(m), &PairGraph::empty(12).unwrap()).unwrap(), 0);
        assert_eq!(TripartiteCylinder::empty(100).triangle_count(), 0);
        let full = TripartiteCylinder::random(70, 1.0, 0).unwrap();
        assert_eq!(full.triangle_count(), 70 * 70 * 70);
    }

    #[test]
    fn bad_inputs() {
        let g = PairGraph::from_pairs(6, [[0, 1]]).unwrap();
        assert!(triangle_count_tripartite(parts(2), &g).is_err());
        let overlap = [VertexSet::from_vertices([0, 1]), VertexSet::from_vertices([1, 2]), VertexSet::from_vertices([4, 5])];
        assert!(triangle_count_tripartite(overlap, &PairGraph::empty(6).unwrap()).is_err());
        let g = PairGraph::from_pairs(7, [[0, 6]]).unwrap();
        assert!(triangle_count_tripartite(parts(2), &g).is_err());
    }

    proptest! {
        #[test]
        fn matches_naive(m in 1usize..=12, p in 0.0f64..1.0, seed: u64) {
            let g = TripartiteCylinder::random(m, p, seed).unwrap();
            prop_assert_eq!(g.triangle_count(), naive(&g));
        }

        #[test]
        fn pair_graph_route_matches(m in 1usize..=12, p in 0.0f64..1.0, seed: u64) {
            let n = 3 * m;
            let mut r = rng(seed);
            let mut g = PairGraph::empty(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if u / m != v / m && rand::Rng::gen_bool(&mut r, p) {
                        g.insert(u, v).unwrap();
                    }
                }
            }
            let cyl = TripartiteCylinder::from_pair_graph(parts(m), &g).unwrap();
            let mut t = 0u64;
            for a in 0..m { for b in m..2*m { for c in 2*m..n {
                t += u64::from(g.contains(a, b) && g.contains(a, c) && g.contains(b, c));
            }}}
            prop_assert_eq!(cyl.triangle_count(), t);
        }
    }
}
