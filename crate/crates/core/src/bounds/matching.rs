use rand::Rng;

use crate::bits::VertexSet;
use crate::constructions::rng;
use crate::error::Result;
use crate::hypergraph::PairGraph;

/// Maximal matching chosen greedily in colex pair order.
pub fn greedy_matching(g: &PairGraph) -> PairGraph {
    let mut used = VertexSet::EMPTY;
    let mut m = PairGraph::empty(g.n()).expect("same vertex count as g");
    for [u, v] in g.pairs() {
        if !used.contains(u) && !used.contains(v) {
            used.insert(u);
            used.insert(v);
            m.insert(u, v).expect("pair of g");
        }
    }
    m
}

/// `|M| >= |G| / (2n)` for the greedy matching `M`, compared as integers.
pub fn matching_size_bound_holds(g: &PairGraph) -> bool {
    greedy_matching(g).edge_count() * 2 * g.n() >= g.edge_count()
}

/// Each pair present independently with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<PairGraph> {
    let mut g = PairGraph::empty(n)?;
    let mut rng = rng(seed);
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.insert(u, v)?;
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn triangle_and_perfect_matching() {
        let tri = PairGraph::from_pairs(3, [[0, 1], [0, 2], [1, 2]]).unwrap();
        let m = greedy_matching(&tri);
        assert_eq!(m.edge_count(), 1);
        assert!(matching_size_bound_holds(&tri));

        let pm = PairGraph::from_pairs(8, [[0, 5], [1, 2], [3, 7], [4, 6]]).unwrap();
        assert_eq!(greedy_matching(&pm), pm);
    }

    proptest! {
        #[test]
        fn greedy_is_maximal_matching(n in 1usize..30, p in 0.0f64..1.0, seed: u64) {
            let g = random_graph(n, p, seed).unwrap();
            let m = greedy_matching(&g);
            prop_assert!(m.is_matching());
            prop_assert!(m.is_subgraph_of(&g));
            let covered: VertexSet = m.pairs().flatten().collect();
            for [u, v] in g.pairs() {
                prop_assert!(covered.contains(u) || covered.contains(v));
            }
            prop_assert!(matching_size_bound_holds(&g));
        }
    }
}
