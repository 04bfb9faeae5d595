use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::hypergraph::{OrderedPartition, TripleSystem};

/// An edge `{x, y, z}` with `x ∈ X`, `y, z ∈ Y` whose larger restricted link
/// `|N(x,·) ∩ X|` exceeds `α·n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RichEdge {
    pub edge: [usize; 3],
    pub x: usize,
    /// Endpoint in `Y` with the smaller restricted link; the smaller label on ties.
    pub poor: usize,
    pub other: usize,
    pub poor_link: usize,
    pub other_link: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RichEdgeReport {
    pub rich_edges: Vec<RichEdge>,
    pub alpha: f64,
}

pub fn rich_edges(h: &TripleSystem, p: &OrderedPartition, alpha: f64) -> Result<RichEdgeReport> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return invalid(format!("alpha = {alpha} is not in (0,1)"));
    }
    if p.n() != h.n() {
        return invalid("partition and system have different vertex counts");
    }
    let threshold = alpha * h.n() as f64;
    let mut found = Vec::new();
    for edge in h.edges() {
        let in_x: Vec<usize> = edge.iter().copied().filter(|&v| p.in_x(v)).collect();
        let [x] = in_x[..] else { continue };
        let mut ys = edge.iter().copied().filter(|&v| v != x);
        let (y, z) = (ys.next().expect("two Y points"), ys.next().expect("two Y points"));
        let ly = h.neighborhood_unchecked(x, y).intersection(p.x()).len();
        let lz = h.neighborhood_unchecked(x, z).intersection(p.x()).len();
        if (ly.max(lz) as f64) <= threshold {
            continue;
        }
        // y < z, so a tie makes y poor.
        let (poor, other, poor_link, other_link) = if lz > ly { (y, z, ly, lz) } else if ly > lz { (z, y, lz, ly) } else { (y, z, ly, lz) };
        found.push(RichEdge { edge, x, poor, other, poor_link, other_link });
    }
    Ok(RichEdgeReport { rich_edges: found, alpha })
}

/// Removes every edge that contains a pair of the shadow graph of `p`.
pub fn semibipartite_core(h: &TripleSystem, p: &OrderedPartition) -> Result<TripleSystem> {
    let shadow = h.shadow_graph(p)?;
    if shadow.is_empty() {
        return Ok(h.clone());
    }
    Ok(h.filter_edges(|[a, b, c]| {
        !(shadow.contains(a, b) || shadow.contains(a, c) || shadow.contains(b, c))
    }))
}
