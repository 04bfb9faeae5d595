use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::constructions::build_b3;
use crate::detection::has_independent_neighborhoods;
use crate::error::{Error, Result};
use crate::hypergraph::{binom3, check_vertex_count, pair_rank_sorted, triple_unrank, TripleSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremalBudget {
    pub nodes: u64,
    pub time: Option<Duration>,
}

impl Default for ExtremalBudget {
    fn default() -> Self {
        ExtremalBudget { nodes: 50_000_000, time: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalResult {
    pub n: usize,
    /// Edge count of the best T5-free system found.
    pub lower: usize,
    /// Proven upper bound on the maximum; equals `lower` when `completed`.
    pub upper: usize,
    pub completed: bool,
    pub nodes: u64,
    pub witness: TripleSystem,
}

struct Search {
    n: usize,
    triples: Vec<[usize; 3]>,
    /// `nbr[rank(u,v)]` is the current neighborhood of the pair.
    nbr: Vec<u64>,
    current: Vec<usize>,
    best: usize,
    best_edges: Vec<usize>,
    nodes: u64,
    budget: ExtremalBudget,
    started: Instant,
    aborted: bool,
    open_bound: usize,
}

#[inline]
fn pr(u: usize, v: usize) -> usize {
    if u < v {
        pair_rank_sorted(u, v)
    } else {
        pair_rank_sorted(v, u)
    }
}

impl Search {
    /// Would adding `e` create a T5 with the current edges?
    fn creates_t5(&self, [a, b, c]: [usize; 3]) -> bool {
        let e = (1u64 << a) | (1u64 << b) | (1u64 << c);
        // `e` as the edge inside N(u,v) of a disjoint pair.
        for u in 0..self.n {
            if e >> u & 1 == 1 {
                continue;
            }
            for v in u + 1..self.n {
                if e >> v & 1 == 0 && self.nbr[pr(u, v)] & e == e {
                    return true;
                }
            }
        }
        // `e = uvw` as one of the three edges through the pair uv.
        for (u, v, w) in [(a, b, c), (a, c, b), (b, c, a)] {
            let nuv = self.nbr[pr(u, v)];
            let mut rest = nuv;
            while rest != 0 {
                let p = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.nbr[pr(w, p)] & nuv != 0 {
                    return true;
                }
            }
        }
        false
    }

    fn toggle(&mut self, [a, b, c]: [usize; 3]) {
        self.nbr[pr(a, b)] ^= 1 << c;
        self.nbr[pr(a, c)] ^= 1 << b;
        self.nbr[pr(b, c)] ^= 1 << a;
    }

    fn out_of_budget(&mut self) -> bool {
        if self.aborted {
            return true;
        }
        if self.nodes > self.budget.nodes {
            self.aborted = true;
        } else if let Some(limit) = self.budget.time {
            if self.nodes.is_multiple_of(4096) && self.started.elapsed() > limit {
                self.aborted = true;
            }
        }
        self.aborted
    }

    fn dfs(&mut self, idx: usize) {
        self.nodes += 1;
        let count = self.current.len();
        let remaining = self.triples.len() - idx;
        if count + remaining <= self.best {
            return;
        }
        if self.out_of_budget() {
            self.open_bound = self.open_bound.max(count + remaining);
            return;
        }
        if idx == self.triples.len() {
            self.best = count;
            self.best_edges = self.current.clone();
            return;
        }
        let e = self.triples[idx];
        if !self.creates_t5(e) {
            self.toggle(e);
            self.current.push(idx);
            self.dfs(idx + 1);
            self.current.pop();
            self.toggle(e);
        }
        self.dfs(idx + 1);
    }
}

/// Branch-and-bound over triples in colex order for the largest T5-free
/// system on `n` vertices, seeded with the complete semi-bipartite optimum.
/// When the budget runs out the result carries the best witness and the
/// largest bound over unexplored subtrees.
pub fn extremal_search(n: usize, budget: ExtremalBudget) -> Result<ExtremalResult> {
    check_vertex_count(n)?;
    let (seed, _) = build_b3(n)?;
    let total = binom3(n);
    let mut s = Search {
        n,
        triples: (0..total).map(triple_unrank).collect(),
        nbr: vec![0; n * (n - 1) / 2],
        current: Vec::new(),
        best: seed.edge_count(),
        best_edges: Vec::new(),
        nodes: 0,
        budget,
        started: Instant::now(),
        aborted: false,
        open_bound: 0,
    };
    s.dfs(0);
    let witness = if s.best_edges.is_empty() && s.best == seed.edge_count() {
        seed
    } else {
        TripleSystem::from_triples(n, s.best_edges.iter().map(|&i| s.triples[i]))?
    };
    if witness.edge_count() != s.best || !has_independent_neighborhoods(&witness) {
        return Err(Error::Invariant(format!("extremal witness at n={n} is not a T5-free system with {} edges", s.best)));
    }
    let upper = if s.aborted { s.best.max(s.open_bound).min(total) } else { s.best };
    Ok(ExtremalResult { n, lower: s.best, upper, completed: !s.aborted, nodes: s.nodes, witness })
}
