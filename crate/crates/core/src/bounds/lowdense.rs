//! Lower-density conditions (i)-(v) for an ordered partition.
//!
//! Conditions (i) and (ii) quantify over all matchings and graphs, so they are
//! only ever attacked by witness search. Conditions (iii) and (iv) are exact
//! by subset enumeration when both sides have at most
//! [`EXACT_SIDE_LIMIT`] vertices. Condition (v) is always exact.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::constructions::rng;
use crate::error::{invalid, Result};
use crate::hypergraph::{OrderedPartition, TripleSystem};

pub const EXACT_SIDE_LIMIT: usize = 20;
pub const DEFAULT_SEARCH_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Effort {
    Exact,
    Adversarial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConditionStatus {
    #[serde(rename = "HOLDS-EXACT")]
    HoldsExact,
    #[serde(rename = "HOLDS-UNREFUTED")]
    HoldsUnrefuted,
    #[serde(rename = "VIOLATED")]
    Violated,
    #[serde(rename = "SKIPPED")]
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition")]
pub enum LowerDensityWitness {
    /// (i): matching `g1` in `X`, cross pairs `g2` written `[x, y]`.
    #[serde(rename = "i")]
    MatchingCross { g1: Vec<[usize; 2]>, g2: Vec<[usize; 2]>, count: u64 },
    /// (ii): graph `g1` in `X`, matching `g2` in `Y`.
    #[serde(rename = "ii")]
    GraphMatching { g1: Vec<[usize; 2]>, g2: Vec<[usize; 2]>, count: u64 },
    #[serde(rename = "iii")]
    Sets { a_x: VertexSet, a_y: VertexSet, count: u64 },
    /// (iv): `Y'` with the chosen `X_y` for each `y`.
    #[serde(rename = "iv")]
    Assignment { sets: Vec<(usize, VertexSet)>, count: u64 },
    #[serde(rename = "v")]
    YSize { y_len: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub status: ConditionStatus,
    pub witness: Option<LowerDensityWitness>,
    /// Exact mode was requested but the sides were too large.
    pub downgraded: bool,
    pub detail: String,
}

impl ConditionReport {
    fn new(status: ConditionStatus, detail: impl Into<String>) -> Self {
        ConditionReport { status, witness: None, downgraded: false, detail: detail.into() }
    }

    fn violated(witness: LowerDensityWitness, detail: impl Into<String>) -> Self {
        ConditionReport { status: ConditionStatus::Violated, witness: Some(witness), downgraded: false, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LowerDensityReport {
    pub mu: f64,
    pub effort: Effort,
    pub seed: u64,
    pub conditions: [ConditionReport; 5],
}

impl LowerDensityReport {
    pub fn statuses(&self) -> [ConditionStatus; 5] {
        self.conditions.each_ref().map(|c| c.status)
    }

    pub fn any_violated(&self) -> bool {
        self.conditions.iter().any(|c| c.status == ConditionStatus::Violated)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LowerDensityOptions {
    pub effort: Effort,
    pub seed: u64,
    pub restarts: usize,
    pub steps: usize,
}

impl Default for LowerDensityOptions {
    fn default() -> Self {
        LowerDensityOptions { effort: Effort::Exact, seed: DEFAULT_SEARCH_SEED, restarts: 16, steps: 400 }
    }
}

/// Smallest integer `k` with `k > t`.
fn min_size_gt(t: f64) -> usize {
    let mut k = t.max(0.0).floor() as usize;
    while k as f64 <= t {
        k += 1;
    }
    k
}

/// Smallest integer `k` with `k >= t`.
fn min_size_ge(t: f64) -> usize {
    let mut k = t.max(0.0).floor() as usize;
    while (k as f64) < t {
        k += 1;
    }
    k
}

fn pair_in(mask: u64, [u, v]: [usize; 2]) -> bool {
    mask >> u & 1 == 1 && mask >> v & 1 == 1
}

struct Ctx<'a> {
    h: &'a TripleSystem,
    n: usize,
    mu: f64,
    x: VertexSet,
    y: VertexSet,
    xs: Vec<usize>,
    ys: Vec<usize>,
}

impl<'a> Ctx<'a> {
    fn nbr(&self, u: usize, v: usize) -> u64 {
        self.h.neighborhood_unchecked(u, v).0
    }

    /// `link[y][x]`: vertices `x'` of `X` with `{x, x', y}` an edge.
    fn xx_links(&self) -> Vec<Vec<u64>> {
        self.ys
            .iter()
            .map(|&y| (0..self.n).map(|x| if self.x.contains(x) { self.nbr(x, y) & self.x.0 } else { 0 }).collect())
            .collect()
    }
}

fn edges_inside(link: &[u64], set: u64) -> u64 {
    VertexSet(set).iter().map(|x| (link[x] & set).count_ones() as u64).sum::<u64>() / 2
}

// ---- literal evaluation -------------------------------------------------

fn count_i(ctx: &Ctx, g1: &[[usize; 2]], g2: &[[usize; 2]]) -> u64 {
    let mut c = 0;
    for &[a, b] in g2 {
        let nab = ctx.nbr(a, b);
        c += g1.iter().filter(|&&uv| pair_in(nab, uv)).count() as u64;
    }
    c
}

fn count_ii(ctx: &Ctx, g1: &[[usize; 2]], g2: &[[usize; 2]]) -> u64 {
    let mut c = 0;
    for &[u, v] in g1 {
        let nuv = ctx.nbr(u, v);
        c += g2.iter().filter(|&&ab| pair_in(nuv, ab)).count() as u64;
    }
    c
}

fn is_matching_within(pairs: &[[usize; 2]], side: VertexSet) -> bool {
    let mut used = VertexSet::EMPTY;
    for &[u, v] in pairs {
        if u == v || !side.contains(u) || !side.contains(v) || used.contains(u) || used.contains(v) {
            return false;
        }
        used.insert(u);
        used.insert(v);
    }
    true
}

fn distinct_pairs(pairs: &[[usize; 2]]) -> bool {
    let mut seen: Vec<[usize; 2]> = pairs.iter().map(|&[u, v]| [u.min(v), u.max(v)]).collect();
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1]) && pairs.iter().all(|&[u, v]| u != v)
}

/// Re-evaluates a witness against the literal inequality of its condition.
pub fn witness_violates(h: &TripleSystem, p: &OrderedPartition, mu: f64, w: &LowerDensityWitness) -> Result<bool> {
    if p.n() != h.n() {
        return invalid("partition and system have different vertex counts");
    }
    let ctx = context(h, p, mu);
    let n = h.n() as f64;
    Ok(match w {
        LowerDensityWitness::MatchingCross { g1, g2, .. } => {
            let cross_ok = g2.iter().all(|&[a, b]| ctx.x.contains(a) && ctx.y.contains(b));
            is_matching_within(g1, ctx.x)
                && cross_ok
                && distinct_pairs(g2)
                && g1.len() as f64 > mu * n
                && g2.len() as f64 > mu * n * n
                && 72 * count_i(&ctx, g1, g2) as u128 <= (g1.len() * g2.len()) as u128
        }
        LowerDensityWitness::GraphMatching { g1, g2, .. } => {
            let inside_x = g1.iter().all(|&[u, v]| ctx.x.contains(u) && ctx.x.contains(v));
            inside_x
                && distinct_pairs(g1)
                && is_matching_within(g2, ctx.y)
                && g1.len() as f64 > mu * n * n
                && g2.len() as f64 > mu * n
                && 8 * count_ii(&ctx, g1, g2) as u128 <= (g1.len() * g2.len()) as u128
        }
        LowerDensityWitness::Sets { a_x, a_y, .. } => {
            let count = h
                .edge_sets()
                .filter(|e| e.intersection(*a_x).len() == 2 && e.intersection(*a_y).len() == 1)
                .count() as u128;
            a_x.is_subset(ctx.x)
                && a_y.is_subset(ctx.y)
                && a_x.len() as f64 >= mu * n
                && a_y.len() as f64 >= mu * n
                && 8 * count <= (a_x.len() * a_x.len() * a_y.len()) as u128
        }
        LowerDensityWitness::Assignment { sets, .. } => {
            let y_prime: VertexSet = sets.iter().map(|&(y, _)| y).collect();
            let well_formed = y_prime.len() == sets.len()
                && y_prime.is_subset(ctx.y)
                && sets.iter().all(|&(_, xy)| xy.is_subset(ctx.x) && xy.len() as f64 > 200.0 * mu * n);
            let count = h
                .edge_sets()
                .filter(|e| sets.iter().any(|&(y, xy)| e.contains(y) && e.intersection(xy).len() == 2))
                .count() as f64;
            well_formed && y_prime.len() as f64 >= 2.0 * mu * n && count <= 10000.0 * mu.powi(3) * n.powi(3)
        }
        LowerDensityWitness::YSize { y_len } => {
            *y_len == ctx.y.len() && (*y_len as f64 - n / 3.0).abs() >= mu * n
        }
    })
}

fn context<'a>(h: &'a TripleSystem, p: &OrderedPartition, mu: f64) -> Ctx<'a> {
    Ctx { h, n: h.n(), mu, x: p.x(), y: p.y(), xs: p.x().iter().collect(), ys: p.y().iter().collect() }
}

// ---- condition (v) ------------------------------------------------------

fn check_v(ctx: &Ctx) -> ConditionReport {
    let y_len = ctx.y.len();
    let gap = (y_len as f64 - ctx.n as f64 / 3.0).abs();
    let limit = ctx.mu * ctx.n as f64;
    let detail = format!("||Y| - n/3| = {gap:.6}, mu*n = {limit:.6}");
    if gap < limit {
        ConditionReport::new(ConditionStatus::HoldsExact, detail)
    } else {
        ConditionReport::violated(LowerDensityWitness::YSize { y_len }, detail)
    }
}

// ---- conditions (i) and (ii): witness search ---------------------------

fn random_matching(rng: &mut ChaCha8Rng, pool: &[usize], k: usize) -> Vec<[usize; 2]> {
    let mut v = pool.to_vec();
    v.shuffle(rng);
    v.chunks_exact(2).take(k).map(|c| [c[0].min(c[1]), c[0].max(c[1])]).collect()
}

/// Replaces one matching edge by a random pair on the vertices it frees.
fn perturb_matching(rng: &mut ChaCha8Rng, pool: &[usize], m: &mut [[usize; 2]]) {
    let i = rng.gen_range(0..m.len());
    let used: VertexSet = m.iter().enumerate().filter(|&(j, _)| j != i).flat_map(|(_, e)| *e).collect();
    let free: Vec<usize> = pool.iter().copied().filter(|&v| !used.contains(v)).collect();
    let picked: Vec<usize> = free.choose_multiple(rng, 2).copied().collect();
    m[i] = [picked[0].min(picked[1]), picked[0].max(picked[1])];
}

/// Smallest `k` weights with their items, ties broken by item order.
fn smallest<T: Copy>(mut items: Vec<(u64, T)>, k: usize) -> (u64, Vec<T>) {
    items.sort_by_key(|&(w, _)| w);
    items.truncate(k);
    (items.iter().map(|&(w, _)| w).sum(), items.into_iter().map(|(_, t)| t).collect())
}

struct MatchingSearch<'s> {
    pool: &'s [usize],
    k: usize,
    restarts: usize,
    steps: usize,
}

impl MatchingSearch<'_> {
    /// Local search minimizing `slack`; returns the first matching with
    /// `slack <= 0`, or the best slack seen.
    fn run<F>(&self, rng: &mut ChaCha8Rng, slack: F) -> std::result::Result<Vec<[usize; 2]>, i128>
    where
        F: Fn(&[[usize; 2]]) -> i128,
    {
        let mut best = i128::MAX;
        for _ in 0..self.restarts {
            let mut cur = random_matching(rng, self.pool, self.k);
            let mut s = slack(&cur);
            for _ in 0..self.steps {
                if s <= 0 {
                    return Ok(cur);
                }
                let mut next = cur.clone();
                perturb_matching(rng, self.pool, &mut next);
                let t = slack(&next);
                if t <= s {
                    cur = next;
                    s = t;
                }
            }
            if s <= 0 {
                return Ok(cur);
            }
            best = best.min(s);
        }
        Err(best)
    }
}

fn check_i(ctx: &Ctx, opts: &LowerDensityOptions, rng: &mut ChaCha8Rng) -> ConditionReport {
    let n = ctx.n as f64;
    let k1 = min_size_gt(ctx.mu * n);
    let k2 = min_size_gt(ctx.mu * n * n);
    if 2 * k1 > ctx.xs.len() || k2 > ctx.xs.len() * ctx.ys.len() {
        return ConditionReport::new(
            ConditionStatus::HoldsUnrefuted,
            format!("vacuous: needs a matching of {k1} pairs in X and {k2} cross pairs"),
        );
    }
    let cross: Vec<([usize; 2], u64)> =
        ctx.xs.iter().flat_map(|&a| ctx.ys.iter().map(move |&b| [a, b])).map(|ab| (ab, ctx.nbr(ab[0], ab[1]))).collect();
    let choose_g2 = |g1: &[[usize; 2]]| {
        let weighted = cross.iter().map(|&(ab, nab)| (g1.iter().filter(|&&uv| pair_in(nab, uv)).count() as u64, ab)).collect();
        smallest(weighted, k2)
    };
    let search = MatchingSearch { pool: &ctx.xs, k: k1, restarts: opts.restarts, steps: opts.steps };
    match search.run(rng, |g1| 72 * choose_g2(g1).0 as i128 - (k1 * k2) as i128) {
        Ok(g1) => {
            let (count, g2) = choose_g2(&g1);
            ConditionReport::violated(
                LowerDensityWitness::MatchingCross { g1, g2, count },
                format!("72*{count} <= {k1}*{k2}"),
            )
        }
        Err(best) => ConditionReport::new(
            ConditionStatus::HoldsUnrefuted,
            format!("no witness in {} restarts; smallest slack {best}", opts.restarts),
        ),
    }
}

fn check_ii(ctx: &Ctx, opts: &LowerDensityOptions, rng: &mut ChaCha8Rng) -> ConditionReport {
    let n = ctx.n as f64;
    let k1 = min_size_gt(ctx.mu * n * n);
    let k2 = min_size_gt(ctx.mu * n);
    let x_pairs: Vec<[usize; 2]> =
        ctx.xs.iter().enumerate().flat_map(|(i, &u)| ctx.xs[i + 1..].iter().map(move |&v| [u, v])).collect();
    if 2 * k2 > ctx.ys.len() || k1 > x_pairs.len() {
        return ConditionReport::new(
            ConditionStatus::HoldsUnrefuted,
            format!("vacuous: needs {k1} pairs in X and a matching of {k2} pairs in Y"),
        );
    }
    let nbrs: Vec<([usize; 2], u64)> = x_pairs.iter().map(|&uv| (uv, ctx.nbr(uv[0], uv[1]))).collect();
    let choose_g1 = |g2: &[[usize; 2]]| {
        let weighted = nbrs.iter().map(|&(uv, nuv)| (g2.iter().filter(|&&ab| pair_in(nuv, ab)).count() as u64, uv)).collect();
        smallest(weighted, k1)
    };
    let search = MatchingSearch { pool: &ctx.ys, k: k2, restarts: opts.restarts, steps: opts.steps };
    match search.run(rng, |g2| 8 * choose_g1(g2).0 as i128 - (k1 * k2) as i128) {
        Ok(g2) => {
            let (count, g1) = choose_g1(&g2);
            ConditionReport::violated(
                LowerDensityWitness::GraphMatching { g1, g2, count },
                format!("8*{count} <= {k1}*{k2}"),
            )
        }
        Err(best) => ConditionReport::new(
            ConditionStatus::HoldsUnrefuted,
            format!("no witness in {} restarts; smallest slack {best}", opts.restarts),
        ),
    }
}

// ---- condition (iii) ----------------------------------------------------

/// Best `A_Y` of size `ky` for a fixed `A_X`: the `ky` vertices of `Y` with
/// fewest link edges inside `A_X`. Returns `(slack, count, A_Y)` with
/// `slack = 8 count - |A_X|^2 ky`.
fn best_a_y(ctx: &Ctx, per_y: &[u64], a_x: u64, ky: usize) -> (i128, u64, VertexSet) {
    let (count, chosen) = smallest(per_y.iter().copied().zip(ctx.ys.iter().copied()).collect(), ky);
    let ax = a_x.count_ones() as i128;
    (8 * count as i128 - ax * ax * ky as i128, count, chosen.into_iter().collect())
}

fn check_iii(ctx: &Ctx, exact: bool, opts: &LowerDensityOptions, rng: &mut ChaCha8Rng) -> ConditionReport {
    let n = ctx.n as f64;
    let kx = min_size_ge(ctx.mu * n).max(1);
    let ky = min_size_ge(ctx.mu * n).max(1);
    if kx > ctx.xs.len() || ky > ctx.ys.len() {
        return ConditionReport::new(ConditionStatus::HoldsExact, "vacuous: no sets of the required sizes");
    }
    let links = ctx.xx_links();
    let per_y_of = |a_x: u64| -> Vec<u64> { links.iter().map(|l| edges_inside(l, a_x)).collect() };
    let found = |a_x: u64, count: u64, a_y: VertexSet| {
        ConditionReport::violated(
            LowerDensityWitness::Sets { a_x: VertexSet(a_x), a_y, count },
            format!("8*{count} <= {}^2*{}", a_x.count_ones(), a_y.len()),
        )
    };
    if exact {
        // Gray-code walk over subsets of X with per-y counts kept incrementally.
        let mut a_x = 0u64;
        let mut per_y = vec![0u64; ctx.ys.len()];
        let mut best = i128::MAX;
        for i in 1u64..1 << ctx.xs.len() {
            let x = ctx.xs[i.trailing_zeros() as usize];
            let adding = a_x >> x & 1 == 0;
            a_x ^= 1 << x;
            let rest = a_x & !(1 << x);
            for (c, l) in per_y.iter_mut().zip(&links) {
                let d = (l[x] & rest).count_ones() as u64;
                if adding {
                    *c += d
                } else {
                    *c -= d
                }
            }
            if (a_x.count_ones() as usize) < kx {
                continue;
            }
            let (slack, count, a_y) = best_a_y(ctx, &per_y, a_x, ky);
            if slack <= 0 {
                return found(a_x, count, a_y);
            }
            best = best.min(slack);
        }
        return ConditionReport::new(ConditionStatus::HoldsExact, format!("all subsets checked; smallest slack {best}"));
    }
    let mut best = i128::MAX;
    for _ in 0..opts.restarts {
        let size = rng.gen_range(kx..=ctx.xs.len());
        let mut a_x: u64 = ctx.xs.choose_multiple(rng, size).map(|&v| 1u64 << v).sum();
        let (mut s, _, _) = best_a_y(ctx, &per_y_of(a_x), a_x, ky);
        for _ in 0..opts.steps {
            if s <= 0 {
                break;
            }
            let v = *ctx.xs.choose(rng).expect("X is nonempty");
            let next = a_x ^ (1 << v);
            if (next.count_ones() as usize) < kx {
                continue;
            }
            let (t, _, _) = best_a_y(ctx, &per_y_of(next), next, ky);
            if t <= s {
                a_x = next;
                s = t;
            }
        }
        if s <= 0 {
            let (_, count, a_y) = best_a_y(ctx, &per_y_of(a_x), a_x, ky);
            return found(a_x, count, a_y);
        }
        best = best.min(s);
    }
    ConditionReport::new(ConditionStatus::HoldsUnrefuted, format!("no witness in {} restarts; smallest slack {best}", opts.restarts))
}

// ---- condition (iv) -----------------------------------------------------

/// Fewest link edges in a `k`-subset of `X`, by enumerating all of them.
fn min_dense_subset_exact(link: &[u64], xs: &[usize], k: usize) -> (u64, u64) {
    let width = xs.len();
    let to_set = |comb: u64| -> u64 { VertexSet(comb).iter().map(|i| 1u64 << xs[i]).sum() };
    let mut comb: u64 = (1u64 << k) - 1;
    let mut best = (u64::MAX, 0);
    loop {
        let set = to_set(comb);
        let e = edges_inside(link, set);
        if e < best.0 {
            best = (e, set);
        }
        // Next combination with the same popcount.
        let c = comb & comb.wrapping_neg();
        let r = comb + c;
        if r >> width != 0 || r == 0 {
            break;
        }
        comb = (((r ^ comb) >> 2) / c) | r;
        if comb >> width != 0 {
            break;
        }
    }
    best
}

/// Peels the highest-degree vertex until `k` remain.
fn min_dense_subset_greedy(link: &[u64], xs: &[usize], k: usize) -> (u64, u64) {
    let mut set: u64 = xs.iter().map(|&v| 1u64 << v).sum();
    while set.count_ones() as usize > k {
        let v = VertexSet(set).iter().max_by_key(|&v| ((link[v] & set).count_ones(), std::cmp::Reverse(v))).expect("nonempty");
        set &= !(1 << v);
    }
    (edges_inside(link, set), set)
}

fn check_iv(ctx: &Ctx, exact: bool) -> ConditionReport {
    let n = ctx.n as f64;
    let ky = min_size_ge(2.0 * ctx.mu * n).max(1);
    let kx = min_size_gt(200.0 * ctx.mu * n);
    if ky > ctx.ys.len() || kx > ctx.xs.len() {
        let status = if exact { ConditionStatus::HoldsExact } else { ConditionStatus::HoldsUnrefuted };
        return ConditionReport::new(status, format!("vacuous: needs |Y'| >= {ky} and |X_y| >= {kx}"));
    }
    let links = ctx.xx_links();
    let per_y: Vec<(u64, (usize, VertexSet))> = links
        .iter()
        .zip(&ctx.ys)
        .map(|(l, &y)| {
            let (e, set) = if exact { min_dense_subset_exact(l, &ctx.xs, kx) } else { min_dense_subset_greedy(l, &ctx.xs, kx) };
            (e, (y, VertexSet(set)))
        })
        .collect();
    let (count, sets) = smallest(per_y, ky);
    let limit = 10000.0 * ctx.mu.powi(3) * n.powi(3);
    let detail = format!("{count} edges with |Y'| = {ky}, |X_y| = {kx}; limit {limit:.6}");
    if count as f64 <= limit {
        ConditionReport::violated(LowerDensityWitness::Assignment { sets, count }, detail)
    } else if exact {
        ConditionReport::new(ConditionStatus::HoldsExact, detail)
    } else {
        ConditionReport::new(ConditionStatus::HoldsUnrefuted, detail)
    }
}

pub fn lower_density_check(h: &TripleSystem, p: &OrderedPartition, mu: f64, effort: Effort) -> Result<LowerDensityReport> {
    lower_density_check_with(h, p, mu, &LowerDensityOptions { effort, ..Default::default() })
}

pub fn lower_density_check_with(
    h: &TripleSystem,
    p: &OrderedPartition,
    mu: f64,
    opts: &LowerDensityOptions,
) -> Result<LowerDensityReport> {
    if !(mu > 0.0 && mu < 1.0) {
        return invalid(format!("mu = {mu} is not in (0,1)"));
    }
    if p.n() != h.n() {
        return invalid(format!("partition on {} vertices for a system on {}", p.n(), h.n()));
    }
    if opts.restarts == 0 {
        return invalid("witness search needs at least one restart");
    }
    let ctx = context(h, p, mu);
    let mut rng = rng(opts.seed);
    let fits = ctx.xs.len() <= EXACT_SIDE_LIMIT && ctx.ys.len() <= EXACT_SIDE_LIMIT;
    let exact = opts.effort == Effort::Exact && fits;
    let mark = |mut r: ConditionReport| {
        if opts.effort == Effort::Exact && !fits {
            r.downgraded = true;
            r.detail = format!("{} (sides exceed {EXACT_SIDE_LIMIT}; searched adversarially)", r.detail);
        }
        r
    };
    let conditions = [
        check_i(&ctx, opts, &mut rng),
        check_ii(&ctx, opts, &mut rng),
        mark(check_iii(&ctx, exact, opts, &mut rng)),
        mark(check_iv(&ctx, exact)),
        check_v(&ctx),
    ];
    Ok(LowerDensityReport { mu, effort: opts.effort, seed: opts.seed, conditions })
}
