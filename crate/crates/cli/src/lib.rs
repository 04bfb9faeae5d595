//! Command-line front end: argument parsing, dispatch and report output.
//!
//! Exit codes: `0` success, `1` a failed check or verification, `2` invalid
//! arguments.

mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use t5free::bounds::{
    chernoff_bound, chernoff_empirical, entropy_facts_check, entropy_facts_exact, find_hierarchy_thresholds,
    greedy_matching, lower_density_check_with, matching_size_bound_holds, max_matching_count, random_graph, s_bound_check,
    threshold_hierarchy_check, Effort, Fraction, LowerDensityOptions, TripartiteCylinder,
};
use t5free::census::{
    extremal_search, full_census, check_count_gap, CacheComparison, CensusCache, CensusOptions, CensusReport,
    ExtremalBudget, DEFAULT_CHECKPOINT_INTERVAL,
};
use t5free::constructions::{
    build_b3, ns_family_base, ns_sample, random_semibipartite, random_triple_system, PoolSelection,
};
use t5free::detection::{
    classify_conditions, find_t5, has_independent_neighborhoods, is_semibipartite, optimal_partitions,
};
use t5free::verify::{Criterion, Verifier, DEFAULT_SEED};
use t5free::{Error, OrderedPartition, Thresholds, TripleSystem};

pub use report::{report_emit, Format, Report, CENSUS_COLUMNS, VERIFY_COLUMNS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const CACHE_DIR_ENV: &str = "T5_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(name = "t5free", version, about = "T5-free 3-uniform hypergraphs: detection, census and bounds")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Census cache directory.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
    /// Include wall-clock timings in the report.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct SystemArgs {
    /// File holding a system in hex or list form.
    #[arg(long, conflicts_with = "system")]
    input: Option<PathBuf>,
    /// A system given inline, e.g. `n=5;triples=0-1-2,0-1-3`.
    #[arg(long)]
    system: Option<String>,
}

#[derive(Args, Debug, Clone, Copy)]
struct ThresholdArgs {
    #[arg(long)]
    eta: Option<f64>,
    #[arg(long)]
    mu: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Family {
    B3,
    Ns,
    RandomSemibipartite,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum BoundCheck {
    Entropy,
    Chernoff,
    Matching,
    Matchcount,
    Triangle,
    Lowdense,
    Sbound,
    Hierarchy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EffortArg {
    Exact,
    Adversarial,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long, value_enum)]
    check: BoundCheck,
    /// Vertex count (entropy, matching, sbound) or system size.
    #[arg(long)]
    n: Option<u64>,
    /// Fraction for the entropy check, `p/q` or a decimal.
    #[arg(long)]
    x: Option<String>,
    /// Trial count (chernoff), matching size (matchcount) or part size (triangle).
    #[arg(long)]
    m: Option<u64>,
    /// Total vertex count for matchcount.
    #[arg(long)]
    n_total: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    /// Deviation for chernoff.
    #[arg(long)]
    a: Option<f64>,
    /// Monte Carlo trials for chernoff.
    #[arg(long)]
    trials: Option<u64>,
    /// Inverse density for triangle.
    #[arg(long)]
    l: Option<u64>,
    /// Random graphs for matching.
    #[arg(long, default_value_t = 1000)]
    samples: u64,
    /// Exact S(n) and S(n-1) for sbound; computed by census when omitted and n <= 6.
    #[arg(long)]
    s: Option<u128>,
    #[arg(long)]
    s_prev: Option<u128>,
    /// Comma-separated X side for lowdense (default: first optimal partition).
    #[arg(long)]
    x_set: Option<String>,
    #[arg(long, value_enum, default_value_t = EffortArg::Exact)]
    effort: EffortArg,
    /// Search for a threshold tuple instead of checking one.
    #[arg(long)]
    search: bool,
    #[command(flatten)]
    system: SystemArgs,
    #[command(flatten)]
    thresholds: ThresholdArgs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// T5 containment, independent neighborhoods and semi-bipartiteness.
    Check(SystemArgs),
    /// Optimal partitions and the five structural conditions.
    Partition {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, default_value_t = 64)]
        witness_cap: usize,
        #[command(flatten)]
        thresholds: ThresholdArgs,
    },
    /// Emit a member of one of the built-in families.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Size of X for random-semibipartite.
        #[arg(long)]
        a: Option<usize>,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// 0/1 string selecting pool triples for ns (default: seeded coin flips).
        #[arg(long)]
        pool_mask: Option<String>,
    },
    /// Exact count over all systems on n vertices.
    Census {
        #[arg(long)]
        n: usize,
        /// Permit n = 7.
        #[arg(long)]
        deep: bool,
        /// Resumable cursor file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CHECKPOINT_INTERVAL)]
        checkpoint_interval: u64,
        /// Sweep even on a cache hit and compare with the cached counts.
        #[arg(long)]
        recompute: bool,
    },
    /// Branch-and-bound for the largest T5-free system.
    Extremal {
        #[arg(long)]
        n: usize,
        /// Node budget.
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
        #[arg(long)]
        time_ms: Option<u64>,
    },
    /// Supporting bound checks.
    Bounds(Box<BoundsArgs>),
    /// Run the acceptance criteria.
    Verify {
        #[arg(long, default_value = "primary")]
        suite: String,
        /// Restrict to criteria by name or number.
        #[arg(long)]
        only: Vec<String>,
    },
}

#[derive(Serialize)]
struct RunConfig {
    argv: Vec<String>,
    subcommand: &'static str,
    n: Option<u64>,
    seed: u64,
    thresholds: Thresholds,
    workers: usize,
    budget: Option<u64>,
    format: Format,
    cache_dir: Option<String>,
    deep: bool,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidArgument(_) | Error::Parse(_) | Error::ResourceLimit(_) => EXIT_USAGE,
            _ => EXIT_FAILED,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// Parses `args` (program name first), runs the command and writes the
/// report to `out`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let argv: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match execute(&cli, argv) {
        Ok(report) => {
            let bytes = report_emit(&report, cli.format);
            if out.write_all(&bytes).is_err() {
                return EXIT_FAILED;
            }
            if report.passed == Some(false) {
                EXIT_FAILED
            } else {
                EXIT_OK
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn thresholds_of(t: &ThresholdArgs) -> Outcome<Thresholds> {
    let d = Thresholds::SHIPPED;
    Ok(Thresholds::new(t.eta.unwrap_or(d.eta), t.mu.unwrap_or(d.mu), t.alpha.unwrap_or(d.alpha), t.beta.unwrap_or(d.beta))?)
}

fn load_system(s: &SystemArgs) -> Outcome<TripleSystem> {
    let text = match (&s.input, &s.system) {
        (Some(path), _) => std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?,
        (None, Some(inline)) => inline.clone(),
        (None, None) => return Err(usage("a system is required: pass --input FILE or --system TEXT")),
    };
    Ok(TripleSystem::parse(text.trim())?)
}

fn partition_json(p: &OrderedPartition) -> Value {
    json!({ "x": p.x().iter().collect::<Vec<_>>(), "y": p.y().iter().collect::<Vec<_>>() })
}

fn to_json<T: Serialize>(v: &T) -> Outcome<Value> {
    serde_json::to_value(v).map_err(|e| Failure { code: EXIT_FAILED, message: e.to_string() })
}

fn execute(cli: &Cli, argv: Vec<String>) -> Outcome<Report> {
    let workers = match cli.workers {
        Some(0) => return Err(usage("--workers must be positive")),
        Some(w) => w,
        None => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
    };
    let (subcommand, n, budget, deep, thresholds) = match &cli.command {
        Command::Check(_) => ("check", None, None, false, Thresholds::SHIPPED),
        Command::Partition { thresholds, .. } => ("partition", None, None, false, thresholds_of(thresholds)?),
        Command::Construct { n, .. } => ("construct", Some(*n as u64), None, false, Thresholds::SHIPPED),
        Command::Census { n, deep, .. } => ("census", Some(*n as u64), None, *deep, Thresholds::SHIPPED),
        Command::Extremal { n, budget, .. } => ("extremal", Some(*n as u64), Some(*budget), false, Thresholds::SHIPPED),
        Command::Bounds(b) => ("bounds", b.n, None, false, thresholds_of(&b.thresholds)?),
        Command::Verify { .. } => ("verify", None, None, false, Thresholds::SHIPPED),
    };
    let config = RunConfig {
        argv,
        subcommand,
        n,
        seed: cli.seed,
        thresholds,
        workers,
        budget,
        format: cli.format,
        cache_dir: cli.cache_dir.as_ref().map(|p| p.display().to_string()),
        deep,
    };
    let mut report = Report {
        command: subcommand.to_string(),
        claims: Vec::new(),
        config: to_json(&config)?,
        result: Value::Null,
        passed: None,
        timings: None,
    };
    let started = std::time::Instant::now();
    match &cli.command {
        Command::Check(s) => check(&mut report, &load_system(s)?)?,
        Command::Partition { system, witness_cap, .. } => {
            partition(&mut report, &load_system(system)?, *witness_cap, &thresholds)?
        }
        Command::Construct { family, n, a, p, pool_mask } => {
            construct(&mut report, *family, *n, *a, *p, pool_mask.as_deref(), cli.seed)?
        }
        Command::Census { n, deep, checkpoint, checkpoint_interval, recompute } => {
            let opts = CensusOptions {
                workers,
                deep: *deep,
                checkpoint: checkpoint.clone(),
                checkpoint_interval: *checkpoint_interval,
            };
            census(&mut report, *n, &opts, cli.cache_dir.as_deref(), *recompute)?
        }
        Command::Extremal { n, budget, time_ms } => {
            let budget = ExtremalBudget { nodes: *budget, time: time_ms.map(std::time::Duration::from_millis) };
            let r = extremal_search(*n, budget)?;
            report.claims.push("ex(n, T5) is the largest edge count of a T5-free system on n vertices".into());
            report.result = to_json(&r)?;
        }
        Command::Bounds(b) => bounds(&mut report, b, &thresholds, cli.seed)?,
        Command::Verify { suite, only } => verify(&mut report, suite, only, cli.seed, workers)?,
    }
    if cli.timings {
        let mut t = json!({ "elapsed_ms": started.elapsed().as_millis() as u64, "workers": workers });
        if let Some(criteria) = report.timings.take() {
            t["criteria"] = criteria;
        }
        report.timings = Some(t);
    } else {
        report.timings = None;
    }
    Ok(report)
}

fn check(report: &mut Report, h: &TripleSystem) -> Outcome<()> {
    report.claims.push("a system has independent neighborhoods exactly when it contains no T5".into());
    report.claims.push("every semi-bipartite system has independent neighborhoods".into());
    let witness = find_t5(h);
    let sb = is_semibipartite(h)?;
    report.result = json!({
        "system": h.to_list_form(),
        "n": h.n(),
        "edges": h.edge_count(),
        "contains_t5": witness.is_some(),
        "t5_witness": witness.map(|w| w.edges.to_vec()),
        "independent_neighborhoods": has_independent_neighborhoods(h),
        "semibipartite": sb.is_some(),
        "partition": sb.as_ref().map(partition_json),
    });
    Ok(())
}

fn partition(report: &mut Report, h: &TripleSystem, cap: usize, t: &Thresholds) -> Outcome<()> {
    report.claims.push("D_H is the minimum number of inconsistent edges over ordered partitions".into());
    report.claims.push("each structural condition is checked on every optimal partition".into());
    let opt = optimal_partitions(h, cap)?;
    let flags = classify_conditions(h, t)?;
    report.result = json!({
        "system": h.to_list_form(),
        "d_h": opt.d_h,
        "optimal_partitions": opt.total_witnesses,
        "truncated": opt.truncated(),
        "witnesses": opt.witnesses.iter().map(partition_json).collect::<Vec<_>>(),
        "conditions": to_json(&flags)?,
        "all_conditions_hold": flags.all_hold(),
    });
    Ok(())
}

fn construct(
    report: &mut Report,
    family: Family,
    n: usize,
    a: Option<usize>,
    p: f64,
    pool_mask: Option<&str>,
    seed: u64,
) -> Outcome<()> {
    let mut extra = json!({});
    let (h, part) = match family {
        Family::B3 => {
            report.claims.push("B3(n) is the largest semi-bipartite system, with max_a C(a,2)(n-a) edges".into());
            let (h, p) = build_b3(n)?;
            (h, Some(p))
        }
        Family::Ns => {
            report.claims.push("F plus any subset of the free pool is T5-free and not semi-bipartite".into());
            let base = ns_family_base(n)?;
            let selection = match pool_mask {
                Some(bits) => PoolSelection::Mask(
                    bits.chars()
                        .map(|c| match c {
                            '0' => Ok(false),
                            '1' => Ok(true),
                            other => Err(usage(format!("pool mask may hold only 0 and 1, found {other:?}"))),
                        })
                        .collect::<Outcome<Vec<bool>>>()?,
                ),
                None => PoolSelection::Seed(seed),
            };
            let h = ns_sample(&base, &selection)?;
            extra = json!({
                "t": base.t,
                "s": base.s,
                "special": base.special,
                "pool_size": base.g_edges.len(),
                "pool_size_quoted_formula": base.quoted_pool_size(),
            });
            (h, Some(base.partition()))
        }
        Family::RandomSemibipartite => {
            report.claims.push("every subsystem of a complete semi-bipartite system is semi-bipartite".into());
            let a = a.ok_or_else(|| usage("random-semibipartite needs --a"))?;
            (random_semibipartite(n, a, p, seed)?, Some(OrderedPartition::prefix(n, a)?))
        }
        Family::Random => {
            report.claims.push("each triple present independently with probability p".into());
            (random_triple_system(n, p, seed)?, None)
        }
    };
    report.result = json!({
        "family": to_json(&family)?,
        "system": h.to_list_form(),
        "hex": h.to_hex_form(),
        "edges": h.edge_count(),
        "partition": part.as_ref().map(partition_json),
        "details": extra,
    });
    Ok(())
}

/// Counts as JSON numbers when they fit in 64 bits, otherwise as strings.
fn count(v: u128) -> Value {
    u64::try_from(v).map(Value::from).unwrap_or_else(|_| Value::from(v.to_string()))
}

fn census_json(r: &CensusReport) -> Outcome<Value> {
    let t1 = check_count_gap(r)?;
    Ok(json!({
        "n": r.n,
        "total": count(r.total),
        "i_n": count(r.i_n),
        "s_n": count(r.s_n),
        "t5_free": count(r.t5_free),
        "extra": count(r.extra),
        "max_t5_free_edges": r.max_t5_free_edges,
        "version": r.version,
        "lower_bound_holds": t1.holds,
        "lower_bound_slack": t1.slack.to_string(),
    }))
}

fn census(report: &mut Report, n: usize, opts: &CensusOptions, cache_dir: Option<&Path>, recompute: bool) -> Outcome<()> {
    report.claims.push("I(n) counts systems with independent neighborhoods, S(n) the semi-bipartite ones".into());
    report.claims.push("(1 + 2^-4n) S(n) < I(n)".into());
    let cache = cache_dir.map(CensusCache::new);
    let cached = match &cache {
        Some(c) => c.load(n)?,
        None => None,
    };
    let (r, status) = match (cached, &cache) {
        (Some(hit), _) if !recompute => (hit, "hit"),
        (_, None) => (full_census(n, opts)?, "disabled"),
        (_, Some(c)) => {
            let fresh = full_census(n, opts)?;
            match c.compare(&fresh)? {
                CacheComparison::Miss => {
                    c.store(&fresh)?;
                    (fresh, "miss")
                }
                CacheComparison::Match => (fresh, "match"),
                CacheComparison::Diverged { cached } => {
                    report.passed = Some(false);
                    report.claims.push(format!(
                        "cached counts diverge from this run: cached I={} S={}",
                        cached.i_n, cached.s_n
                    ));
                    (fresh, "diverged")
                }
            }
        }
    };
    let mut result = census_json(&r)?;
    result["cache"] = json!(status);
    report.result = result;
    Ok(())
}

fn parse_fraction(s: &str) -> Outcome<Fraction> {
    let bad = || usage(format!("cannot read {s:?} as a fraction"));
    if let Some((p, q)) = s.split_once('/') {
        let p: u64 = p.trim().parse().map_err(|_| bad())?;
        let q: u64 = q.trim().parse().map_err(|_| bad())?;
        return Ok(Fraction::new(p, q)?);
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if frac.len() > 18 || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) || s.is_empty() {
        return Err(bad());
    }
    let den = 10u64.pow(frac.len() as u32);
    let whole: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
    let part: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
    Ok(Fraction::new(whole * den + part, den)?)
}

fn need<T: Copy>(v: Option<T>, flag: &str, check: &str) -> Outcome<T> {
    v.ok_or_else(|| usage(format!("--check {check} needs {flag}")))
}

fn bounds(report: &mut Report, b: &BoundsArgs, t: &Thresholds, seed: u64) -> Outcome<()> {
    let claim = |r: &mut Report, s: &str| r.claims.push(s.to_string());
    match b.check {
        BoundCheck::Entropy => {
            claim(report, "C(n, floor(xn)) < 2^(H(x)n) for 0 < x < 1/2");
            claim(report, "sum_{i <= xn} C(n, i) < 2^(H(x)n) for small x");
            let n = need(b.n, "--n", "entropy")?;
            let x = parse_fraction(b.x.as_deref().ok_or_else(|| usage("--check entropy needs --x"))?)?;
            let f = entropy_facts_check(n, x)?;
            let exact = if n <= 64 { Some(entropy_facts_exact(n, x)?) } else { None };
            report.passed = Some(f.single && f.tail);
            report.result = json!({ "facts": to_json(&f)?, "exact": exact });
        }
        BoundCheck::Chernoff => {
            claim(report, "P(S < E S - a) < exp(-a^2 / (2pm)) for a sum of m Bernoulli(p) trials");
            let m = need(b.m, "--m", "chernoff")?;
            let p = need(b.p, "--p", "chernoff")?;
            let a = need(b.a, "--a", "chernoff")?;
            let bound = chernoff_bound(m, p, a)?;
            let empirical = match b.trials {
                Some(trials) => {
                    let e = chernoff_empirical(m, p, a, trials, seed)?;
                    report.passed = Some(e.passes);
                    Some(to_json(&e)?)
                }
                None => None,
            };
            report.result = json!({ "m": m, "p": p, "a": a, "bound": bound, "empirical": empirical });
        }
        BoundCheck::Matching => {
            claim(report, "a graph on n vertices has a matching of size at least |G|/2n");
            let n = need(b.n, "--n", "matching")? as usize;
            let p = b.p.unwrap_or(0.5);
            let mut failures = Vec::new();
            let mut sizes = Vec::new();
            for i in 0..b.samples {
                let g = random_graph(n, p, seed.wrapping_add(i))?;
                sizes.push([g.edge_count(), greedy_matching(&g).edge_count()]);
                if !matching_size_bound_holds(&g) {
                    failures.push(i);
                }
            }
            report.passed = Some(failures.is_empty());
            let shown = sizes.len().min(10);
            report.result = json!({ "n": n, "p": p, "samples": b.samples, "failures": failures, "first_sizes": &sizes[..shown] });
        }
        BoundCheck::Matchcount => {
            claim(report, "graphs on [N] with a fixed maximum matching of size m number at most 2^(2m^2-2m)(N-2m+2^(N-2m+1))^m");
            let n = need(b.n_total.or(b.n.map(|n| n as usize)), "--n-total", "matchcount")?;
            let m = need(b.m, "--m", "matchcount")? as usize;
            let r = max_matching_count(n, m)?;
            report.passed = Some(r.holds());
            report.result = json!({ "n_vertices": r.n_vertices, "m": r.m, "exact": r.exact.to_string(), "bound": r.bound.to_string() });
        }
        BoundCheck::Triangle => {
            claim(report, "a random tripartite cylinder of density 1/l has (1 +- 0.1) m^3/l^3 triangles");
            let m = need(b.m, "--m", "triangle")? as usize;
            let l = need(b.l, "--l", "triangle")?;
            if l == 0 {
                return Err(usage("--l must be positive"));
            }
            let g = TripartiteCylinder::random(m, 1.0 / l as f64, seed)?;
            let count = g.triangle_count();
            let expected = (m as f64).powi(3) / (l as f64).powi(3);
            let within = (count as f64 - expected).abs() <= 0.1 * expected;
            report.passed = Some(within);
            report.result = json!({ "m": m, "l": l, "count": count, "expected": expected, "ratio": count as f64 / expected, "within_10_percent": within });
        }
        BoundCheck::Lowdense => {
            claim(report, "lower-density conditions (i)-(v) for an ordered partition");
            let h = load_system(&b.system)?;
            let p = match &b.x_set {
                Some(list) => {
                    let xs = list
                        .split(',')
                        .filter(|s| !s.trim().is_empty())
                        .map(|s| s.trim().parse::<usize>().map_err(|_| usage(format!("bad vertex {s:?} in --x-set"))))
                        .collect::<Outcome<Vec<usize>>>()?;
                    OrderedPartition::from_x(h.n(), xs)?
                }
                None => optimal_partitions(&h, 1)?.witnesses[0],
            };
            let effort = match b.effort {
                EffortArg::Exact => Effort::Exact,
                EffortArg::Adversarial => Effort::Adversarial,
            };
            let opts = LowerDensityOptions { effort, seed, ..Default::default() };
            let r = lower_density_check_with(&h, &p, t.mu, &opts)?;
            report.result = json!({ "system": h.to_list_form(), "partition": partition_json(&p), "report": to_json(&r)? });
        }
        BoundCheck::Sbound => {
            claim(report, "log2 S(n) >= (2/27)n^3 - (1/9)n^2 - (1/9)n");
            let n = need(b.n, "--n", "sbound")?;
            let census_s = |k: u64| -> Outcome<Option<u128>> {
                if (4..=6).contains(&k) {
                    Ok(Some(full_census(k as usize, &CensusOptions::default())?.s_n))
                } else if k == 3 {
                    Ok(Some(2))
                } else {
                    Ok(None)
                }
            };
            let s = match b.s {
                Some(s) => Some(s),
                None => census_s(n)?,
            };
            let prev = match b.s_prev {
                Some(s) => Some(s),
                None if b.s.is_none() => census_s(n - 1)?,
                None => None,
            };
            let r = s_bound_check(n, s, prev)?;
            report.passed = Some(r.construction_holds && r.exact_holds != Some(false));
            let mut v = to_json(&r)?;
            v["exact_s"] = json!(r.exact_s.map(|s| s.to_string()));
            report.result = v;
        }
        BoundCheck::Hierarchy => {
            claim(report, "0.01 > H(alpha), alpha^2 > 100(H(beta)+H(2mu)+mu^2), beta > 100 H(2mu), mu^3 >= 1000 H(eta)");
            let tuple = if b.search {
                find_hierarchy_thresholds().ok_or_else(|| Failure { code: EXIT_FAILED, message: "no tuple found".into() })?
            } else {
                *t
            };
            let r = threshold_hierarchy_check(&tuple);
            report.passed = Some(r.holds);
            report.result = to_json(&r)?;
        }
    }
    report.result["check"] = to_json(&b.check)?;
    Ok(())
}

fn verify(report: &mut Report, suite: &str, only: &[String], seed: u64, workers: usize) -> Outcome<()> {
    if suite != "primary" {
        return Err(usage(format!("unknown suite {suite:?}; the only suite is \"primary\"")));
    }
    let selected: Vec<Criterion> = if only.is_empty() {
        Criterion::ALL.to_vec()
    } else {
        only.iter()
            .map(|name| Criterion::from_name(name).ok_or_else(|| usage(format!("unknown criterion {name:?}"))))
            .collect::<Outcome<_>>()?
    };
    let verifier = Verifier::new(seed, workers);
    let outcomes: Vec<_> = selected.iter().map(|&c| verifier.run(c)).collect();
    report.claims = outcomes.iter().map(|o| format!("{}: {}", o.name, o.claim)).collect();
    report.passed = Some(outcomes.iter().all(|o| o.passed));
    let mut rows = to_json(&outcomes)?;
    // Timings vary between runs; keep them out of the deterministic result.
    let mut timings = serde_json::Map::new();
    for row in rows.as_array_mut().into_iter().flatten() {
        if let Some(obj) = row.as_object_mut() {
            let name = obj.get("name").and_then(Value::as_str).unwrap_or_default().to_string();
            let elapsed = obj.remove("elapsed_ms");
            let parts = obj.remove("timings");
            timings.insert(name, json!({ "elapsed_ms": elapsed, "seconds": parts }));
        }
    }
    report.result = json!({ "suite": suite, "criteria": rows });
    report.timings = Some(Value::Object(timings));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions() {
        assert_eq!(parse_fraction("1/4").ok().map(|f| (f.num, f.den)), Some((1, 4)));
        assert_eq!(parse_fraction("0.25").ok().map(|f| (f.num, f.den)), Some((1, 4)));
        assert_eq!(parse_fraction(".5").ok().map(|f| (f.num, f.den)), Some((1, 2)));
        assert!(parse_fraction("abc").is_err());
        assert!(parse_fraction("1/0").is_err());
        assert!(parse_fraction("").is_err());
    }
}
