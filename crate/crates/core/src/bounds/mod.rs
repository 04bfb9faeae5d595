//! Numeric and brute-force checks of the supporting counting bounds.

mod chernoff;
mod entropy;
mod hierarchy;
mod lowdense;
mod matchcount;
mod matching;
mod sbound;
mod triangles;

pub use chernoff::{chernoff_bound, chernoff_empirical, ChernoffEmpirical};
pub use entropy::{
    binary_entropy, entropy_facts_check, entropy_facts_exact, entropy_grid, tail_threshold, EntropyFacts, EvalMethod,
    Fraction, LOG_BAND,
};
pub use hierarchy::{find_hierarchy_thresholds, threshold_hierarchy_check, HierarchyReport, Inequality};
pub use lowdense::{
    lower_density_check, lower_density_check_with, witness_violates, ConditionReport, ConditionStatus, Effort,
    LowerDensityOptions, LowerDensityReport, LowerDensityWitness, DEFAULT_SEARCH_SEED, EXACT_SIDE_LIMIT,
};
pub use matchcount::{matchcount_bound, max_matching_count, MatchCountResult, MATCHCOUNT_MAX_N};
pub use matching::{greedy_matching, matching_size_bound_holds, random_graph};
pub use sbound::{s_bound_check, s_bound_holds, s_bound_log2, s_recursion_holds, SBoundReport};
pub use triangles::{triangle_count_tripartite, TripartiteCylinder};
