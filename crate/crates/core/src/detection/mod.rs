//! Decision procedures: T5 containment, semi-bipartiteness, optimal
//! partitions, rich edges and the five structural conditions.

mod conditions;
mod partitions;
mod rich;
mod t5;

pub use conditions::{classify_conditions, classify_conditions_within, ConditionFlags, ConditionWitness};
pub use partitions::{
    for_each_optimal_partition, is_semibipartite, is_semibipartite_within, optimal_partitions,
    optimal_partitions_within, OptimalPartitionResult, SearchLimits, DEFAULT_VERTEX_CAP,
    DEFAULT_WITNESS_CAP,
};
pub use rich::{rich_edges, semibipartite_core, RichEdge, RichEdgeReport};
pub use t5::{contains_t5, find_t5, has_independent_neighborhoods, T5Witness};
