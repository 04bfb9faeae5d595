//! T5-free 3-uniform hypergraphs and semi-bipartite structure.
//!
//! A 3-uniform hypergraph has independent neighborhoods iff it contains no
//! copy of `T5 = {012, 013, 014, 234}`. Semi-bipartite systems (some ordered
//! partition `(X, Y)` puts exactly two points of every edge in `X`) always
//! have independent neighborhoods. This crate decides these predicates,
//! builds the extremal and non-semi-bipartite constructions, counts labeled
//! systems exactly at small `n`, and checks the supporting counting bounds.

pub mod bits;
pub mod bounds;
pub mod census;
pub mod constructions;
pub mod detection;
pub mod error;
pub mod hypergraph;
pub mod verify;

pub use bits::VertexSet;
pub use constructions::Thresholds;
pub use error::{Error, Result};
pub use hypergraph::{EdgeClassification, OrderedPartition, PairGraph, Sides, TripleSystem};
