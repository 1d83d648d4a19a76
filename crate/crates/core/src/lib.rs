//! Tree-partitions of graphs with bounded pathwidth and bounded degree.
//!
//! Given a graph `G` with a path-decomposition of width `k` and maximum
//! degree at most `d`, [`tpart::build_tree_partition`] produces a
//! tree-partition of `G` of width at most `4d(k+1)^2` together with a
//! path-decomposition of the indexing tree of width at most `2k+1`.
//! Everything the construction claims is checkable: the validators in
//! [`decomp`] and [`tpart`] check certificates, [`tpart::ConstructionTrace`]
//! records every intermediate set for auditing, and [`oracles`] computes
//! ground truth by exhaustive search on tiny inputs.

pub mod decomp;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod oracles;
pub mod pathwidth;
pub mod tpart;

pub use decomp::{PathDecomposition, TreeDecomposition};
pub use error::{Error, Result};
pub use graph::{Graph, IdMap, VertexSet};
pub use pathwidth::PathwidthResult;
pub use tpart::{ConstructionTrace, TreePartition};
