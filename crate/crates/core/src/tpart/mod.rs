//! Tree-partitions: the width recurrence, the recursive construction with
//! its audit trace and tree certificate, and validators.

mod build;
mod fbound;
mod trace;
mod validate;

pub use build::{
    build_tree_partition, key_subpaths, map_edges_to_levels, select_maximal_y, select_minimal_x,
    LevelAssignment,
};
pub use fbound::{f_bound, level_bag_bound, width_bound};
pub use trace::{AuditFinding, ConstructionTrace, EdgePiece, KeySubpath, SplitStep, Step, StepDetail, StepLink};
pub use validate::{check_path_partition_diameter, validate_tree_partition, TreePartition, TreePartitionReport};
