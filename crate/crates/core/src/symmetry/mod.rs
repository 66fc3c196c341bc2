//! Symmetry classes of plane partitions and of quarter complementary plane
//! partitions, the quasi transpose-complementary hat map and its path
//! encoding.

mod classes;
mod engine;
mod hat;
mod qcpp;
mod tables;

pub use classes::{count_class, is_cyclically_symmetric, is_symmetric, qcpps, ClassTag, SymmetryClass};
pub use engine::{ConstraintGrid, Relation, DEFAULT_BUDGET};
pub use hat::{
    hat_image_grid, hat_map, omega, paths_to_hat_image, qtcpp_paths, vertex_disjoint, weighted_hat_count, PlanePath,
    Step, WeightedCount,
};
pub use qcpp::{
    corner_block_qcpp, count_cyclic_qcpp, count_qs_qcpp, count_qtc_qcpp, count_sc_qcpp, qtc_is_qs_and_sc,
    symmetric_qcpps, CountMode,
};
pub use tables::{qspp, qtcpp2, qtcspp2};
