//! Boxes, partition arrays, Ferrers diagrams and exhaustive enumeration.

mod array;
mod boxdims;
mod diagram;
mod enumerate;

pub use array::{Array, Layout, PartitionArray};
pub use boxdims::{BoxDims, Point};
pub use diagram::{array_from_diagram, diagram_from_array, FerrersDiagram};
pub use enumerate::{
    count_partitions, enumerate_partitions, enumerate_partitions_filtered, NoFilter, PartitionSearch,
    PrefixFilter,
};
