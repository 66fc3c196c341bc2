//! Fully complementary higher-dimensional partitions, their lattice-path
//! encodings, generating functions and plane-partition symmetry classes.

pub mod complement;
pub mod conjecture;
pub mod error;
pub mod fcp;
pub mod lattice;
pub mod linalg;
pub mod series;
pub mod symmetry;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{BoxDims, FerrersDiagram, PartitionArray, Point};
