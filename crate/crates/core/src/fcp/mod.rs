//! The maps `φ_k`, the recursive decomposition of `FCP(n)`, counting and the
//! lattice-path encoding. Axis arguments are 1-based here.

mod count;
mod path;
mod phi;

pub use count::{count_fc_in_box, count_fcp, enumerate_fc_in_box, FcpCounter};
pub use path::{fcp_to_path, path_to_fcp, LatticePath};
pub use phi::{check_fcp, decompose, enumerate_fcp, phi, Fcp, FcpDecomposition};
