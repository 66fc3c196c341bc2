//! Shared inputs for the benchmarks.

use fcp_core::BoxDims;

/// Half-length boxes for the FCP counting benchmarks, small to large.
pub fn fcp_boxes() -> Vec<BoxDims> {
    [&[3, 3, 3][..], &[6, 6, 6], &[4, 4, 4, 4], &[3, 3, 3, 3, 3]]
        .iter()
        .map(|s| BoxDims::new(s.to_vec()).expect("valid box"))
        .collect()
}

pub fn label(b: &BoxDims) -> String {
    b.sides().iter().map(ToString::to_string).collect::<Vec<_>>().join("x")
}
