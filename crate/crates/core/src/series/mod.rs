//! Truncated power series, the FCP and quasi-symmetric generating functions,
//! and MacMahon's box polynomial.

mod genfun;
mod qpoly;
mod truncated;

pub use genfun::{expand_fcp_genfun, expand_qs_genfun, fcp_numerator, DenominatorTable};
pub use qpoly::{macmahon_box_q, q_count_box, QPolynomial};
pub use truncated::TruncatedSeries;
