use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid box {sides:?}: {reason}")]
    InvalidBox { sides: Vec<usize>, reason: String },

    #[error("point {point:?} lies outside the box {sides:?}")]
    PointOutsideBox { point: Vec<usize>, sides: Vec<usize> },

    #[error("cell set is not downward closed: {0:?} is present but one of its predecessors is not")]
    NotDownwardClosed(Vec<usize>),

    #[error("array is not weakly decreasing at index {0:?}")]
    NotDecreasing(Vec<usize>),

    #[error("entry {value} at {index:?} exceeds the height bound {cap}")]
    EntryTooLarge { index: Vec<usize>, value: u32, cap: u32 },

    #[error("shape mismatch: expected {expected:?}, found {found:?}")]
    ShapeMismatch { expected: Vec<usize>, found: Vec<usize> },

    #[error("axis subset {mask:#b} is not allowed here: {reason}")]
    InvalidAxisSubset { mask: u32, reason: String },

    #[error("box {sides:?} has {odd} odd sides, expected {expected}")]
    OddSides { sides: Vec<usize>, odd: usize, expected: String },

    #[error("array is not fully complementary inside the {0:?}-box")]
    NotFullyComplementary(Vec<usize>),

    #[error("invalid lattice path: {0}")]
    InvalidPath(String),

    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),

    #[error("series arguments disagree: {0}")]
    SeriesMismatch(String),

    #[error("series is not invertible: constant term is {0}, expected 1")]
    NotInvertible(String),

    #[error("polynomial division by 1 - q^{0} left a non-zero remainder")]
    InexactDivision(usize),

    #[error("factorial argument {0} is not a non-negative integer")]
    NonIntegralFactorial(String),

    #[error("value {0} is not a non-negative integer")]
    NotANaturalNumber(String),

    #[error("interpolation failed: {0}")]
    Interpolation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed fixture: {0}")]
    Fixture(String),
}
