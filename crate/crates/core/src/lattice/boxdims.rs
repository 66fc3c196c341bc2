use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Side lengths `(n_1, …, n_{d+1})` of a box.
///
/// The first `d` sides bound the indices of a `d`-dimensional array, the last
/// one bounds its entries. The same type carries the half-lengths `n` of an FCP
/// box; [`BoxDims::doubled`] produces the full `(2n_1, …, 2n_{d+1})` box.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct BoxDims {
    sides: Vec<usize>,
}

impl BoxDims {
    /// Largest side length accepted; entries are stored as `u32`.
    pub const MAX_SIDE: usize = 1 << 16;

    pub fn new(sides: impl Into<Vec<usize>>) -> Result<Self> {
        let sides = sides.into();
        let invalid = |reason: &str| Error::InvalidBox {
            sides: sides.clone(),
            reason: reason.to_string(),
        };
        if sides.len() < 2 {
            return Err(invalid("a box needs at least two sides"));
        }
        if sides.iter().filter(|&&s| s == 0).count() > 1 {
            return Err(invalid("at most one side may be zero"));
        }
        if sides.iter().any(|&s| s > Self::MAX_SIDE) {
            return Err(invalid("side length exceeds 2^16"));
        }
        Ok(Self { sides })
    }

    pub fn sides(&self) -> &[usize] {
        &self.sides
    }

    /// Dimension `d` of the partitions living in this box.
    pub fn dim(&self) -> usize {
        self.sides.len() - 1
    }

    /// Index bounds `(n_1, …, n_d)`.
    pub fn base(&self) -> &[usize] {
        &self.sides[..self.dim()]
    }

    /// Entry bound `n_{d+1}`.
    pub fn height(&self) -> usize {
        self.sides[self.dim()]
    }

    pub fn side(&self, axis: usize) -> usize {
        self.sides[axis]
    }

    pub fn cell_count(&self) -> usize {
        self.sides.iter().product()
    }

    pub fn base_cell_count(&self) -> usize {
        self.base().iter().product()
    }

    pub fn has_zero_side(&self) -> bool {
        self.sides.contains(&0)
    }

    pub fn zero_axis(&self) -> Option<usize> {
        self.sides.iter().position(|&s| s == 0)
    }

    pub fn odd_axes(&self) -> Vec<usize> {
        (0..self.sides.len()).filter(|&k| self.sides[k] % 2 == 1).collect()
    }

    /// The `(2n_1, …, 2n_{d+1})` box for half-lengths `n`.
    pub fn doubled(&self) -> BoxDims {
        BoxDims {
            sides: self.sides.iter().map(|s| 2 * s).collect(),
        }
    }

    pub fn with_side(&self, axis: usize, side: usize) -> Result<BoxDims> {
        let mut sides = self.sides.clone();
        sides[axis] = side;
        BoxDims::new(sides)
    }

    /// `n + e_axis`.
    pub fn incremented(&self, axis: usize) -> Result<BoxDims> {
        self.with_side(axis, self.sides[axis] + 1)
    }

    /// `n - e_axis`, or `None` when that side is already zero or the result
    /// would have two zero sides.
    pub fn decremented(&self, axis: usize) -> Option<BoxDims> {
        let side = self.sides[axis].checked_sub(1)?;
        self.with_side(axis, side).ok()
    }

    /// Whether a 1-based point lies inside the box.
    pub fn contains(&self, coords: &[usize]) -> bool {
        coords.len() == self.sides.len()
            && coords.iter().zip(&self.sides).all(|(&x, &s)| x >= 1 && x <= s)
    }
}

impl TryFrom<Vec<usize>> for BoxDims {
    type Error = Error;

    fn try_from(sides: Vec<usize>) -> Result<Self> {
        BoxDims::new(sides)
    }
}

impl From<BoxDims> for Vec<usize> {
    fn from(b: BoxDims) -> Self {
        b.sides
    }
}

impl fmt::Display for BoxDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.sides.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for BoxDims {
    type Err = Error;

    /// Parses `"2,2,3"` (parentheses optional).
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let sides = trimmed
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("bad side length {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        BoxDims::new(sides)
    }
}

/// 1-based lattice point `(x_1, …, x_{d+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point(pub Vec<usize>);

impl Point {
    pub fn new(coords: impl Into<Vec<usize>>) -> Self {
        Point(coords.into())
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for Point {
    fn from(v: Vec<usize>) -> Self {
        Point(v)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", BoxDims { sides: self.0.clone() })
    }
}
