use num_bigint::BigUint;

use crate::error::Result;
use crate::lattice::BoxDims;
use crate::symmetry::classes::{count_class, ClassTag, SymmetryClass};
use crate::symmetry::engine::{ConstraintGrid, Relation};

/// Quasi-symmetric plane partitions in the `(a,a,c)`-box.
pub fn qspp(a: usize, c: usize, budget: u64) -> Result<BigUint> {
    count_class(&SymmetryClass::new(ClassTag::QSym, BoxDims::new(vec![a, a, c])?)?, budget)
}

/// Grid for the tabulated second-kind counts with `a ≥ 2`: height `2c`,
/// `π_{i,j} + π_{a+1-j,a+1-i} = 2c` off the main diagonal and at the centre
/// cell of an odd square.
fn second_kind_grid(a: usize, c: usize, symmetric: bool) -> ConstraintGrid {
    let h = 2 * c as u32;
    let mut grid = ConstraintGrid::new(a, a, h, h);
    for i in 0..a {
        for j in 0..a {
            if i != j || 2 * i + 1 == a {
                grid.link(grid.cell(i, j), grid.cell(a - 1 - j, a - 1 - i), Relation::Complement);
            }
            if symmetric && j > i {
                grid.link(grid.cell(i, j), grid.cell(j, i), Relation::Equal);
            }
        }
    }
    grid
}

fn second_kind(a: usize, c: usize, symmetric: bool, budget: u64) -> Result<BigUint> {
    if a <= 1 {
        let tag = if symmetric { ClassTag::Sqtc2 } else { ClassTag::Qtc2 };
        return count_class(&SymmetryClass::new(tag, BoxDims::new(vec![a, a, c])?)?, budget);
    }
    Ok(BigUint::from(second_kind_grid(a, c, symmetric).count(budget)?))
}

/// `qtcpp₂(a,c)` as tabulated: the literal class for `a ≤ 1`, otherwise the
/// second-kind count at doubled height.
pub fn qtcpp2(a: usize, c: usize, budget: u64) -> Result<BigUint> {
    second_kind(a, c, false, budget)
}

/// Symmetric variant of [`qtcpp2`].
pub fn qtcspp2(a: usize, c: usize, budget: u64) -> Result<BigUint> {
    second_kind(a, c, true, budget)
}
