use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{BoxDims, PartitionArray};
use crate::symmetry::classes::{ClassTag, SymmetryClass};
use crate::symmetry::engine::ConstraintGrid;

/// Number of objects and their total weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedCount {
    pub objects: u64,
    pub value: BigUint,
}

fn qtc_class(n: usize, c: usize) -> Result<SymmetryClass> {
    SymmetryClass::new(ClassTag::Qtc, BoxDims::new(vec![n, n, c])?)
}

fn anti_diagonal(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).map(move |j| (n - 1 - j, j))
}

/// Raises each anti-diagonal entry `v` of a QTCPP to `max(v, c - v)`.
pub fn hat_map(pi: &PartitionArray, n: usize, c: usize) -> Result<PartitionArray> {
    let class = qtc_class(n, c)?;
    if !class.contains(pi)? {
        return Err(Error::InvalidArgument(format!(
            "not quasi transpose-complementary in the ({n},{n},{c})-box"
        )));
    }
    let mut entries = pi.entries().to_vec();
    for (i, j) in anti_diagonal(n) {
        let v = entries[i * n + j];
        entries[i * n + j] = v.max(c as u32 - v);
    }
    PartitionArray::new(vec![n, n], entries, c as u32)
}

fn is_hat_image(pi: &PartitionArray, n: usize, c: usize) -> Result<bool> {
    let floor = c.div_ceil(2) as u32;
    Ok(qtc_class(n, c)?.contains(pi)? && anti_diagonal(n).all(|(i, j)| pi.get(&[i, j]) >= floor))
}

/// Fiber size of the hat map over `pi_hat`: `2^n` for odd `c`, otherwise
/// `2^{n-d}` with `d` the number of anti-diagonal entries equal to `c/2`.
pub fn omega(pi_hat: &PartitionArray, n: usize, c: usize) -> BigUint {
    let fixed = if c % 2 == 1 {
        0
    } else {
        anti_diagonal(n)
            .filter(|&(i, j)| pi_hat.get(&[i, j]) as usize == c / 2)
            .count()
    };
    BigUint::one() << (n - fixed)
}

/// Grid of hat images: QTCPPs whose upper-left staircase is at least `⌈c/2⌉`.
pub fn hat_image_grid(n: usize, c: usize) -> Result<ConstraintGrid> {
    let mut grid = qtc_class(n, c)?.grid();
    let floor = c.div_ceil(2) as u32;
    for i in 0..n {
        for j in 0..n - i {
            grid.set_min(grid.cell(i, j), floor);
        }
    }
    Ok(grid)
}

/// `Σ ω(π̂)` over all hat images in the `(n,n,c)`-box.
pub fn weighted_hat_count(n: usize, c: usize, budget: u64) -> Result<WeightedCount> {
    let grid = hat_image_grid(n, c)?;
    let (objects, value) = grid.weighted_count(budget, |v| {
        let p = PartitionArray::new(vec![n, n], v.to_vec(), c as u32).expect("solution is a partition");
        omega(&p, n, c)
    })?;
    Ok(WeightedCount { objects, value })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    North,
    East,
}

/// A north/east lattice path in the plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlanePath {
    pub start: (i64, i64),
    pub steps: Vec<Step>,
}

impl PlanePath {
    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut p = self.start;
        let mut out = vec![p];
        for s in &self.steps {
            match s {
                Step::North => p.1 += 1,
                Step::East => p.0 += 1,
            }
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> (i64, i64) {
        *self.points().last().expect("non-empty")
    }
}

pub fn vertex_disjoint(paths: &[PlanePath]) -> bool {
    let mut seen = HashSet::new();
    paths.iter().all(|p| p.points().into_iter().all(|q| seen.insert(q)))
}

fn path_start(i: i64) -> (i64, i64) {
    (2 * i, -i)
}

fn path_end(n: i64, c_hat: i64, i: i64) -> (i64, i64) {
    (n + 1 + i, c_hat - i)
}

/// The non-intersecting path family of a hat image. Path `i` runs from
/// `(2i, -i)` to `(n+1+i, ĉ-i)` and encodes column `i` of the staircase,
/// read from row `n+1-i` up to row 1: the height before each east step is the
/// entry minus `⌈c/2⌉`.
pub fn qtcpp_paths(pi_hat: &PartitionArray, n: usize, c: usize) -> Result<Vec<PlanePath>> {
    if !is_hat_image(pi_hat, n, c)? {
        return Err(Error::InvalidArgument("not a hat image".into()));
    }
    let floor = c.div_ceil(2) as u32;
    let c_hat = (c / 2) as u32;
    let mut paths = Vec::with_capacity(n);
    for col in 1..=n {
        let mut steps = Vec::new();
        let mut rise = 0u32;
        for row in (1..=n + 1 - col).rev() {
            let v = pi_hat.get(&[row - 1, col - 1]) - floor;
            while rise < v {
                steps.push(Step::North);
                rise += 1;
            }
            steps.push(Step::East);
        }
        while rise < c_hat {
            steps.push(Step::North);
            rise += 1;
        }
        paths.push(PlanePath {
            start: path_start(col as i64),
            steps,
        });
    }
    debug_assert!(vertex_disjoint(&paths));
    Ok(paths)
}

/// Inverse of [`qtcpp_paths`].
pub fn paths_to_hat_image(paths: &[PlanePath], n: usize, c: usize) -> Result<PartitionArray> {
    if paths.len() != n {
        return Err(Error::InvalidPath(format!("expected {n} paths, got {}", paths.len())));
    }
    if !vertex_disjoint(paths) {
        return Err(Error::InvalidPath("paths intersect".into()));
    }
    let floor = c.div_ceil(2) as u32;
    let c_hat = (c / 2) as i64;
    let mut entries = vec![0u32; n * n];
    for (idx, path) in paths.iter().enumerate() {
        let col = idx + 1;
        if path.start != path_start(col as i64) || path.end() != path_end(n as i64, c_hat, col as i64) {
            return Err(Error::InvalidPath(format!("path {col} has the wrong endpoints")));
        }
        let mut rise = 0u32;
        let mut row = n + 1 - col;
        for s in &path.steps {
            match s {
                Step::North => rise += 1,
                Step::East => {
                    entries[(row - 1) * n + col - 1] = rise + floor;
                    row -= 1;
                }
            }
        }
    }
    for i in 0..n {
        for j in n - i..n {
            entries[i * n + j] = c as u32 - entries[(n - 1 - j) * n + (n - 1 - i)];
        }
    }
    let pi = PartitionArray::new(vec![n, n], entries, c as u32)?;
    if !is_hat_image(&pi, n, c)? {
        return Err(Error::InvalidPath("paths do not encode a hat image".into()));
    }
    Ok(pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::classes::count_class;
    use crate::symmetry::engine::DEFAULT_BUDGET;

    fn figure_example() -> PartitionArray {
        PartitionArray::from_rows(
            &[
                &[6, 6, 6, 5, 4],
                &[6, 5, 3, 3, 1],
                &[6, 5, 3, 3, 0],
                &[6, 4, 1, 1, 0],
                &[5, 0, 0, 0, 0],
            ],
            6,
        )
        .unwrap()
    }

    #[test]
    fn hat_map_examples() {
        let p = PartitionArray::new(vec![1, 1], vec![1], 3).unwrap();
        assert_eq!(hat_map(&p, 1, 3).unwrap().entries(), &[2]);
        let fig = figure_example();
        assert_eq!(hat_map(&fig, 5, 6).unwrap(), fig);
        let bad = PartitionArray::from_rows(&[&[2, 2], &[2, 2]], 2).unwrap();
        assert!(hat_map(&bad, 2, 2).is_err());
    }

    #[test]
    fn omega_examples() {
        let p = PartitionArray::from_rows(&[&[3, 2, 2], &[2, 2, 1], &[2, 1, 0]], 3).unwrap();
        assert_eq!(omega(&p, 3, 3), BigUint::from(8u32));
        let p = PartitionArray::from_rows(&[&[2, 1], &[1, 0]], 2).unwrap();
        assert_eq!(omega(&p, 2, 2), BigUint::one());
        let w = weighted_hat_count(2, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(w.value, BigUint::from(10u32));
    }

    #[test]
    fn figure_paths() {
        let paths = qtcpp_paths(&figure_example(), 5, 6).unwrap();
        assert!(vertex_disjoint(&paths));
        for (idx, p) in paths.iter().enumerate() {
            let i = idx as i64 + 1;
            assert_eq!(p.start, (2 * i, -i));
            assert_eq!(p.end(), (6 + i, 3 - i));
            assert_eq!(p.steps.len() as i64, 5 + 1 - i + 3);
        }
        assert_eq!(paths_to_hat_image(&paths, 5, 6).unwrap(), figure_example());
    }

    #[test]
    fn single_cell_path() {
        let p = PartitionArray::new(vec![1, 1], vec![2], 3).unwrap();
        let paths = qtcpp_paths(&p, 1, 3).unwrap();
        assert_eq!(paths[0].steps, vec![Step::East, Step::North]);
        assert_eq!(paths[0].steps.len(), 2);
    }

    #[test]
    fn paths_round_trip_and_weights() {
        for (n, c) in [(2, 3), (3, 2), (3, 4)] {
            let grid = hat_image_grid(n, c).unwrap();
            grid.for_each_solution(DEFAULT_BUDGET, |v| {
                let p = PartitionArray::new(vec![n, n], v.to_vec(), c as u32).unwrap();
                let paths = qtcpp_paths(&p, n, c).unwrap();
                assert!(vertex_disjoint(&paths));
                assert_eq!(paths_to_hat_image(&paths, n, c).unwrap(), p);
            })
            .unwrap();
            let total = count_class(&qtc_class(n, c).unwrap(), DEFAULT_BUDGET).unwrap();
            assert_eq!(weighted_hat_count(n, c, DEFAULT_BUDGET).unwrap().value, total);
        }
    }

    #[test]
    fn malformed_paths() {
        let p = PartitionArray::new(vec![1, 1], vec![2], 3).unwrap();
        let mut paths = qtcpp_paths(&p, 1, 3).unwrap();
        paths[0].steps.push(Step::East);
        assert!(paths_to_hat_image(&paths, 1, 3).is_err());
        assert!(paths_to_hat_image(&[], 1, 3).is_err());
    }
}
