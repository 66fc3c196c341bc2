use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fcp::phi::{check_fcp, decompose_unchecked, phi_unchecked, Fcp};
use crate::lattice::BoxDims;

/// A lattice path with unit steps. Steps are 1-based axis indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePath {
    pub start: Vec<usize>,
    pub steps: Vec<usize>,
}

impl LatticePath {
    pub fn new(start: Vec<usize>, steps: Vec<usize>) -> Result<Self> {
        let path = LatticePath { start, steps };
        path.validate()?;
        Ok(path)
    }

    /// Starts on the boundary (exactly one zero coordinate) and is positive
    /// everywhere after the first step.
    pub fn validate(&self) -> Result<()> {
        let axes = self.start.len();
        if axes < 2 {
            return Err(Error::InvalidPath("need at least two coordinates".into()));
        }
        let zeros: Vec<usize> = (0..axes).filter(|&k| self.start[k] == 0).collect();
        if zeros.len() != 1 {
            return Err(Error::InvalidPath(format!(
                "start {:?} must have exactly one zero coordinate",
                self.start
            )));
        }
        if let Some(&bad) = self.steps.iter().find(|&&k| k == 0 || k > axes) {
            return Err(Error::InvalidPath(format!("step e_{bad} outside 1..={axes}")));
        }
        if let Some(&first) = self.steps.first() {
            if first != zeros[0] + 1 {
                return Err(Error::InvalidPath(format!(
                    "coordinate {} is still zero after the first step e_{first}",
                    zeros[0] + 1
                )));
            }
        }
        Ok(())
    }

    pub fn end(&self) -> Vec<usize> {
        let mut p = self.start.clone();
        for &k in &self.steps {
            p[k - 1] += 1;
        }
        p
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let start: Vec<String> = self.start.iter().map(|x| x.to_string()).collect();
        let steps: Vec<String> = self.steps.iter().map(|k| format!("e{k}")).collect();
        write!(f, "({}) + [{}]", start.join(","), steps.join(","))
    }
}

/// Decomposes down to the empty array; the path runs from that empty box to `n`.
pub fn fcp_to_path(pi: &Fcp, n: &BoxDims) -> Result<LatticePath> {
    check_fcp(n, pi)?;
    let mut steps = Vec::new();
    let mut current = pi.clone();
    let mut bx = n.clone();
    while let Fcp::Array(p) = &current {
        let dec = decompose_unchecked(p, &bx)?;
        steps.push(dec.axis);
        bx = dec.parent_box;
        current = dec.parent;
    }
    steps.reverse();
    LatticePath::new(bx.sides().to_vec(), steps)
}

/// Folds `φ` along the steps, starting from the empty array at the start point.
pub fn path_to_fcp(path: &LatticePath) -> Result<Fcp> {
    path.validate()?;
    let mut bx = BoxDims::new(path.start.clone())?;
    let mut current = Fcp::Empty;
    for &k in &path.steps {
        current = phi_unchecked(k, &bx, &current);
        bx = bx.incremented(k - 1)?;
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::PartitionArray;

    fn worked_example() -> PartitionArray {
        PartitionArray::from_rows(
            &[&[4, 2, 2, 0], &[3, 2, 2, 0], &[2, 2, 0, 0], &[2, 2, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 0]],
            4,
        )
        .unwrap()
    }

    #[test]
    fn worked_example_path() {
        let n = BoxDims::new(vec![3, 2, 2]).unwrap();
        let path = fcp_to_path(&Fcp::Array(worked_example()), &n).unwrap();
        assert_eq!(path.start, vec![1, 1, 0]);
        assert_eq!(path.steps, vec![3, 1, 3, 2, 1]);
        assert_eq!(path.end(), vec![3, 2, 2]);
        assert_eq!(path_to_fcp(&path).unwrap(), Fcp::Array(worked_example()));
    }

    #[test]
    fn short_paths() {
        let p = LatticePath::new(vec![1, 1, 0], vec![3]).unwrap();
        let pi = path_to_fcp(&p).unwrap();
        assert_eq!(pi, Fcp::Array(PartitionArray::from_rows(&[&[2, 0], &[0, 0]], 2).unwrap()));
        let n = BoxDims::new(vec![1, 1, 1]).unwrap();
        assert_eq!(fcp_to_path(&pi, &n).unwrap(), p);

        let p = LatticePath::new(vec![0, 1], vec![1]).unwrap();
        let pi = path_to_fcp(&p).unwrap();
        assert_eq!(pi.as_array().unwrap().entries(), &[1, 1]);

        let empty = LatticePath::new(vec![2, 0, 1], vec![]).unwrap();
        assert_eq!(path_to_fcp(&empty).unwrap(), Fcp::Empty);
    }

    #[test]
    fn invalid_paths() {
        assert!(LatticePath::new(vec![1, 1, 0], vec![1, 3]).is_err());
        assert!(LatticePath::new(vec![1, 1, 1], vec![1]).is_err());
        assert!(LatticePath::new(vec![0, 0, 1], vec![1]).is_err());
        assert!(LatticePath::new(vec![1, 0], vec![2, 3]).is_err());
        let bad = LatticePath {
            start: vec![0, 2],
            steps: vec![2, 1],
        };
        assert!(path_to_fcp(&bad).is_err());
    }
}
