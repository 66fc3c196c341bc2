use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complement::is_fc_array;
use crate::error::{Error, Result};
use crate::lattice::{BoxDims, Layout, PartitionArray};

/// An element of `FCP(n)`: either a genuine array or the empty array of a box
/// with one zero half-length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Fcp {
    Empty,
    Array(PartitionArray),
}

impl Fcp {
    pub fn as_array(&self) -> Option<&PartitionArray> {
        match self {
            Fcp::Empty => None,
            Fcp::Array(p) => Some(p),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Fcp::Empty)
    }
}

impl From<PartitionArray> for Fcp {
    fn from(p: PartitionArray) -> Self {
        Fcp::Array(p)
    }
}

/// One step of the recursive decomposition: `phi(axis, n - e_axis, parent)`
/// reproduces the decomposed array.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FcpDecomposition {
    /// 1-based, in `1..=d+1`.
    pub axis: usize,
    pub parent_box: BoxDims,
    pub parent: Fcp,
}

fn base_shape(n: &BoxDims) -> Vec<usize> {
    n.base().iter().map(|s| 2 * s).collect()
}

fn check_axis(k: usize, n: &BoxDims) -> Result<usize> {
    if k == 0 || k > n.sides().len() {
        return Err(Error::InvalidArgument(format!(
            "axis {k} outside 1..={}",
            n.sides().len()
        )));
    }
    Ok(k - 1)
}

/// Validates that `pi` belongs to `FCP(n)`.
pub fn check_fcp(n: &BoxDims, pi: &Fcp) -> Result<()> {
    match (n.has_zero_side(), pi) {
        (true, Fcp::Empty) => Ok(()),
        (false, Fcp::Array(p)) if is_fc_array(p, n) => Ok(()),
        (true, Fcp::Array(_)) => Err(Error::InvalidArgument(format!(
            "the box with half-lengths {n} only holds the empty array"
        ))),
        (false, _) => Err(Error::NotFullyComplementary(n.doubled().sides().to_vec())),
    }
}

/// `φ_k : FCP(n) → FCP(n + e_k)` with 1-based `k`. For `k ≤ d` two layers of
/// value `n_{d+1}` are inserted after layer `n_k`; for `k = d+1` the corner
/// block `[n_1]×…×[n_d]` is raised by 2.
pub fn phi(k: usize, n: &BoxDims, pi: &Fcp) -> Result<Fcp> {
    check_axis(k, n)?;
    check_fcp(n, pi)?;
    Ok(phi_unchecked(k, n, pi))
}

pub(crate) fn phi_unchecked(k: usize, n: &BoxDims, pi: &Fcp) -> Fcp {
    let axis = k - 1;
    let d = n.dim();
    let h = n.height() as u32;
    let half = n.base();
    let in_corner = |index: &[usize], skip: usize| {
        index
            .iter()
            .zip(half)
            .enumerate()
            .all(|(j, (&i, &nj))| j == skip || i < nj)
    };
    match pi {
        Fcp::Empty => {
            let zero = n.zero_axis().expect("empty array lives in a box with a zero side");
            if axis != zero {
                return Fcp::Empty;
            }
            let target = n.incremented(axis).expect("valid target box");
            let shape = base_shape(&target);
            let layout = Layout::new(&shape);
            let (value, cap) = if axis < d { (h, 2 * h) } else { (2, 2) };
            let entries = layout
                .indices()
                .map(|i| if in_corner(&i, axis) { value } else { 0 })
                .collect();
            Fcp::Array(PartitionArray::from_raw_unchecked(shape, entries, cap))
        }
        Fcp::Array(p) if axis == d => {
            let layout = p.layout();
            let entries = layout
                .indices()
                .zip(p.entries())
                .map(|(i, &v)| if in_corner(&i, d) { v + 2 } else { v })
                .collect();
            Fcp::Array(PartitionArray::from_raw_unchecked(
                p.shape().to_vec(),
                entries,
                p.height_cap() + 2,
            ))
        }
        Fcp::Array(p) => {
            let mut shape = p.shape().to_vec();
            shape[axis] += 2;
            let layout = Layout::new(&shape);
            let source = p.layout();
            let nk = half[axis];
            let entries = layout
                .indices()
                .map(|mut i| {
                    let ik = i[axis];
                    if ik < nk {
                        p.entries()[source.offset(&i)]
                    } else if ik < nk + 2 {
                        if in_corner(&i, axis) {
                            h
                        } else {
                            0
                        }
                    } else {
                        i[axis] -= 2;
                        p.entries()[source.offset(&i)]
                    }
                })
                .collect();
            Fcp::Array(PartitionArray::from_raw_unchecked(shape, entries, p.height_cap()))
        }
    }
}

/// Inverse of the union `FCP(n) = ⊔_k φ_k(FCP(n - e_k))` for `n` with all
/// components positive.
pub fn decompose(pi: &PartitionArray, n: &BoxDims) -> Result<FcpDecomposition> {
    if n.has_zero_side() {
        return Err(Error::InvalidArgument(format!(
            "decomposition needs positive half-lengths, got {n}"
        )));
    }
    if !is_fc_array(pi, n) {
        return Err(Error::NotFullyComplementary(n.doubled().sides().to_vec()));
    }
    let dec = decompose_unchecked(pi, n)?;
    let rebuilt = phi_unchecked(dec.axis, &dec.parent_box, &dec.parent);
    match rebuilt.as_array() {
        Some(r) if r.shape() == pi.shape() && r.entries() == pi.entries() => Ok(dec),
        _ => Err(Error::NotFullyComplementary(n.doubled().sides().to_vec())),
    }
}

pub(crate) fn decompose_unchecked(pi: &PartitionArray, n: &BoxDims) -> Result<FcpDecomposition> {
    let d = n.dim();
    let h = n.height() as u32;
    let half = n.base();
    let layout = pi.layout();
    let corner: Vec<usize> = half.iter().map(|s| s - 1).collect();
    let e = pi.entries();

    if e[layout.offset(&corner)] > h {
        let parent_box = n.decremented(d).expect("positive height");
        let parent = if parent_box.has_zero_side() {
            Fcp::Empty
        } else {
            let entries = layout
                .indices()
                .zip(e)
                .map(|(i, &v)| if i.iter().zip(half).all(|(&a, &b)| a < b) { v - 2 } else { v })
                .collect();
            Fcp::Array(PartitionArray::from_raw_unchecked(
                pi.shape().to_vec(),
                entries,
                2 * (h - 1),
            ))
        };
        return Ok(FcpDecomposition {
            axis: d + 1,
            parent_box,
            parent,
        });
    }

    for axis in 0..d {
        let mut probe = corner.clone();
        probe[axis] += 1;
        if e[layout.offset(&probe)] != h {
            continue;
        }
        let parent_box = n.decremented(axis).expect("positive side");
        let parent = if parent_box.has_zero_side() {
            Fcp::Empty
        } else {
            let nk = half[axis];
            let mut shape = pi.shape().to_vec();
            shape[axis] -= 2;
            let entries = layout
                .indices()
                .zip(e)
                .filter(|(i, _)| i[axis] + 1 != nk && i[axis] != nk)
                .map(|(_, &v)| v)
                .collect();
            Fcp::Array(PartitionArray::from_raw_unchecked(shape, entries, 2 * h))
        };
        return Ok(FcpDecomposition {
            axis: axis + 1,
            parent_box,
            parent,
        });
    }
    Err(Error::NotFullyComplementary(n.doubled().sides().to_vec()))
}

/// All of `FCP(n)`, generated along the disjoint union over the last axis
/// applied. The first-level branches run in parallel.
pub fn enumerate_fcp(n: &BoxDims) -> Vec<Fcp> {
    if n.has_zero_side() {
        return vec![Fcp::Empty];
    }
    let axes = n.sides().len();
    (0..axes)
        .into_par_iter()
        .flat_map_iter(|axis| {
            let parent_box = n.decremented(axis).expect("positive side");
            let mut out = Vec::new();
            enumerate_into(&parent_box, &mut |parent| {
                out.push(phi_unchecked(axis + 1, &parent_box, parent))
            });
            out
        })
        .collect()
}

fn enumerate_into(n: &BoxDims, sink: &mut dyn FnMut(&Fcp)) {
    if n.has_zero_side() {
        sink(&Fcp::Empty);
        return;
    }
    for axis in 0..n.sides().len() {
        let parent_box = n.decremented(axis).expect("positive side");
        enumerate_into(&parent_box, &mut |parent| {
            sink(&phi_unchecked(axis + 1, &parent_box, parent))
        });
    }
}
