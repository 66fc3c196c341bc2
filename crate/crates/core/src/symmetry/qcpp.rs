use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::fcp::Fcp;
use crate::lattice::{BoxDims, PartitionArray};
use crate::symmetry::classes::{is_cyclically_symmetric, is_symmetric, qcpps, ClassTag, SymmetryClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CountMode {
    Recursion,
    Brute,
}

fn doubled(a: usize, b: usize, c: usize) -> Result<BoxDims> {
    BoxDims::new(vec![2 * a, 2 * b, 2 * c])
}

fn half(a: usize, b: usize, c: usize) -> Result<BoxDims> {
    BoxDims::new(vec![a, b, c])
}

fn count_matching(a: usize, b: usize, c: usize, budget: u64, keep: impl Fn(&PartitionArray) -> Result<bool>) -> Result<BigUint> {
    let mut count = BigUint::zero();
    for f in qcpps(&half(a, b, c)?, budget)? {
        match &f {
            Fcp::Empty => count += 1u32,
            Fcp::Array(p) => {
                if keep(p)? {
                    count += 1u32
                }
            }
        }
    }
    Ok(count)
}

/// `|QS(a,c)|`: quasi-symmetric QCPPs in the `(2a,2a,2c)`-box. The recursion is
/// `2|QS(a-1,c)| + |QS(a,c-1)|` with value 1 on the axes; `(0,0)` is 0.
pub fn count_qs_qcpp(a: usize, c: usize, mode: CountMode, budget: u64) -> Result<BigUint> {
    if a == 0 && c == 0 {
        return Ok(BigUint::zero());
    }
    match mode {
        CountMode::Recursion => {
            let mut memo = HashMap::new();
            Ok(qs_recursion(a, c, &mut memo))
        }
        CountMode::Brute => {
            if a == 0 || c == 0 {
                return Ok(BigUint::one());
            }
            let class = SymmetryClass::new(ClassTag::QsQcpp, doubled(a, a, c)?)?;
            count_matching(a, a, c, budget, |p| class.contains(p))
        }
    }
}

fn qs_recursion(a: usize, c: usize, memo: &mut HashMap<(usize, usize), BigUint>) -> BigUint {
    if a == 0 || c == 0 {
        return BigUint::one();
    }
    if let Some(v) = memo.get(&(a, c)) {
        return v.clone();
    }
    let v = qs_recursion(a - 1, c, memo) * 2u32 + qs_recursion(a, c - 1, memo);
    memo.insert((a, c), v.clone());
    v
}

/// Self-complementary QCPPs in the `(2a,2b,2c)`-box, complemented inside the
/// `(2a,2b,c)`-box.
pub fn count_sc_qcpp(a: usize, b: usize, c: usize, budget: u64) -> Result<BigUint> {
    let class = SymmetryClass::new(ClassTag::ScQcpp, doubled(a, b, c)?)?;
    count_matching(a, b, c, budget, |p| class.contains(p))
}

/// Quasi transpose-complementary QCPPs in the `(2a,2a,2c)`-box.
pub fn count_qtc_qcpp(a: usize, c: usize, budget: u64) -> Result<BigUint> {
    let class = SymmetryClass::new(ClassTag::QtcQcpp, doubled(a, a, c)?)?;
    count_matching(a, a, c, budget, |p| class.contains(p))
}

/// Whether the quasi transpose-complementary QCPPs are exactly those that are
/// both quasi-symmetric and self-complementary.
pub fn qtc_is_qs_and_sc(a: usize, c: usize, budget: u64) -> Result<bool> {
    let bx = doubled(a, a, c)?;
    let qtc = SymmetryClass::new(ClassTag::QtcQcpp, bx.clone())?;
    let qs = SymmetryClass::new(ClassTag::QsQcpp, bx.clone())?;
    let sc = SymmetryClass::new(ClassTag::ScQcpp, bx)?;
    for f in qcpps(&half(a, a, c)?, budget)? {
        if let Fcp::Array(p) = &f {
            if qtc.contains(p)? != (qs.contains(p)? && sc.contains(p)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// QCPPs in the `(2a,2a,2c)`-box that are symmetric as plane partitions.
pub fn symmetric_qcpps(a: usize, c: usize, budget: u64) -> Result<Vec<PartitionArray>> {
    Ok(qcpps(&half(a, a, c)?, budget)?
        .into_iter()
        .filter_map(|f| match f {
            Fcp::Array(p) if is_symmetric(&p) => Some(p),
            _ => None,
        })
        .collect())
}

/// The block QCPP with `2c` on the upper-left `a × a` quarter.
pub fn corner_block_qcpp(a: usize, c: usize) -> PartitionArray {
    let n = 2 * a;
    let entries = (0..n * n)
        .map(|k| if k / n < a && k % n < a { 2 * c as u32 } else { 0 })
        .collect();
    PartitionArray::new(vec![n, n], entries, 2 * c as u32).expect("block partition")
}

/// Cyclically symmetric QCPPs in the `(2a,2a,2a)`-box.
pub fn count_cyclic_qcpp(a: usize, budget: u64) -> Result<BigUint> {
    count_matching(a, a, a, budget, |p| Ok(is_cyclically_symmetric(p)))
}
