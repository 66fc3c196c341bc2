use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::complement::{expand_odd_axis, fc_partitions_by_search};
use crate::error::Result;
use crate::fcp::phi::{enumerate_fcp, Fcp};
use crate::lattice::{array_from_diagram, diagram_from_array, BoxDims, PartitionArray};

/// Memoized `|FCP(n)|` through `count(n) = Σ_k count(n - e_k)`. The table is
/// shared across queries and threads; entries with `Σ n_i` above the degree
/// cap are computed but not kept.
#[derive(Debug, Default)]
pub struct FcpCounter {
    memo: RwLock<HashMap<Vec<usize>, BigUint>>,
    degree_cap: Option<usize>,
}

impl FcpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_degree_cap(cap: usize) -> Self {
        FcpCounter {
            memo: RwLock::default(),
            degree_cap: Some(cap),
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }

    fn lookup(&self, n: &[usize]) -> Option<BigUint> {
        if n.iter().filter(|&&s| s == 0).count() == 1 {
            return Some(BigUint::one());
        }
        self.memo.read().expect("memo lock").get(n).cloned()
    }

    pub fn count(&self, n: &BoxDims) -> BigUint {
        let mut local: HashMap<Vec<usize>, BigUint> = HashMap::new();
        let mut stack = vec![n.sides().to_vec()];
        while let Some(top) = stack.last().cloned() {
            if local.contains_key(&top) || self.lookup(&top).is_some() {
                stack.pop();
                continue;
            }
            let mut total = BigUint::zero();
            let mut missing = false;
            for k in 0..top.len() {
                let mut child = top.clone();
                child[k] -= 1;
                match local.get(&child).cloned().or_else(|| self.lookup(&child)) {
                    Some(c) => total += c,
                    None => {
                        missing = true;
                        stack.push(child);
                    }
                }
            }
            if !missing {
                stack.pop();
                local.insert(top, total);
            }
        }
        let result = self
            .lookup(n.sides())
            .or_else(|| local.get(n.sides()).cloned())
            .expect("computed");
        let mut memo = self.memo.write().expect("memo lock");
        for (key, value) in local {
            if self.degree_cap.map_or(true, |cap| key.iter().sum::<usize>() <= cap) {
                memo.insert(key, value);
            }
        }
        result
    }
}

/// `|FCP(n)|` for half-lengths `n` with at most one zero component.
pub fn count_fcp(n: &BoxDims) -> BigUint {
    FcpCounter::new().count(n)
}

/// Number of fully complementary diagrams in a box with arbitrary sides. One
/// odd side is removed by `Ψ`; two or more leave nothing.
pub fn count_fc_in_box(bx: &BoxDims) -> BigUint {
    match reduced_half_lengths(bx) {
        Some(n) => count_fcp(&n),
        None => BigUint::zero(),
    }
}

fn reduced_half_lengths(bx: &BoxDims) -> Option<BoxDims> {
    let odd = bx.odd_axes();
    if odd.len() > 1 {
        return None;
    }
    let half: Vec<usize> = bx.sides().iter().map(|s| s / 2).collect();
    BoxDims::new(half).ok()
}

/// The fully complementary partitions of a box with arbitrary sides, as height
/// arrays. Even boxes come from the recursion, one odd side through `Ψ⁻¹`.
pub fn enumerate_fc_in_box(bx: &BoxDims) -> Result<Vec<PartitionArray>> {
    let odd = bx.odd_axes();
    if odd.len() > 1 {
        return Ok(Vec::new());
    }
    if bx.has_zero_side() {
        return Ok(fc_partitions_by_search(bx).collect());
    }
    let n = reduced_half_lengths(bx).expect("one odd side at most");
    let even = n.doubled();
    let arrays: Vec<PartitionArray> = enumerate_fcp(&n)
        .into_iter()
        .map(|f| match f {
            Fcp::Array(p) => p,
            Fcp::Empty => PartitionArray::zeros(even.base().to_vec(), even.height() as u32),
        })
        .collect();
    match odd.first() {
        None => Ok(arrays),
        Some(&axis) => arrays
            .iter()
            .map(|p| {
                let diagram = diagram_from_array(p, &even)?;
                Ok(array_from_diagram(&expand_odd_axis(&diagram, axis)?))
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &[usize]) -> BoxDims {
        BoxDims::new(s.to_vec()).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_fcp(&b(&[1, 1, 1, 1])), BigUint::from(4u32));
        assert_eq!(count_fcp(&b(&[1, 1, 1])), BigUint::from(3u32));
        assert_eq!(count_fcp(&b(&[1, 1])), BigUint::from(2u32));
        assert_eq!(count_fcp(&b(&[1, 0])), BigUint::one());
    }

    #[test]
    fn one_dimensional_counts_are_binomials() {
        let counter = FcpCounter::new();
        for a in 0..12usize {
            for c in 0..12usize {
                if a == 0 && c == 0 {
                    continue;
                }
                let n = b(&[a, c]);
                let binom = num_integer::binomial(BigUint::from(a + c), BigUint::from(a));
                assert_eq!(counter.count(&n), binom, "{n}");
            }
        }
    }

    #[test]
    fn deep_boxes_do_not_recurse() {
        let c = count_fcp(&b(&[3000, 2]));
        assert_eq!(c, BigUint::from(3002u64 * 3001 / 2));
    }

    #[test]
    fn degree_cap_limits_the_memo() {
        let counter = FcpCounter::with_degree_cap(3);
        counter.count(&b(&[3, 3, 3]));
        let uncapped = FcpCounter::new();
        uncapped.count(&b(&[3, 3, 3]));
        assert!(counter.memo_len() < uncapped.memo_len());
    }

    #[test]
    fn odd_boxes() {
        assert_eq!(count_fc_in_box(&b(&[3, 3, 2])), BigUint::zero());
        assert_eq!(count_fc_in_box(&b(&[2, 2, 3])), BigUint::from(3u32));
        let all = enumerate_fc_in_box(&b(&[2, 3, 2])).unwrap();
        let searched: Vec<_> = fc_partitions_by_search(&b(&[2, 3, 2])).collect();
        let mut all_sorted = all.clone();
        all_sorted.sort();
        let mut searched_sorted = searched;
        searched_sorted.sort();
        assert_eq!(all_sorted, searched_sorted);
    }
}
