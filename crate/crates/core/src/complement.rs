//! Reflections `ρ_I`, `γ_I` and the fully-complementary predicates.
//!
//! Axes are 0-based throughout the API; [`AxisSubset`] prints them 1-based.
//! The reflection of axis `k` sends a 1-based coordinate `x` to
//! `side_k + 1 - x`, which for even sides `2n_k` is `2n_k + 1 - x`. Boxes with
//! odd sides are handled by the same formula.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{
    enumerate_partitions_filtered, Array, BoxDims, FerrersDiagram, Layout, PartitionArray, Point, PrefixFilter,
};

/// A subset `I` of the axes, as a bit mask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AxisSubset(u32);

impl AxisSubset {
    pub const EMPTY: AxisSubset = AxisSubset(0);

    pub fn from_mask(mask: u32) -> Self {
        AxisSubset(mask)
    }

    pub fn from_axes(axes: impl IntoIterator<Item = usize>) -> Self {
        AxisSubset(axes.into_iter().fold(0, |m, k| m | 1 << k))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn contains(self, axis: usize) -> bool {
        self.0 >> axis & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_even(self) -> bool {
        self.len() % 2 == 0
    }

    pub fn symmetric_difference(self, other: AxisSubset) -> AxisSubset {
        AxisSubset(self.0 ^ other.0)
    }

    /// Whether every axis lies below `axes`.
    pub fn fits(self, axes: usize) -> bool {
        axes >= 32 || self.0 >> axes == 0
    }

    pub fn axes(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&k| self.0 >> k & 1 == 1)
    }

    /// All subsets of `{0, …, axes-1}`.
    pub fn all(axes: usize) -> impl Iterator<Item = AxisSubset> {
        (0..1u32 << axes).map(AxisSubset)
    }

    /// The even-size subsets of `{0, …, axes-1}` in Gray-code order: subset
    /// `g` of the first `axes-1` axes, completed by the last axis when `|g|`
    /// is odd. Consecutive subsets differ in one base axis plus the last axis.
    pub fn even_subsets(axes: usize) -> Vec<AxisSubset> {
        assert!(axes >= 1);
        let last = axes - 1;
        (0..1u32 << last)
            .map(|k| {
                let g = k ^ (k >> 1);
                let parity = g.count_ones() % 2;
                AxisSubset(g | parity << last)
            })
            .collect()
    }
}

impl fmt::Display for AxisSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let axes: Vec<String> = self.axes().map(|k| (k + 1).to_string()).collect();
        write!(f, "{{{}}}", axes.join(","))
    }
}

/// `ρ_I` on a 1-based point of a box with the given sides.
pub fn reflect_point(subset: AxisSubset, sides: &[usize], point: &[usize]) -> Result<Point> {
    if point.len() != sides.len() || point.iter().zip(sides).any(|(&x, &s)| x < 1 || x > s) {
        return Err(Error::PointOutsideBox {
            point: point.to_vec(),
            sides: sides.to_vec(),
        });
    }
    Ok(Point(
        point
            .iter()
            .zip(sides)
            .enumerate()
            .map(|(k, (&x, &s))| if subset.contains(k) { s + 1 - x } else { x })
            .collect(),
    ))
}

/// `ρ_{I,n}` on the `(2n_1, …, 2n_{d+1})`-box.
pub fn rho(subset: AxisSubset, n: &BoxDims, point: &[usize]) -> Result<Point> {
    reflect_point(subset, n.doubled().sides(), point)
}

/// Flat offset of the reflection of `off` inside a row-major layout.
pub(crate) fn reflect_offset(layout: &Layout, subset: AxisSubset, off: usize) -> usize {
    let shape = layout.shape();
    let strides = layout.strides();
    let mut out = off;
    for k in subset.axes().take_while(|&k| k < shape.len()) {
        let i = (off / strides[k]) % shape[k];
        out = out - i * strides[k] + (shape[k] - 1 - i) * strides[k];
    }
    out
}

/// Reflects the index grid of an array along the axes in `subset`.
pub fn reflect_array(subset: AxisSubset, shape: &[usize], entries: &[u32]) -> Array {
    let layout = Layout::new(shape);
    let out = (0..layout.len())
        .map(|off| entries[reflect_offset(&layout, subset, off)])
        .collect();
    Array::new(shape.to_vec(), out).expect("same shape")
}

/// `γ_{I,n}(π)`: the entry at `i` is `π` at `ρ_I(i)`. `I` must avoid the
/// height axis `d+1`.
pub fn gamma(subset: AxisSubset, n: &BoxDims, partition: &PartitionArray) -> Result<Array> {
    let d = n.dim();
    if !subset.fits(d) {
        return Err(Error::InvalidAxisSubset {
            mask: subset.mask(),
            reason: "γ acts on the first d axes only".into(),
        });
    }
    let expected: Vec<usize> = n.base().iter().map(|s| 2 * s).collect();
    if partition.shape() != expected.as_slice() {
        return Err(Error::ShapeMismatch {
            expected,
            found: partition.shape().to_vec(),
        });
    }
    Ok(reflect_array(subset, partition.shape(), partition.entries()))
}

/// Def. of fully complementary on the diagram's own box: the images of the
/// diagram under all even-size reflections are pairwise disjoint and tile the
/// box. Works for any side lengths.
pub fn is_fully_complementary(diagram: &FerrersDiagram) -> bool {
    let layout = diagram.layout();
    let axes = diagram.bx().sides().len();
    let subsets: Vec<AxisSubset> = AxisSubset::even_subsets(axes).into_iter().filter(|s| !s.is_empty()).collect();
    for &subset in &subsets {
        if diagram
            .offsets()
            .any(|off| diagram.contains_offset(reflect_offset(layout, subset, off)))
        {
            return false;
        }
    }
    // Disjointness of all pairs follows from the group law; cardinality then
    // decides coverage.
    let covered = diagram.len() << (axes - 1);
    let fc = covered == layout.len();
    debug_assert!(!fc || images_pairwise_disjoint(diagram));
    fc
}

fn images_pairwise_disjoint(diagram: &FerrersDiagram) -> bool {
    let layout = diagram.layout();
    let subsets = AxisSubset::even_subsets(diagram.bx().sides().len());
    let mut owner = vec![None; layout.len()];
    for &subset in &subsets {
        for off in diagram.offsets() {
            let image = reflect_offset(layout, subset, off);
            if owner[image].replace(subset).is_some() {
                return false;
            }
        }
    }
    true
}

/// Fully complementary inside the `(2n_1, …, 2n_{d+1})`-box. Diagrams living
/// in a different box are not.
pub fn is_fc_diagram(diagram: &FerrersDiagram, n: &BoxDims) -> bool {
    diagram.bx() == &n.doubled() && is_fully_complementary(diagram)
}

/// Array form of the predicate for a box with arbitrary sides: for every index
/// `i`, `π_i · π_{ρ_J(i)} = 0` for non-empty even `J ⊆ [d]` and
/// `Σ_{I ⊆ [d]} π_{ρ_I(i)}` equals the height.
pub fn is_fc_array_in(partition: &PartitionArray, bx: &BoxDims) -> bool {
    if partition.shape() != bx.base() {
        return false;
    }
    let height = bx.height() as u64;
    let layout = partition.layout();
    let e = partition.entries();
    if e.iter().any(|&v| v as u64 > height) {
        return false;
    }
    let subsets: Vec<AxisSubset> = AxisSubset::all(bx.dim()).collect();
    (0..layout.len()).all(|off| {
        let mut sum = 0u64;
        for &subset in &subsets {
            let other = e[reflect_offset(&layout, subset, off)];
            if !subset.is_empty() && subset.is_even() && e[off] != 0 && other != 0 {
                return false;
            }
            sum += other as u64;
        }
        sum == height
    })
}

/// Array-form predicate: `π` is fully complementary inside the
/// `(2n_1, …, 2n_{d+1})`-box.
pub fn is_fc_array(partition: &PartitionArray, n: &BoxDims) -> bool {
    is_fc_array_in(partition, &n.doubled())
}

/// Prefix filter implementing the array conditions cell by cell, for boxes with
/// arbitrary sides. Each orbit `{ρ_I(i)}` is closed off by its last cell in
/// row-major order, where the sum condition is checked.
pub struct FcFilter {
    height: u64,
    partners: Vec<Vec<(bool, usize)>>,
    orbit: Vec<Vec<usize>>,
    orbit_last: Vec<bool>,
}

impl FcFilter {
    pub fn new(bx: &BoxDims) -> Self {
        let layout = Layout::new(bx.base());
        let subsets: Vec<AxisSubset> = AxisSubset::all(bx.dim()).collect();
        let mut partners = Vec::with_capacity(layout.len());
        let mut orbit = Vec::with_capacity(layout.len());
        let mut orbit_last = Vec::with_capacity(layout.len());
        for off in 0..layout.len() {
            let images: Vec<usize> = subsets.iter().map(|&s| reflect_offset(&layout, s, off)).collect();
            partners.push(
                subsets
                    .iter()
                    .zip(&images)
                    .filter(|(s, &j)| !s.is_empty() && j <= off)
                    .map(|(s, &j)| (s.is_even(), j))
                    .collect(),
            );
            orbit_last.push(images.iter().all(|&j| j <= off));
            orbit.push(images);
        }
        FcFilter {
            height: bx.height() as u64,
            partners,
            orbit,
            orbit_last,
        }
    }
}

impl PrefixFilter for FcFilter {
    fn admits(&self, entries: &[u32], pos: usize) -> bool {
        let v = entries[pos] as u64;
        for &(even, j) in &self.partners[pos] {
            let w = entries[j] as u64;
            if even {
                if v != 0 && w != 0 {
                    return false;
                }
            } else if v + w > self.height {
                return false;
            }
        }
        let partial: u64 = self.orbit[pos]
            .iter()
            .filter(|&&j| j <= pos)
            .map(|&j| entries[j] as u64)
            .sum();
        if self.orbit_last[pos] {
            partial == self.height
        } else {
            partial <= self.height
        }
    }
}

/// Fully complementary partitions of a box with arbitrary sides, by pruned
/// exhaustive search over all partitions of the box.
pub fn fc_partitions_by_search(bx: &BoxDims) -> impl Iterator<Item = PartitionArray> {
    enumerate_partitions_filtered(bx, FcFilter::new(bx))
}

/// Exhaustive check that a box with at least two odd sides admits no fully
/// complementary diagram. Returns `true` when none exists.
pub fn scan_no_fc_two_odd(bx: &BoxDims) -> Result<bool> {
    let odd = bx.odd_axes().len();
    if odd < 2 {
        return Err(Error::OddSides {
            sides: bx.sides().to_vec(),
            odd,
            expected: "at least 2".into(),
        });
    }
    Ok(fc_partitions_by_search(bx).next().is_none())
}

fn check_single_odd_axis(bx: &BoxDims, axis: usize) -> Result<()> {
    let odd = bx.odd_axes();
    if odd != [axis] {
        return Err(Error::OddSides {
            sides: bx.sides().to_vec(),
            odd: odd.len(),
            expected: format!("exactly one, on axis {}", axis + 1),
        });
    }
    Ok(())
}

/// `Ψ` on a single 1-based point: drops the middle layer of the odd axis and
/// shifts the upper half down. Points on the middle layer map to `None`.
pub fn reduce_point(axis: usize, sides: &[usize], point: &[usize]) -> Option<Point> {
    let middle = sides[axis].div_ceil(2);
    let x = point[axis];
    if x == middle {
        return None;
    }
    let mut p = point.to_vec();
    if x > middle {
        p[axis] -= 1;
    }
    Some(Point(p))
}

/// `Ψ`: deletes the middle layer of the single odd axis.
pub fn reduce_odd_axis(diagram: &FerrersDiagram, axis: usize) -> Result<FerrersDiagram> {
    let bx = diagram.bx();
    check_single_odd_axis(bx, axis)?;
    let sides = bx.sides();
    let reduced = bx.with_side(axis, sides[axis] - 1)?;
    let points: Vec<Point> = diagram
        .points()
        .filter_map(|p| reduce_point(axis, sides, p.coords()))
        .collect();
    FerrersDiagram::from_points(reduced, points.iter().map(|p| p.coords()))
}

/// Inverse of `Ψ` on fully complementary diagrams: reinserts the forced middle
/// layer, which holds exactly the points whose other coordinates lie in the
/// lower half of the box.
pub fn expand_odd_axis(diagram: &FerrersDiagram, axis: usize) -> Result<FerrersDiagram> {
    let bx = diagram.bx();
    let sides = bx.sides().to_vec();
    if sides.iter().any(|s| s % 2 == 1) {
        return Err(Error::OddSides {
            sides,
            odd: bx.odd_axes().len(),
            expected: "0".into(),
        });
    }
    let half = sides[axis] / 2;
    let expanded = bx.with_side(axis, sides[axis] + 1)?;
    let mut points: Vec<Vec<usize>> = diagram
        .points()
        .map(|p| {
            let mut c = p.0;
            if c[axis] > half {
                c[axis] += 1;
            }
            c
        })
        .collect();
    let others: Vec<usize> = (0..sides.len()).filter(|&k| k != axis).collect();
    let lower: Vec<usize> = others.iter().map(|&k| sides[k] / 2).collect();
    let mut counter = vec![1usize; others.len()];
    if lower.iter().all(|&l| l >= 1) {
        loop {
            let mut c = vec![0; sides.len()];
            c[axis] = half + 1;
            for (slot, &k) in others.iter().enumerate() {
                c[k] = counter[slot];
            }
            points.push(c);
            let mut slot = others.len();
            loop {
                if slot == 0 {
                    break;
                }
                slot -= 1;
                counter[slot] += 1;
                if counter[slot] <= lower[slot] {
                    break;
                }
                counter[slot] = 1;
                if slot == 0 {
                    slot = usize::MAX;
                    break;
                }
            }
            if slot == usize::MAX {
                break;
            }
        }
    }
    FerrersDiagram::from_points(expanded, points)
}
