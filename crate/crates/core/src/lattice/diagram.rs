use crate::error::{Error, Result};

use super::array::{Layout, PartitionArray};
use super::boxdims::{BoxDims, Point};

/// A `d`-dimensional Ferrers diagram: an order ideal of `N_{>0}^{d+1}` stored
/// as a bit field over the cells of its box.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FerrersDiagram {
    bx: BoxDims,
    layout: Layout,
    bits: Vec<u64>,
    len: usize,
}

impl FerrersDiagram {
    pub fn empty(bx: BoxDims) -> Self {
        let layout = Layout::new(bx.sides());
        let words = layout.len().div_ceil(64);
        FerrersDiagram {
            bx,
            layout,
            bits: vec![0; words],
            len: 0,
        }
    }

    pub fn full(bx: BoxDims) -> Self {
        let mut d = Self::empty(bx);
        for off in 0..d.layout.len() {
            d.set_offset(off);
        }
        d
    }

    /// Builds a diagram from 1-based points, rejecting points outside the box
    /// and sets that are not downward closed.
    pub fn from_points<I, P>(bx: BoxDims, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = P>,
        P: AsRef<[usize]>,
    {
        let mut d = Self::empty(bx);
        for p in points {
            d.insert(p.as_ref())?;
        }
        if let Some(bad) = d.closure_violation() {
            return Err(Error::NotDownwardClosed(bad));
        }
        Ok(d)
    }

    pub(crate) fn from_cell_set(bx: BoxDims, cells: impl IntoIterator<Item = usize>) -> Self {
        let mut d = Self::empty(bx);
        for off in cells {
            d.set_offset(off);
        }
        d
    }

    pub fn bx(&self) -> &BoxDims {
        &self.bx
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Membership test for a 1-based point; points outside the box are absent.
    pub fn contains(&self, point: &[usize]) -> bool {
        if !self.bx.contains(point) {
            return false;
        }
        let index: Vec<usize> = point.iter().map(|x| x - 1).collect();
        self.contains_offset(self.layout.offset(&index))
    }

    pub fn contains_offset(&self, off: usize) -> bool {
        self.bits[off / 64] >> (off % 64) & 1 == 1
    }

    fn set_offset(&mut self, off: usize) {
        let word = &mut self.bits[off / 64];
        let mask = 1u64 << (off % 64);
        if *word & mask == 0 {
            *word |= mask;
            self.len += 1;
        }
    }

    fn insert(&mut self, point: &[usize]) -> Result<()> {
        if !self.bx.contains(point) {
            return Err(Error::PointOutsideBox {
                point: point.to_vec(),
                sides: self.bx.sides().to_vec(),
            });
        }
        let index: Vec<usize> = point.iter().map(|x| x - 1).collect();
        let off = self.layout.offset(&index);
        self.set_offset(off);
        Ok(())
    }

    /// Flat offsets of the cells in the diagram, ascending.
    pub fn offsets(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.layout.len()).filter(move |&o| self.contains_offset(o))
    }

    /// 1-based points of the diagram in row-major order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.offsets()
            .map(move |o| Point(self.layout.unravel(o).into_iter().map(|i| i + 1).collect()))
    }

    pub fn is_downward_closed(&self) -> bool {
        self.closure_violation().is_none()
    }

    fn closure_violation(&self) -> Option<Vec<usize>> {
        let strides = self.layout.strides();
        for off in self.offsets() {
            let index = self.layout.unravel(off);
            for k in 0..index.len() {
                if index[k] > 0 && !self.contains_offset(off - strides[k]) {
                    return Some(index.iter().map(|i| i + 1).collect());
                }
            }
        }
        None
    }
}

/// Column heights of a Ferrers diagram: entry `(i_1, …, i_d)` counts the `k`
/// with `(i_1, …, i_d, k)` in the diagram.
pub fn array_from_diagram(diagram: &FerrersDiagram) -> PartitionArray {
    let bx = diagram.bx();
    let height = bx.height();
    let base = Layout::new(bx.base());
    let mut entries = vec![0u32; base.len()];
    for (col, e) in entries.iter_mut().enumerate() {
        let start = col * height;
        *e = (0..height)
            .take_while(|&k| diagram.contains_offset(start + k))
            .count() as u32;
    }
    PartitionArray::from_raw_unchecked(bx.base().to_vec(), entries, height as u32)
}

/// Inverse of [`array_from_diagram`].
pub fn diagram_from_array(partition: &PartitionArray, bx: &BoxDims) -> Result<FerrersDiagram> {
    if partition.shape() != bx.base() {
        return Err(Error::ShapeMismatch {
            expected: bx.base().to_vec(),
            found: partition.shape().to_vec(),
        });
    }
    let height = bx.height();
    let layout = partition.layout();
    for (off, &v) in partition.entries().iter().enumerate() {
        if v as usize > height {
            return Err(Error::EntryTooLarge {
                index: layout.unravel(off),
                value: v,
                cap: height as u32,
            });
        }
    }
    let cells = partition
        .entries()
        .iter()
        .enumerate()
        .flat_map(|(col, &v)| (0..v as usize).map(move |k| col * height + k));
    Ok(FerrersDiagram::from_cell_set(bx.clone(), cells))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &[usize]) -> BoxDims {
        BoxDims::new(s.to_vec()).unwrap()
    }

    #[test]
    fn three_cell_example() {
        let d = FerrersDiagram::from_points(b(&[2, 2, 2]), [[1, 1, 1], [1, 1, 2], [2, 1, 1]]).unwrap();
        let p = array_from_diagram(&d);
        assert_eq!(p, PartitionArray::from_rows(&[&[2, 0], &[1, 0]], 2).unwrap());
        assert_eq!(diagram_from_array(&p, &b(&[2, 2, 2])).unwrap(), d);
    }

    #[test]
    fn empty_and_full() {
        let bx = b(&[2, 2, 2]);
        let e = array_from_diagram(&FerrersDiagram::empty(bx.clone()));
        assert_eq!(e.entries(), &[0, 0, 0, 0]);
        let f = array_from_diagram(&FerrersDiagram::full(bx.clone()));
        assert_eq!(f.entries(), &[2, 2, 2, 2]);
        assert_eq!(f.height_cap(), 2);
        assert!(diagram_from_array(&e, &bx).unwrap().is_empty());
    }

    #[test]
    fn rejects_non_ideals_and_outside_points() {
        let bx = b(&[2, 2, 2]);
        assert!(matches!(
            FerrersDiagram::from_points(bx.clone(), [[1, 1, 2]]),
            Err(Error::NotDownwardClosed(_))
        ));
        assert!(matches!(
            FerrersDiagram::from_points(bx, [[3, 1, 1]]),
            Err(Error::PointOutsideBox { .. })
        ));
    }

    #[test]
    fn rejects_entries_above_height() {
        let p = PartitionArray::from_rows(&[&[3, 0], &[1, 0]], 3).unwrap();
        assert!(matches!(
            diagram_from_array(&p, &b(&[2, 2, 2])),
            Err(Error::EntryTooLarge { value: 3, .. })
        ));
        assert!(diagram_from_array(&p, &b(&[2, 3, 3])).is_err());
    }
}
