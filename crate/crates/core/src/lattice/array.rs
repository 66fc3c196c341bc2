use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Row-major layout of a dense array (last index varies fastest).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Layout {
    shape: Vec<usize>,
    strides: Vec<usize>,
    len: usize,
}

impl Layout {
    pub fn new(shape: &[usize]) -> Self {
        let mut strides = vec![0; shape.len()];
        let mut acc = 1usize;
        for k in (0..shape.len()).rev() {
            strides[k] = acc;
            acc *= shape[k];
        }
        Layout {
            shape: shape.to_vec(),
            strides,
            len: acc,
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn strides(&self) -> &[usize] {
        &self.strides
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Flat offset of a 0-based multi-index.
    pub fn offset(&self, index: &[usize]) -> usize {
        debug_assert_eq!(index.len(), self.shape.len());
        index.iter().zip(&self.strides).map(|(i, s)| i * s).sum()
    }

    pub fn checked_offset(&self, index: &[usize]) -> Option<usize> {
        if index.len() != self.shape.len() || index.iter().zip(&self.shape).any(|(i, n)| i >= n) {
            return None;
        }
        Some(self.offset(index))
    }

    /// 0-based multi-index of a flat offset.
    pub fn unravel(&self, mut offset: usize) -> Vec<usize> {
        self.strides
            .iter()
            .map(|&s| {
                let i = offset / s;
                offset %= s;
                i
            })
            .collect()
    }

    /// Iterates all 0-based multi-indices in row-major order.
    pub fn indices(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.len).map(move |o| self.unravel(o))
    }
}

/// A dense integer array with no ordering constraint on its entries.
///
/// This is what reflections of a partition produce: reversing an axis breaks
/// the weak decrease.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Array {
    shape: Vec<usize>,
    entries: Vec<u32>,
}

impl Array {
    pub fn new(shape: Vec<usize>, entries: Vec<u32>) -> Result<Self> {
        let len: usize = shape.iter().product();
        if len != entries.len() {
            return Err(Error::ShapeMismatch {
                expected: shape,
                found: vec![entries.len()],
            });
        }
        Ok(Array { shape, entries })
    }

    pub fn zeros(shape: Vec<usize>) -> Self {
        let len = shape.iter().product();
        Array {
            shape,
            entries: vec![0; len],
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn layout(&self) -> Layout {
        Layout::new(&self.shape)
    }

    /// Entry at a 0-based index.
    pub fn get(&self, index: &[usize]) -> u32 {
        self.entries[Layout::new(&self.shape).offset(index)]
    }
}

/// A `d`-dimensional partition: a dense array, weakly decreasing along every
/// axis, whose entries are bounded by `height_cap`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartitionArray {
    shape: Vec<usize>,
    entries: Vec<u32>,
    height_cap: u32,
}

impl PartitionArray {
    /// Validates shape, weak decrease and the height bound.
    pub fn new(shape: Vec<usize>, entries: Vec<u32>, height_cap: u32) -> Result<Self> {
        let array = Array::new(shape, entries)?;
        Self::from_array(array, height_cap)
    }

    pub fn from_array(array: Array, height_cap: u32) -> Result<Self> {
        let layout = array.layout();
        for (off, &v) in array.entries.iter().enumerate() {
            if v > height_cap {
                return Err(Error::EntryTooLarge {
                    index: layout.unravel(off),
                    value: v,
                    cap: height_cap,
                });
            }
        }
        if let Some(off) = first_increase(&layout, &array.entries) {
            return Err(Error::NotDecreasing(layout.unravel(off)));
        }
        Ok(PartitionArray {
            shape: array.shape,
            entries: array.entries,
            height_cap,
        })
    }

    /// Builds a partition from row slices of a plane partition.
    pub fn from_rows(rows: &[&[u32]], height_cap: u32) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArgument("ragged rows".into()));
        }
        let entries = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Self::new(vec![rows.len(), cols], entries, height_cap)
    }

    pub(crate) fn from_raw_unchecked(shape: Vec<usize>, entries: Vec<u32>, height_cap: u32) -> Self {
        let p = PartitionArray {
            shape,
            entries,
            height_cap,
        };
        debug_assert!(p.is_weakly_decreasing(), "not a partition: {p:?}");
        p
    }

    pub fn zeros(shape: Vec<usize>, height_cap: u32) -> Self {
        let len = shape.iter().product();
        PartitionArray {
            shape,
            entries: vec![0; len],
            height_cap,
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.shape.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn height_cap(&self) -> u32 {
        self.height_cap
    }

    pub fn layout(&self) -> Layout {
        Layout::new(&self.shape)
    }

    pub fn get(&self, index: &[usize]) -> u32 {
        self.entries[self.layout().offset(index)]
    }

    /// `|π|`, the sum of all entries.
    pub fn size(&self) -> u64 {
        self.entries.iter().map(|&v| u64::from(v)).sum()
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        first_increase(&self.layout(), &self.entries).is_none()
    }

    pub fn to_array(&self) -> Array {
        Array {
            shape: self.shape.clone(),
            entries: self.entries.clone(),
        }
    }

    /// Row `i` of a plane partition.
    pub fn row(&self, i: usize) -> &[u32] {
        assert_eq!(self.dim(), 2, "row() needs a plane partition");
        let cols = self.shape[1];
        &self.entries[i * cols..(i + 1) * cols]
    }
}

fn first_increase(layout: &Layout, entries: &[u32]) -> Option<usize> {
    let shape = layout.shape();
    for off in 0..entries.len() {
        let index = layout.unravel(off);
        for k in 0..shape.len() {
            if index[k] > 0 && entries[off - layout.strides()[k]] < entries[off] {
                return Some(off);
            }
        }
    }
    None
}

fn write_grid(f: &mut fmt::Formatter<'_>, shape: &[usize], entries: &[u32]) -> fmt::Result {
    match shape.len() {
        0 => Ok(()),
        1 => {
            let row: Vec<String> = entries.iter().map(u32::to_string).collect();
            write!(f, "{}", row.join(" "))
        }
        _ => {
            let inner: usize = shape[1..].iter().product();
            for i in 0..shape[0] {
                if i > 0 {
                    if shape.len() == 2 {
                        writeln!(f)?;
                    } else {
                        write!(f, "\n\n")?;
                    }
                }
                write_grid(f, &shape[1..], &entries[i * inner..(i + 1) * inner])?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for PartitionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_grid(f, &self.shape, &self.entries)
    }
}

impl fmt::Display for Array {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_grid(f, &self.shape, &self.entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_round_trips() {
        let l = Layout::new(&[2, 3, 4]);
        assert_eq!(l.len(), 24);
        assert_eq!(l.strides(), &[12, 4, 1]);
        for off in 0..24 {
            assert_eq!(l.offset(&l.unravel(off)), off);
        }
        assert_eq!(l.checked_offset(&[1, 3, 0]), None);
    }

    #[test]
    fn partition_validation() {
        assert!(PartitionArray::from_rows(&[&[2, 0], &[1, 0]], 2).is_ok());
        assert!(matches!(
            PartitionArray::from_rows(&[&[2, 0], &[1, 1]], 2),
            Err(Error::NotDecreasing(ref i)) if i == &vec![1, 1]
        ));
        assert!(matches!(
            PartitionArray::from_rows(&[&[3, 0], &[1, 0]], 2),
            Err(Error::EntryTooLarge { value: 3, .. })
        ));
        assert!(PartitionArray::new(vec![2, 2], vec![1, 1, 1], 1).is_err());
    }

    #[test]
    fn displays_rows() {
        let p = PartitionArray::from_rows(&[&[4, 2], &[1, 0]], 4).unwrap();
        assert_eq!(p.to_string(), "4 2\n1 0");
        assert_eq!(p.size(), 7);
    }
}
