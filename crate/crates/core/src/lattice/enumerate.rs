use super::array::{Layout, PartitionArray};
use super::boxdims::BoxDims;

/// A predicate over partitions that may reject partial fillings early.
///
/// Cells are filled in row-major order. `admits` is called right after cell
/// `pos` received its value; `entries[..=pos]` are assigned. Returning `false`
/// must only happen when *no* completion of the prefix is accepted, so pruning
/// never changes the set of yielded partitions.
pub trait PrefixFilter {
    fn admits(&self, _entries: &[u32], _pos: usize) -> bool {
        true
    }

    fn accepts(&self, _entries: &[u32]) -> bool {
        true
    }
}

/// Accepts every partition.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoFilter;

impl PrefixFilter for NoFilter {}

impl<F: PrefixFilter + ?Sized> PrefixFilter for &F {
    fn admits(&self, entries: &[u32], pos: usize) -> bool {
        (**self).admits(entries, pos)
    }

    fn accepts(&self, entries: &[u32]) -> bool {
        (**self).accepts(entries)
    }
}

/// Depth-first walk over all partitions in a box.
///
/// The bound for each cell is the minimum over its already-filled axis
/// predecessors (and the box height), so weak decrease holds by construction
/// and partitions come out in lexicographic order of their flattened entries.
pub struct PartitionSearch<F> {
    bx: BoxDims,
    filter: F,
    preds: Vec<Vec<usize>>,
    entries: Vec<u32>,
    height: u32,
    pos: usize,
    started: bool,
    done: bool,
    nodes: u64,
}

impl<F: PrefixFilter> PartitionSearch<F> {
    pub fn new(bx: BoxDims, filter: F) -> Self {
        let layout = Layout::new(bx.base());
        let preds = (0..layout.len())
            .map(|off| {
                let index = layout.unravel(off);
                (0..index.len())
                    .filter(|&k| index[k] > 0)
                    .map(|k| off - layout.strides()[k])
                    .collect()
            })
            .collect();
        let height = bx.height() as u32;
        PartitionSearch {
            entries: vec![0; layout.len()],
            bx,
            filter,
            preds,
            height,
            pos: 0,
            started: false,
            done: false,
            nodes: 0,
        }
    }

    pub fn bx(&self) -> &BoxDims {
        &self.bx
    }

    /// Number of cell assignments tried so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// Flattened entries of the current partition (valid after `advance`
    /// returned `true`).
    pub fn current(&self) -> &[u32] {
        &self.entries
    }

    fn bound(&self, pos: usize) -> u32 {
        self.preds[pos]
            .iter()
            .map(|&p| self.entries[p])
            .min()
            .unwrap_or(self.height)
    }

    fn admits(&mut self, pos: usize) -> bool {
        self.nodes += 1;
        self.filter.admits(&self.entries, pos)
    }

    /// Next admissible value at `pos`, backtracking as needed.
    fn bump(&mut self) -> bool {
        loop {
            self.entries[self.pos] += 1;
            if self.entries[self.pos] > self.bound(self.pos) {
                if self.pos == 0 {
                    return false;
                }
                self.pos -= 1;
                continue;
            }
            if self.admits(self.pos) {
                return true;
            }
        }
    }

    /// Fills the remaining cells with their smallest admissible values.
    fn descend(&mut self) -> bool {
        while self.pos + 1 < self.entries.len() {
            self.pos += 1;
            self.entries[self.pos] = 0;
            if !self.admits(self.pos) && !self.bump() {
                return false;
            }
        }
        true
    }

    /// Moves to the next accepted partition.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if self.entries.is_empty() {
            // A box with an empty base holds exactly one (empty) array.
            self.done = true;
            return !self.started && {
                self.started = true;
                self.filter.accepts(&self.entries)
            };
        }
        let mut found = if !self.started {
            self.started = true;
            self.pos = 0;
            self.entries[0] = 0;
            (self.admits(0) || self.bump()) && self.descend()
        } else {
            self.bump() && self.descend()
        };
        while found && !self.filter.accepts(&self.entries) {
            found = self.bump() && self.descend();
        }
        if !found {
            self.done = true;
        }
        found
    }

    pub fn current_partition(&self) -> PartitionArray {
        PartitionArray::from_raw_unchecked(self.bx.base().to_vec(), self.entries.clone(), self.height)
    }

    /// Number of remaining accepted partitions.
    pub fn count_remaining(&mut self) -> u64 {
        let mut n = 0;
        while self.advance() {
            n += 1;
        }
        n
    }
}

impl<F: PrefixFilter> Iterator for PartitionSearch<F> {
    type Item = PartitionArray;

    fn next(&mut self) -> Option<PartitionArray> {
        if self.advance() {
            let p = self.current_partition();
            debug_assert!(p.is_weakly_decreasing());
            Some(p)
        } else {
            None
        }
    }
}

/// All partitions in `bx`, each exactly once, lexicographically.
///
/// A box with a zero base side yields one empty array; a box of height zero
/// yields the all-zero array.
pub fn enumerate_partitions(bx: &BoxDims) -> PartitionSearch<NoFilter> {
    PartitionSearch::new(bx.clone(), NoFilter)
}

pub fn enumerate_partitions_filtered<F: PrefixFilter>(bx: &BoxDims, filter: F) -> PartitionSearch<F> {
    PartitionSearch::new(bx.clone(), filter)
}

pub fn count_partitions(bx: &BoxDims) -> u64 {
    enumerate_partitions(bx).count_remaining()
}
