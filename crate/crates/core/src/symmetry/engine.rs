use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 50_000_000;

const UNSET: u32 = u32::MAX;

/// How two cells of a grid are tied together.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Equal,
    /// The two entries add up to the grid's total.
    Complement,
}

/// Plane partitions in an `rows × cols` grid with entries in `[0, cap]`,
/// subject to pairwise equal/complement relations and per-cell lower bounds.
/// Cells are 0-based row-major offsets.
#[derive(Clone, Debug)]
pub struct ConstraintGrid {
    rows: usize,
    cols: usize,
    cap: u32,
    total: u32,
    links: Vec<(usize, usize, Relation)>,
    min: Vec<u32>,
}

struct Orbit {
    members: Vec<(usize, bool)>,
    forced: Option<u32>,
}

/// Representatives in row-major order, each with the cells it determines.
struct Plan {
    orbits: Vec<Orbit>,
    infeasible: bool,
}

fn find(parent: &mut [(usize, bool)], x: usize) -> (usize, bool) {
    let (p, flip) = parent[x];
    if p == x {
        return (x, false);
    }
    let (root, f) = find(parent, p);
    parent[x] = (root, flip ^ f);
    (root, flip ^ f)
}

impl ConstraintGrid {
    pub fn new(rows: usize, cols: usize, cap: u32, total: u32) -> Self {
        ConstraintGrid {
            rows,
            cols,
            cap,
            total,
            links: Vec::new(),
            min: vec![0; rows * cols],
        }
    }

    pub fn cell(&self, i: usize, j: usize) -> usize {
        i * self.cols + j
    }

    pub fn link(&mut self, p: usize, q: usize, relation: Relation) {
        self.links.push((p, q, relation));
    }

    pub fn set_min(&mut self, cell: usize, value: u32) {
        self.min[cell] = value;
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Whether a full assignment satisfies every relation, bound and the
    /// plane-partition order.
    pub fn accepts(&self, values: &[u32]) -> bool {
        if values.len() != self.rows * self.cols {
            return false;
        }
        let ordered = (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                let v = values[self.cell(i, j)];
                v <= self.cap
                    && v >= self.min[self.cell(i, j)]
                    && (i == 0 || values[self.cell(i - 1, j)] >= v)
                    && (j == 0 || values[self.cell(i, j - 1)] >= v)
            })
        });
        ordered
            && self.links.iter().all(|&(p, q, r)| match r {
                Relation::Equal => values[p] == values[q],
                Relation::Complement => values[p] + values[q] == self.total,
            })
    }

    fn plan(&self) -> Plan {
        let len = self.rows * self.cols;
        let mut parent: Vec<(usize, bool)> = (0..len).map(|x| (x, false)).collect();
        let mut self_complement = vec![false; len];
        for &(p, q, r) in &self.links {
            let flip = r == Relation::Complement;
            let (rp, fp) = find(&mut parent, p);
            let (rq, fq) = find(&mut parent, q);
            if rp == rq {
                if fp ^ fq != flip {
                    self_complement[rp] = true;
                }
            } else {
                let (lo, hi) = if rp < rq { (rp, rq) } else { (rq, rp) };
                parent[hi] = (lo, fp ^ fq ^ flip);
            }
        }
        let mut index_of = vec![usize::MAX; len];
        let mut orbits: Vec<Orbit> = Vec::new();
        let mut infeasible = false;
        for cell in 0..len {
            let (root, flip) = find(&mut parent, cell);
            if index_of[root] == usize::MAX {
                index_of[root] = orbits.len();
                orbits.push(Orbit {
                    members: Vec::new(),
                    forced: None,
                });
            }
            orbits[index_of[root]].members.push((cell, flip));
        }
        for (root, &sc) in self_complement.iter().enumerate() {
            if sc {
                let orbit = &mut orbits[index_of[find(&mut parent, root).0]];
                if self.total % 2 == 1 {
                    infeasible = true;
                }
                orbit.forced = Some(self.total / 2);
            }
        }
        Plan { orbits, infeasible }
    }

    fn fits(&self, vals: &[u32], cell: usize, v: u32) -> bool {
        if v > self.cap || v < self.min[cell] {
            return false;
        }
        let (i, j) = (cell / self.cols, cell % self.cols);
        let check_above = |n: usize| vals[n] == UNSET || vals[n] >= v;
        let check_below = |n: usize| vals[n] == UNSET || vals[n] <= v;
        (i == 0 || check_above(cell - self.cols))
            && (j == 0 || check_above(cell - 1))
            && (i + 1 == self.rows || check_below(cell + self.cols))
            && (j + 1 == self.cols || check_below(cell + 1))
    }

    fn assign(&self, orbit: &Orbit, v: u32, vals: &mut [u32]) -> bool {
        for (k, &(cell, flip)) in orbit.members.iter().enumerate() {
            let value = if flip {
                match self.total.checked_sub(v) {
                    Some(x) => x,
                    None => {
                        Self::unassign(&orbit.members[..k], vals);
                        return false;
                    }
                }
            } else {
                v
            };
            if !self.fits(vals, cell, value) {
                Self::unassign(&orbit.members[..k], vals);
                return false;
            }
            vals[cell] = value;
        }
        true
    }

    fn unassign(members: &[(usize, bool)], vals: &mut [u32]) {
        for &(cell, _) in members {
            vals[cell] = UNSET;
        }
    }

    fn range(&self, orbit: &Orbit) -> (u32, u32) {
        match orbit.forced {
            Some(f) => (f, f),
            None => (0, self.cap),
        }
    }

    fn dfs(
        &self,
        plan: &Plan,
        k: usize,
        vals: &mut [u32],
        nodes: &AtomicU64,
        budget: u64,
        visit: &mut dyn FnMut(&[u32]),
    ) -> Result<()> {
        if k == plan.orbits.len() {
            visit(vals);
            return Ok(());
        }
        let orbit = &plan.orbits[k];
        let (lo, hi) = self.range(orbit);
        let rep = orbit.members[0].0;
        let (i, j) = (rep / self.cols, rep % self.cols);
        let mut hi = hi;
        if i > 0 {
            hi = hi.min(vals[rep - self.cols]);
        }
        if j > 0 {
            hi = hi.min(vals[rep - 1]);
        }
        let lo = lo.max(self.min[rep]);
        let mut v = lo;
        while v <= hi {
            if nodes.fetch_add(1, Ordering::Relaxed) >= budget {
                return Err(Error::BudgetExceeded(budget));
            }
            if self.assign(orbit, v, vals) {
                let r = self.dfs(plan, k + 1, vals, nodes, budget, visit);
                Self::unassign(&orbit.members, vals);
                r?;
            }
            v += 1;
        }
        Ok(())
    }

    /// Calls `visit` on every solution, in lexicographic order of the
    /// representatives.
    pub fn for_each_solution(&self, budget: u64, mut visit: impl FnMut(&[u32])) -> Result<u64> {
        let plan = self.plan();
        let nodes = AtomicU64::new(0);
        if plan.infeasible {
            return Ok(0);
        }
        let mut vals = vec![UNSET; self.rows * self.cols];
        self.dfs(&plan, 0, &mut vals, &nodes, budget, &mut visit)?;
        Ok(nodes.into_inner())
    }

    /// Parallel fold over the values of the first representative. Returns the
    /// number of solutions and the sum of `weight` over them.
    pub fn weighted_count(&self, budget: u64, weight: impl Fn(&[u32]) -> BigUint + Sync) -> Result<(u64, BigUint)> {
        let plan = self.plan();
        if plan.infeasible {
            return Ok((0, BigUint::zero()));
        }
        let len = self.rows * self.cols;
        if plan.orbits.is_empty() {
            return Ok((1, weight(&[])));
        }
        let nodes = AtomicU64::new(0);
        let first = &plan.orbits[0];
        let (lo, hi) = self.range(first);
        let lo = lo.max(self.min[first.members[0].0]);
        let partials: Vec<Result<(u64, BigUint)>> = (lo..=hi)
            .into_par_iter()
            .map(|v| {
                let mut vals = vec![UNSET; len];
                if nodes.fetch_add(1, Ordering::Relaxed) >= budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                let mut count = 0u64;
                let mut sum = BigUint::zero();
                if self.assign(first, v, &mut vals) {
                    self.dfs(&plan, 1, &mut vals, &nodes, budget, &mut |sol| {
                        count += 1;
                        sum += weight(sol);
                    })?;
                }
                Ok((count, sum))
            })
            .collect();
        let mut count = 0;
        let mut sum = BigUint::zero();
        for p in partials {
            let (c, s) = p?;
            count += c;
            sum += s;
        }
        Ok((count, sum))
    }

    pub fn count(&self, budget: u64) -> Result<u64> {
        Ok(self.weighted_count(budget, |_| BigUint::zero())?.0)
    }
}
