//! The candidate ladder: every distinct squared pairwise distance, sorted.
//!
//! The optimal packing diameter is always the length of some edge or chord,
//! so an optimization over radii reduces to a search over this ladder.

use alloc::vec::Vec;

use crate::geometry::ConvexPolygon;

#[derive(Debug, Clone, Copy, PartialEq)]
struct Rung {
    value: f64,
    i: u32,
    j: u32,
}

/// Ascending distinct squared distances with one witness pair each, plus the
/// `lo`/`hi` cursors of a feasibility binary search over them.
///
/// Cursor invariant while searching: `values[lo]` is known feasible and every
/// index `>= hi` is known infeasible (`hi == len` means nothing is known).
#[derive(Debug, Clone)]
pub struct DistanceLadder {
    rungs: Vec<Rung>,
    lo: usize,
    hi: usize,
}

impl DistanceLadder {
    /// All `n(n-1)/2` unordered pairs, deduplicated by exact equality. The
    /// witness kept for a value is its lexicographically smallest pair.
    pub fn build(poly: &ConvexPolygon) -> Self {
        let n = poly.len();
        let mut rungs = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                rungs.push(Rung {
                    value: poly.dist_sq(i, j),
                    i: i as u32,
                    j: j as u32,
                });
            }
        }
        rungs.sort_unstable_by(|a, b| {
            a.value
                .total_cmp(&b.value)
                .then(a.i.cmp(&b.i))
                .then(a.j.cmp(&b.j))
        });
        rungs.dedup_by(|later, kept| later.value == kept.value);
        rungs.shrink_to_fit();
        let hi = rungs.len();
        DistanceLadder { rungs, lo: 0, hi }
    }

    pub fn len(&self) -> usize {
        self.rungs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rungs.is_empty()
    }

    #[inline]
    pub fn value(&self, idx: usize) -> f64 {
        self.rungs[idx].value
    }

    pub fn values(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        self.rungs.iter().map(|r| r.value)
    }

    pub fn witness(&self, idx: usize) -> (usize, usize) {
        let r = &self.rungs[idx];
        (r.i as usize, r.j as usize)
    }

    /// Index of `value` if it is a rung.
    pub fn position(&self, value: f64) -> Option<usize> {
        self.rungs
            .binary_search_by(|r| r.value.total_cmp(&value))
            .ok()
    }

    pub fn cursors(&self) -> (usize, usize) {
        (self.lo, self.hi)
    }

    pub fn reset_cursors(&mut self) {
        self.lo = 0;
        self.hi = self.rungs.len();
    }

    /// Midpoint of the open range `(lo, hi)`, or `None` once it is empty.
    pub fn probe(&self) -> Option<usize> {
        (self.hi - self.lo > 1).then(|| self.lo + (self.hi - self.lo) / 2)
    }

    pub fn mark_feasible(&mut self, idx: usize) {
        debug_assert!(self.lo <= idx && idx < self.hi);
        self.lo = idx;
    }

    pub fn mark_infeasible(&mut self, idx: usize) {
        debug_assert!(self.lo < idx && idx <= self.hi);
        self.hi = idx;
    }
}
