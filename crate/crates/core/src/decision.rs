//! Can `k` disks of a common radius `r` be centered on distinct vertices
//! without overlapping interiors?
//!
//! Thresholds are passed as `four_r_sq = (2r)^2` and compared against squared
//! center distances, so tangent disks (`d_sq == four_r_sq`) are feasible.
//!
//! The search roots a disk at every vertex in index order and grows the
//! packing along the boundary in both directions. A node keeps the most
//! clockwise and most counter-clockwise centers placed so far (the
//! frontiers); each child places the first admissible vertex strictly beyond
//! one frontier, inside the open arc that still separates them. Depth is `k`
//! and branching is at most two, so one root spans at most `2^k - 1` nodes.

use alloc::vec::Vec;

use crate::error::DispersionError;
use crate::geometry::ConvexPolygon;

/// `k` vertex indices with pairwise squared distance at least `radius_sq4`.
#[derive(Debug, Clone, PartialEq)]
pub struct Packing {
    /// Ascending, distinct.
    pub centers: Vec<usize>,
    /// `(2r)^2` for the packed radius `r`.
    pub radius_sq4: f64,
}

impl Packing {
    pub fn radius(&self) -> f64 {
        libm::sqrt(self.radius_sq4) / 2.0
    }

    /// Smallest squared distance between two centers; infinite for fewer
    /// than two centers.
    pub fn min_pairwise_sq(&self, poly: &ConvexPolygon) -> f64 {
        let mut best = f64::INFINITY;
        for (a, &i) in self.centers.iter().enumerate() {
            for &j in &self.centers[a + 1..] {
                best = best.min(poly.dist_sq(i, j));
            }
        }
        best
    }

    /// Centers are ascending valid indices and no pair is closer than
    /// `radius_sq4` allows.
    pub fn is_valid_for(&self, poly: &ConvexPolygon) -> bool {
        self.centers.windows(2).all(|w| w[0] < w[1])
            && self.centers.iter().all(|&c| c < poly.len())
            && self.min_pairwise_sq(poly) >= self.radius_sq4
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Cw,
    Ccw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Engine {
    /// Candidate-table lookups.
    #[default]
    Fast,
    /// Boundary walk with direct distance checks.
    Naive,
}

/// For each vertex `s`, the vertices at squared distance `>= four_r_sq`
/// from it, as maximal runs of the clockwise cycle starting after `s`.
///
/// Runs are stored as inclusive clockwise offsets from `s` in `1..n`, so
/// they never contain `s` and their cyclic order is plain numeric order.
#[derive(Debug, Clone)]
pub struct CandidateTable {
    n: usize,
    four_r_sq: f64,
    bounds: Vec<u32>,
    runs: Vec<(u32, u32)>,
}

/// Scans every vertex's boundary once per threshold, `O(n^2)` in total.
pub fn precompute_candidates(poly: &ConvexPolygon, four_r_sq: f64) -> CandidateTable {
    let n = poly.len();
    let mut bounds = Vec::with_capacity(n + 1);
    let mut runs = Vec::new();
    bounds.push(0);
    for s in 0..n {
        let mut open: Option<u32> = None;
        for off in 1..n {
            let far = poly.dist_sq(s, (s + off) % n) >= four_r_sq;
            match (far, open) {
                (true, None) => open = Some(off as u32),
                (false, Some(lo)) => {
                    runs.push((lo, off as u32 - 1));
                    open = None;
                }
                _ => {}
            }
        }
        if let Some(lo) = open {
            runs.push((lo, n as u32 - 1));
        }
        bounds.push(runs.len() as u32);
    }
    CandidateTable {
        n,
        four_r_sq,
        bounds,
        runs,
    }
}

impl CandidateTable {
    pub fn four_r_sq(&self) -> f64 {
        self.four_r_sq
    }

    fn runs_of(&self, s: usize) -> &[(u32, u32)] {
        &self.runs[self.bounds[s] as usize..self.bounds[s + 1] as usize]
    }

    pub fn run_count(&self, s: usize) -> usize {
        self.runs_of(s).len()
    }

    /// Runs of `s` as `(first, last)` vertex indices in clockwise order.
    pub fn intervals(&self, s: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        self.runs_of(s)
            .iter()
            .map(move |&(lo, hi)| ((s + lo as usize) % n, (s + hi as usize) % n))
    }

    pub fn contains(&self, s: usize, u: usize) -> bool {
        if u == s {
            return false;
        }
        let off = ((u + self.n - s) % self.n) as u32;
        self.first_at_or_after(s, off) == Some(off)
    }

    /// Smallest member offset of `s` that is `>= off`.
    fn first_at_or_after(&self, s: usize, off: u32) -> Option<u32> {
        let runs = self.runs_of(s);
        let idx = runs.partition_point(|&(_, hi)| hi < off);
        runs.get(idx).map(|&(lo, _)| lo.max(off))
    }

    /// Largest member offset of `s` that is `<= off`.
    fn last_at_or_before(&self, s: usize, off: u32) -> Option<u32> {
        let runs = self.runs_of(s);
        let idx = runs.partition_point(|&(lo, _)| lo <= off);
        idx.checked_sub(1).map(|i| runs[i].1.min(off))
    }
}

/// A node of the search tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchState {
    /// Center of the first disk.
    pub start: usize,
    /// Most clockwise placed center.
    pub cw: usize,
    /// Most counter-clockwise placed center.
    pub ccw: usize,
    /// Centers in placement order, `start` first.
    pub placed: Vec<usize>,
}

impl SearchState {
    pub fn root(start: usize) -> Self {
        SearchState {
            start,
            cw: start,
            ccw: start,
            placed: alloc::vec![start],
        }
    }

    /// Number of vertices strictly inside the arc running clockwise from
    /// `cw` to `ccw`, which is where the next center must go.
    pub fn open_arc_len(&self, n: usize) -> usize {
        if self.cw == self.ccw {
            n - 1
        } else {
            (self.ccw + n - self.cw) % n - 1
        }
    }

    fn place(&mut self, dir: Direction, v: usize) -> usize {
        self.placed.push(v);
        match dir {
            Direction::Cw => core::mem::replace(&mut self.cw, v),
            Direction::Ccw => core::mem::replace(&mut self.ccw, v),
        }
    }

    fn unplace(&mut self, dir: Direction, previous: usize) {
        self.placed.pop();
        match dir {
            Direction::Cw => self.cw = previous,
            Direction::Ccw => self.ccw = previous,
        }
    }
}

/// First vertex beyond the `dir` frontier, inside the open arc, at squared
/// distance `>= four_r_sq` from every placed center.
///
/// Intersects the candidate runs of all placed centers by leapfrogging: each
/// center's table either confirms the current position or pushes it to its
/// next member.
pub fn next_center(
    poly: &ConvexPolygon,
    state: &SearchState,
    dir: Direction,
    four_r_sq: f64,
    table: &CandidateTable,
) -> Option<usize> {
    debug_assert_eq!(table.four_r_sq.to_bits(), four_r_sq.to_bits());
    let n = poly.len();
    let len = state.open_arc_len(n);
    let mut step = 1;
    match dir {
        Direction::Cw => {
            // vertex cw+step sits at offset base+step from placed center p
            'leap: while step <= len {
                for &p in state.placed.iter().rev() {
                    let base = (state.cw + n - p) % n;
                    let off = (base + step) as u32;
                    let next = table.first_at_or_after(p, off)? as usize - base;
                    if next > step {
                        step = next;
                        continue 'leap;
                    }
                }
                return Some((state.cw + step) % n);
            }
        }
        Direction::Ccw => {
            // vertex ccw-step sits at offset base-step from placed center p
            'leap: while step <= len {
                for &p in state.placed.iter().rev() {
                    let base = match (state.ccw + n - p) % n {
                        0 => n,
                        b => b,
                    };
                    let off = (base - step) as u32;
                    let next = base - table.last_at_or_before(p, off)? as usize;
                    if next > step {
                        step = next;
                        continue 'leap;
                    }
                }
                return Some((state.ccw + n - step) % n);
            }
        }
    }
    None
}

/// Reference for [`next_center`]: walk the open arc and check every placed
/// center directly.
pub fn next_center_naive(
    poly: &ConvexPolygon,
    state: &SearchState,
    dir: Direction,
    four_r_sq: f64,
) -> Option<usize> {
    let n = poly.len();
    (1..=state.open_arc_len(n))
        .map(|step| match dir {
            Direction::Cw => (state.cw + step) % n,
            Direction::Ccw => (state.ccw + n - step) % n,
        })
        .find(|&u| state.placed.iter().all(|&p| poly.dist_sq(u, p) >= four_r_sq))
}

/// Counters from one decision.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DecideStats {
    /// Search-tree nodes visited, roots included.
    pub nodes: u64,
    /// Roots whose subtree was explored.
    pub roots: u64,
}

/// Fixed `(polygon, k, threshold, engine)` context; roots can be searched
/// independently, and from several threads.
#[derive(Debug)]
pub struct Decider<'a> {
    poly: &'a ConvexPolygon,
    k: usize,
    four_r_sq: f64,
    table: Option<CandidateTable>,
}

impl<'a> Decider<'a> {
    pub fn new(
        poly: &'a ConvexPolygon,
        k: usize,
        four_r_sq: f64,
        engine: Engine,
    ) -> Result<Self, DispersionError> {
        let n = poly.len();
        if k < 1 || k > n {
            return Err(DispersionError::InvalidK { k, n });
        }
        let table = match engine {
            Engine::Fast if k > 1 => Some(precompute_candidates(poly, four_r_sq)),
            _ => None,
        };
        Ok(Decider {
            poly,
            k,
            four_r_sq,
            table,
        })
    }

    pub fn polygon(&self) -> &ConvexPolygon {
        self.poly
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn four_r_sq(&self) -> f64 {
        self.four_r_sq
    }

    fn next(&self, state: &SearchState, dir: Direction) -> Option<usize> {
        match &self.table {
            Some(table) => next_center(self.poly, state, dir, self.four_r_sq, table),
            None => next_center_naive(self.poly, state, dir, self.four_r_sq),
        }
    }

    /// Depth-first search of the tree rooted at `start`, clockwise child
    /// first. Returns the packing found (if any) and the nodes visited.
    pub fn search_root(&self, start: usize) -> (Option<Packing>, u64) {
        let mut state = SearchState::root(start);
        let mut nodes = 0;
        let found = self.dfs(&mut state, &mut nodes);
        let packing = found.then(|| {
            let mut centers = state.placed;
            centers.sort_unstable();
            Packing {
                centers,
                radius_sq4: self.four_r_sq,
            }
        });
        (packing, nodes)
    }

    fn dfs(&self, state: &mut SearchState, nodes: &mut u64) -> bool {
        *nodes += 1;
        if state.placed.len() == self.k {
            return true;
        }
        let cw = self.next(state, Direction::Cw);
        if let Some(u) = cw {
            let prev = state.place(Direction::Cw, u);
            if self.dfs(state, nodes) {
                return true;
            }
            state.unplace(Direction::Cw, prev);
        }
        // a vertex reachable from both frontiers is one candidate, already tried
        match self.next(state, Direction::Ccw) {
            Some(u) if Some(u) != cw => {
                let prev = state.place(Direction::Ccw, u);
                if self.dfs(state, nodes) {
                    return true;
                }
                state.unplace(Direction::Ccw, prev);
                false
            }
            _ => false,
        }
    }

    /// Roots in index order; stops at the first success.
    pub fn run(&self) -> (Option<Packing>, DecideStats) {
        let mut stats = DecideStats::default();
        for start in 0..self.poly.len() {
            let (packing, nodes) = self.search_root(start);
            stats.nodes += nodes;
            stats.roots += 1;
            if packing.is_some() {
                return (packing, stats);
            }
        }
        (None, stats)
    }
}

/// Decides whether `k` vertices with pairwise squared distance at least
/// `four_r_sq` exist, returning a witness packing if so.
pub fn decide(
    poly: &ConvexPolygon,
    k: usize,
    four_r_sq: f64,
    engine: Engine,
) -> Result<Option<Packing>, DispersionError> {
    decide_with_stats(poly, k, four_r_sq, engine).map(|(p, _)| p)
}

pub fn decide_with_stats(
    poly: &ConvexPolygon,
    k: usize,
    four_r_sq: f64,
    engine: Engine,
) -> Result<(Option<Packing>, DecideStats), DispersionError> {
    Ok(Decider::new(poly, k, four_r_sq, engine)?.run())
}
