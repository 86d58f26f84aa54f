//! Logarithmic-time approximation for `k = 3`.
//!
//! The four extreme vertices (min x, max y, max x, min y) are located by
//! binary search on the cyclic coordinate sequences. For every pair `u, v` of
//! distinct extremes two third-center candidates are tried: the vertex
//! farthest from the line `uv` and the vertices nearest to the perpendicular
//! bisector of `uv`. The best triple of extremes is also a candidate. The
//! best candidate's radius is at least `1/(2*sqrt 2)` times the optimum.
//!
//! Every search touches the polygon through a [`Tracker`], which counts
//! boundary lookups so the `O(log n)` cost can be measured.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::decision::Packing;
use crate::error::DispersionError;
use crate::geometry::{squared_distance, ConvexPolygon, Line, Point};

/// Counts accesses to a polygon's boundary.
///
/// One access is a lookup at index `i`, which yields `v_i` and its clockwise
/// successor `v_{i+1}`. Repeated lookups of the same index are free, and so
/// is reading `v_{i+1}` after a lookup at `i`.
#[derive(Debug, Clone)]
pub struct Tracker<'a> {
    poly: &'a ConvexPolygon,
    looked: Vec<usize>,
}

impl<'a> Tracker<'a> {
    pub fn new(poly: &'a ConvexPolygon) -> Self {
        Tracker {
            poly,
            looked: Vec::new(),
        }
    }

    pub fn polygon(&self) -> &'a ConvexPolygon {
        self.poly
    }

    pub fn accesses(&self) -> u64 {
        self.looked.len() as u64
    }

    fn has(&self, i: usize) -> bool {
        self.looked.binary_search(&i).is_ok()
    }

    fn edge(&mut self, i: usize) -> (Point, Point) {
        if let Err(pos) = self.looked.binary_search(&i) {
            self.looked.insert(pos, i);
        }
        let p = self.poly;
        (p.vertex(i), p.vertex(p.cw(i, 1)))
    }

    fn vertex(&mut self, i: usize) -> Point {
        if !self.vertex_known(i) {
            self.edge(i);
        }
        self.poly.vertex(i)
    }

    fn vertex_known(&self, i: usize) -> bool {
        self.has(i) || self.has(self.poly.ccw(i, 1))
    }

    fn dist_sq(&mut self, i: usize, j: usize) -> f64 {
        squared_distance(self.vertex(i), self.vertex(j))
    }

    /// First offset `t` in `[lo, hi)` whose edge `start + t` satisfies
    /// `pred`, or `hi`. `pred` must be false then true along the range.
    /// Edges already looked up narrow the range before any new lookup.
    fn first_edge_where(
        &mut self,
        start: usize,
        mut lo: usize,
        mut hi: usize,
        pred: impl Fn(Point, Point) -> bool,
    ) -> usize {
        let poly = self.poly;
        for &i in &self.looked {
            let t = poly.cw_steps(start, i);
            if t >= lo && t < hi {
                if pred(poly.vertex(i), poly.vertex(poly.cw(i, 1))) {
                    hi = t;
                } else {
                    lo = t + 1;
                }
            }
        }
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            let (p, q) = self.edge(poly.cw(start, mid));
            if pred(p, q) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        lo
    }

    /// As [`Self::first_edge_where`] for a predicate on single vertices.
    fn first_vertex_where(
        &mut self,
        start: usize,
        mut lo: usize,
        mut hi: usize,
        pred: impl Fn(Point) -> bool,
    ) -> usize {
        let poly = self.poly;
        for t in self.known_vertex_offsets(start, lo, hi) {
            if pred(poly.vertex(poly.cw(start, t))) {
                hi = hi.min(t);
            } else {
                lo = lo.max(t + 1);
            }
        }
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if pred(self.vertex(poly.cw(start, mid))) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        lo
    }

    fn known_vertex_offsets(&self, start: usize, lo: usize, hi: usize) -> Vec<usize> {
        let poly = self.poly;
        self.looked
            .iter()
            .flat_map(|&i| [i, poly.cw(i, 1)])
            .map(|j| poly.cw_steps(start, j))
            .filter(|&t| t >= lo && t < hi)
            .collect()
    }
}

/// Extreme vertices: `a` min x, `b` max y, `c` max x, `d` min y; smallest
/// index on ties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtremeQuad {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    /// Number of distinct indices among `a, b, c, d`.
    pub distinct_count: usize,
}

impl ExtremeQuad {
    fn new(a: usize, b: usize, c: usize, d: usize) -> Self {
        let mut q = ExtremeQuad {
            a,
            b,
            c,
            d,
            distinct_count: 0,
        };
        q.distinct_count = q.distinct().len();
        q
    }

    pub fn as_array(&self) -> [usize; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Distinct extreme indices in `a, b, c, d` order.
    pub fn distinct(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(4);
        for i in self.as_array() {
            if !out.contains(&i) {
                out.push(i);
            }
        }
        out
    }
}

// Strict orders whose maxima are the extremes. Each breaks the tie on a
// vertical or horizontal extreme edge toward the vertex whose clockwise
// successor is the other end of that edge.
fn lex(p: Point, q: Point) -> Ordering {
    p.x.total_cmp(&q.x).then(p.y.total_cmp(&q.y))
}
fn a_better(p: Point, q: Point) -> bool {
    lex(p, q) == Ordering::Less
}
fn c_better(p: Point, q: Point) -> bool {
    lex(p, q) == Ordering::Greater
}
fn b_better(p: Point, q: Point) -> bool {
    p.y.total_cmp(&q.y).then(q.x.total_cmp(&p.x)) == Ordering::Greater
}
fn d_better(p: Point, q: Point) -> bool {
    p.y.total_cmp(&q.y).then(q.x.total_cmp(&p.x)) == Ordering::Less
}

/// Maximum of a strict order over the whole cycle, which for a strictly
/// convex polygon is a single rise followed by a single fall.
fn cyclic_max(tr: &mut Tracker<'_>, better: fn(Point, Point) -> bool) -> usize {
    let n = tr.poly.len();
    let (v0, v1) = tr.edge(0);
    if better(v1, v0) {
        // still rising and not below v0: the initial rise
        let t = tr.first_edge_where(0, 1, n, |p, q| !(better(q, p) && !better(v0, p)));
        t % n
    } else {
        // the initial fall or the rise after it
        let t = tr.first_edge_where(0, 1, n, |p, q| !(better(v0, p) || better(q, p)));
        t % n
    }
}

/// `m`, or its clockwise successor when that shares the extreme coordinate
/// and has the smaller index.
fn tie_to_smallest(tr: &mut Tracker<'_>, m: usize, same: fn(Point, Point) -> bool) -> usize {
    let (p, q) = tr.edge(m);
    let next = tr.poly.cw(m, 1);
    if same(p, q) {
        m.min(next)
    } else {
        m
    }
}

pub fn extreme_points(poly: &ConvexPolygon) -> ExtremeQuad {
    extreme_points_in(&mut Tracker::new(poly))
}

pub fn extreme_points_in(tr: &mut Tracker<'_>) -> ExtremeQuad {
    let n = tr.poly.len();
    let c = cyclic_max(tr, c_better);
    // from c the x order falls to a, then rises back
    let a = {
        let t = tr.first_edge_where(c, 1, n - 1, |p, q| !a_better(q, p));
        tr.poly.cw(c, t)
    };
    let b = {
        let len = tr.poly.cw_steps(a, c);
        let t = tr.first_edge_where(a, 0, len, |p, q| !b_better(q, p));
        tr.poly.cw(a, t)
    };
    let d = {
        let len = tr.poly.cw_steps(c, a);
        let t = tr.first_edge_where(c, 0, len, |p, q| !d_better(q, p));
        tr.poly.cw(c, t)
    };
    let same_x = |p: Point, q: Point| p.x == q.x;
    let same_y = |p: Point, q: Point| p.y == q.y;
    ExtremeQuad::new(
        tie_to_smallest(tr, a, same_x),
        tie_to_smallest(tr, b, same_y),
        tie_to_smallest(tr, c, same_x),
        tie_to_smallest(tr, d, same_y),
    )
}

fn pair_check(poly: &ConvexPolygon, u: usize, v: usize) -> Result<(), DispersionError> {
    if u == v {
        return Err(DispersionError::DegeneratePair(u));
    }
    let n = poly.len();
    if u >= n || v >= n {
        return Err(DispersionError::InvalidK { k: u.max(v), n });
    }
    Ok(())
}

/// Farthest interior vertex of the chain running clockwise from `u` to `v`,
/// with its absolute (scaled) offset from `line`.
fn chain_farthest(tr: &mut Tracker<'_>, line: &Line, u: usize, v: usize) -> Option<(usize, f64)> {
    let poly = tr.poly;
    let len = poly.cw_steps(u, v);
    if len < 2 {
        return None;
    }
    // edge 0 always moves away from the line and edge len-1 always back
    let t = tr.first_edge_where(u, 1, len - 1, |p, q| line.offset(q).abs() <= line.offset(p).abs());
    let (p, q) = tr.edge(poly.cw(u, t));
    let m = poly.cw(u, t);
    let dist = line.offset(p).abs();
    if t + 1 < len && line.offset(q).abs() == dist {
        Some((m.min(poly.cw(m, 1)), dist))
    } else {
        Some((m, dist))
    }
}

/// Vertex with the largest distance from the line through `u` and `v`;
/// smallest index on ties.
pub fn farthest_from_chord(poly: &ConvexPolygon, u: usize, v: usize) -> Result<usize, DispersionError> {
    farthest_from_chord_in(&mut Tracker::new(poly), u, v)
}

pub fn farthest_from_chord_in(tr: &mut Tracker<'_>, u: usize, v: usize) -> Result<usize, DispersionError> {
    pair_check(tr.poly, u, v)?;
    let line = Line::through(tr.vertex(u), tr.vertex(v)).ok_or(DispersionError::DegeneratePair(u))?;
    let best = [chain_farthest(tr, &line, u, v), chain_farthest(tr, &line, v, u)]
        .into_iter()
        .flatten()
        .max_by(|x, y| x.1.total_cmp(&y.1).then(y.0.cmp(&x.0)))
        .expect("a polygon has at least one vertex off any chord");
    Ok(best.0)
}

/// Up to two interior vertices of the chain `u -> v` (clockwise) closest to
/// the bisector, as `(index, |offset|)`.
///
/// The chain crosses the bisector exactly once, found by binary search on
/// the side of each vertex. Unless the chain's projection onto `uv` is known
/// to be monotone, the vertices next to `u` and `v` are also considered: a
/// chain that first backs away from `v` can have its nearest vertex there.
fn chain_near_bisector(
    tr: &mut Tracker<'_>,
    line: &Line,
    u: usize,
    v: usize,
    monotone: bool,
) -> Vec<(usize, f64)> {
    let poly = tr.poly;
    let len = poly.cw_steps(u, v);
    if len < 2 {
        return Vec::new();
    }
    let u_side = line.offset(tr.vertex(u)) < 0.0;
    let t = tr.first_vertex_where(u, 1, len, |p| {
        let o = line.offset(p);
        o == 0.0 || (o < 0.0) != u_side
    });
    let mut offsets = Vec::with_capacity(4);
    offsets.extend([t - 1, t].into_iter().filter(|&s| s >= 1 && s < len));
    if !monotone {
        offsets.extend([1, len - 1]);
    }
    let mut found: Vec<(usize, f64)> = Vec::with_capacity(4);
    for s in offsets {
        let i = poly.cw(u, s);
        if found.iter().all(|&(j, _)| j != i) {
            found.push((i, line.offset(tr.vertex(i)).abs()));
        }
    }
    found.sort_by(|x, y| x.1.total_cmp(&y.1).then(x.0.cmp(&y.0)));
    found.truncate(2);
    found
}

/// At most four vertices other than `u`, `v` nearest to the perpendicular
/// bisector of `uv`, at most two per chain, nearest first (smallest index on
/// ties). The nearest vertex overall is the first element.
pub fn nearest_to_bisector(poly: &ConvexPolygon, u: usize, v: usize) -> Result<Vec<usize>, DispersionError> {
    nearest_to_bisector_in(&mut Tracker::new(poly), u, v)
}

pub fn nearest_to_bisector_in(
    tr: &mut Tracker<'_>,
    u: usize,
    v: usize,
) -> Result<Vec<usize>, DispersionError> {
    Ok(bisector_candidates(tr, u, v, [false, false])?
        .into_iter()
        .map(|(i, _)| i)
        .collect())
}

fn bisector_candidates(
    tr: &mut Tracker<'_>,
    u: usize,
    v: usize,
    monotone: [bool; 2],
) -> Result<Vec<(usize, f64)>, DispersionError> {
    pair_check(tr.poly, u, v)?;
    let line = Line::bisector(tr.vertex(u), tr.vertex(v)).ok_or(DispersionError::DegeneratePair(u))?;
    let mut all = chain_near_bisector(tr, &line, u, v, monotone[0]);
    all.extend(chain_near_bisector(tr, &line, v, u, monotone[1]));
    all.sort_by(|x, y| x.1.total_cmp(&y.1).then(x.0.cmp(&y.0)));
    Ok(all)
}

/// A candidate triple and its smallest pairwise squared distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triple {
    pub centers: [usize; 3],
    pub min_sq: f64,
}

impl Triple {
    fn of(tr: &mut Tracker<'_>, u: usize, v: usize, w: usize) -> Self {
        let min_sq = tr.dist_sq(u, v).min(tr.dist_sq(u, w)).min(tr.dist_sq(v, w));
        let mut centers = [u, v, w];
        centers.sort_unstable();
        Triple { centers, min_sq }
    }
}

/// The two per-pair candidates for one pair of distinct extremes.
#[derive(Debug, Clone, PartialEq)]
pub struct PairCase {
    pub u: usize,
    pub v: usize,
    /// `u, v` and the vertex farthest from line `uv`.
    pub farthest: Triple,
    /// `u, v` and the best of the vertices nearest the bisector of `uv`.
    pub bisector: Triple,
}

/// Every candidate radius, computed without pruning.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseRadii {
    /// Best triple of extremes; absent with fewer than three distinct ones.
    pub extremes: Option<Triple>,
    pub pairs: Vec<PairCase>,
}

impl CaseRadii {
    pub fn best(&self) -> Triple {
        self.extremes
            .iter()
            .chain(self.pairs.iter().flat_map(|p| [&p.farthest, &p.bisector]))
            .copied()
            .fold(None, |best: Option<Triple>, t| match best {
                Some(b) if b.min_sq >= t.min_sq => Some(b),
                _ => Some(t),
            })
            .expect("at least one pair of distinct extremes")
    }
}

fn extreme_pairs(extremes: &[usize]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for (x, &u) in extremes.iter().enumerate() {
        for &v in &extremes[x + 1..] {
            pairs.push((u, v));
        }
    }
    pairs
}

fn best_extreme_triple(tr: &mut Tracker<'_>, extremes: &[usize]) -> Option<Triple> {
    let mut best: Option<Triple> = None;
    for (x, &u) in extremes.iter().enumerate() {
        for (y, &v) in extremes.iter().enumerate().skip(x + 1) {
            for &w in &extremes[y + 1..] {
                let t = Triple::of(tr, u, v, w);
                if best.is_none_or(|b| t.min_sq > b.min_sq) {
                    best = Some(t);
                }
            }
        }
    }
    best
}

/// All candidate radii of the approximation, for inspection.
pub fn case_radii(poly: &ConvexPolygon) -> Result<CaseRadii, DispersionError> {
    if poly.len() < 3 {
        return Err(DispersionError::TooFew { n: poly.len() });
    }
    let mut tr = Tracker::new(poly);
    let quad = extreme_points_in(&mut tr);
    let extremes = quad.distinct();
    let mut pairs = Vec::new();
    for (u, v) in extreme_pairs(&extremes) {
        let e = farthest_from_chord_in(&mut tr, u, v)?;
        let farthest = Triple::of(&mut tr, u, v, e);
        let bisector = bisector_candidates(&mut tr, u, v, [false, false])?
            .into_iter()
            .map(|(f, _)| Triple::of(&mut tr, u, v, f))
            .fold(None, |best: Option<Triple>, t| match best {
                Some(b) if b.min_sq >= t.min_sq => Some(b),
                _ => Some(t),
            })
            .expect("a vertex besides u and v exists");
        pairs.push(PairCase {
            u,
            v,
            farthest,
            bisector,
        });
    }
    Ok(CaseRadii {
        extremes: (extremes.len() >= 3)
            .then(|| best_extreme_triple(&mut tr, &extremes))
            .flatten(),
        pairs,
    })
}

/// Which candidate produced the returned triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ApproxCase {
    Triangle,
    Extremes,
    Farthest,
    Bisector,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ApproxOutcome {
    pub packing: Packing,
    pub case: ApproxCase,
    pub quad: Option<ExtremeQuad>,
    pub accesses: u64,
    /// Extreme pairs whose chains were searched (the rest were pruned).
    pub pairs_searched: usize,
}

/// Three vertices whose smallest pairwise distance is at least
/// `1/(2*sqrt 2)` of the optimum.
pub fn approx_3(poly: &ConvexPolygon) -> Result<Packing, DispersionError> {
    approx_3_with_stats(poly).map(|o| o.packing)
}

/// Evaluates the same candidates as [`case_radii`] except that the farthest
/// vertex of each chain is tried, not only the overall farthest, and that
/// work which cannot beat the best triple so far is skipped: a pair `uv`
/// never yields more than `|uv|^2`, and a chain confined to the bounding
/// boxes of its quadrant arcs is bounded by the best placement in those
/// boxes.
pub fn approx_3_with_stats(poly: &ConvexPolygon) -> Result<ApproxOutcome, DispersionError> {
    let n = poly.len();
    if n < 3 {
        return Err(DispersionError::TooFew { n });
    }
    let mut tr = Tracker::new(poly);
    if n == 3 {
        let t = Triple::of(&mut tr, 0, 1, 2);
        return Ok(ApproxOutcome {
            packing: packing_of(t),
            case: ApproxCase::Triangle,
            quad: None,
            accesses: tr.accesses(),
            pairs_searched: 0,
        });
    }

    let quad = extreme_points_in(&mut tr);
    let extremes = quad.distinct();
    let mut best: Option<(Triple, ApproxCase)> = None;
    let offer = |t: Triple, case: ApproxCase, best: &mut Option<(Triple, ApproxCase)>| {
        if best.is_none_or(|(b, _)| t.min_sq > b.min_sq) {
            *best = Some((t, case));
        }
    };
    if extremes.len() >= 3 {
        if let Some(t) = best_extreme_triple(&mut tr, &extremes) {
            offer(t, ApproxCase::Extremes, &mut best);
        }
    }

    let mut pairs: Vec<(usize, usize, f64)> = extreme_pairs(&extremes)
        .into_iter()
        .map(|(u, v)| (u, v, tr.dist_sq(u, v)))
        .collect();
    pairs.sort_by(|x, y| y.2.total_cmp(&x.2).then((x.0, x.1).cmp(&(y.0, y.1))));

    let boxes = QuadrantBoxes::new(&mut tr, &quad);
    let mut pairs_searched = 0;
    for (u, v, uv) in pairs {
        let floor = best.map_or(f64::NEG_INFINITY, |(b, _)| b.min_sq);
        if uv <= floor {
            continue;
        }
        let (pu, pv) = (poly.vertex(u), poly.vertex(v));
        let chord = Line::through(pu, pv).ok_or(DispersionError::DegeneratePair(u))?;
        let bisector = Line::bisector(pu, pv).ok_or(DispersionError::DegeneratePair(u))?;
        let mut searched = false;
        for (from, to) in [(u, v), (v, u)] {
            let floor = best.map_or(f64::NEG_INFINITY, |(b, _)| b.min_sq);
            if boxes.chain_bound(from, to, pu, pv) <= floor {
                continue;
            }
            searched = true;
            if let Some((e, _)) = chain_farthest(&mut tr, &chord, from, to) {
                let t = Triple::of(&mut tr, u, v, e);
                offer(t, ApproxCase::Farthest, &mut best);
            }
            let monotone = boxes.projection_monotone(from, to, pu, pv);
            for (f, _) in chain_near_bisector(&mut tr, &bisector, from, to, monotone) {
                let t = Triple::of(&mut tr, u, v, f);
                offer(t, ApproxCase::Bisector, &mut best);
            }
        }
        pairs_searched += usize::from(searched);
    }

    let (triple, case) = best.expect("an extreme pair is never pruned before any candidate exists");
    Ok(ApproxOutcome {
        packing: packing_of(triple),
        case,
        quad: Some(quad),
        accesses: tr.accesses(),
        pairs_searched,
    })
}

fn packing_of(t: Triple) -> Packing {
    Packing {
        centers: t.centers.to_vec(),
        radius_sq4: t.min_sq,
    }
}

/// The boundary split at the extremes into four arcs `a->b`, `b->c`,
/// `c->d`, `d->a`, each monotone in both coordinates and therefore inside
/// the box spanned by its endpoints.
struct QuadrantBoxes {
    /// Arc start index and its box `(min, max)` corners.
    arcs: Vec<(usize, Point, Point)>,
    n: usize,
}

impl QuadrantBoxes {
    fn new(tr: &mut Tracker<'_>, q: &ExtremeQuad) -> Self {
        let order = [q.a, q.b, q.c, q.d];
        let mut arcs = Vec::with_capacity(4);
        for k in 0..4 {
            let (s, e) = (order[k], order[(k + 1) % 4]);
            if s == e {
                continue;
            }
            let (p, r) = (tr.vertex(s), tr.vertex(e));
            arcs.push((
                s,
                Point::new(p.x.min(r.x), p.y.min(r.y)),
                Point::new(p.x.max(r.x), p.y.max(r.y)),
            ));
        }
        QuadrantBoxes {
            arcs,
            n: tr.poly.len(),
        }
    }

    /// Arcs (as boxes) overlapping the clockwise chain from extreme `from`
    /// to extreme `to`.
    fn chain_boxes(&self, from: usize, to: usize) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.n;
        let span = (to + n - from) % n;
        self.arcs
            .iter()
            .filter(move |(s, _, _)| (s + n - from) % n < span)
            .map(|&(_, lo, hi)| (lo, hi))
    }

    /// Upper bound on `min(|uv|^2, |uw|^2, |vw|^2)` over vertices `w` of the
    /// chain: the larger of the two distances to `w` is maximized at a box
    /// corner or where the bisector meets a box edge.
    fn chain_bound(&self, from: usize, to: usize, pu: Point, pv: Point) -> f64 {
        let uv = squared_distance(pu, pv);
        let mut bound = f64::NEG_INFINITY;
        for (lo, hi) in self.chain_boxes(from, to) {
            bound = bound.max(box_bound(lo, hi, pu, pv));
        }
        bound.min(uv)
    }

    /// Whether the projection onto `v - u` is monotone along the chain: true
    /// when the chain is a single quadrant arc, or runs between opposite
    /// extremes.
    fn projection_monotone(&self, from: usize, to: usize, pu: Point, pv: Point) -> bool {
        let arcs = self.chain_boxes(from, to).count();
        let (dx, dy) = (pv.x - pu.x, pv.y - pu.y);
        arcs <= 1 || (arcs == 2 && (dx == 0.0 || dy == 0.0 || self.arcs.len() < 4))
            || (arcs == 2 && self.opposite(from, to))
    }

    fn opposite(&self, from: usize, to: usize) -> bool {
        let n = self.n;
        let span = (to + n - from) % n;
        // exactly two arcs inside a four-arc cycle means the endpoints are
        // opposite extremes (a,c) or (b,d)
        self.arcs.len() == 4 && self.arcs.iter().filter(|(s, _, _)| (s + n - from) % n < span).count() == 2
    }
}

/// Largest `min(|uw|^2, |vw|^2)` over `w` in the box, evaluated at the
/// corners and at bisector crossings of the box edges.
fn box_bound(lo: Point, hi: Point, pu: Point, pv: Point) -> f64 {
    let score = |w: Point| squared_distance(pu, w).min(squared_distance(pv, w));
    let corners = [
        Point::new(lo.x, lo.y),
        Point::new(lo.x, hi.y),
        Point::new(hi.x, lo.y),
        Point::new(hi.x, hi.y),
    ];
    let mut best = corners.iter().map(|&w| score(w)).fold(f64::NEG_INFINITY, f64::max);
    // bisector: (w - m) . (v - u) = 0
    let (mx, my) = (0.5 * (pu.x + pv.x), 0.5 * (pu.y + pv.y));
    let (dx, dy) = (pv.x - pu.x, pv.y - pu.y);
    for x in [lo.x, hi.x] {
        if dy != 0.0 {
            let y = my - dx * (x - mx) / dy;
            if y >= lo.y && y <= hi.y {
                best = best.max(score(Point::new(x, y)));
            }
        }
    }
    for y in [lo.y, hi.y] {
        if dx != 0.0 {
            let x = mx - dy * (y - my) / dx;
            if x >= lo.x && x <= hi.x {
                best = best.max(score(Point::new(x, y)));
            }
        }
    }
    // rounding in the crossing points must not turn the bound into an
    // underestimate
    best * (1.0 + 1e-9)
}
