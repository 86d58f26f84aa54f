//! Planar primitives for convex-position point sets.
//!
//! Every distance comparison in this crate goes through [`squared_distance`],
//! a single formula with no fused operations, so equal geometric distances
//! computed from the same coordinates are bit-identical. Thresholds are always
//! drawn from values produced by this formula, which is why no epsilon appears
//! anywhere downstream.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{DispersionError, Rejection, RejectionKind};

/// A point in the plane. Coordinates are in arbitrary length units, y up.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    fn lex_cmp(&self, other: &Point) -> Ordering {
        self.x
            .total_cmp(&other.x)
            .then_with(|| self.y.total_cmp(&other.y))
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point { x, y }
    }
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// `(p.x - q.x)^2 + (p.y - q.y)^2`, bit-symmetric in its arguments.
#[inline]
pub fn squared_distance(p: Point, q: Point) -> f64 {
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    dx * dx + dy * dy
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// Exact sign of `(b - a) x (c - a)`.
pub fn orientation(a: Point, b: Point, c: Point) -> Orientation {
    let det = robust::orient2d(coord(a), coord(b), coord(c));
    if det > 0.0 {
        Orientation::CounterClockwise
    } else if det < 0.0 {
        Orientation::Clockwise
    } else {
        Orientation::Collinear
    }
}

fn coord(p: Point) -> robust::Coord<f64> {
    robust::Coord { x: p.x, y: p.y }
}

/// A strictly convex polygon with vertices in clockwise order.
///
/// Only constructible through [`validate_convex`], so every value upholds:
/// at least three vertices, pairwise distinct, every cyclic triple a strict
/// clockwise turn, and a boundary that winds exactly once.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

impl ConvexPolygon {
    pub fn new(points: Vec<Point>) -> Result<Self, DispersionError> {
        validate_convex(points)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    #[inline]
    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i]
    }

    #[inline]
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point> {
        self.vertices
    }

    /// Squared distance between vertices `i` and `j`.
    #[inline]
    pub fn dist_sq(&self, i: usize, j: usize) -> f64 {
        squared_distance(self.vertices[i], self.vertices[j])
    }

    /// Index `steps` positions clockwise of `i`.
    #[inline]
    pub fn cw(&self, i: usize, steps: usize) -> usize {
        (i + steps) % self.vertices.len()
    }

    /// Index `steps` positions counter-clockwise of `i`.
    #[inline]
    pub fn ccw(&self, i: usize, steps: usize) -> usize {
        let n = self.vertices.len();
        (i + n - steps % n) % n
    }

    /// Number of clockwise steps from `from` to `to`, in `0..n`.
    #[inline]
    pub fn cw_steps(&self, from: usize, to: usize) -> usize {
        let n = self.vertices.len();
        (to + n - from) % n
    }
}

/// Checks that `points` form a strictly convex cycle and returns it in
/// clockwise order.
///
/// Counter-clockwise input is accepted and reversed, keeping the first point
/// at index 0 (`[v0, v_{n-1}, ..., v1]`). Rejections name the first offending
/// index in the caller's order.
pub fn validate_convex(points: Vec<Point>) -> Result<ConvexPolygon, DispersionError> {
    let n = points.len();
    let reject = |kind, index| Err(DispersionError::RejectedInput(Rejection { kind, index }));
    if n < 3 {
        return reject(RejectionKind::TooFew, n);
    }
    if let Some(i) = points.iter().position(|p| !p.is_finite()) {
        return reject(RejectionKind::NonFinite, i);
    }
    if let Some(i) = first_duplicate(&points) {
        return reject(RejectionKind::Duplicate, i);
    }

    let mut turn = None;
    for i in 0..n {
        let mid = (i + 1) % n;
        let o = orientation(points[i], points[mid], points[(i + 2) % n]);
        match (o, turn) {
            (Orientation::Collinear, _) => return reject(RejectionKind::Collinear, mid),
            (o, None) => turn = Some(o),
            (o, Some(t)) if o != t => return reject(RejectionKind::NotConvex, mid),
            _ => {}
        }
    }

    // Uniform turns still admit star polygons that wind several times; a
    // simple convex cycle changes horizontal direction exactly twice.
    if let Some(i) = excess_winding(&points) {
        return reject(RejectionKind::NotConvex, i);
    }

    let mut vertices = points;
    if turn == Some(Orientation::CounterClockwise) {
        vertices[1..].reverse();
    }
    Ok(ConvexPolygon { vertices })
}

fn first_duplicate(points: &[Point]) -> Option<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_unstable_by(|&a, &b| points[a].lex_cmp(&points[b]).then(a.cmp(&b)));
    order
        .windows(2)
        .filter(|w| points[w[0]] == points[w[1]])
        .map(|w| w[1])
        .min()
}

/// Index of the vertex where the edge x-direction changes sign for the third
/// time, if it does.
fn excess_winding(points: &[Point]) -> Option<usize> {
    let n = points.len();
    let dx = |i: usize| points[(i + 1) % n].x - points[i].x;
    let start = (0..n).find(|&i| dx(i) != 0.0)?;
    let mut sign = dx(start) > 0.0;
    let mut changes = 0;
    for step in 1..=n {
        let i = (start + step) % n;
        let d = dx(i);
        if d != 0.0 && (d > 0.0) != sign {
            sign = d > 0.0;
            changes += 1;
            if changes > 2 {
                return Some(i);
            }
        }
    }
    None
}

/// A line given by an anchor point and a nonzero direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    anchor: Point,
    dx: f64,
    dy: f64,
}

impl Line {
    /// `None` if the direction has zero squared length.
    pub fn new(anchor: Point, dx: f64, dy: f64) -> Option<Self> {
        (dx * dx + dy * dy > 0.0).then_some(Line { anchor, dx, dy })
    }

    pub fn through(p: Point, q: Point) -> Option<Self> {
        Line::new(p, q.x - p.x, q.y - p.y)
    }

    /// Perpendicular bisector of segment `pq`.
    pub fn bisector(p: Point, q: Point) -> Option<Self> {
        let mid = Point::new(0.5 * (p.x + q.x), 0.5 * (p.y + q.y));
        Line::new(mid, -(q.y - p.y), q.x - p.x)
    }

    pub fn anchor(&self) -> Point {
        self.anchor
    }

    pub fn direction(&self) -> (f64, f64) {
        (self.dx, self.dy)
    }

    /// Unnormalized signed offset of `p`: `n . (p - anchor)` where `n` is the
    /// direction rotated a quarter turn and flipped to point up (or right,
    /// for vertical lines). Same sign as [`signed_distance_to_line`], scaled
    /// by the direction length.
    #[inline]
    pub fn offset(&self, p: Point) -> f64 {
        let (nx, ny) = self.upward_normal();
        nx * (p.x - self.anchor.x) + ny * (p.y - self.anchor.y)
    }

    fn upward_normal(&self) -> (f64, f64) {
        let (nx, ny) = (-self.dy, self.dx);
        if ny > 0.0 || (ny == 0.0 && nx > 0.0) {
            (nx, ny)
        } else {
            (-nx, -ny)
        }
    }
}

/// Perpendicular distance from `p` to `line`, positive above the line (to the
/// right of a vertical line), zero exactly on it.
pub fn signed_distance_to_line(line: &Line, p: Point) -> f64 {
    line.offset(p) / libm::hypot(line.dx, line.dy)
}

/// Farthest vertex pair by rotating calipers. Returns `(i, j, d_sq)` with
/// `i < j`; among equally distant pairs the lexicographically smallest wins.
pub fn diameter(poly: &ConvexPolygon) -> (usize, usize, f64) {
    let n = poly.len();
    let v = poly.vertices();
    let area = |a: usize, b: usize, c: usize| {
        let (p, q, r) = (v[a], v[b], v[c]);
        ((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)).abs()
    };

    let mut best = (0usize, 1usize, poly.dist_sq(0, 1));
    let mut offer = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        if a == b {
            return;
        }
        let d = poly.dist_sq(a, b);
        if d > best.2 || (d == best.2 && (a, b) < (best.0, best.1)) {
            best = (a, b, d);
        }
    };

    let mut j = 1;
    for i in 0..n {
        let i1 = (i + 1) % n;
        loop {
            offer(i, j);
            offer(i1, j);
            let j1 = (j + 1) % n;
            offer(i, j1);
            offer(i1, j1);
            if area(i, i1, j1) > area(i, i1, j) {
                j = j1;
            } else {
                break;
            }
        }
    }
    best
}
