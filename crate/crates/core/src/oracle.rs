//! Exhaustive references. Nothing here is clever on purpose: every answer
//! comes from enumerating subsets or scanning every vertex.

use alloc::vec::Vec;

use crate::decision::Packing;
use crate::error::DispersionError;
use crate::geometry::{squared_distance, ConvexPolygon, Line, Point};

pub const DEFAULT_SUBSET_LIMIT: u128 = 10_000_000;

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

fn check(n: usize, k: usize, limit: u128) -> Result<(), DispersionError> {
    if k < 1 || k > n {
        return Err(DispersionError::InvalidK { k, n });
    }
    let subsets = binomial(n, k);
    if subsets > limit {
        return Err(DispersionError::TooLarge { subsets, limit });
    }
    Ok(())
}

/// Calls `visit(subset, min_sq)` for every `k`-subset in lexicographic order;
/// stops early when `visit` returns false.
fn for_each_subset(points: &[Point], k: usize, mut visit: impl FnMut(&[usize], f64) -> bool) {
    fn rec(
        points: &[Point],
        k: usize,
        next: usize,
        chosen: &mut Vec<usize>,
        min_sq: f64,
        visit: &mut dyn FnMut(&[usize], f64) -> bool,
    ) -> bool {
        if chosen.len() == k {
            return visit(chosen, min_sq);
        }
        let remaining = k - chosen.len();
        for i in next..=points.len() - remaining {
            let m = chosen
                .iter()
                .map(|&c| squared_distance(points[c], points[i]))
                .fold(min_sq, f64::min);
            chosen.push(i);
            let go_on = rec(points, k, i + 1, chosen, m, visit);
            chosen.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    let mut chosen = Vec::with_capacity(k);
    rec(points, k, 0, &mut chosen, f64::INFINITY, &mut visit);
}

/// Best `k`-subset of arbitrary points by exhaustive enumeration; ties go to
/// the lexicographically smallest index set. For `k = 1` the radius is
/// infinite.
pub fn brute_force_kdispersion(points: &[Point], k: usize) -> Result<Packing, DispersionError> {
    brute_force_kdispersion_limited(points, k, DEFAULT_SUBSET_LIMIT)
}

pub fn brute_force_kdispersion_limited(
    points: &[Point],
    k: usize,
    limit: u128,
) -> Result<Packing, DispersionError> {
    check(points.len(), k, limit)?;
    let mut best = Packing {
        centers: Vec::new(),
        radius_sq4: f64::NEG_INFINITY,
    };
    for_each_subset(points, k, |subset, min_sq| {
        if min_sq > best.radius_sq4 {
            best.centers.clear();
            best.centers.extend_from_slice(subset);
            best.radius_sq4 = min_sq;
        }
        true
    });
    Ok(best)
}

/// Whether some `k`-subset has every pairwise squared distance
/// `>= four_r_sq`.
pub fn brute_force_decide(points: &[Point], k: usize, four_r_sq: f64) -> Result<bool, DispersionError> {
    check(points.len(), k, DEFAULT_SUBSET_LIMIT)?;
    let mut feasible = false;
    for_each_subset(points, k, |_, min_sq| {
        feasible = min_sq >= four_r_sq;
        !feasible
    });
    Ok(feasible)
}

/// The four extreme-vertex indices `(min x, max y, max x, min y)` by linear
/// scan, smallest index on ties.
pub fn extremes_scan(poly: &ConvexPolygon) -> [usize; 4] {
    let v = poly.vertices();
    let arg = |better: &dyn Fn(Point, Point) -> bool| {
        (1..v.len()).fold(0, |best, i| if better(v[i], v[best]) { i } else { best })
    };
    [
        arg(&|p, q| p.x < q.x),
        arg(&|p, q| p.y > q.y),
        arg(&|p, q| p.x > q.x),
        arg(&|p, q| p.y < q.y),
    ]
}

/// Vertex with the largest distance to the line through `u` and `v`,
/// smallest index on ties.
pub fn farthest_from_chord_scan(poly: &ConvexPolygon, u: usize, v: usize) -> Result<usize, DispersionError> {
    let line = Line::through(poly.vertex(u), poly.vertex(v)).ok_or(DispersionError::DegeneratePair(u))?;
    let dist = |i: usize| line.offset(poly.vertex(i)).abs();
    Ok((1..poly.len()).fold(0, |best, i| if dist(i) > dist(best) { i } else { best }))
}

/// Vertex other than `u`, `v` closest to the perpendicular bisector of `uv`,
/// smallest index on ties. `None` only for a triangle-free input, which a
/// valid polygon never is.
pub fn nearest_to_bisector_scan(
    poly: &ConvexPolygon,
    u: usize,
    v: usize,
) -> Result<Option<usize>, DispersionError> {
    let line = Line::bisector(poly.vertex(u), poly.vertex(v)).ok_or(DispersionError::DegeneratePair(u))?;
    let dist = |i: usize| line.offset(poly.vertex(i)).abs();
    Ok((0..poly.len())
        .filter(|&i| i != u && i != v)
        .fold(None, |best: Option<usize>, i| match best {
            Some(b) if dist(b) <= dist(i) => Some(b),
            _ => Some(i),
        }))
}

/// Farthest pair by scanning all pairs; lexicographically smallest on ties.
pub fn diameter_scan(poly: &ConvexPolygon) -> (usize, usize, f64) {
    let n = poly.len();
    let mut best = (0, 1, poly.dist_sq(0, 1));
    for i in 0..n {
        for j in i + 1..n {
            let d = poly.dist_sq(i, j);
            if d > best.2 {
                best = (i, j, d);
            }
        }
    }
    best
}
