#![allow(dead_code)]

use convex_dispersion::{validate_convex, ConvexPolygon, Point};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Valtr's construction: random coordinate splits into two chains each,
/// paired into edge vectors and sorted by angle. Retries with fresh draws if
/// rounding produces collinear or duplicate vertices.
pub fn valtr(n: usize, rng: &mut impl Rng) -> ConvexPolygon {
    loop {
        if let Ok(p) = validate_convex(valtr_points(n, rng)) {
            return p;
        }
    }
}

fn chain_deltas(n: usize, rng: &mut impl Rng) -> Vec<f64> {
    let mut xs: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
    xs.sort_by(f64::total_cmp);
    let (min, max) = (xs[0], xs[n - 1]);
    let (mut last_top, mut last_bot) = (min, min);
    let mut out = Vec::with_capacity(n);
    for &x in &xs[1..n - 1] {
        if rng.gen::<bool>() {
            out.push(x - last_top);
            last_top = x;
        } else {
            out.push(last_bot - x);
            last_bot = x;
        }
    }
    out.push(max - last_top);
    out.push(last_bot - max);
    out
}

fn valtr_points(n: usize, rng: &mut impl Rng) -> Vec<Point> {
    let xd = chain_deltas(n, rng);
    let mut yd = chain_deltas(n, rng);
    yd.shuffle(rng);
    let mut vecs: Vec<(f64, f64)> = xd.into_iter().zip(yd).collect();
    vecs.sort_by(|a, b| a.1.atan2(a.0).total_cmp(&b.1.atan2(b.0)));
    let (mut x, mut y) = (0.0, 0.0);
    let mut pts = Vec::with_capacity(n);
    for (dx, dy) in vecs {
        pts.push(Point::new(x, y));
        x += dx;
        y += dy;
    }
    pts
}

/// `n` points on the unit circle, one per equal angular sector at a random
/// position in the sector's first half, so neighbors never nearly coincide.
pub fn circle(n: usize, rng: &mut impl Rng) -> ConvexPolygon {
    let step = std::f64::consts::TAU / n as f64;
    let pts = (0..n)
        .map(|i| {
            let t = (i as f64 + 0.5 * rng.gen::<f64>()) * step;
            Point::new(t.cos(), t.sin())
        })
        .collect();
    validate_convex(pts).expect("sector spacing keeps the points in strictly convex position")
}
