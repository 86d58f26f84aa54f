//! Instance generators. Every generator is a pure function of `(n, seed)`.

use std::f64::consts::TAU;
use std::str::FromStr;

use convex_dispersion::shapes::regular_polygon;
use convex_dispersion::{validate_convex, ConvexPolygon, Point};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Valtr,
    Regular,
    Circle,
}

impl FromStr for Shape {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "valtr" => Ok(Shape::Valtr),
            "regular" => Ok(Shape::Regular),
            "circle" => Ok(Shape::Circle),
            _ => Err(format!("unknown shape {s:?} (valtr, regular, circle)")),
        }
    }
}

impl Shape {
    pub fn name(self) -> &'static str {
        match self {
            Shape::Valtr => "valtr",
            Shape::Regular => "regular",
            Shape::Circle => "circle",
        }
    }
}

/// `None` when `n < 3`.
pub fn generate(shape: Shape, n: usize, seed: u64) -> Option<ConvexPolygon> {
    if n < 3 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Some(match shape {
        Shape::Valtr => valtr(n, &mut rng),
        Shape::Regular => regular_polygon(n, 1.0).expect("regular polygons are convex"),
        Shape::Circle => circle(n, &mut rng),
    })
}

/// Uniformly random convex polygon with `n` vertices in the unit square
/// (Valtr's method). Redraws in the rare case that rounding leaves three
/// vertices collinear.
pub fn valtr(n: usize, rng: &mut impl Rng) -> ConvexPolygon {
    loop {
        if let Ok(p) = validate_convex(valtr_points(n, rng)) {
            return p;
        }
    }
}

/// Sorted coordinates split at random into two chains from min to max; the
/// signed steps along both chains sum to zero.
fn chain_steps(n: usize, rng: &mut impl Rng) -> Vec<f64> {
    let mut xs: Vec<f64> = (0..n).map(|_| rng.gen()).collect();
    xs.sort_by(f64::total_cmp);
    let (min, max) = (xs[0], xs[n - 1]);
    let (mut top, mut bot) = (min, min);
    let mut steps = Vec::with_capacity(n);
    for &x in &xs[1..n - 1] {
        if rng.gen() {
            steps.push(x - top);
            top = x;
        } else {
            steps.push(bot - x);
            bot = x;
        }
    }
    steps.push(max - top);
    steps.push(bot - max);
    steps
}

fn valtr_points(n: usize, rng: &mut impl Rng) -> Vec<Point> {
    let xs = chain_steps(n, rng);
    let mut ys = chain_steps(n, rng);
    ys.shuffle(rng);
    let mut edges: Vec<(f64, f64)> = xs.into_iter().zip(ys).collect();
    edges.sort_by(|a, b| a.1.atan2(a.0).total_cmp(&b.1.atan2(b.0)));

    // walk the edges, then shift so the polygon sits in [0, 1]^2
    let mut pts = Vec::with_capacity(n);
    let (mut x, mut y) = (0.0f64, 0.0f64);
    for (dx, dy) in edges {
        pts.push((x, y));
        x += dx;
        y += dy;
    }
    let min_x = pts.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let min_y = pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    pts.into_iter().map(|(x, y)| Point::new(x - min_x, y - min_y)).collect()
}

/// Points on the unit circle, one in each of `n` equal sectors at a uniform
/// position in the sector's first half. Fully uniform angles put some pair
/// within about `1/n^2` of each other, and at `n = 2^20` the triples around
/// such a pair round to collinear.
pub fn circle(n: usize, rng: &mut impl Rng) -> ConvexPolygon {
    let step = TAU / n as f64;
    let pts = (0..n)
        .map(|i| {
            let t = (i as f64 + 0.5 * rng.gen::<f64>()) * step;
            Point::new(t.cos(), t.sin())
        })
        .collect();
    validate_convex(pts).expect("one point per half-sector keeps strict convexity")
}
