//! Deterministic reference shapes.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, TAU};

use crate::error::DispersionError;
use crate::geometry::{validate_convex, ConvexPolygon, Point};

/// `n` vertices on the circle of radius `radius` about the origin, vertex 0
/// at the top, proceeding clockwise.
pub fn regular_polygon(n: usize, radius: f64) -> Result<ConvexPolygon, DispersionError> {
    let points: Vec<Point> = (0..n)
        .map(|i| {
            let a = FRAC_PI_2 - TAU * i as f64 / n as f64;
            Point::new(radius * libm::cos(a), radius * libm::sin(a))
        })
        .collect();
    validate_convex(points)
}
