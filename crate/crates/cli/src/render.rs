//! SVG rendering of a packing: the polygon outline, every vertex, and one
//! disk of the packing radius per center.

use std::fmt::Write;

use convex_dispersion::ConvexPolygon;

use crate::error::CliError;
use crate::instance::ResultRecord;

/// Checks that the record describes a packing of this polygon: indices in
/// range, distinct, and pairwise at least `2r` apart so no disks overlap.
pub fn check_matches(poly: &ConvexPolygon, result: &ResultRecord) -> Result<(), CliError> {
    let n = poly.len();
    if let Some(&bad) = result.centers.iter().find(|&&c| c >= n) {
        return Err(CliError::input(format!("center {bad} out of range for {n} vertices")));
    }
    let mut sorted = result.centers.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != result.centers.len() {
        return Err(CliError::input("repeated center index"));
    }
    for (x, &i) in result.centers.iter().enumerate() {
        for &j in &result.centers[x + 1..] {
            if poly.dist_sq(i, j) < result.radius_sq4 {
                return Err(CliError::input(format!(
                    "centers {i} and {j} are closer than twice the radius"
                )));
            }
        }
    }
    Ok(())
}

pub fn render_svg(poly: &ConvexPolygon, result: &ResultRecord) -> String {
    let v = poly.vertices();
    let r = result.radius;
    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in v {
        x0 = x0.min(p.x);
        y0 = y0.min(p.y);
        x1 = x1.max(p.x);
        y1 = y1.max(p.y);
    }
    // disks may reach past the polygon
    let pad = r.max(1e-9 * (x1 - x0).max(y1 - y0));
    let (x0, y0, x1, y1) = (x0 - pad, y0 - pad, x1 + pad, y1 + pad);
    let (w, h) = (x1 - x0, y1 - y0);
    let stroke = w.max(h) / 400.0;

    // y grows downward in SVG; mirror it
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0} {} {w} {h}" width="800" height="{}">"#,
        -y1,
        (800.0 * h / w).round().max(1.0)
    );
    let _ = writeln!(out, r#"<g transform="scale(1,-1)">"#);
    let outline: Vec<String> = v.iter().map(|p| format!("{},{}", p.x, p.y)).collect();
    let _ = writeln!(
        out,
        r#"<polygon points="{}" fill="none" stroke="black" stroke-width="{stroke}"/>"#,
        outline.join(" ")
    );
    for &c in &result.centers {
        let p = v[c];
        let _ = writeln!(
            out,
            r#"<circle class="disk" cx="{}" cy="{}" r="{r}" fill="steelblue" fill-opacity="0.3" stroke="steelblue" stroke-width="{stroke}"/>"#,
            p.x, p.y
        );
    }
    for p in v {
        let _ = writeln!(
            out,
            r#"<circle class="vertex" cx="{}" cy="{}" r="{}" fill="black"/>"#,
            p.x,
            p.y,
            2.0 * stroke
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}
