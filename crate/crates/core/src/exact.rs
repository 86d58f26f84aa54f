//! Exact solver: binary search over the distance ladder with the decision
//! procedure as the feasibility test.

use crate::decision::{DecideStats, Decider, Engine, Packing};
use crate::distances::DistanceLadder;
use crate::error::DispersionError;
use crate::geometry::ConvexPolygon;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub ladder_len: usize,
    pub decide_calls: u64,
    /// Search nodes summed over all decide calls.
    pub nodes: u64,
    /// Largest node count of a single decide call.
    pub max_nodes_per_call: u64,
}

/// Largest ladder value `t` with `decide(poly, k, t)` feasible, with its
/// witness. The smallest rung is feasible for any `k <= n` (every pair is at
/// least that far apart), so the search starts from it without a call.
pub fn solve_exact(poly: &ConvexPolygon, k: usize) -> Result<Packing, DispersionError> {
    solve_exact_with_stats(poly, k, Engine::Fast).map(|(p, _)| p)
}

pub fn solve_exact_with_stats(
    poly: &ConvexPolygon,
    k: usize,
    engine: Engine,
) -> Result<(Packing, SolveStats), DispersionError> {
    check_k(poly, k)?;
    solve_exact_by(poly, k, |t| {
        Decider::new(poly, k, t, engine)
            .expect("k already validated")
            .run()
    })
}

/// Same search with a caller-supplied decision procedure, e.g. one that
/// explores roots in parallel. `decide` receives `four_r_sq` and must return
/// the witness for the smallest feasible root.
pub fn solve_exact_by<F>(
    poly: &ConvexPolygon,
    k: usize,
    mut decide: F,
) -> Result<(Packing, SolveStats), DispersionError>
where
    F: FnMut(f64) -> (Option<Packing>, DecideStats),
{
    check_k(poly, k)?;
    let mut ladder = DistanceLadder::build(poly);
    let mut stats = SolveStats {
        ladder_len: ladder.len(),
        ..SolveStats::default()
    };
    let mut witness = None;
    while let Some(mid) = ladder.probe() {
        let (found, call) = decide(ladder.value(mid));
        stats.decide_calls += 1;
        stats.nodes += call.nodes;
        stats.max_nodes_per_call = stats.max_nodes_per_call.max(call.nodes);
        match found {
            Some(p) => {
                ladder.mark_feasible(mid);
                witness = Some(p);
            }
            None => ladder.mark_infeasible(mid),
        }
    }
    let packing = witness.unwrap_or_else(|| Packing {
        centers: (0..k).collect(),
        radius_sq4: ladder.value(0),
    });
    debug_assert_eq!(packing.radius_sq4, ladder.value(ladder.cursors().0));
    Ok((packing, stats))
}

fn check_k(poly: &ConvexPolygon, k: usize) -> Result<(), DispersionError> {
    let n = poly.len();
    if k < 2 || k > n {
        return Err(DispersionError::InvalidK { k, n });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::diameter;
    use crate::testutil::{regular, square};
    use alloc::vec;

    #[test]
    fn square_instances() {
        let sq = square();
        let p3 = solve_exact(&sq, 3).unwrap();
        assert_eq!(p3.radius_sq4, 1.0);
        assert_eq!(p3.radius(), 0.5);

        let p2 = solve_exact(&sq, 2).unwrap();
        assert_eq!(p2.radius_sq4, 2.0);
        assert!((p2.radius() - core::f64::consts::SQRT_2 / 2.0).abs() < 1e-12);
        assert_eq!(p2.centers, vec![0, 2]);

        let p4 = solve_exact(&sq, 4).unwrap();
        assert_eq!(p4.centers, vec![0, 1, 2, 3]);
    }

    #[test]
    fn hexagon_alternate_vertices() {
        let hex = regular(6);
        let p = solve_exact(&hex, 3).unwrap();
        assert!((p.radius() - 3f64.sqrt() / 2.0).abs() < 1e-12);
        assert!(p.centers == vec![0, 2, 4] || p.centers == vec![1, 3, 5]);
        assert_eq!(p.min_pairwise_sq(&hex), p.radius_sq4);
    }

    #[test]
    fn k2_is_the_diameter() {
        for n in 3..20 {
            let poly = regular(n);
            assert_eq!(solve_exact(&poly, 2).unwrap().radius_sq4, diameter(&poly).2);
        }
    }

    #[test]
    fn rejects_bad_k() {
        let sq = square();
        assert_eq!(solve_exact(&sq, 1), Err(DispersionError::InvalidK { k: 1, n: 4 }));
        assert_eq!(solve_exact(&sq, 5), Err(DispersionError::InvalidK { k: 5, n: 4 }));
    }

    #[test]
    fn call_budget() {
        let poly = regular(17);
        for k in 2..=8 {
            let (_, stats) = solve_exact_with_stats(&poly, k, Engine::Fast).unwrap();
            let bound = (stats.ladder_len as f64).log2().ceil() as u64 + 1;
            assert!(stats.decide_calls <= bound);
        }
    }
}
