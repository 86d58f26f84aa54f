//! Root-parallel decision. Roots are searched in blocks across the rayon
//! pool and the block is scanned in index order, so the witness and the
//! counters are exactly those of the sequential search.

use convex_dispersion::{
    solve_exact_by, ConvexPolygon, DecideStats, Decider, DispersionError, Engine, Packing, SolveStats,
};
use rayon::prelude::*;

pub fn decide_parallel(decider: &Decider<'_>) -> (Option<Packing>, DecideStats) {
    let n = decider.polygon().len();
    let block = (rayon::current_num_threads() * 4).max(1);
    let mut stats = DecideStats::default();
    let mut start = 0;
    while start < n {
        let end = (start + block).min(n);
        let results: Vec<(Option<Packing>, u64)> =
            (start..end).into_par_iter().map(|s| decider.search_root(s)).collect();
        for (packing, nodes) in results {
            stats.nodes += nodes;
            stats.roots += 1;
            if packing.is_some() {
                return (packing, stats);
            }
        }
        start = end;
    }
    (None, stats)
}

pub fn solve_exact_parallel(
    poly: &ConvexPolygon,
    k: usize,
    engine: Engine,
) -> Result<(Packing, SolveStats), DispersionError> {
    solve_exact_by(poly, k, |t| {
        let decider = Decider::new(poly, k, t, engine).expect("k validated by the solver");
        decide_parallel(&decider)
    })
}
