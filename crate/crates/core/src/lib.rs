//! Max-min k-dispersion for points in convex position.
//!
//! Given the vertices of a strictly convex polygon, choose `k` of them so the
//! smallest pairwise distance is as large as possible; equivalently, center
//! `k` congruent non-overlapping disks of maximal radius on the vertices.
//!
//! * [`exact`]: fixed-parameter exact solver (binary search over the distance
//!   ladder, each probe answered by a bounded 2-way search tree).
//! * [`approx3`]: `O(log n)` approximation for `k = 3` within a factor
//!   `1/(2*sqrt 2)` of the optimal radius.
//! * [`oracle`]: exhaustive references used to validate both.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod approx3;
pub mod decision;
pub mod distances;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod oracle;
pub mod shapes;

pub use approx3::{approx_3, ApproxOutcome, ExtremeQuad};
pub use decision::{decide, precompute_candidates, CandidateTable, DecideStats, Decider, Direction, Engine, Packing, SearchState};
pub use distances::DistanceLadder;
pub use error::{DispersionError, Rejection, RejectionKind};
pub use exact::{solve_exact, solve_exact_by, solve_exact_with_stats, SolveStats};
pub use geometry::{diameter, orientation, signed_distance_to_line, squared_distance, validate_convex, ConvexPolygon, Line, Orientation, Point};
