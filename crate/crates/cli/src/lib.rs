//! Files, generators, parallel search, rendering and benchmarking around
//! the `convex-dispersion` solvers, plus the `cvxdisp` command line.

pub mod app;
pub mod bench;
pub mod error;
pub mod generate;
pub mod instance;
pub mod parallel;
pub mod render;

pub use error::CliError;
