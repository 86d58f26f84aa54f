//! Benchmark suites: one solver run per spec row, one CSV row out.
//!
//! A spec is CSV with columns `shape,n,k,seed` and optionally `algorithm`
//! (`exact`, the default, or `approx`):
//!
//! ```text
//! shape,n,k,seed
//! valtr,256,4,1
//! circle,1024,3,2
//! ```

use std::io::{Read, Write};
use std::time::Instant;

use convex_dispersion::{approx3::approx_3_with_stats, solve_exact_with_stats, Engine};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::generate::{generate, Shape};

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct BenchCase {
    pub shape: String,
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    #[serde(default)]
    pub algorithm: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub shape: String,
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub algorithm: String,
    pub radius: Option<f64>,
    pub radius_sq4: Option<f64>,
    pub ladder_len: Option<usize>,
    pub decide_calls: Option<u64>,
    /// `ceil(log2 |ladder|) + 1`
    pub call_bound: Option<u64>,
    pub nodes: Option<u64>,
    pub max_nodes_per_call: Option<u64>,
    /// `n * 2^k`
    pub node_bound: Option<u64>,
    pub accesses: Option<u64>,
    pub wall_seconds: f64,
    pub error: String,
}

pub fn read_spec(input: impl Read) -> Result<Vec<BenchCase>, CliError> {
    csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(input)
        .deserialize()
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::input(format!("bench spec: {e}")))
}

pub fn run_case(case: &BenchCase, engine: Engine) -> BenchRow {
    let algorithm = case.algorithm.clone().unwrap_or_else(|| "exact".into());
    let mut row = BenchRow {
        shape: case.shape.clone(),
        n: case.n,
        k: case.k,
        seed: case.seed,
        algorithm: algorithm.clone(),
        ..BenchRow::default()
    };
    let shape = match case.shape.parse::<Shape>() {
        Ok(s) => s,
        Err(e) => {
            row.error = e;
            return row;
        }
    };
    let Some(poly) = generate(shape, case.n, case.seed) else {
        row.error = format!("n = {} is below 3", case.n);
        return row;
    };

    let started = Instant::now();
    match algorithm.as_str() {
        "exact" => match solve_exact_with_stats(&poly, case.k, engine) {
            Ok((packing, stats)) => {
                row.wall_seconds = started.elapsed().as_secs_f64();
                row.radius = Some(packing.radius());
                row.radius_sq4 = Some(packing.radius_sq4);
                row.ladder_len = Some(stats.ladder_len);
                row.decide_calls = Some(stats.decide_calls);
                row.call_bound = Some(call_bound(stats.ladder_len));
                row.nodes = Some(stats.nodes);
                row.max_nodes_per_call = Some(stats.max_nodes_per_call);
                row.node_bound = u32::try_from(case.k)
                    .ok()
                    .and_then(|k| 1u64.checked_shl(k))
                    .and_then(|p| p.checked_mul(case.n as u64));
            }
            Err(e) => row.error = e.to_string(),
        },
        "approx" => {
            if case.k != 3 {
                row.error = "approx requires k = 3".into();
                return row;
            }
            match approx_3_with_stats(&poly) {
                Ok(out) => {
                    row.wall_seconds = started.elapsed().as_secs_f64();
                    row.radius = Some(out.packing.radius());
                    row.radius_sq4 = Some(out.packing.radius_sq4);
                    row.accesses = Some(out.accesses);
                }
                Err(e) => row.error = e.to_string(),
            }
        }
        other => row.error = format!("unknown algorithm {other:?} (exact, approx)"),
    }
    row
}

/// `ceil(log2 len) + 1`, the most decide calls a solve may make.
pub fn call_bound(len: usize) -> u64 {
    let ceil_log = if len <= 1 { 0 } else { usize::BITS - (len - 1).leading_zeros() };
    u64::from(ceil_log) + 1
}

pub fn write_rows(rows: &[BenchRow], out: impl Write) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row).map_err(|e| CliError::Io(e.into()))?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn call_bound_is_ceil_log_plus_one() {
        assert_eq!(call_bound(1), 1);
        assert_eq!(call_bound(2), 2);
        assert_eq!(call_bound(3), 3);
        assert_eq!(call_bound(4), 3);
        assert_eq!(call_bound(5), 4);
        assert_eq!(call_bound(1 << 20), 21);
    }

    #[test]
    fn spec_parses_with_optional_algorithm() {
        let spec = "shape,n,k,seed,algorithm\nvaltr, 8, 3, 1,\ncircle,16,3,2,approx\n";
        let cases = read_spec(spec.as_bytes()).unwrap();
        assert_eq!(cases.len(), 2);
        assert_eq!(cases[0].algorithm, None);
        assert_eq!(cases[1].algorithm.as_deref(), Some("approx"));
    }

    #[test]
    fn bad_rows_are_recorded_not_fatal() {
        let row = run_case(
            &BenchCase { shape: "blob".into(), n: 8, k: 3, seed: 0, algorithm: None },
            Engine::Fast,
        );
        assert!(row.error.contains("blob"));
        let row = run_case(
            &BenchCase { shape: "valtr".into(), n: 5, k: 9, seed: 0, algorithm: None },
            Engine::Fast,
        );
        assert!(!row.error.is_empty());
        assert_eq!(row.radius, None);
    }
}
