//! Command-line surface of `cvxdisp`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use convex_dispersion::approx3::approx_3_with_stats;
use convex_dispersion::oracle::brute_force_kdispersion;
use convex_dispersion::{solve_exact_with_stats, Decider, Engine, Packing};
use serde::Serialize;

use crate::bench::{read_spec, run_case, write_rows};
use crate::error::CliError;
use crate::generate::{generate, Shape};
use crate::instance::{load_polygon, load_result, InstanceFile, ResultRecord};
use crate::parallel::{decide_parallel, solve_exact_parallel};
use crate::render::{check_matches, render_svg};

/// Max-min k-dispersion on the vertices of a convex polygon
#[derive(Debug, Parser)]
#[command(name = "cvxdisp", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Fast,
    Naive,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Fast => Engine::Fast,
            EngineArg::Naive => Engine::Naive,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact optimum for k centers
    Solve {
        /// Instance JSON (`-` for stdin)
        #[arg(long = "in", default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = EngineArg::Fast)]
        engine: EngineArg,
        /// Search root vertices on all cores (same result and counters)
        #[arg(long)]
        parallel: bool,
        /// Write the result here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Logarithmic-time approximation for k = 3
    Approx {
        #[arg(long = "in", default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Whether k disks of radius r fit centered on distinct vertices
    Decide {
        #[arg(long = "in", default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: f64,
        #[arg(long, value_enum, default_value_t = EngineArg::Fast)]
        engine: EngineArg,
        #[arg(long)]
        parallel: bool,
    },
    /// Exhaustive optimum over all k-subsets (small inputs only)
    Oracle {
        #[arg(long = "in", default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate an instance
    Gen {
        /// valtr, regular or circle
        #[arg(long)]
        shape: Shape,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a result as SVG
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        result: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a CSV suite of (shape, n, k, seed) cases and print CSV rows
    Bench {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = EngineArg::Fast)]
        engine: EngineArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Serialize)]
struct DecideRecord {
    k: usize,
    r: f64,
    four_r_sq: f64,
    feasible: bool,
    centers: Vec<usize>,
    nodes: u64,
    roots: u64,
    wall_seconds: f64,
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 3 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("cvxdisp: {e}");
            e.exit_code()
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
        }
    }
    Ok(())
}

fn record(algorithm: &str, k: usize, packing: &Packing, started: Instant) -> ResultRecord {
    ResultRecord {
        algorithm: algorithm.into(),
        k,
        radius: packing.radius(),
        radius_sq4: packing.radius_sq4,
        centers: packing.centers.clone(),
        decide_calls: 0,
        nodes: 0,
        accesses: 0,
        wall_seconds: started.elapsed().as_secs_f64(),
    }
}

pub fn execute(command: Command) -> Result<(), CliError> {
    match command {
        Command::Solve { input, k, engine, parallel, out } => {
            let poly = load_polygon(&input)?;
            let started = Instant::now();
            let (packing, stats) = if parallel {
                solve_exact_parallel(&poly, k, engine.into())?
            } else {
                solve_exact_with_stats(&poly, k, engine.into())?
            };
            let mut rec = record("exact", k, &packing, started);
            rec.decide_calls = stats.decide_calls;
            rec.nodes = stats.nodes;
            emit(&rec.to_json(), out.as_deref())
        }
        Command::Approx { input, out } => {
            let poly = load_polygon(&input)?;
            let started = Instant::now();
            let outcome = approx_3_with_stats(&poly)?;
            let mut rec = record("approx3", 3, &outcome.packing, started);
            rec.accesses = outcome.accesses;
            emit(&rec.to_json(), out.as_deref())
        }
        Command::Decide { input, k, r, engine, parallel } => {
            let poly = load_polygon(&input)?;
            if !(r.is_finite() && r >= 0.0) {
                return Err(CliError::params(format!("radius {r} must be finite and non-negative")));
            }
            let four_r_sq = 4.0 * r * r;
            let started = Instant::now();
            let (found, stats) = if parallel {
                decide_parallel(&Decider::new(&poly, k, four_r_sq, engine.into())?)
            } else {
                Decider::new(&poly, k, four_r_sq, engine.into())?.run()
            };
            let rec = DecideRecord {
                k,
                r,
                four_r_sq,
                feasible: found.is_some(),
                centers: found.map(|p| p.centers).unwrap_or_default(),
                nodes: stats.nodes,
                roots: stats.roots,
                wall_seconds: started.elapsed().as_secs_f64(),
            };
            emit(&serde_json::to_string_pretty(&rec).expect("serializable"), None)
        }
        Command::Oracle { input, k, out } => {
            let poly = load_polygon(&input)?;
            let started = Instant::now();
            let packing = brute_force_kdispersion(poly.vertices(), k)?;
            emit(&record("oracle", k, &packing, started).to_json(), out.as_deref())
        }
        Command::Gen { shape, n, seed, out } => {
            let poly = generate(shape, n, seed)
                .ok_or_else(|| CliError::params(format!("n = {n} is below 3")))?;
            let name = format!("{}-{n}-{seed}", shape.name());
            let seed = (shape != Shape::Regular).then_some(seed);
            emit(&InstanceFile::from_polygon(&poly, Some(name), seed).to_json(), out.as_deref())
        }
        Command::Render { input, result, out } => {
            let poly = load_polygon(&input)?;
            let rec = load_result(&result)?;
            check_matches(&poly, &rec)?;
            fs::write(out, render_svg(&poly, &rec))?;
            Ok(())
        }
        Command::Bench { spec, engine, out } => {
            let file = fs::File::open(&spec).map_err(|e| CliError::input(format!("{}: {e}", spec.display())))?;
            let cases = read_spec(file)?;
            let rows: Vec<_> = cases.iter().map(|c| run_case(c, engine.into())).collect();
            match out {
                Some(path) => write_rows(&rows, fs::File::create(path)?),
                None => write_rows(&rows, std::io::stdout().lock()),
            }
        }
    }
}
