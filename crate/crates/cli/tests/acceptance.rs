//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Runs without the libtest harness so the lines are always
//! printed.

use std::time::{Duration, Instant};

use convex_dispersion::approx3::{
    approx_3_with_stats, extreme_points_in, farthest_from_chord, nearest_to_bisector, Tracker,
};
use convex_dispersion::oracle::{
    brute_force_decide, brute_force_kdispersion, extremes_scan, farthest_from_chord_scan,
    nearest_to_bisector_scan,
};
use convex_dispersion::shapes::regular_polygon;
use convex_dispersion::{
    decide, solve_exact, solve_exact_with_stats, validate_convex, ConvexPolygon, DecideStats,
    Decider, DistanceLadder, Engine, Line, Point,
};
use convex_dispersion_cli::bench::{call_bound, run_case, write_rows, BenchCase};
use convex_dispersion_cli::generate::{generate, Shape};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// The 200 seeded instances shared by criteria 1, 3, 4 and 7.
fn small_cases() -> Vec<(u64, ConvexPolygon, usize)> {
    (0..200u64)
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(0xA11CE + seed);
            let n = rng.gen_range(4..=18);
            let k = rng.gen_range(2..=8.min(n - 1));
            (seed, generate(Shape::Valtr, n, seed).unwrap(), k)
        })
        .collect()
}

fn c1_oracle_equivalence(cases: &[(u64, ConvexPolygon, usize)]) -> Outcome {
    let started = Instant::now();
    let mut bad = Vec::new();
    let mut worst_rel = 0.0f64;
    for (seed, poly, k) in cases {
        let got = solve_exact(poly, *k).unwrap().radius_sq4;
        let want = brute_force_kdispersion(poly.vertices(), *k).unwrap().radius_sq4;
        let rel = (got - want).abs() / want;
        worst_rel = worst_rel.max(rel);
        if rel > 1e-12 {
            bad.push(*seed);
        }
    }
    let secs = started.elapsed().as_secs_f64();
    outcome(
        bad.is_empty() && secs < 60.0,
        format!(
            "{} instances, mismatches {:?}, worst relative error {worst_rel:e}, {secs:.1}s (limit 60s)",
            cases.len(),
            bad
        ),
    )
}

fn c2_fixed_instances() -> Outcome {
    let square = validate_convex(vec![
        Point::new(0., 0.),
        Point::new(0., 1.),
        Point::new(1., 1.),
        Point::new(1., 0.),
    ])
    .unwrap();
    let hexagon = regular_polygon(6, 1.0).unwrap();
    let sq3 = solve_exact(&square, 3).unwrap().radius();
    let sq2 = solve_exact(&square, 2).unwrap().radius();
    let hex3 = solve_exact(&hexagon, 3).unwrap().radius();
    let pass = sq3 == 0.5
        && (sq2 - std::f64::consts::SQRT_2 / 2.0).abs() <= 1e-12
        && (hex3 - 3f64.sqrt() / 2.0).abs() <= 1e-12;
    outcome(pass, format!("square k=3 r={sq3}, square k=2 r={sq2}, hexagon k=3 r={hex3}"))
}

fn c3_claim(cases: &[(u64, ConvexPolygon, usize)]) -> Outcome {
    let mut thresholds = 0usize;
    let mut bad = Vec::new();
    for (seed, poly, k) in cases {
        for t in DistanceLadder::build(poly).values() {
            thresholds += 1;
            let fast = decide(poly, *k, t, Engine::Fast).unwrap().is_some();
            let truth = brute_force_decide(poly.vertices(), *k, t).unwrap();
            if fast != truth {
                bad.push((*seed, t));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{thresholds} thresholds, disagreements {bad:?}"),
    )
}

fn c4_monotonicity(cases: &[(u64, ConvexPolygon, usize)]) -> Outcome {
    let mut bad = Vec::new();
    for (seed, poly, k) in cases {
        let verdicts: Vec<bool> = DistanceLadder::build(poly)
            .values()
            .map(|t| decide(poly, *k, t, Engine::Fast).unwrap().is_some())
            .collect();
        let cut = verdicts.iter().position(|v| !v).unwrap_or(verdicts.len());
        if cut == 0 || verdicts[cut..].iter().any(|&v| v) {
            bad.push(*seed);
        }
    }
    outcome(bad.is_empty(), format!("{} instances, interleaved {bad:?}", cases.len()))
}

fn c5_approximation() -> Outcome {
    let started = Instant::now();
    let mut bad = Vec::new();
    let mut worst = f64::INFINITY;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED5);
    for i in 0..500u64 {
        let n = rng.gen_range(4..=512);
        let shape = if i % 4 == 3 { Shape::Circle } else { Shape::Valtr };
        let poly = generate(shape, n, 10_000 + i).unwrap();
        let got = approx_3_with_stats(&poly).unwrap().packing;
        let opt = solve_exact(&poly, 3).unwrap();
        let ratio = got.radius() / opt.radius();
        worst = worst.min(ratio);
        let valid = got.centers.len() == 3 && got.min_pairwise_sq(&poly) == got.radius_sq4;
        if !(valid && got.radius_sq4 * 8.0 >= opt.radius_sq4 && got.radius_sq4 <= opt.radius_sq4) {
            bad.push(i);
        }
    }
    let secs = started.elapsed().as_secs_f64();
    outcome(
        bad.is_empty() && secs < 120.0,
        format!(
            "500 instances, failures {bad:?}, worst ratio {worst:.4} (floor {:.4}), {secs:.1}s (limit 120s)",
            1.0 / (2.0 * std::f64::consts::SQRT_2)
        ),
    )
}

fn mean_accesses(log_n: u32, seeds: u64) -> f64 {
    let total: u64 = (0..seeds)
        .map(|s| {
            let poly = generate(Shape::Circle, 1 << log_n, s).unwrap();
            approx_3_with_stats(&poly).unwrap().accesses
        })
        .sum();
    total as f64 / seeds as f64
}

/// Checks every search of one instance against its scan; returns the number
/// of checks made, or a description of the first disagreement.
fn searches_match_scans(poly: &ConvexPolygon) -> Result<usize, String> {
    let mut tr = Tracker::new(poly);
    let quad = extreme_points_in(&mut tr);
    if quad.as_array() != extremes_scan(poly) {
        return Err(format!("extremes {:?} vs {:?}", quad.as_array(), extremes_scan(poly)));
    }
    let mut checks = 1;
    let ext = quad.distinct();
    for &u in &ext {
        for &v in &ext {
            if u == v {
                continue;
            }
            let e = farthest_from_chord(poly, u, v).unwrap();
            if e != farthest_from_chord_scan(poly, u, v).unwrap() {
                return Err(format!("farthest from chord {u},{v}"));
            }
            let line = Line::bisector(poly.vertex(u), poly.vertex(v)).unwrap();
            let gap = |w: usize| line.offset(poly.vertex(w)).abs();
            let near = nearest_to_bisector(poly, u, v).unwrap();
            let scan = nearest_to_bisector_scan(poly, u, v).unwrap().unwrap();
            if near.iter().map(|&w| gap(w)).fold(f64::INFINITY, f64::min) != gap(scan) {
                return Err(format!("nearest to bisector {u},{v}"));
            }
            checks += 2;
        }
    }
    Ok(checks)
}

fn c6_access_growth() -> Outcome {
    // per-doubling increment fitted by least squares over n = 2^6 .. 2^12
    let small: Vec<(f64, f64)> = (6..=12).map(|e| (f64::from(e), mean_accesses(e, 8))).collect();
    let mx = small.iter().map(|p| p.0).sum::<f64>() / small.len() as f64;
    let my = small.iter().map(|p| p.1).sum::<f64>() / small.len() as f64;
    let c = small.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>()
        / small.iter().map(|p| (p.0 - mx).powi(2)).sum::<f64>();

    let mut worst_1m = 0u64;
    let mut worst_1k = u64::MAX;
    let mut scan_checks = 0;
    let mut scan_error = None;
    for seed in 0..3 {
        let big = generate(Shape::Circle, 1 << 20, seed).unwrap();
        worst_1m = worst_1m.max(approx_3_with_stats(&big).unwrap().accesses);
        let small = generate(Shape::Circle, 1 << 10, seed).unwrap();
        worst_1k = worst_1k.min(approx_3_with_stats(&small).unwrap().accesses);
        for poly in [&big, &small] {
            match searches_match_scans(poly) {
                Ok(k) => scan_checks += k,
                Err(e) => scan_error = Some(e),
            }
        }
    }
    for e in 3u32..=14 {
        let poly = generate(Shape::Valtr, 1 << e, u64::from(e)).unwrap();
        match searches_match_scans(&poly) {
            Ok(k) => scan_checks += k,
            Err(err) => scan_error = Some(err),
        }
    }
    let bound = worst_1k as f64 + 13.0 * c;
    let pass = (worst_1m as f64) <= bound && worst_1m <= 400 && scan_error.is_none();
    outcome(
        pass,
        format!(
            "c={c:.2}/doubling, accesses(2^20)={worst_1m} <= accesses(2^10)+13c={bound:.1}, cap 400; \
             {scan_checks} search-vs-scan checks{}",
            scan_error.map(|e| format!(", mismatch: {e}")).unwrap_or_default()
        ),
    )
}

fn c7_budgets(cases: &[(u64, ConvexPolygon, usize)]) -> Outcome {
    let mut violations = Vec::new();
    let mut solves = 0;
    let mut check = |label: String, poly: &ConvexPolygon, k: usize| {
        let (_, stats) = solve_exact_with_stats(poly, k, Engine::Fast).unwrap();
        solves += 1;
        let nodes_cap = (poly.len() as u64) << k;
        if stats.decide_calls > call_bound(stats.ladder_len) || stats.max_nodes_per_call > nodes_cap {
            violations.push(label);
        }
    };
    for (seed, poly, k) in cases {
        check(format!("small seed {seed}"), poly, *k);
    }
    for n in [256, 512, 1024, 2048] {
        check(format!("n={n} k=4"), &generate(Shape::Valtr, n, n as u64).unwrap(), 4);
    }
    for k in 2..=8 {
        check(format!("n=64 k={k}"), &generate(Shape::Valtr, 64, 64 + k as u64).unwrap(), k);
    }
    outcome(violations.is_empty(), format!("{solves} solves, violations {violations:?}"))
}

fn c8_engines() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xE6);
    let mut bad = Vec::new();
    let mut decisions = 0;
    for i in 0..500u64 {
        let n = rng.gen_range(3..=60);
        let k = rng.gen_range(2..=8.min(n));
        let poly = generate(Shape::Valtr, n, 20_000 + i).unwrap();
        let ladder = DistanceLadder::build(&poly);
        let opt = solve_exact(&poly, k).unwrap().radius_sq4;
        let mut thresholds = vec![opt, ladder.value(0), ladder.value(ladder.len() - 1)];
        thresholds.extend((0..3).map(|_| ladder.value(rng.gen_range(0..ladder.len()))));
        if let Some(p) = ladder.position(opt) {
            if p + 1 < ladder.len() {
                thresholds.push(ladder.value(p + 1));
            }
        }
        for t in thresholds {
            let run = |engine| -> (Option<_>, DecideStats) { Decider::new(&poly, k, t, engine).unwrap().run() };
            let (fast, fs) = run(Engine::Fast);
            let (naive, ns) = run(Engine::Naive);
            decisions += 1;
            if fast != naive || fs != ns {
                bad.push((i, t));
            }
        }
    }
    outcome(bad.is_empty(), format!("500 instances, {decisions} decisions, disagreements {bad:?}"))
}

fn c9_performance() -> Outcome {
    let case = BenchCase {
        shape: "valtr".into(),
        n: 5000,
        k: 10,
        seed: 1,
        algorithm: None,
    };
    let row = run_case(&case, Engine::Fast);
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("bench_n5000_k10.csv");
    let written = write_rows(std::slice::from_ref(&row), std::fs::File::create(&path).unwrap()).is_ok();
    let pass = row.error.is_empty() && row.wall_seconds < 60.0 && written;
    outcome(
        pass,
        format!(
            "n=5000 k=10 in {:.2}s (limit 60s), {} decide calls, {} nodes; row in {}",
            row.wall_seconds,
            row.decide_calls.unwrap_or(0),
            row.nodes.unwrap_or(0),
            path.display()
        ),
    )
}

fn main() {
    let cases = small_cases();
    let criteria: Vec<Criterion> = vec![
        ("1 oracle equivalence", Box::new(|| c1_oracle_equivalence(&cases))),
        ("2 fixed instances", Box::new(c2_fixed_instances)),
        ("3 decision completeness", Box::new(|| c3_claim(&cases))),
        ("4 monotonicity", Box::new(|| c4_monotonicity(&cases))),
        ("5 approximation guarantee", Box::new(c5_approximation)),
        ("6 logarithmic accesses", Box::new(c6_access_growth)),
        ("7 budgets", Box::new(|| c7_budgets(&cases))),
        ("8 engine differential", Box::new(c8_engines)),
        ("9 performance", Box::new(c9_performance)),
    ];

    let mut failed = 0;
    for (name, run) in &criteria {
        let started = Instant::now();
        let out = run();
        let took: Duration = started.elapsed();
        failed += usize::from(!out.pass);
        let line = format!(
            "{} {name}: {} [{:.1}s]",
            if out.pass { "PASS" } else { "FAIL" },
            out.detail,
            took.as_secs_f64()
        );
        println!("{line}");
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
