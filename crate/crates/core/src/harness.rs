//! Scaling measurements: seeded instances, wall-clock timing and log-log
//! slope fits.

use std::str::FromStr;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::fast::{complement_width, diameter_complement_kci_with, diameter_kci_rangetree_with};
use crate::generators::{gen_planted_complement, gen_random_kci_with, KciParams};
use crate::ordering::{width_under, CliqueOrdering};
use crate::sparse::{diameter_naive_with, SparseSplitGraph};

/// Longest planted run in the clique-side scaling instances. Bounded runs keep
/// `m` linear in `n`.
pub const BENCH_MAX_RUN: usize = 8;

/// Stable neighbours per clique vertex in the stable-side instances.
pub const BENCH_DEGREE: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    RangetreeScaling,
    ComplementScaling,
    NaiveBaseline,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rangetree-scaling" => Ok(Suite::RangetreeScaling),
            "complement-scaling" => Ok(Suite::ComplementScaling),
            "naive-baseline" => Ok(Suite::NaiveBaseline),
            _ => Err(Error::InfeasibleParameters(format!("unknown suite {s:?}"))),
        }
    }
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::RangetreeScaling => "rangetree-scaling",
            Suite::ComplementScaling => "complement-scaling",
            Suite::NaiveBaseline => "naive-baseline",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    /// Edges between the clique and the stable set.
    pub m: usize,
    /// Width measured under the planted ordering.
    pub width: usize,
    pub diameter: u8,
    pub wall_ms: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub suite: Suite,
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of `ln wall_ms` against `ln n`.
    pub slope: f64,
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.max(1e-9).ln())).collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

/// Result of `f` and the fastest of `reps` runs in milliseconds.
pub fn time_min<T>(reps: usize, mut f: impl FnMut() -> T) -> (T, f64) {
    let mut best = f64::INFINITY;
    let mut out = None;
    for _ in 0..reps.max(1) {
        let start = Instant::now();
        let r = f();
        best = best.min(start.elapsed().as_secs_f64() * 1e3);
        out = Some(r);
    }
    (out.expect("at least one run"), best)
}

/// Clique-side instance on `n` vertices, `|S| = |K| = n / 2`.
pub fn clique_side_instance(n: usize, k: usize, seed: u64) -> Result<(SparseSplitGraph, CliqueOrdering)> {
    gen_random_kci_with(KciParams { k_size: n / 2, s_size: n / 2, k, max_run: Some(BENCH_MAX_RUN), seed })
}

/// Stable-side instance on `n` vertices, `|S| = |K| = n / 2`, where every
/// clique vertex sees `degree` stable vertices in `k + 1` runs.
pub fn stable_side_instance(n: usize, k: usize, degree: usize, seed: u64) -> Result<(SparseSplitGraph, CliqueOrdering)> {
    gen_planted_complement(n / 2, n / 2, k + 1, degree, seed)
}

fn measure(suite: Suite, n: usize, k: usize, seed: u64, exec: Exec, reps: usize) -> Result<BenchRow> {
    let (sg, tau, width) = match suite {
        Suite::ComplementScaling => {
            let (sg, sigma) = stable_side_instance(n, k, BENCH_DEGREE, seed)?;
            let w = complement_width(&sg, &sigma);
            (sg, sigma, w)
        }
        _ => {
            let (sg, tau) = clique_side_instance(n, k, seed)?;
            let w = width_under(&sg, &tau);
            (sg, tau, w)
        }
    };
    let (diameter, wall_ms) = match suite {
        Suite::RangetreeScaling => {
            let (r, t) = time_min(reps, || diameter_kci_rangetree_with(&sg, &tau, exec));
            (r?.value, t)
        }
        Suite::ComplementScaling => {
            let (r, t) = time_min(reps, || diameter_complement_kci_with(&sg, &tau, exec));
            (r?.value, t)
        }
        Suite::NaiveBaseline => {
            let (r, t) = time_min(reps, || diameter_naive_with(&sg, exec));
            (r.value, t)
        }
    };
    Ok(BenchRow { n: sg.n(), m: sg.cross_edges(), width, diameter, wall_ms })
}

/// Runs `suite` at every size, instance `i` seeded with `seed + i`.
pub fn run_suite(suite: Suite, sizes: &[usize], k: usize, seed: u64, exec: Exec, reps: usize) -> Result<BenchReport> {
    let rows = sizes
        .iter()
        .enumerate()
        .map(|(i, &n)| measure(suite, n, k, seed.wrapping_add(i as u64), exec, reps))
        .collect::<Result<Vec<_>>>()?;
    let slope = if rows.len() >= 2 {
        loglog_slope(&rows.iter().map(|r| (r.n as f64, r.wall_ms)).collect::<Vec<_>>())
    } else {
        f64::NAN
    };
    Ok(BenchReport { suite, rows, slope })
}

/// Stable-side algorithm at a fixed instance size and varying `k`; `degree`
/// fixes `m`. Returns `(k, wall_ms)` pairs.
pub fn complement_k_sweep(n: usize, ks: &[usize], degree: usize, seed: u64, exec: Exec, reps: usize) -> Result<Vec<(usize, usize, f64)>> {
    ks.iter()
        .map(|&k| {
            let (sg, sigma) = stable_side_instance(n, k, degree, seed)?;
            let (r, t) = time_min(reps, || diameter_complement_kci_with(&sg, &sigma, exec));
            r?;
            Ok((k, sg.cross_edges(), t))
        })
        .collect()
}

/// Plain-text table, one row per size, slope last.
pub fn format_report(report: &BenchReport) -> String {
    let mut out = format!("# suite {}\n{:>8} {:>10} {:>6} {:>5} {:>12}\n", report.suite.name(), "n", "m", "width", "diam", "wall_ms");
    for r in &report.rows {
        out.push_str(&format!("{:>8} {:>10} {:>6} {:>5} {:>12.3}\n", r.n, r.m, r.width, r.diameter, r.wall_ms));
    }
    out.push_str(&format!("slope {:.3}\n", report.slope));
    out
}
