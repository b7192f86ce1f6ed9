use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::Serialize;

use ohmnet_core::rational::to_fraction_string;
use ohmnet_core::{covers, Family, FamilySpec, Method, Rational};

use crate::args::{BenchArgs, Format};
use crate::resist::compute;
use crate::source::Loaded;
use crate::{to_json, CliError, CliResult, Outcome};

pub const STATUS_OK: &str = "ok";
pub const STATUS_CUTOFF: &str = "exceeds cutoff";
pub const STATUS_UNSUPPORTED: &str = "unsupported";

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub family: Family,
    pub sizes: Vec<usize>,
    pub reps: u32,
    pub methods: Vec<Method>,
    pub det_cutoff: usize,
    pub solve_cutoff: usize,
    pub reduce_cutoff: usize,
}

impl BenchConfig {
    fn cutoff(&self, method: Method) -> usize {
        match method {
            Method::Det => self.det_cutoff,
            Method::Solve => self.solve_cutoff,
            Method::Reduce => self.reduce_cutoff,
            Method::Closed | Method::Recursion => usize::MAX,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub family: Family,
    pub n: usize,
    pub method: Method,
    /// Median wall-clock time; `None` when the cell was skipped.
    pub milliseconds: Option<f64>,
    pub status: &'static str,
}

/// The pair timed for each family: the one its formula covers.
pub fn bench_pair(spec: &FamilySpec) -> (usize, usize) {
    let n = spec.vertex_count();
    match spec.family() {
        Family::Ladder => (1, 2),
        _ => (1, n),
    }
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort();
    samples[samples.len() / 2]
}

/// Times each method at each size and checks that all timed methods agree.
pub fn run_bench(config: &BenchConfig) -> CliResult<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &size in &config.sizes {
        let spec = FamilySpec::new(config.family, size)?;
        let loaded = Loaded {
            label: spec.to_string(),
            graph: spec.generate(),
            spec: Some(spec),
        };
        let (i, j) = bench_pair(&spec);
        let mut values: Vec<(Method, Rational)> = Vec::new();
        for &method in &config.methods {
            let formula = matches!(method, Method::Closed | Method::Recursion);
            let status = if formula && !covers(&spec, i, j) {
                STATUS_UNSUPPORTED
            } else if spec.vertex_count() > config.cutoff(method) {
                STATUS_CUTOFF
            } else {
                STATUS_OK
            };
            let mut milliseconds = None;
            if status == STATUS_OK {
                let mut samples = Vec::with_capacity(config.reps as usize);
                let mut value = None;
                for _ in 0..config.reps {
                    let start = Instant::now();
                    let report = compute(&loaded, method, i, j)?;
                    samples.push(start.elapsed());
                    value = Some(report.value);
                }
                values.push((method, value.expect("reps >= 1")));
                milliseconds = Some(median(samples).as_secs_f64() * 1e3);
            }
            rows.push(BenchRow {
                family: config.family,
                n: size,
                method,
                milliseconds,
                status,
            });
        }
        if let Some((m0, v0)) = values.first() {
            if let Some((m, v)) = values.iter().find(|(_, v)| v != v0) {
                return Err(CliError::Disagreement(format!(
                    "{spec} pair ({i}, {j}): {m0} = {}, {m} = {}",
                    to_fraction_string(v0),
                    to_fraction_string(v)
                )));
            }
        }
    }
    Ok(rows)
}

/// Methods timed at the largest size where every method ran, fastest first.
pub fn ordering_at_largest_common_size(rows: &[BenchRow]) -> Option<(usize, Vec<(Method, f64)>)> {
    let mut sizes: Vec<usize> = rows.iter().map(|r| r.n).collect();
    sizes.sort_unstable();
    sizes.dedup();
    sizes.into_iter().rev().find_map(|n| {
        let at: Vec<&BenchRow> = rows
            .iter()
            .filter(|r| r.n == n && r.status != STATUS_UNSUPPORTED)
            .collect();
        if at.is_empty() || at.iter().any(|r| r.milliseconds.is_none()) {
            return None;
        }
        let mut timed: Vec<(Method, f64)> = at
            .iter()
            .map(|r| (r.method, r.milliseconds.unwrap()))
            .collect();
        timed.sort_by(|a, b| a.1.total_cmp(&b.1));
        Some((n, timed))
    })
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("family,n,method,milliseconds,status\n");
    for r in rows {
        let ms = r
            .milliseconds
            .map(|m| format!("{m:.3}"))
            .unwrap_or_default();
        let _ = writeln!(out, "{},{},{},{ms},{}", r.family, r.n, r.method, r.status);
    }
    out
}

fn to_text(rows: &[BenchRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<12} {:>7} {:<10} {:>14}",
        "family", "n", "method", "median ms"
    );
    for r in rows {
        let cell = match r.milliseconds {
            Some(m) => format!("{m:.3}"),
            None => r.status.to_string(),
        };
        let _ = writeln!(
            out,
            "{:<12} {:>7} {:<10} {:>14}",
            r.family.to_string(),
            r.n,
            r.method.to_string(),
            cell
        );
    }
    out
}

pub fn run(args: &BenchArgs) -> Result<Outcome, (CliError, Option<Outcome>)> {
    let mut methods = args.methods.clone();
    methods.dedup();
    let config = BenchConfig {
        family: args.family,
        sizes: args.sizes.clone(),
        reps: args.reps,
        methods,
        det_cutoff: args.cutoff,
        solve_cutoff: args.solve_cutoff,
        reduce_cutoff: args.reduce_cutoff,
    };
    let rows = run_bench(&config).map_err(|e| (e, None))?;
    let body = match args.out.format.unwrap_or(Format::Csv) {
        Format::Csv => to_csv(&rows),
        Format::Json => to_json(&rows),
        Format::Text => to_text(&rows),
    };
    let mut outcome = Outcome::body(body);
    if let Some((n, timed)) = ordering_at_largest_common_size(&rows) {
        let order: Vec<String> = timed
            .iter()
            .map(|(m, ms)| format!("{m} {ms:.3} ms"))
            .collect();
        outcome.notes.push(format!(
            "fastest to slowest at n = {n}: {}",
            order.join(", ")
        ));
    }
    Ok(outcome)
}
