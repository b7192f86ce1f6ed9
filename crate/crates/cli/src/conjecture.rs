use std::fmt::Write as _;

use serde::Serialize;

use ohmnet_core::closed_forms::{decreasing_with_lag, monotone_from, scan_to_csv};
use ohmnet_core::rational::{to_fraction_string, to_scientific};
use ohmnet_core::{conjecture_delta_scan_with_target, DeltaRow, Rational};

use crate::args::{ConjectureArgs, Format};
use crate::{to_json, CliError, CliResult, Outcome};

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub n_max: usize,
    #[serde(with = "ohmnet_core::rational::serde_fraction")]
    pub target: Rational,
    #[serde(with = "ohmnet_core::rational::serde_fraction")]
    pub threshold: Rational,
    /// First n from which the error never increases.
    pub monotone_from: Option<usize>,
    /// Shortest lag at which the error decreases over the whole scan, if
    /// any lag up to [`MAX_DECAY_LAG`] does.
    pub decay_lag: Option<usize>,
    pub final_abs_err: String,
    pub converged: bool,
    pub rows: Vec<DeltaRow>,
}

pub const MAX_DECAY_LAG: usize = 12;

pub fn scan(n_max: usize, target: &Rational, threshold: &Rational) -> CliResult<ScanReport> {
    if n_max < 6 {
        return Err(CliError::Usage(format!(
            "--nmax must be at least 6, got {n_max}"
        )));
    }
    let rows = conjecture_delta_scan_with_target(n_max, target)?;
    let last = rows.last().expect("n_max >= 6 gives rows");
    Ok(ScanReport {
        n_max,
        target: target.clone(),
        threshold: threshold.clone(),
        monotone_from: monotone_from(&rows),
        decay_lag: (1..=MAX_DECAY_LAG)
            .find(|&lag| decreasing_with_lag(&rows, lag) == Some(rows[0].n)),
        final_abs_err: to_scientific(&last.abs_err, 6),
        converged: &last.abs_err < threshold,
        rows,
    })
}

pub fn run(args: &ConjectureArgs) -> Result<Outcome, (CliError, Option<Outcome>)> {
    let report = scan(args.nmax, &args.target, &args.threshold).map_err(|e| (e, None))?;
    let body = match args.out.format.unwrap_or(Format::Csv) {
        Format::Csv => scan_to_csv(&report.rows),
        Format::Json => to_json(&report),
        Format::Text => {
            let mut out = String::new();
            for row in &report.rows {
                let _ = writeln!(out, "{:>5}  {}", row.n, row.abs_err_decimal());
            }
            out
        }
    };
    let n0 = report
        .monotone_from
        .map(|n| n.to_string())
        .unwrap_or_else(|| "none".into());
    let lag = report
        .decay_lag
        .map(|l| format!("every {l} steps from n = {}", report.rows[0].n))
        .unwrap_or_else(|| format!("at no lag up to {MAX_DECAY_LAG}"));
    let summary = format!(
        "rows: {}; error non-increasing from n = {n0}; decreasing {lag}; |delta_{} - {}| = {} (threshold {})",
        report.rows.len(),
        report.n_max,
        to_fraction_string(&report.target),
        report.final_abs_err,
        to_scientific(&report.threshold, 3)
    );
    let outcome = Outcome {
        body,
        notes: vec![summary.clone()],
    };
    if report.converged {
        Ok(outcome)
    } else {
        Err((
            CliError::Threshold(summary),
            Some(Outcome::body(outcome.body)),
        ))
    }
}
