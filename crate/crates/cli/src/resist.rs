use std::fmt::Write as _;

use ohmnet_core::rational::to_fraction_string;
use ohmnet_core::{
    closed_form, recursion_form, reduce_to_pair, resistance_det, resistance_solve, Method,
    ResistanceReport,
};

use crate::args::{Format, MatrixArgs, ReduceArgs, ResistArgs};
use crate::source::{load, pair, Loaded};
use crate::{to_json, CliError, CliResult, Outcome};

/// One method on one pair of a loaded graph.
pub fn compute(loaded: &Loaded, method: Method, i: usize, j: usize) -> CliResult<ResistanceReport> {
    let g = &loaded.graph;
    let value = match method {
        Method::Det => resistance_det(g, i, j)?,
        Method::Solve => resistance_solve(g, i, j)?,
        Method::Reduce => reduce_to_pair(g, i, j)?.0,
        Method::Closed | Method::Recursion => {
            let spec = loaded.spec.as_ref().ok_or_else(|| {
                CliError::Usage(format!("method {method} needs a --family input"))
            })?;
            if method == Method::Closed {
                closed_form(spec, i, j)?
            } else {
                recursion_form(spec, i, j)?
            }
        }
    };
    Ok(ResistanceReport::new(
        loaded.label.clone(),
        (i, j),
        method,
        value,
    ))
}

/// Fails with a diagnostic naming the graph, pair, methods and values when
/// the reports do not all carry the same value.
pub fn agree(reports: &[ResistanceReport]) -> CliResult<()> {
    let Some(first) = reports.first() else {
        return Ok(());
    };
    for other in &reports[1..] {
        if other.value != first.value {
            return Err(CliError::Disagreement(format!(
                "{} pair ({}, {}): {} = {}, {} = {}",
                first.graph,
                first.pair.0,
                first.pair.1,
                first.method,
                to_fraction_string(&first.value),
                other.method,
                to_fraction_string(&other.value)
            )));
        }
    }
    Ok(())
}

pub(crate) fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn render_reports(reports: &[ResistanceReport], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            for r in reports {
                let _ = writeln!(
                    out,
                    "{} r({},{}) [{}] = {} (~{})",
                    r.graph, r.pair.0, r.pair.1, r.method, r.value, r.decimal
                );
            }
        }
        Format::Json => out = to_json(&reports),
        Format::Csv => {
            out.push_str("graph,i,j,method,value,decimal\n");
            for r in reports {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    csv_field(&r.graph),
                    r.pair.0,
                    r.pair.1,
                    r.method,
                    to_fraction_string(&r.value),
                    r.decimal
                );
            }
        }
    }
    out
}

pub fn run(args: &ResistArgs) -> CliResult<Outcome> {
    let loaded = load(&args.source)?;
    let (i, j) = pair(&loaded, &args.pair)?;
    if !loaded.graph.is_connected() {
        return Err(CliError::Usage(format!(
            "{} is not connected",
            loaded.label
        )));
    }
    let mut methods = args.methods.clone();
    methods.dedup();
    let reports = methods
        .iter()
        .map(|&m| compute(&loaded, m, i, j))
        .collect::<CliResult<Vec<_>>>()?;
    agree(&reports)?;
    Ok(Outcome::body(render_reports(
        &reports,
        args.out.format.unwrap_or(Format::Text),
    )))
}

pub fn matrix(args: &MatrixArgs) -> CliResult<Outcome> {
    let loaded = load(&args.source)?;
    let l = loaded.graph.laplacian();
    let mut out = String::new();
    match args.out.format.unwrap_or(Format::Text) {
        Format::Text => {
            let _ = writeln!(out, "# Laplacian of {}", loaded.label);
            let _ = write!(out, "{l}");
        }
        Format::Json => {
            let rows: Vec<Vec<String>> = l
                .to_rows()
                .iter()
                .map(|row| row.iter().map(to_fraction_string).collect())
                .collect();
            out = to_json(&serde_json::json!({ "graph": loaded.label, "laplacian": rows }));
        }
        Format::Csv => {
            for row in l.to_rows() {
                let cells: Vec<String> = row.iter().map(to_fraction_string).collect();
                let _ = writeln!(out, "{}", cells.join(","));
            }
        }
    }
    Ok(Outcome::body(out))
}

/// Reduction report with its full trace; JSON unless another format is asked for.
pub fn reduce(args: &ReduceArgs) -> CliResult<Outcome> {
    let loaded = load(&args.source)?;
    let (i, j) = pair(&loaded, &args.pair)?;
    let (value, trace) = reduce_to_pair(&loaded.graph, i, j)?;
    let steps = trace.steps.len();
    let report = ResistanceReport::new(loaded.label.clone(), (i, j), Method::Reduce, value)
        .with_trace(trace);
    let body = match args.out.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&report),
        Format::Text => format!(
            "{} r({},{}) [reduce] = {} (~{}) in {steps} steps\n",
            report.graph, i, j, report.value, report.decimal
        ),
        Format::Csv => {
            let mut out = String::from("step,rule,vertices\n");
            for (k, step) in report.trace.iter().flat_map(|t| t.steps.iter()).enumerate() {
                let verts: Vec<String> = step.vertices.iter().map(|v| v.to_string()).collect();
                let rule = serde_json::to_value(step.rule).expect("serializable");
                let _ = writeln!(
                    out,
                    "{},{},{}",
                    k + 1,
                    rule.as_str().unwrap_or_default(),
                    verts.join(" ")
                );
            }
            out
        }
    };
    Ok(Outcome::body(body))
}
