use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use ohmnet_core::rational::{int, to_fraction_string};
use ohmnet_core::{
    closed_form, covers, metric_check_matrix, recursion_form, reduce_to_pair, resistance_det,
    resistance_matrix, resistance_solve, Family, FamilySpec, MetricVerdict, Rational,
};

use crate::args::{CheckArgs, Format};
use crate::resist::csv_field;
use crate::source::{load, Loaded};
use crate::{to_json, CliError, CliResult, Outcome};

/// Result of every check on one graph.
#[derive(Clone, Debug, Serialize)]
pub struct GraphCheck {
    pub graph: String,
    pub pairs: usize,
    pub comparisons: usize,
    pub failures: Vec<String>,
    pub metric: MetricVerdict,
    /// `None` unless every edge has unit resistance.
    pub foster: Option<bool>,
    /// Wheels only: whether r(i, k) is the same for every rim vertex i.
    pub rim_uniform: Option<bool>,
}

impl GraphCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
            && self.metric.is_pass()
            && self.foster != Some(false)
            && self.rim_uniform != Some(false)
    }

    fn first_failure(&self) -> Option<String> {
        if let Some(f) = self.failures.first() {
            return Some(f.clone());
        }
        if !self.metric.is_pass() {
            return Some(format!("{}: metric check {:?}", self.graph, self.metric));
        }
        if self.foster == Some(false) {
            return Some(format!(
                "{}: edge resistances do not sum to n - 1",
                self.graph
            ));
        }
        if self.rim_uniform == Some(false) {
            return Some(format!(
                "{}: rim-to-hub resistance depends on the rim vertex",
                self.graph
            ));
        }
        None
    }
}

fn pair_failures(
    loaded: &Loaded,
    matrix_value: &Rational,
    i: usize,
    j: usize,
) -> (usize, Vec<String>) {
    let g = &loaded.graph;
    let mut values: Vec<(&str, Result<Rational, String>)> = vec![
        ("det", resistance_det(g, i, j).map_err(|e| e.to_string())),
        (
            "solve",
            resistance_solve(g, i, j).map_err(|e| e.to_string()),
        ),
        (
            "reduce",
            reduce_to_pair(g, i, j)
                .map(|r| r.0)
                .map_err(|e| e.to_string()),
        ),
    ];
    if let Some(spec) = loaded.spec.as_ref().filter(|s| covers(s, i, j)) {
        values.push(("closed", closed_form(spec, i, j).map_err(|e| e.to_string())));
        values.push((
            "recursion",
            recursion_form(spec, i, j).map_err(|e| e.to_string()),
        ));
    }
    let mut failures = Vec::new();
    for (name, value) in &values {
        match value {
            Ok(v) if v == matrix_value => {}
            Ok(v) => failures.push(format!(
                "{} pair ({i}, {j}): matrix = {}, {name} = {}",
                loaded.label,
                to_fraction_string(matrix_value),
                to_fraction_string(v)
            )),
            Err(e) => failures.push(format!(
                "{} pair ({i}, {j}): {name} failed: {e}",
                loaded.label
            )),
        }
    }
    (values.len(), failures)
}

/// All pairs, all applicable methods, metric axioms and, for unit graphs,
/// the edge-sum identity.
pub fn check_graph(loaded: &Loaded) -> CliResult<GraphCheck> {
    let g = &loaded.graph;
    if !g.is_connected() {
        return Err(CliError::Usage(format!(
            "{} is not connected",
            loaded.label
        )));
    }
    let n = g.vertex_count();
    let r = resistance_matrix(g)?;
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let results: Vec<(usize, Vec<String>)> = pairs
        .par_iter()
        .map(|&(i, j)| pair_failures(loaded, r.get(i - 1, j - 1), i, j))
        .collect();
    let comparisons = results.iter().map(|(c, _)| c).sum();
    let failures = results.into_iter().flat_map(|(_, f)| f).collect();
    let foster = g.is_unit().then(|| {
        let total: Rational = g.edges().map(|(u, v, _)| r.get(u - 1, v - 1).clone()).sum();
        total == int(n as i64 - 1)
    });
    let rim_uniform = match loaded.spec {
        Some(spec) if spec.family() == Family::Wheel => {
            let hub = r.row(n - 1);
            Some(hub[..n - 1].iter().all(|v| v == &hub[0]))
        }
        _ => None,
    };
    Ok(GraphCheck {
        graph: loaded.label.clone(),
        pairs: pairs.len(),
        comparisons,
        failures,
        metric: metric_check_matrix(&r),
        foster,
        rim_uniform,
    })
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct FamilySummary {
    pub family: String,
    pub instances: usize,
    pub pairs: usize,
    pub comparisons: usize,
    pub failed_instances: usize,
    /// Wheels only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rim_uniform: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckSummary {
    pub families: Vec<FamilySummary>,
    pub passed: bool,
    pub first_failure: Option<String>,
}

fn summarize(name: String, checks: &[GraphCheck]) -> FamilySummary {
    let uniform: Vec<bool> = checks.iter().filter_map(|c| c.rim_uniform).collect();
    FamilySummary {
        family: name,
        instances: checks.len(),
        pairs: checks.iter().map(|c| c.pairs).sum(),
        comparisons: checks.iter().map(|c| c.comparisons).sum(),
        failed_instances: checks.iter().filter(|c| !c.passed()).count(),
        rim_uniform: (!uniform.is_empty()).then(|| uniform.iter().all(|&u| u)),
    }
}

/// Checks every size from the family minimum up to `max`.
pub fn check_families(families: &[Family], max: usize) -> CliResult<CheckSummary> {
    let mut summaries = Vec::new();
    let mut first_failure = None;
    for &family in families {
        let mut checks = Vec::new();
        for size in family.min_size()..=max {
            let spec = FamilySpec::new(family, size)?;
            let loaded = Loaded {
                label: spec.to_string(),
                graph: spec.generate(),
                spec: Some(spec),
            };
            let c = check_graph(&loaded)?;
            if first_failure.is_none() {
                first_failure = c.first_failure();
            }
            checks.push(c);
        }
        summaries.push(summarize(family.to_string(), &checks));
    }
    Ok(CheckSummary {
        passed: first_failure.is_none(),
        families: summaries,
        first_failure,
    })
}

pub fn render(summary: &CheckSummary, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => return to_json(summary),
        Format::Csv => {
            out.push_str("family,instances,pairs,comparisons,failed_instances,rim_uniform\n");
            for f in &summary.families {
                let uniform = f.rim_uniform.map(|u| u.to_string()).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    csv_field(&f.family),
                    f.instances,
                    f.pairs,
                    f.comparisons,
                    f.failed_instances,
                    uniform
                );
            }
        }
        Format::Text => {
            let _ = writeln!(
                out,
                "{:<24} {:>9} {:>7} {:>11} {:>7}",
                "family", "instances", "pairs", "comparisons", "failed"
            );
            for f in &summary.families {
                let _ = writeln!(
                    out,
                    "{:<24} {:>9} {:>7} {:>11} {:>7}",
                    f.family, f.instances, f.pairs, f.comparisons, f.failed_instances
                );
                if let Some(u) = f.rim_uniform {
                    let verdict = if u { "confirmed" } else { "VIOLATED" };
                    let _ = writeln!(out, "  rim independence of r(i, k): {verdict}");
                }
            }
            let instances: usize = summary.families.iter().map(|f| f.instances).sum();
            let failed: usize = summary.families.iter().map(|f| f.failed_instances).sum();
            let _ = writeln!(out, "{} passed, {failed} failed", instances - failed);
            if let Some(f) = &summary.first_failure {
                let _ = writeln!(out, "first failure: {f}");
            }
        }
    }
    out
}

pub fn run(args: &CheckArgs) -> Result<Outcome, (CliError, Option<Outcome>)> {
    let format = args.out.format.unwrap_or(Format::Text);
    let summary = match &args.file {
        Some(path) => {
            let source = crate::args::Source {
                family: None,
                n: None,
                file: Some(path.clone()),
            };
            let loaded = load(&source).map_err(|e| (e, None))?;
            let c = check_graph(&loaded).map_err(|e| (e, None))?;
            let first_failure = c.first_failure();
            CheckSummary {
                families: vec![summarize(loaded.label.clone(), std::slice::from_ref(&c))],
                passed: first_failure.is_none(),
                first_failure,
            }
        }
        None => {
            let families = match args.family.as_deref().unwrap_or("all") {
                "all" => Family::ALL.to_vec(),
                name => vec![name
                    .parse::<Family>()
                    .map_err(|e| (CliError::from(e), None))?],
            };
            check_families(&families, args.max).map_err(|e| (e, None))?
        }
    };
    let outcome = Outcome::body(render(&summary, format));
    match &summary.first_failure {
        None => Ok(outcome),
        Some(f) => Err((CliError::Disagreement(f.clone()), Some(outcome))),
    }
}
