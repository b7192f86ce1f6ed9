//! Effective resistance by determinant ratio and by grounded solve.
//!
//! The two routes are deliberately separate code paths: the determinant
//! ratio uses fraction-free Bareiss elimination on two Laplacian minors,
//! while the solve route factors the grounded Laplacian with rational LU
//! and reads off a node potential.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::RatMatrix;
use crate::rational::{to_decimal, Rational};
use crate::transform::ReductionTrace;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Det,
    Solve,
    Reduce,
    Closed,
    Recursion,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Det,
        Method::Solve,
        Method::Reduce,
        Method::Closed,
        Method::Recursion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Det => "det",
            Method::Solve => "solve",
            Method::Reduce => "reduce",
            Method::Closed => "closed",
            Method::Recursion => "recursion",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown method {s:?}")))
    }
}

/// One computed resistance value with its provenance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResistanceReport {
    pub graph: String,
    pub pair: (usize, usize),
    pub method: Method,
    #[serde(with = "crate::rational::serde_fraction")]
    pub value: Rational,
    /// Display-only approximation of `value`.
    pub decimal: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<ReductionTrace>,
}

impl ResistanceReport {
    pub fn new(
        graph: impl Into<String>,
        pair: (usize, usize),
        method: Method,
        value: Rational,
    ) -> Self {
        let decimal = to_decimal(&value, 12);
        Self {
            graph: graph.into(),
            pair,
            method,
            value,
            decimal,
            trace: None,
        }
    }

    pub fn with_trace(mut self, trace: ReductionTrace) -> Self {
        self.trace = Some(trace);
        self
    }
}

pub(crate) fn check_pair(g: &Graph, i: usize, j: usize) -> Result<()> {
    let n = g.vertex_count();
    for v in [i, j] {
        if v == 0 || v > n {
            return Err(Error::IndexOutOfRange { index: v, bound: n });
        }
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// `det(L - rows/cols {i, j}) / det(L - row/col j)`.
pub fn resistance_det(g: &Graph, i: usize, j: usize) -> Result<Rational> {
    check_pair(g, i, j)?;
    if i == j {
        return Ok(Rational::zero());
    }
    let l = g.laplacian();
    let numerator = l.delete_rows_cols(&[i, j], &[i, j])?.det()?;
    let denominator = l.delete_rows_cols(&[j], &[j])?.det()?;
    if denominator.is_zero() {
        return Err(Error::Disconnected);
    }
    Ok(numerator / denominator)
}

/// Grounds `j`, injects one unit of current at `i` and returns the
/// potential of `i`.
pub fn resistance_solve(g: &Graph, i: usize, j: usize) -> Result<Rational> {
    check_pair(g, i, j)?;
    if i == j {
        return Ok(Rational::zero());
    }
    let grounded = g.laplacian().delete_rows_cols(&[j], &[j])?;
    let row = if i > j { i - 2 } else { i - 1 };
    let mut injection = vec![Rational::zero(); grounded.rows()];
    injection[row] = Rational::one();
    let potentials = grounded.solve(&injection).map_err(|e| match e {
        Error::Singular => Error::Disconnected,
        other => other,
    })?;
    Ok(potentials[row].clone())
}

/// All pairwise resistances. Grounds the last vertex, factors once and
/// solves for each unit injection; the solves run in parallel.
pub fn resistance_matrix(g: &Graph) -> Result<RatMatrix> {
    let n = g.vertex_count();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut out = RatMatrix::zeros(n, n);
    if n <= 1 {
        return Ok(out);
    }
    let lu = g.laplacian().delete_rows_cols(&[n], &[n])?.lu()?;
    let columns: Vec<Vec<Rational>> = (0..n - 1)
        .into_par_iter()
        .map(|c| {
            let mut e = vec![Rational::zero(); n - 1];
            e[c] = Rational::one();
            lu.solve(&e)
        })
        .collect::<Result<_>>()?;
    // columns[c][r] is the grounded Green's function X_{rc}
    for a in 0..n - 1 {
        for b in a + 1..n - 1 {
            let r =
                &columns[a][a] + &columns[b][b] - &columns[b][a] * Rational::from_integer(2.into());
            out.set(a, b, r.clone());
            out.set(b, a, r);
        }
        out.set(a, n - 1, columns[a][a].clone());
        out.set(n - 1, a, columns[a][a].clone());
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum MetricVerdict {
    Pass,
    Negative { i: usize, j: usize },
    Asymmetric { i: usize, j: usize },
    NonzeroDiagonal { i: usize },
    Triangle { i: usize, j: usize, k: usize },
}

impl MetricVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, MetricVerdict::Pass)
    }
}

/// Checks the metric axioms exactly on a resistance matrix. Triples are
/// scanned in lexicographic order and the first violation is returned
/// (labels are 1-based).
pub fn metric_check_matrix(r: &RatMatrix) -> MetricVerdict {
    let n = r.rows();
    for i in 0..n {
        if !r.get(i, i).is_zero() {
            return MetricVerdict::NonzeroDiagonal { i: i + 1 };
        }
        for j in 0..n {
            if r.get(i, j).is_negative() {
                return MetricVerdict::Negative { i: i + 1, j: j + 1 };
            }
            if r.get(i, j) != r.get(j, i) {
                return MetricVerdict::Asymmetric { i: i + 1, j: j + 1 };
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if r.get(i, k) > &(r.get(i, j) + r.get(j, k)) {
                    return MetricVerdict::Triangle {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                    };
                }
            }
        }
    }
    MetricVerdict::Pass
}

pub fn metric_check(g: &Graph) -> Result<MetricVerdict> {
    Ok(metric_check_matrix(&resistance_matrix(g)?))
}
