//! Resistance by circuit reduction.
//!
//! Eliminating a vertex `v` with incident conductances `c_1..c_d` joins each
//! pair of its neighbours by `c_s c_t / sum(c)`. This is the star-mesh
//! transform (a one-row Schur complement of the Laplacian); for degrees 1,
//! 2 and 3 it coincides with pendant pruning, the series rule and Y-Δ.
//! Mesh edges landing on an existing edge merge by the parallel rule.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Relabeled};
use crate::rational::Rational;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Prune,
    Series,
    Parallel,
    DeltaY,
    YDelta,
    StarMesh,
}

/// One reduction step.
///
/// - elimination rules (`prune`, `series`, `y-delta`, `star-mesh`):
///   `vertices = [v, u_1, ..., u_d]`, `before` holds the leg resistances
///   `v–u_t`, `after` the new mesh resistances for pairs `(u_s, u_t)`,
///   `s < t`, in lexicographic order;
/// - `parallel`: `vertices = [u, w]`, `before = [existing, incoming]`,
///   `after = [merged]`;
/// - `delta-y`: `vertices = [n1, n2, n3, centre]`, `before = [R_A, R_B, R_C]`,
///   `after = [R_1, R_2, R_3]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub rule: Rule,
    pub vertices: Vec<usize>,
    #[serde(with = "crate::rational::serde_fraction_vec")]
    pub before: Vec<Rational>,
    #[serde(with = "crate::rational::serde_fraction_vec")]
    pub after: Vec<Rational>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    /// Re-applies every step to `initial`, checking each recorded value, and
    /// returns the surviving graph (with its label mapping).
    pub fn replay(&self, initial: &Graph) -> Result<Relabeled> {
        let mut g = initial.clone();
        let mut removed = BTreeSet::new();
        let mismatch =
            |k: usize, what: &str| Error::Precondition(format!("replay step {k}: {what}"));
        for (k, step) in self.steps.iter().enumerate() {
            match step.rule {
                Rule::Prune | Rule::Series | Rule::YDelta | Rule::StarMesh => {
                    let v = *step
                        .vertices
                        .first()
                        .ok_or_else(|| mismatch(k, "no vertex"))?;
                    let (redo, _) = eliminate_in_place(&mut g, v)?;
                    if redo != *step {
                        return Err(mismatch(
                            k,
                            "elimination does not reproduce the recorded step",
                        ));
                    }
                    removed.insert(v);
                }
                Rule::Parallel => {
                    let [u, w] = step.vertices[..] else {
                        return Err(mismatch(k, "parallel step needs two vertices"));
                    };
                    if g.resistance(u, w).as_ref() != step.after.first() {
                        return Err(mismatch(k, "merged resistance differs"));
                    }
                }
                Rule::DeltaY => {
                    let [n1, n2, n3, centre] = step.vertices[..] else {
                        return Err(mismatch(k, "delta-y step needs four vertices"));
                    };
                    let redo = delta_to_y_in_place(&mut g, n1, n2, n3)?;
                    if redo != *step || centre != g.vertex_count() {
                        return Err(mismatch(k, "delta-y does not reproduce the recorded step"));
                    }
                }
            }
        }
        let keep: Vec<usize> = (1..=g.vertex_count())
            .filter(|v| !removed.contains(v))
            .collect();
        Ok(induced(&g, &keep))
    }
}

fn induced(g: &Graph, keep: &[usize]) -> Relabeled {
    let mut out = Graph::new(keep.len());
    for (a, &u) in keep.iter().enumerate() {
        for (b, &w) in keep.iter().enumerate().skip(a + 1) {
            if let Some(c) = g.conductance(u, w) {
                out.add_conductance(a + 1, b + 1, c.clone())
                    .expect("in range");
            }
        }
    }
    Relabeled {
        graph: out,
        origin: keep.to_vec(),
    }
}

// Star-mesh elimination of v, leaving v isolated. Returns the elimination
// step and any parallel merges it caused.
fn eliminate_in_place(g: &mut Graph, v: usize) -> Result<(ReductionStep, Vec<ReductionStep>)> {
    if v == 0 || v > g.vertex_count() {
        return Err(Error::IndexOutOfRange {
            index: v,
            bound: g.vertex_count(),
        });
    }
    let legs: Vec<(usize, Rational)> = g.neighbors(v).map(|(u, c)| (u, c.clone())).collect();
    if legs.is_empty() {
        return Err(Error::Disconnected);
    }
    for (u, _) in &legs {
        g.remove_edge(v, *u);
    }
    let total: Rational = legs.iter().fold(Rational::zero(), |acc, (_, c)| acc + c);
    let mut after = Vec::new();
    let mut merges = Vec::new();
    for (s, (us, cs)) in legs.iter().enumerate() {
        for (ut, ct) in &legs[s + 1..] {
            let mesh = cs * ct / &total;
            after.push(mesh.recip());
            if let Some(existing) = g.conductance(*us, *ut).cloned() {
                merges.push(ReductionStep {
                    rule: Rule::Parallel,
                    vertices: vec![*us, *ut],
                    before: vec![existing.recip(), mesh.recip()],
                    after: vec![(&existing + &mesh).recip()],
                });
            }
            g.add_conductance(*us, *ut, mesh)?;
        }
    }
    let rule = match legs.len() {
        1 => Rule::Prune,
        2 => Rule::Series,
        3 => Rule::YDelta,
        _ => Rule::StarMesh,
    };
    let step = ReductionStep {
        rule,
        vertices: std::iter::once(v)
            .chain(legs.iter().map(|(u, _)| *u))
            .collect(),
        before: legs.iter().map(|(_, c)| c.recip()).collect(),
        after,
    };
    Ok((step, merges))
}

/// Removes `v` by star-mesh elimination. Effective resistances among the
/// remaining vertices are unchanged. Labels above `v` shift down by one.
pub fn eliminate_vertex(g: &Graph, v: usize) -> Result<Relabeled> {
    eliminate_vertices(g, &[v])
}

/// Eliminates the listed vertices in order.
pub fn eliminate_vertices(g: &Graph, order: &[usize]) -> Result<Relabeled> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut work = g.clone();
    let mut removed = BTreeSet::new();
    for &v in order {
        if !removed.insert(v) {
            return Err(Error::Precondition(format!("vertex {v} eliminated twice")));
        }
        eliminate_in_place(&mut work, v)?;
    }
    let keep: Vec<usize> = (1..=work.vertex_count())
        .filter(|v| !removed.contains(v))
        .collect();
    Ok(induced(&work, &keep))
}

fn delta_to_y_in_place(g: &mut Graph, n1: usize, n2: usize, n3: usize) -> Result<ReductionStep> {
    if n1 == n2 || n2 == n3 || n1 == n3 {
        return Err(Error::Precondition(
            "triangle vertices must be distinct".into(),
        ));
    }
    let side = |a: usize, b: usize| {
        g.resistance(a, b)
            .ok_or_else(|| Error::Precondition(format!("no edge between {a} and {b}")))
    };
    // R_A faces N_1, R_B faces N_2, R_C faces N_3
    let ra = side(n2, n3)?;
    let rb = side(n1, n3)?;
    let rc = side(n1, n2)?;
    let sum = &ra + &rb + &rc;
    let r1 = &rb * &rc / &sum;
    let r2 = &ra * &rc / &sum;
    let r3 = &ra * &rb / &sum;
    g.remove_edge(n2, n3);
    g.remove_edge(n1, n3);
    g.remove_edge(n1, n2);
    let centre = g.add_vertex();
    g.add_resistor(centre, n1, r1.clone())?;
    g.add_resistor(centre, n2, r2.clone())?;
    g.add_resistor(centre, n3, r3.clone())?;
    Ok(ReductionStep {
        rule: Rule::DeltaY,
        vertices: vec![n1, n2, n3, centre],
        before: vec![ra, rb, rc],
        after: vec![r1, r2, r3],
    })
}

/// Replaces the triangle `n1 n2 n3` by a star around a new vertex `n + 1`.
pub fn delta_to_y(g: &Graph, n1: usize, n2: usize, n3: usize) -> Result<Graph> {
    let mut out = g.clone();
    delta_to_y_in_place(&mut out, n1, n2, n3)?;
    Ok(out)
}

/// Replaces the 3-star at `center` by a triangle on its neighbours, merging
/// with existing edges in parallel. The neighbours in ascending order play
/// `N_1, N_2, N_3`; `R_A` (between `N_2, N_3`) is `P / R_1` where
/// `P = R_1 R_2 + R_2 R_3 + R_1 R_3`, and likewise for `R_B`, `R_C`.
pub fn y_to_delta(g: &Graph, center: usize) -> Result<Relabeled> {
    if center == 0 || center > g.vertex_count() {
        return Err(Error::IndexOutOfRange {
            index: center,
            bound: g.vertex_count(),
        });
    }
    let legs: Vec<(usize, Rational)> = g.neighbors(center).map(|(u, c)| (u, c.recip())).collect();
    let [(n1, r1), (n2, r2), (n3, r3)] = &legs[..] else {
        return Err(Error::Precondition(format!(
            "vertex {center} has degree {}, Y-Δ needs 3",
            legs.len()
        )));
    };
    let p = r1 * r2 + r2 * r3 + r1 * r3;
    let mut out = g.clone();
    for (u, _) in &legs {
        out.remove_edge(center, *u);
    }
    out.add_resistor(*n2, *n3, &p / r1)?;
    out.add_resistor(*n1, *n3, &p / r2)?;
    out.add_resistor(*n1, *n2, &p / r3)?;
    out.without_vertex(center)
}

/// Eliminates every vertex except `i` and `j`, lowest degree first (ties by
/// label), and returns the resistance of the final `i–j` edge with the
/// full trace.
pub fn reduce_to_pair(g: &Graph, i: usize, j: usize) -> Result<(Rational, ReductionTrace)> {
    crate::resistance::check_pair(g, i, j)?;
    let mut trace = ReductionTrace::default();
    if i == j {
        return Ok((Rational::zero(), trace));
    }
    let mut work = g.clone();
    let mut queue: BTreeSet<(usize, usize)> = (1..=g.vertex_count())
        .filter(|&v| v != i && v != j)
        .map(|v| (work.degree(v), v))
        .collect();
    while let Some((_, v)) = queue.pop_first() {
        let neighbours: Vec<usize> = work.neighbors(v).map(|(u, _)| u).collect();
        for &u in &neighbours {
            queue.remove(&(work.degree(u), u));
        }
        let (step, merges) = eliminate_in_place(&mut work, v)?;
        trace.steps.push(step);
        trace.steps.extend(merges);
        for &u in &neighbours {
            if u != i && u != j {
                queue.insert((work.degree(u), u));
            }
        }
    }
    let value = work.resistance(i, j).ok_or(Error::Disconnected)?;
    Ok((value, trace))
}
