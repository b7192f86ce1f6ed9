//! Weighted simple undirected resistor graphs.
//!
//! Edge weights are stored as conductances (reciprocal resistances), so
//! inserting a second resistor between the same pair merges it in parallel
//! by plain addition. Vertices are labelled `1..=n`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::{parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    // adjacency[v - 1] maps neighbour label -> conductance
    adjacency: Vec<BTreeMap<usize, Rational>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self {
            adjacency: vec![BTreeMap::new(); n],
        }
    }

    /// Builds a graph where every listed pair is a unit resistor.
    pub fn unit(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_conductance(u, v, Rational::from_integer(1.into()))?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeMap::len).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.vertex_count() {
            Err(Error::IndexOutOfRange {
                index: v,
                bound: self.vertex_count(),
            })
        } else {
            Ok(())
        }
    }

    /// Appends a new isolated vertex and returns its label.
    pub fn add_vertex(&mut self) -> usize {
        self.adjacency.push(BTreeMap::new());
        self.adjacency.len()
    }

    /// Adds a resistor between `u` and `v`, merging in parallel with any
    /// existing edge.
    pub fn add_resistor(&mut self, u: usize, v: usize, resistance: Rational) -> Result<()> {
        if !resistance.is_positive() {
            return Err(Error::Domain(format!(
                "resistance must be positive, got {resistance}"
            )));
        }
        self.add_conductance(u, v, resistance.recip())
    }

    pub fn add_conductance(&mut self, u: usize, v: usize, conductance: Rational) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Domain(format!("self-loop at vertex {u}")));
        }
        if !conductance.is_positive() {
            return Err(Error::Domain(format!(
                "conductance must be positive, got {conductance}"
            )));
        }
        *self.adjacency[u - 1]
            .entry(v)
            .or_insert_with(Rational::zero) += &conductance;
        *self.adjacency[v - 1]
            .entry(u)
            .or_insert_with(Rational::zero) += conductance;
        Ok(())
    }

    /// Removes the edge between `u` and `v`, returning its conductance.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Option<Rational> {
        if u == 0 || v == 0 || u > self.vertex_count() || v > self.vertex_count() {
            return None;
        }
        self.adjacency[v - 1].remove(&u);
        self.adjacency[u - 1].remove(&v)
    }

    pub fn conductance(&self, u: usize, v: usize) -> Option<&Rational> {
        self.adjacency.get(u.checked_sub(1)?)?.get(&v)
    }

    pub fn resistance(&self, u: usize, v: usize) -> Option<Rational> {
        self.conductance(u, v).map(Rational::recip)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency
            .get(v.wrapping_sub(1))
            .map_or(0, BTreeMap::len)
    }

    /// Neighbours of `v` in ascending label order with their conductances.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.adjacency
            .get(v.wrapping_sub(1))
            .into_iter()
            .flat_map(|m| m.iter().map(|(&u, c)| (u, c)))
    }

    /// Edges `(u, v, conductance)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(i, m)| {
            let u = i + 1;
            m.range(u + 1..).map(move |(&v, c)| (u, v, c))
        })
    }

    pub fn is_unit(&self) -> bool {
        self.edges()
            .all(|(_, _, c)| c == &Rational::from_integer(1.into()))
    }

    /// Weighted Laplacian `D - A`.
    pub fn laplacian(&self) -> RatMatrix {
        let n = self.vertex_count();
        let mut l = RatMatrix::zeros(n, n);
        for (i, m) in self.adjacency.iter().enumerate() {
            let mut diag = Rational::zero();
            for (&v, c) in m {
                l.set(i, v - 1, -c.clone());
                diag += c;
            }
            l.set(i, i, diag);
        }
        l
    }

    /// True when all vertices lie in one component. The empty graph and a
    /// single vertex count as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![1usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in self.adjacency[v - 1].keys() {
                if !seen[u - 1] {
                    seen[u - 1] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }

    /// Returns a copy without vertex `v`; labels above `v` shift down by one.
    /// `origin[k]` is the old label of new vertex `k + 1`.
    pub fn without_vertex(&self, v: usize) -> Result<Relabeled> {
        self.check_vertex(v)?;
        let shift = |u: usize| if u > v { u - 1 } else { u };
        let adjacency = self
            .adjacency
            .iter()
            .enumerate()
            .filter(|&(i, _)| i + 1 != v)
            .map(|(_, m)| {
                m.iter()
                    .filter(|(&u, _)| u != v)
                    .map(|(&u, c)| (shift(u), c.clone()))
                    .collect()
            })
            .collect();
        let origin = (1..=self.vertex_count()).filter(|&u| u != v).collect();
        Ok(Relabeled {
            graph: Graph { adjacency },
            origin,
        })
    }

    /// Serializes to the edge-list text format read by [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.vertex_count());
        for (u, v, c) in self.edges() {
            let r = c.recip();
            let _ = writeln!(out, "{u} {v} {r}");
        }
        out
    }
}

/// A graph produced by removing vertices, with the label mapping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeled {
    pub graph: Graph,
    pub origin: Vec<usize>,
}

impl Relabeled {
    /// New label of an original vertex, if it survived.
    pub fn new_label(&self, original: usize) -> Option<usize> {
        self.origin
            .iter()
            .position(|&o| o == original)
            .map(|p| p + 1)
    }
}

/// Reads the edge-list format: `#` comments, an optional `n <count>` header,
/// and `u v r` lines where `r` is the resistance as `p` or `p/q`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize, Rational, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "n" {
            if declared.is_some() || !edges.is_empty() {
                return Err(err("header must appear once, before any edge".into()));
            }
            if fields.len() != 2 {
                return Err(err("header must be `n <count>`".into()));
            }
            declared = Some(
                fields[1]
                    .parse()
                    .map_err(|_| err(format!("bad vertex count {:?}", fields[1])))?,
            );
            continue;
        }
        if fields.len() != 3 {
            return Err(err(format!(
                "expected `u v r`, found {} fields",
                fields.len()
            )));
        }
        let vertex = |s: &str| -> Result<usize> {
            match s.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v),
                _ => Err(err(format!("vertex {s:?} is not a positive integer"))),
            }
        };
        let u = vertex(fields[0])?;
        let v = vertex(fields[1])?;
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        let r = parse_rational(fields[2])
            .map_err(|_| err(format!("bad resistance {:?}", fields[2])))?;
        if !r.is_positive() {
            return Err(err(format!("resistance must be positive, got {r}")));
        }
        edges.push((u, v, r, line_no));
    }
    let max_label = edges.iter().map(|&(u, v, ..)| u.max(v)).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < max_label => {
            let line = edges.iter().find(|e| e.0.max(e.1) > n).map_or(0, |e| e.3);
            return Err(Error::Parse {
                line,
                message: format!("vertex {max_label} exceeds declared count {n}"),
            });
        }
        Some(n) => n,
        None => max_label,
    };
    let mut g = Graph::new(n);
    for (u, v, r, _) in edges {
        g.add_resistor(u, v, r)?;
    }
    Ok(g)
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_graph(s)
    }
}
