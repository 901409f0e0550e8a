//! Integer vertex coordinates of the Minkowski-sum realization.
//!
//! The coordinate of vertex `x` in a construction `S` counts the connected
//! sets that contain `x` and fit inside the support of the subtree rooted
//! at `x`. Vectors are indexed by vertex id: entry `i` belongs to vertex
//! `i + 1`.

use std::collections::HashSet;
use std::fmt;

use num_rational::Rational64;
use serde::Serialize;

use crate::construct::{enumerate_constructions, Construct};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::rewrite::{FlipGraph, FlipOrientation, RewriteStep};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CoordinateVector(pub Vec<i64>);

impl CoordinateVector {
    pub fn get(&self, v: usize) -> i64 {
        self.0[v - 1]
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for CoordinateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn coordinate_vector(h: &Hypergraph, s: &Construct) -> Result<CoordinateVector> {
    if !s.is_construction() {
        return Err(Error::invalid(format!("{s} is not a construction")));
    }
    let sat = h.saturation()?;
    let mut out = vec![0i64; h.n()];
    for node in s.nodes() {
        let x = node.label().min_vertex().unwrap();
        let k = node.support();
        out[x - 1] = sat.iter().filter(|e| e.contains(x) && e.is_subset(k)).count() as i64;
    }
    Ok(CoordinateVector(out))
}

/// `<mu, v>` in exact arithmetic.
pub fn pairing(mu: &[Rational64], v: &CoordinateVector) -> Result<Rational64> {
    if mu.len() != v.0.len() {
        return Err(Error::domain(format!("vector has {} entries, expected {}", mu.len(), v.0.len())));
    }
    Ok(mu.iter().zip(&v.0).map(|(m, &x)| m * Rational64::from_integer(x)).sum())
}

/// Coordinates of every construction, checked to be injective and to sum
/// to the number of connected sets.
pub fn postnikov_vertex_map(h: &Hypergraph) -> Result<Vec<(Construct, CoordinateVector)>> {
    let total = h.saturation()?.len() as i64;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in enumerate_constructions(h)? {
        let v = coordinate_vector(h, &s)?;
        if v.sum() != total {
            return Err(Error::internal(format!("coordinates of {s} sum to {}, expected {total}", v.sum())));
        }
        if !seen.insert(v.clone()) {
            return Err(Error::internal(format!("coordinates {v} repeat")));
        }
        out.push((s, v));
    }
    Ok(out)
}

/// CSV table `construction,<label1>,...,<labeln>`.
pub fn coordinates_csv(h: &Hypergraph, table: &[(Construct, CoordinateVector)]) -> String {
    let mut out = String::from("construction");
    for l in h.labels() {
        out.push(',');
        out.push_str(l);
    }
    out.push('\n');
    for (s, v) in table {
        out.push_str(&format!("\"{}\"", s.display(h)));
        for x in &v.0 {
            out.push_str(&format!(",{x}"));
        }
        out.push('\n');
    }
    out
}

/// `v^source - v^target = lambda (e_x - e_y)` for a flip of parent `x` and child `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeDifference {
    pub x: usize,
    pub y: usize,
    pub lambda: i64,
}

pub fn edge_difference(h: &Hypergraph, step: &RewriteStep) -> Result<EdgeDifference> {
    let vs = coordinate_vector(h, &step.source)?;
    let vt = coordinate_vector(h, &step.target)?;
    let (x, y) = (step.parent, step.child);
    for v in 1..=h.n() {
        if v != x && v != y && vs.get(v) != vt.get(v) {
            return Err(Error::internal(format!("flip changes coordinate {v}")));
        }
    }
    let dx = vs.get(x) - vt.get(x);
    let dy = vs.get(y) - vt.get(y);
    let pair = VertexSet::singleton(x) | VertexSet::singleton(y);
    let lambda = h.saturation()?.iter().filter(|e| pair.is_subset(**e) && e.is_subset(step.support)).count() as i64;
    if dx != lambda || dy != -lambda || lambda < 1 {
        return Err(Error::internal(format!(
            "edge difference ({dx},{dy}) does not match lambda {lambda}"
        )));
    }
    Ok(EdgeDifference { x, y, lambda })
}

#[derive(Clone, Debug, Serialize)]
pub struct OrientationCheck {
    pub ok: bool,
    pub offending: Option<RewriteStep>,
}

/// Whether `mu` is perpendicular to no edge of the realization.
pub fn is_orientation_vector(h: &Hypergraph, mu: &[Rational64]) -> Result<OrientationCheck> {
    if mu.len() != h.n() {
        return Err(Error::domain(format!("vector has {} entries, expected {}", mu.len(), h.n())));
    }
    let graph = FlipGraph::build(h, FlipOrientation::PromoteSmaller)?;
    for step in graph.steps() {
        let a = pairing(mu, &coordinate_vector(h, &step.source)?)?;
        let b = pairing(mu, &coordinate_vector(h, &step.target)?)?;
        if a == b {
            return Ok(OrientationCheck { ok: false, offending: Some(step.clone()) });
        }
    }
    Ok(OrientationCheck { ok: true, offending: None })
}
