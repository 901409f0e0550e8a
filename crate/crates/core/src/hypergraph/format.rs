//! Text (`.hg`) and JSON forms of a hypergraph.
//!
//! ```text
//! # the pentagon
//! vertices: 1 2 3
//! edge: 1 2
//! edge: 2 3
//! ```
//!
//! JSON: `{"vertices": ["1","2","3"], "hyperedges": [["1","2"],["2","3"]]}`.
//! Vertex declaration order is the total order. Both forms go through
//! [`HypergraphSpec`] and produce identical canonical values.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::Hypergraph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Label-level description of a hypergraph, before canonicalization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphSpec {
    pub vertices: Vec<String>,
    pub hyperedges: Vec<Vec<String>>,
}

impl HypergraphSpec {
    /// Maps labels to `1..=n` in declaration order and validates. Missing
    /// singletons are an error unless `atomize` is set.
    pub fn build(&self, atomize: bool) -> Result<Hypergraph> {
        let n = self.vertices.len();
        if n == 0 {
            return Err(Error::Parse("no vertices declared".into()));
        }
        for (i, v) in self.vertices.iter().enumerate() {
            if self.vertices[..i].contains(v) {
                return Err(Error::Parse(format!("duplicate vertex {v:?}")));
            }
        }
        let id = |label: &str| -> Result<usize> {
            self.vertices
                .iter()
                .position(|v| v == label)
                .map(|i| i + 1)
                .ok_or_else(|| Error::Parse(format!("unknown vertex {label:?}")))
        };
        let mut edges = Vec::with_capacity(self.hyperedges.len());
        for e in &self.hyperedges {
            if e.is_empty() {
                return Err(Error::Parse("empty hyperedge".into()));
            }
            let mut set = VertexSet::EMPTY;
            for label in e {
                set.insert(id(label)?);
            }
            edges.push(set);
        }
        let h = if atomize { Hypergraph::atomized(n, edges) } else { Hypergraph::new(n, edges) };
        let h = h.map_err(|e| match e {
            Error::NotAtomic(v) => Error::NotAtomic(self.vertices[v.parse::<usize>().unwrap() - 1].clone()),
            other => other,
        })?;
        h.with_labels(self.vertices.clone())
    }
}

impl Hypergraph {
    /// Parses the `.hg` text format.
    pub fn parse_hg(text: &str, atomize: bool) -> Result<Hypergraph> {
        let mut vertices: Option<Vec<String>> = None;
        let mut hyperedges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("line {}: expected `key: values`", lineno + 1)))?;
            let items: Vec<String> = rest.split_whitespace().map(String::from).collect();
            match key.trim() {
                "vertices" => {
                    if vertices.is_some() {
                        return Err(Error::Parse(format!("line {}: vertices declared twice", lineno + 1)));
                    }
                    vertices = Some(items);
                }
                "edge" => {
                    if vertices.is_none() {
                        return Err(Error::Parse(format!("line {}: edge before vertices", lineno + 1)));
                    }
                    hyperedges.push(items);
                }
                other => {
                    return Err(Error::Parse(format!("line {}: unknown key {other:?}", lineno + 1)));
                }
            }
        }
        let vertices = vertices.ok_or_else(|| Error::Parse("missing `vertices:` line".into()))?;
        HypergraphSpec { vertices, hyperedges }.build(atomize)
    }

    /// Parses the JSON form. Vertex labels may be strings or numbers.
    pub fn parse_json(text: &str, atomize: bool) -> Result<Hypergraph> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let label = |v: &Value| -> Result<String> {
            match v {
                Value::String(s) => Ok(s.clone()),
                Value::Number(n) => Ok(n.to_string()),
                other => Err(Error::Parse(format!("invalid vertex label {other}"))),
            }
        };
        let list = |v: Option<&Value>, what: &str| -> Result<Vec<Value>> {
            match v {
                Some(Value::Array(a)) => Ok(a.clone()),
                _ => Err(Error::Parse(format!("`{what}` must be an array"))),
            }
        };
        let vertices = list(value.get("vertices"), "vertices")?
            .iter()
            .map(label)
            .collect::<Result<Vec<_>>>()?;
        let hyperedges = list(value.get("hyperedges"), "hyperedges")?
            .iter()
            .map(|e| list(Some(e), "hyperedge")?.iter().map(label).collect())
            .collect::<Result<Vec<_>>>()?;
        HypergraphSpec { vertices, hyperedges }.build(atomize)
    }

    pub fn to_spec(&self) -> HypergraphSpec {
        HypergraphSpec {
            vertices: self.labels().to_vec(),
            hyperedges: self
                .edges()
                .iter()
                .map(|e| e.iter().map(|v| self.label(v).to_string()).collect())
                .collect(),
        }
    }

    pub fn to_hg(&self) -> String {
        let spec = self.to_spec();
        let mut out = format!("vertices: {}\n", spec.vertices.join(" "));
        for e in &spec.hyperedges {
            out.push_str("edge: ");
            out.push_str(&e.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_spec()).expect("spec serializes")
    }
}
