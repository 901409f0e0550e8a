//! Oriented covering moves between constructs.
//!
//! For a cover `S ≺ T` obtained by contracting the edge from a node `X` to
//! its child `Y`, the move goes up (`S → T`) when `max Y < min X` and down
//! (`T → S`) when `max X < min Y`; otherwise the cover is not oriented.

use serde::Serialize;
use serde_json::{json, Value};

use super::{topological_order, RewriteStep};
use crate::construct::{enumerate_constructs, expansions, Construct, FaceLattice};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// From the lower construct to the upper one.
    Up,
    /// From the upper construct to the lower one.
    Down,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FacialStep {
    pub lower: Construct,
    pub upper: Construct,
    /// Parent decoration in `lower`.
    pub x: VertexSet,
    /// Child decoration in `lower`.
    pub y: VertexSet,
    pub direction: Direction,
}

impl FacialStep {
    pub fn from(&self) -> &Construct {
        match self.direction {
            Direction::Up => &self.lower,
            Direction::Down => &self.upper,
        }
    }

    pub fn to(&self) -> &Construct {
        match self.direction {
            Direction::Up => &self.upper,
            Direction::Down => &self.lower,
        }
    }
}

pub(crate) fn orient(x: VertexSet, y: VertexSet) -> Option<Direction> {
    if y.max_vertex() < x.min_vertex() {
        Some(Direction::Up)
    } else if x.max_vertex() < y.min_vertex() {
        Some(Direction::Down)
    } else {
        None
    }
}

/// Every oriented move with `s` as one end, contractions first.
pub fn facial_steps(h: &Hypergraph, s: &Construct) -> Vec<FacialStep> {
    let mut out = Vec::new();
    for (upper, (x, y)) in s.contractions() {
        if let Some(direction) = orient(x, y) {
            out.push(FacialStep { lower: s.clone(), upper, x, y, direction });
        }
    }
    for (lower, split) in expansions(h, s) {
        if let Some(direction) = orient(split.x, split.y) {
            out.push(FacialStep { lower, upper: s.clone(), x: split.x, y: split.y, direction });
        }
    }
    out
}

/// The digraph of facial steps on all constructs.
#[derive(Clone, Debug)]
pub struct FacialOrder {
    lattice: FaceLattice,
    edges: Vec<(usize, usize)>,
    acyclic: bool,
}

pub fn facial_order(h: &Hypergraph) -> Result<FacialOrder> {
    let lattice = enumerate_constructs(h)?;
    let mut edges = Vec::new();
    for (i, s) in lattice.constructs().iter().enumerate() {
        for (t, (x, y)) in s.contractions() {
            let j = lattice.index_of(&t).ok_or_else(|| Error::internal("contraction left the lattice"))?;
            match orient(x, y) {
                Some(Direction::Up) => edges.push((i, j)),
                Some(Direction::Down) => edges.push((j, i)),
                None => {}
            }
        }
    }
    edges.sort_unstable();
    let acyclic = topological_order(lattice.len(), &edges).is_some();
    Ok(FacialOrder { lattice, edges, acyclic })
}

impl FacialOrder {
    pub fn lattice(&self) -> &FaceLattice {
        &self.lattice
    }

    /// `(from, to)` index pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// No directed cycle through two distinct constructs.
    pub fn is_acyclic(&self) -> bool {
        self.acyclic
    }

    /// Reflexive-transitive closure: `reach[a][b]` iff `b` is reachable from `a`.
    pub fn reachability(&self) -> Vec<Vec<bool>> {
        let n = self.lattice.len();
        let mut out = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            out[a].push(b);
        }
        (0..n)
            .map(|start| {
                let mut seen = vec![false; n];
                seen[start] = true;
                let mut stack = vec![start];
                while let Some(v) = stack.pop() {
                    for &w in &out[v] {
                        if !seen[w] {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                }
                seen
            })
            .collect()
    }

    pub fn to_dot(&self, h: &Hypergraph) -> String {
        let mut out = String::from("digraph facial {\n  node [shape=box];\n");
        for (i, c) in self.lattice.constructs().iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", c.display(h)));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self, h: &Hypergraph) -> Value {
        let names: Vec<String> = self.lattice.constructs().iter().map(|c| c.display(h).to_string()).collect();
        json!({"constructs": names, "edges": self.edges, "acyclic": self.acyclic})
    }
}

/// A flip split into a contraction onto the doubleton `{x, y}` and an
/// expansion away from it.
#[derive(Clone, Debug, Serialize)]
pub struct FlipSimulation {
    pub middle: Construct,
    pub first: FacialStep,
    pub second: FacialStep,
    /// Whether the two steps run from the flip's source to its target. When
    /// the flip promotes larger children they run the other way.
    pub forward: bool,
}

pub fn simulate_flip_by_facial(step: &RewriteStep) -> Result<FlipSimulation> {
    let x = VertexSet::singleton(step.parent);
    let y = VertexSet::singleton(step.child);
    let middle = step.source.contract(x, y)?;
    let via_source = FacialStep {
        lower: step.source.clone(),
        upper: middle.clone(),
        x,
        y,
        direction: orient(x, y).ok_or_else(|| Error::internal("singletons are always comparable"))?,
    };
    let via_target = FacialStep {
        lower: step.target.clone(),
        upper: middle.clone(),
        x: y,
        y: x,
        direction: orient(y, x).ok_or_else(|| Error::internal("singletons are always comparable"))?,
    };
    if step.target.contract(y, x)? != middle {
        return Err(Error::internal("flip ends do not share the contracted face"));
    }
    let forward = via_source.direction == Direction::Up;
    let (first, second) = if forward { (via_source, via_target) } else { (via_target, via_source) };
    if first.to() != &middle || second.from() != &middle {
        return Err(Error::internal("facial steps do not compose"));
    }
    Ok(FlipSimulation { middle, first, second, forward })
}
