//! Flip rewriting on constructions, facial steps on constructs, local
//! confluence diagrams and termination certificates.
//!
//! A flip exchanges a parent `x` with one of its children `y` in a
//! construction and lets the grandchildren fall back into place according
//! to connectivity. Which of the two directions counts as a rewriting step
//! is set by [`FlipOrientation`].

mod confluence;
mod facial;
mod termination;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::construct::{enumerate_constructions, graft, Construct, Node};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

pub use confluence::{
    classify_two_face, critical_pair_shapes, peaks_and_joins, shape_tag, BShape, ConfluenceReport, CriticalPairShapes,
    DiagramClass, LocalDiagram, ShapeEntry, TwoFaceClass,
};
pub use facial::{
    facial_order, facial_steps, simulate_flip_by_facial, Direction, FacialOrder, FacialStep, FlipSimulation,
};
pub use termination::{check_termination, TerminationVerdict};

/// Which flips are rewriting steps.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FlipOrientation {
    /// A child smaller than its parent is promoted (`y < x`).
    #[default]
    PromoteSmaller,
    /// A child larger than its parent is promoted (`x < y`).
    PromoteLarger,
}

impl FlipOrientation {
    pub fn fires(self, parent: usize, child: usize) -> bool {
        match self {
            FlipOrientation::PromoteSmaller => child < parent,
            FlipOrientation::PromoteLarger => parent < child,
        }
    }

    pub fn opposite(self) -> FlipOrientation {
        match self {
            FlipOrientation::PromoteSmaller => FlipOrientation::PromoteLarger,
            FlipOrientation::PromoteLarger => FlipOrientation::PromoteSmaller,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FlipOrientation::PromoteSmaller => "promote-smaller",
            FlipOrientation::PromoteLarger => "promote-larger",
        }
    }
}

impl fmt::Display for FlipOrientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for FlipOrientation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "promote-smaller" => Ok(FlipOrientation::PromoteSmaller),
            "promote-larger" => Ok(FlipOrientation::PromoteLarger),
            other => Err(Error::Parse(format!("unknown orientation {other:?}"))),
        }
    }
}

/// One flip `source -> target` promoting `child` above `parent`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RewriteStep {
    pub source: Construct,
    pub target: Construct,
    pub parent: usize,
    pub child: usize,
    /// Support of the subtree rooted at `parent` in `source`.
    pub support: VertexSet,
}

/// Exchanges the singleton node `x` with its child `y`.
pub fn flip(h: &Hypergraph, s: &Construct, x: usize, y: usize) -> Result<Construct> {
    let xs = VertexSet::singleton(x);
    let ys = VertexSet::singleton(y);
    let node = s
        .subtree(xs)
        .ok_or_else(|| Error::invalid(format!("no singleton node {}", h.label(x))))?;
    let below = node
        .children()
        .iter()
        .find(|c| c.label() == ys)
        .ok_or_else(|| Error::invalid(format!("{} is not a child of {}", h.label(y), h.label(x))))?;
    let mut pool: Vec<Node> = node.children().iter().filter(|c| c.label() != ys).cloned().collect();
    pool.extend(below.children().iter().cloned());
    let skeleton = Node::new(ys, vec![Node::leaf(xs)]);
    let sub = graft(h, node.support(), &skeleton, &mut pool)?;
    if !pool.is_empty() {
        return Err(Error::internal("flip left subtrees unplaced"));
    }
    Ok(s.replace_subtree(xs, &sub))
}

/// All rewriting steps out of `s`, in preorder of the parent node.
pub fn redexes(h: &Hypergraph, s: &Construct, o: FlipOrientation) -> Result<Vec<RewriteStep>> {
    let mut out = Vec::new();
    for node in s.nodes() {
        let Some(x) = single(node.label()) else { continue };
        for c in node.children() {
            let Some(y) = single(c.label()) else { continue };
            if o.fires(x, y) {
                out.push(RewriteStep {
                    source: s.clone(),
                    target: flip(h, s, x, y)?,
                    parent: x,
                    child: y,
                    support: node.support(),
                });
            }
        }
    }
    Ok(out)
}

fn single(s: VertexSet) -> Option<usize> {
    (s.len() == 1).then(|| s.min_vertex().unwrap())
}

/// Reduces `s` by always firing the first redex until none is left.
pub fn normal_form(h: &Hypergraph, s: &Construct, o: FlipOrientation) -> Result<(Construct, Vec<RewriteStep>)> {
    if !s.is_construction() {
        return Err(Error::invalid(format!("{s} is not a construction")));
    }
    // Any reduction visits each construction at most once, and there are
    // at most n! of them.
    let bound: u64 = (1..=h.n() as u64).try_fold(1u64, |a, b| a.checked_mul(b)).unwrap_or(u64::MAX);
    let mut cur = s.clone();
    let mut trace = Vec::new();
    while let Some(step) = redexes(h, &cur, o)?.into_iter().next() {
        if trace.len() as u64 >= bound {
            return Err(Error::internal("reduction exceeded the number of constructions"));
        }
        cur = step.target.clone();
        trace.push(step);
    }
    Ok((cur, trace))
}

/// The oriented flip digraph on all constructions.
#[derive(Clone, Debug)]
pub struct FlipGraph {
    pub orientation: FlipOrientation,
    constructions: Vec<Construct>,
    index: HashMap<Construct, usize>,
    steps: Vec<RewriteStep>,
    /// `(source, target)` index pairs, parallel to `steps`.
    edges: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
}

impl FlipGraph {
    pub fn build(h: &Hypergraph, o: FlipOrientation) -> Result<FlipGraph> {
        let constructions = enumerate_constructions(h)?;
        let index: HashMap<Construct, usize> =
            constructions.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let mut steps = Vec::new();
        let mut edges = Vec::new();
        let mut out = vec![Vec::new(); constructions.len()];
        for (i, c) in constructions.iter().enumerate() {
            for step in redexes(h, c, o)? {
                let j = *index
                    .get(&step.target)
                    .ok_or_else(|| Error::internal(format!("flip produced unknown construction {}", step.target)))?;
                out[i].push(j);
                edges.push((i, j));
                steps.push(step);
            }
        }
        Ok(FlipGraph { orientation: o, constructions, index, steps, edges, out })
    }

    pub fn constructions(&self) -> &[Construct] {
        &self.constructions
    }

    pub fn steps(&self) -> &[RewriteStep] {
        &self.steps
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn successors(&self, i: usize) -> &[usize] {
        &self.out[i]
    }

    pub fn index_of(&self, c: &Construct) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// A topological order, or `None` if there is a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        topological_order(self.constructions.len(), &self.edges)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.constructions.len()).filter(|&i| self.out[i].is_empty()).collect()
    }

    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.constructions.len()];
        for &(_, j) in &self.edges {
            has_in[j] = true;
        }
        (0..self.constructions.len()).filter(|&i| !has_in[i]).collect()
    }

    /// Irreducible constructions reachable from `i`.
    pub fn reachable_sinks(&self, i: usize) -> Vec<usize> {
        let mut seen = vec![false; self.constructions.len()];
        let mut queue = VecDeque::from([i]);
        seen[i] = true;
        let mut sinks = Vec::new();
        while let Some(a) = queue.pop_front() {
            if self.out[a].is_empty() {
                sinks.push(a);
            }
            for &b in &self.out[a] {
                if !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        sinks.sort_unstable();
        sinks
    }

    /// Whether every construction reaches exactly one irreducible one.
    pub fn has_unique_normal_forms(&self) -> bool {
        (0..self.constructions.len()).all(|i| self.reachable_sinks(i).len() == 1)
    }

    pub fn unique_sink(&self) -> Option<usize> {
        match self.sinks().as_slice() {
            [s] => Some(*s),
            _ => None,
        }
    }

    /// Whether `a` and `b` have a common reduct (breadth-first search).
    pub fn joinable(&self, a: usize, b: usize) -> bool {
        let reach = |start: usize| {
            let mut seen = vec![false; self.constructions.len()];
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                for &w in &self.out[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            seen
        };
        let (ra, rb) = (reach(a), reach(b));
        ra.iter().zip(&rb).any(|(x, y)| *x && *y)
    }

    pub fn to_dot(&self, h: &Hypergraph) -> String {
        let mut out = String::from("digraph flips {\n  node [shape=box];\n");
        for (i, c) in self.constructions.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", c.display(h)));
        }
        for (step, &(a, b)) in self.steps.iter().zip(&self.edges) {
            out.push_str(&format!(
                "  n{a} -> n{b} [label=\"{}↦{}\"];\n",
                h.label(step.parent),
                h.label(step.child)
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self, h: &Hypergraph) -> Value {
        let nodes: Vec<String> = self.constructions.iter().map(|c| c.display(h).to_string()).collect();
        let edges: Vec<Value> = self
            .steps
            .iter()
            .zip(&self.edges)
            .map(|(s, &(a, b))| json!({"source": a, "target": b, "parent": h.label(s.parent), "child": h.label(s.child)}))
            .collect();
        json!({
            "orientation": self.orientation,
            "constructions": nodes,
            "edges": edges,
            "acyclic": self.is_acyclic(),
            "sinks": self.sinks(),
        })
    }
}

/// Kahn's algorithm; `None` on a cycle.
pub(crate) fn topological_order(n: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    let mut out = vec![Vec::new(); n];
    for &(a, b) in edges {
        indeg[b] += 1;
        out[a].push(b);
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(a) = queue.pop_front() {
        order.push(a);
        for &b in &out[a] {
            indeg[b] -= 1;
            if indeg[b] == 0 {
                queue.push_back(b);
            }
        }
    }
    (order.len() == n).then_some(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pent() -> Hypergraph {
        Hypergraph::from_lists(3, &[&[1, 2], &[2, 3]]).unwrap()
    }

    fn c(h: &Hypergraph, s: &str) -> Construct {
        Construct::parse(h, s).unwrap()
    }

    #[test]
    fn flip_examples() {
        let h = pent();
        assert_eq!(flip(&h, &c(&h, "3(2(1))"), 3, 2).unwrap(), c(&h, "2(1,3)"));
        assert_eq!(flip(&h, &c(&h, "3(2(1))"), 2, 1).unwrap(), c(&h, "3(1(2))"));
        let s = c(&h, "2(1,3)");
        assert_eq!(flip(&h, &flip(&h, &s, 2, 3).unwrap(), 3, 2).unwrap(), s);
        assert!(flip(&h, &s, 1, 2).is_err());
    }

    #[test]
    fn redex_examples() {
        let h = pent();
        let targets: Vec<String> = redexes(&h, &c(&h, "3(2(1))"), FlipOrientation::PromoteSmaller)
            .unwrap()
            .iter()
            .map(|s| s.target.to_string())
            .collect();
        assert_eq!(targets, ["2(1,3)", "3(1(2))"]);
        assert!(redexes(&h, &c(&h, "1(2(3))"), FlipOrientation::PromoteSmaller).unwrap().is_empty());
        assert_eq!(redexes(&h, &c(&h, "1(2(3))"), FlipOrientation::PromoteLarger).unwrap().len(), 2);
    }

    #[test]
    fn pentagon_normal_form() {
        let h = pent();
        let (nf, trace) = normal_form(&h, &c(&h, "3(2(1))"), FlipOrientation::PromoteSmaller).unwrap();
        assert_eq!(nf.to_string(), "1(2(3))");
        assert!(!trace.is_empty());
        let (again, trace) = normal_form(&h, &nf, FlipOrientation::PromoteSmaller).unwrap();
        assert_eq!(again, nf);
        assert!(trace.is_empty());
    }

    #[test]
    fn pentagon_flip_graph() {
        let h = pent();
        let g = FlipGraph::build(&h, FlipOrientation::PromoteSmaller).unwrap();
        assert_eq!(g.edges().len(), 5);
        assert!(g.is_acyclic());
        assert!(g.has_unique_normal_forms());
        assert_eq!(g.constructions()[g.unique_sink().unwrap()].to_string(), "1(2(3))");
        let sources: Vec<String> = g.sources().iter().map(|&i| g.constructions()[i].to_string()).collect();
        assert_eq!(sources, ["3(2(1))"]);
        let dot = g.to_dot(&h);
        assert_eq!(dot.matches(" -> ").count(), 5);
        assert!(dot.contains("3↦2"));
    }

    #[test]
    fn complete_graph_sink() {
        let h = Hypergraph::from_lists(3, &[&[1, 2], &[2, 3], &[1, 3]]).unwrap();
        let g = FlipGraph::build(&h, FlipOrientation::PromoteSmaller).unwrap();
        assert_eq!(g.constructions().len(), 6);
        let sink = g.unique_sink().unwrap();
        assert_eq!(g.constructions()[sink].to_string(), "1(2(3))");
        for s in g.constructions() {
            assert_eq!(normal_form(&h, s, FlipOrientation::PromoteSmaller).unwrap().0.to_string(), "1(2(3))");
        }
    }
}
