//! Polytope families as ordered hypergraphs, graph-class predicates,
//! contextuality and the tensor-word encoding of associahedron vertices.

mod contextual;
mod corpus;
mod parenthesization;
mod tree;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

pub use contextual::{
    contextual_family_check, is_contextual, ContextualVerdict, FamilyCheckReport, FamilyCheckRow,
};
pub use corpus::{enumerate_connected, enumerate_connected_graphs, family_instances};
pub use parenthesization::{from_parenthesization, to_parenthesization};
pub use tree::{line_graph, planar_trees, PlanarTree};

/// The generated families, plus user-supplied graphs and hypergraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyDescriptor {
    Simplex(usize),
    Cube(usize),
    Associahedron(usize),
    Permutahedron(usize),
    Cyclohedron(usize),
    /// Line graph of a planar tree, with an optional edge-label order.
    Operahedron { tree: PlanarTree, order: Option<Vec<String>> },
    Graph { vertices: usize, edges: Vec<(usize, usize)> },
    Hypergraph { vertices: usize, edges: Vec<VertexSet> },
}

impl FamilyDescriptor {
    /// Short name such as `associahedron(3)`.
    pub fn name(&self) -> String {
        match self {
            FamilyDescriptor::Simplex(n) => format!("simplex({n})"),
            FamilyDescriptor::Cube(n) => format!("cube({n})"),
            FamilyDescriptor::Associahedron(n) => format!("associahedron({n})"),
            FamilyDescriptor::Permutahedron(n) => format!("permutahedron({n})"),
            FamilyDescriptor::Cyclohedron(n) => format!("cyclohedron({n})"),
            FamilyDescriptor::Operahedron { tree, .. } => format!("operahedron({tree})"),
            FamilyDescriptor::Graph { vertices, edges } => format!("graph({vertices};{edges:?})"),
            FamilyDescriptor::Hypergraph { vertices, edges } => {
                let es: Vec<String> = edges.iter().map(|e| e.to_string()).collect();
                format!("hypergraph({vertices};{})", es.join(","))
            }
        }
    }
}

fn check_dim(n: usize) -> Result<usize> {
    if n + 1 > MAX_VERTICES {
        return Err(Error::Capacity { needed: n + 1, cap: MAX_VERTICES });
    }
    Ok(n + 1)
}

fn pairs(list: impl IntoIterator<Item = (usize, usize)>) -> impl Iterator<Item = VertexSet> {
    list.into_iter().map(|(a, b)| VertexSet::from([a, b]))
}

/// The ordered hypergraph of a family member. The numeric families take the
/// dimension `n` and live on `n + 1` vertices.
pub fn generate(d: &FamilyDescriptor) -> Result<Hypergraph> {
    match d {
        FamilyDescriptor::Simplex(n) => {
            let m = check_dim(*n)?;
            Hypergraph::atomized(m, [VertexSet::full(m)])
        }
        FamilyDescriptor::Cube(n) => {
            let m = check_dim(*n)?;
            Hypergraph::atomized(m, (1..=m).map(VertexSet::full))
        }
        FamilyDescriptor::Associahedron(n) => {
            let m = check_dim(*n)?;
            Hypergraph::atomized(m, pairs((1..m).map(|i| (i, i + 1))))
        }
        FamilyDescriptor::Permutahedron(n) => {
            let m = check_dim(*n)?;
            Hypergraph::atomized(m, pairs((1..=m).flat_map(|i| (i + 1..=m).map(move |j| (i, j)))))
        }
        FamilyDescriptor::Cyclohedron(n) => {
            let m = check_dim(*n)?;
            if m < 2 {
                return Err(Error::domain("a cyclohedron needs dimension at least 1"));
            }
            Hypergraph::atomized(m, pairs((1..m).map(|i| (i, i + 1)).chain([(m, 1)])))
        }
        FamilyDescriptor::Operahedron { tree, order } => line_graph(tree, order.as_deref()),
        FamilyDescriptor::Graph { vertices, edges } => {
            check_dim(vertices.saturating_sub(1))?;
            for &(a, b) in edges {
                if a == b || a == 0 || b == 0 || a > *vertices || b > *vertices {
                    return Err(Error::domain(format!("bad graph edge ({a},{b})")));
                }
            }
            Hypergraph::atomized(*vertices, pairs(edges.iter().copied()))
        }
        FamilyDescriptor::Hypergraph { vertices, edges } => {
            check_dim(vertices.saturating_sub(1))?;
            Hypergraph::atomized(*vertices, edges.iter().copied())
        }
    }
}

/// Coarse classification of a hypergraph by its connected sets.
///
/// Hyperedges that are already connected through two-element edges carry no
/// information, so a hypergraph whose saturation equals that of its
/// two-element edges is classified as that graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClass {
    Linear,
    Complete,
    Cycle,
    ClawfreeBlock,
    OtherGraph,
    ProperHypergraph,
}

impl GraphClass {
    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Linear => "linear",
            GraphClass::Complete => "complete",
            GraphClass::Cycle => "cycle",
            GraphClass::ClawfreeBlock => "clawfree-block",
            GraphClass::OtherGraph => "other-graph",
            GraphClass::ProperHypergraph => "proper-hypergraph",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The graph on the same vertices formed by the two-element hyperedges.
pub fn underlying_graph(h: &Hypergraph) -> Hypergraph {
    Hypergraph::atomized(h.n(), h.edges().iter().copied().filter(|e| e.len() == 2))
        .expect("a subfamily of an atomic hypergraph stays valid")
}

/// Whether `a` and `b` have the same vertices and the same connected sets.
pub fn same_building_set(a: &Hypergraph, b: &Hypergraph) -> Result<bool> {
    Ok(a.n() == b.n() && a.saturation()? == b.saturation()?)
}

pub fn graph_class(h: &Hypergraph) -> Result<GraphClass> {
    let g = underlying_graph(h);
    if !h.is_graph() && !same_building_set(h, &g)? {
        return Ok(GraphClass::ProperHypergraph);
    }
    let n = g.n();
    let adj: Vec<VertexSet> = (1..=n)
        .map(|v| {
            g.edges()
                .iter()
                .filter(|e| e.len() == 2 && e.contains(v))
                .fold(VertexSet::EMPTY, |acc, &e| acc | e)
                - VertexSet::singleton(v)
        })
        .collect();
    let edge_count = g.edges().iter().filter(|e| e.len() == 2).count();
    let connected = g.is_connected();
    let max_deg = adj.iter().map(|a| a.len()).max().unwrap_or(0);
    if connected && edge_count + 1 == n && max_deg <= 2 {
        return Ok(GraphClass::Linear);
    }
    if edge_count == n * (n - 1) / 2 {
        return Ok(GraphClass::Complete);
    }
    if connected && edge_count == n && adj.iter().all(|a| a.len() == 2) {
        return Ok(GraphClass::Cycle);
    }
    if connected && is_block_graph(&adj) && is_claw_free(&adj) {
        return Ok(GraphClass::ClawfreeBlock);
    }
    Ok(GraphClass::OtherGraph)
}

/// Chordal and diamond-free, i.e. every biconnected block is a clique.
fn is_block_graph(adj: &[VertexSet]) -> bool {
    let n = adj.len();
    let clique = |s: VertexSet| s.iter().all(|v| (s - VertexSet::singleton(v)).is_subset(adj[v - 1]));
    // Simplicial elimination.
    let mut left = VertexSet::full(n);
    while !left.is_empty() {
        match left.iter().find(|&v| clique(adj[v - 1] & left)) {
            Some(v) => left = left - VertexSet::singleton(v),
            None => return false,
        }
    }
    // No induced K4 minus an edge.
    VertexSet::full(n).subsets_of_size(4).into_iter().all(|s| {
        let edges: usize = s.iter().map(|v| (adj[v - 1] & s).len()).sum::<usize>() / 2;
        edges != 5
    })
}

fn is_claw_free(adj: &[VertexSet]) -> bool {
    adj.iter().all(|&nb| {
        nb.subsets_of_size(3).into_iter().all(|t| t.iter().any(|v| adj[v - 1].intersects(t)))
    })
}

/// The families whose closure properties can be checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Simplex,
    Cube,
    Associahedron,
    Permutahedron,
    Cyclohedron,
    Operahedron,
    GraphFamily,
    HypergraphFamily,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 8] = [
        FamilyKind::Simplex,
        FamilyKind::Cube,
        FamilyKind::Associahedron,
        FamilyKind::Permutahedron,
        FamilyKind::Cyclohedron,
        FamilyKind::Operahedron,
        FamilyKind::GraphFamily,
        FamilyKind::HypergraphFamily,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Simplex => "simplex",
            FamilyKind::Cube => "cube",
            FamilyKind::Associahedron => "associahedron",
            FamilyKind::Permutahedron => "permutahedron",
            FamilyKind::Cyclohedron => "cyclohedron",
            FamilyKind::Operahedron => "operahedron",
            FamilyKind::GraphFamily => "graph-family",
            FamilyKind::HypergraphFamily => "hypergraph-family",
        }
    }

    /// Whether `h`, with its own vertex order, belongs to the family.
    /// The graph and hypergraph families consist of contextual members.
    pub fn contains(self, h: &Hypergraph) -> Result<bool> {
        if !h.is_connected() {
            return Ok(false);
        }
        let n = h.n();
        let class = || graph_class(h);
        Ok(match self {
            FamilyKind::Simplex => same_building_set(h, &generate(&FamilyDescriptor::Simplex(n - 1))?)?,
            FamilyKind::Cube => same_building_set(h, &generate(&FamilyDescriptor::Cube(n - 1))?)?,
            FamilyKind::Associahedron => class()? == GraphClass::Linear,
            FamilyKind::Permutahedron => n <= 2 || class()? == GraphClass::Complete,
            // Cycles together with the paths left after removing vertices.
            FamilyKind::Cyclohedron => match class()? {
                GraphClass::Linear | GraphClass::Cycle => true,
                GraphClass::Complete => n == 3,
                _ => false,
            },
            FamilyKind::Operahedron => {
                matches!(class()?, GraphClass::Linear | GraphClass::Complete | GraphClass::ClawfreeBlock)
            }
            FamilyKind::GraphFamily => {
                class()? != GraphClass::ProperHypergraph && is_contextual(h)?.contextual
            }
            FamilyKind::HypergraphFamily => is_contextual(h)?.contextual,
        })
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_lists(n, edges).unwrap()
    }

    #[test]
    fn generated_edge_families() {
        let s = generate(&FamilyDescriptor::Simplex(2)).unwrap();
        assert_eq!(s, hg(3, &[&[1, 2, 3]]));
        let c = generate(&FamilyDescriptor::Cube(2)).unwrap();
        assert_eq!(c, hg(3, &[&[1, 2], &[1, 2, 3]]));
        let k = generate(&FamilyDescriptor::Associahedron(2)).unwrap();
        assert_eq!(k, hg(3, &[&[1, 2], &[2, 3]]));
        let p = generate(&FamilyDescriptor::Permutahedron(2)).unwrap();
        assert_eq!(p, hg(3, &[&[1, 2], &[2, 3], &[1, 3]]));
        let w = generate(&FamilyDescriptor::Cyclohedron(3)).unwrap();
        assert_eq!(w, hg(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]));
        assert!(generate(&FamilyDescriptor::Cyclohedron(0)).is_err());
        assert!(matches!(generate(&FamilyDescriptor::Simplex(80)), Err(Error::Capacity { .. })));
    }

    #[test]
    fn classes() {
        let class = |h: &Hypergraph| graph_class(h).unwrap();
        assert_eq!(class(&hg(3, &[&[1, 2], &[2, 3]])), GraphClass::Linear);
        assert_eq!(class(&hg(3, &[&[1, 3], &[2, 3]])), GraphClass::Linear);
        assert_eq!(class(&hg(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])), GraphClass::Cycle);
        assert_eq!(class(&hg(3, &[&[1, 2], &[2, 3], &[1, 3]])), GraphClass::Complete);
        let t = PlanarTree::parse("a(z:b(x:c,y:d),u:e)").unwrap();
        assert_eq!(class(&line_graph(&t, None).unwrap()), GraphClass::ClawfreeBlock);
        assert_eq!(class(&hg(4, &[&[1, 2], &[1, 3], &[1, 4]])), GraphClass::OtherGraph);
        // Diamond: chordal but not a block graph.
        assert_eq!(class(&hg(4, &[&[1, 2], &[1, 3], &[2, 3], &[2, 4], &[3, 4]])), GraphClass::OtherGraph);
        assert_eq!(class(&hg(3, &[&[1, 2, 3]])), GraphClass::ProperHypergraph);
        // A redundant hyperedge over a path.
        assert_eq!(class(&hg(3, &[&[1, 2], &[2, 3], &[1, 2, 3]])), GraphClass::Linear);
    }

    #[test]
    fn membership() {
        let c3 = generate(&FamilyDescriptor::Cube(3)).unwrap();
        assert!(FamilyKind::Cube.contains(&c3).unwrap());
        assert!(!FamilyKind::Cube.contains(&c3.reversed()).unwrap());
        assert!(FamilyKind::Simplex.contains(&hg(1, &[])).unwrap());
        assert!(FamilyKind::Operahedron.contains(&hg(3, &[&[1, 2], &[2, 3], &[1, 3]])).unwrap());
        assert!(!FamilyKind::Associahedron.contains(&hg(2, &[])).unwrap());
        assert_eq!("graph-family".parse::<FamilyKind>().unwrap(), FamilyKind::GraphFamily);
    }
}
