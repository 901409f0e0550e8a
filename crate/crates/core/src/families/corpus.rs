//! Exhaustive small corpora used by the checks and the test suites.

use super::{generate, is_contextual, planar_trees, FamilyDescriptor, FamilyKind};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

const MAX_HYPERGRAPH_VERTICES: usize = 4;
const MAX_GRAPH_VERTICES: usize = 6;
const MAX_GRAPH_FAMILY_DIM: usize = 4;

fn connected_from(n: usize, candidates: &[VertexSet]) -> Vec<Hypergraph> {
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << candidates.len()) {
        let edges = (0..candidates.len()).filter(|i| mask >> i & 1 == 1).map(|i| candidates[i]);
        let h = Hypergraph::atomized(n, edges).expect("subsets of 1..=n are valid edges");
        if h.is_connected() {
            out.push(h);
        }
    }
    out
}

/// Every connected atomic hypergraph on `1..=n` (as an edge family, so
/// hypergraphs with equal saturations are listed separately).
pub fn enumerate_connected(n: usize) -> Result<Vec<Hypergraph>> {
    if n == 0 || n > MAX_HYPERGRAPH_VERTICES {
        return Err(Error::Capacity { needed: n, cap: MAX_HYPERGRAPH_VERTICES });
    }
    let candidates: Vec<VertexSet> = VertexSet::full(n).nonempty_subsets().filter(|s| s.len() >= 2).collect();
    Ok(connected_from(n, &candidates))
}

/// Every connected simple graph on `1..=n`.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Hypergraph>> {
    if n == 0 || n > MAX_GRAPH_VERTICES {
        return Err(Error::Capacity { needed: n, cap: MAX_GRAPH_VERTICES });
    }
    let candidates = VertexSet::full(n).subsets_of_size(2);
    Ok(connected_from(n, &candidates))
}

/// Short name listing the non-singleton hyperedges.
fn summary(prefix: &str, h: &Hypergraph) -> String {
    let edges: Vec<String> = h.edges().iter().filter(|e| e.len() >= 2).map(|e| e.to_string()).collect();
    format!("{prefix}{}[{}]", h.n(), edges.join(""))
}

/// The named instances of a family with dimensions `1..=up_to_dimension`.
/// Operahedra use every planar tree with the right number of edges, vertices
/// in preorder; the graph and hypergraph families list their contextual
/// members.
pub fn family_instances(kind: FamilyKind, up_to_dimension: usize) -> Result<Vec<(String, Hypergraph)>> {
    let dims = 1..=up_to_dimension;
    let numeric = |f: fn(usize) -> FamilyDescriptor, from: usize| -> Result<Vec<(String, Hypergraph)>> {
        (from..=up_to_dimension)
            .map(|d| {
                let desc = f(d);
                Ok((desc.name(), generate(&desc)?))
            })
            .collect()
    };
    match kind {
        FamilyKind::Simplex => numeric(FamilyDescriptor::Simplex, 1),
        FamilyKind::Cube => numeric(FamilyDescriptor::Cube, 1),
        FamilyKind::Associahedron => numeric(FamilyDescriptor::Associahedron, 1),
        FamilyKind::Permutahedron => numeric(FamilyDescriptor::Permutahedron, 1),
        FamilyKind::Cyclohedron => numeric(FamilyDescriptor::Cyclohedron, 2),
        FamilyKind::Operahedron => {
            let mut out = Vec::new();
            for d in dims {
                for tree in planar_trees(d + 1) {
                    let desc = FamilyDescriptor::Operahedron { tree, order: None };
                    out.push((desc.name(), generate(&desc)?));
                }
            }
            Ok(out)
        }
        FamilyKind::GraphFamily | FamilyKind::HypergraphFamily => {
            let graphs = kind == FamilyKind::GraphFamily;
            let cap = if graphs { MAX_GRAPH_FAMILY_DIM } else { MAX_HYPERGRAPH_VERTICES - 1 };
            if up_to_dimension > cap {
                return Err(Error::Capacity { needed: up_to_dimension + 1, cap: cap + 1 });
            }
            let mut out = Vec::new();
            for d in dims {
                let all = if graphs { enumerate_connected_graphs(d + 1)? } else { enumerate_connected(d + 1)? };
                for h in all {
                    if is_contextual(&h)?.contextual {
                        out.push((summary(if graphs { "graph" } else { "hypergraph" }, &h), h));
                    }
                }
            }
            Ok(out)
        }
    }
}
