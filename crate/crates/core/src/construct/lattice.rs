//! Enumeration of constructs and the face lattice they form.

use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

use serde::Serialize;
use serde_json::{json, Value};

use super::{graft, Construct, Node};
use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// How a node `X ∪ Y` of the larger construct is split by an expansion:
/// `x` becomes the parent decoration and `y` its child.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Split {
    pub x: VertexSet,
    pub y: VertexSet,
}

/// All constructs of a connected hypergraph, indexed, with covering pairs.
///
/// Constructs are sorted by dimension and then by their canonical order,
/// so indices are reproducible.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    constructs: Vec<Construct>,
    dims: Vec<usize>,
    covers: Vec<(usize, usize)>,
    index: HashMap<Construct, usize>,
}

impl FaceLattice {
    pub fn len(&self) -> usize {
        self.constructs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constructs.is_empty()
    }

    pub fn constructs(&self) -> &[Construct] {
        &self.constructs
    }

    pub fn get(&self, i: usize) -> &Construct {
        &self.constructs[i]
    }

    pub fn dimension(&self, i: usize) -> usize {
        self.dims[i]
    }

    /// Covering pairs `(lower, upper)` as indices.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn index_of(&self, c: &Construct) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// Indices of the constructs of dimension `d`.
    pub fn of_dimension(&self, d: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.dims[i] == d).collect()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.dims.iter().copied().max().unwrap_or(0);
        let mut f = vec![0; top + 1];
        for &d in &self.dims {
            f[d] += 1;
        }
        f
    }

    /// Hasse diagram, one rank per dimension.
    pub fn to_dot(&self, h: &Hypergraph) -> String {
        let mut out = String::from("digraph faces {\n  rankdir=BT;\n  node [shape=box];\n");
        let f = self.f_vector();
        for d in 0..f.len() {
            out.push_str("  { rank=same;");
            for i in self.of_dimension(d) {
                out.push_str(&format!(" n{i};"));
            }
            out.push_str(" }\n");
        }
        for (i, c) in self.constructs.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", c.display(h)));
        }
        for &(a, b) in &self.covers {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self, h: &Hypergraph) -> Value {
        let constructs: Vec<Value> = self
            .constructs
            .iter()
            .enumerate()
            .map(|(i, c)| json!({"id": i, "construct": c.display(h).to_string(), "dimension": self.dims[i]}))
            .collect();
        json!({
            "f_vector": self.f_vector(),
            "constructs": constructs,
            "covers": self.covers,
        })
    }
}

fn node_choices(
    h: &Hypergraph,
    ground: VertexSet,
    singletons: bool,
    memo: &mut HashMap<VertexSet, Rc<Vec<Node>>>,
) -> Rc<Vec<Node>> {
    if let Some(v) = memo.get(&ground) {
        return v.clone();
    }
    let mut out = Vec::new();
    let roots: Vec<VertexSet> = if singletons {
        ground.iter().map(VertexSet::singleton).collect()
    } else {
        ground.nonempty_subsets().collect()
    };
    for root in roots {
        let comps = h.components_of(ground - root);
        let options: Vec<Rc<Vec<Node>>> = comps.iter().map(|&c| node_choices(h, c, singletons, memo)).collect();
        // Cartesian product over the components.
        let mut partial: Vec<Vec<Node>> = vec![Vec::new()];
        for opts in &options {
            let mut next = Vec::with_capacity(partial.len() * opts.len());
            for p in &partial {
                for o in opts.iter() {
                    let mut q = p.clone();
                    q.push(o.clone());
                    next.push(q);
                }
            }
            partial = next;
        }
        out.extend(partial.into_iter().map(|children| Node::new(root, children)));
    }
    let out = Rc::new(out);
    memo.insert(ground, out.clone());
    out
}

fn sorted(mut cs: Vec<Construct>) -> Vec<Construct> {
    cs.sort_by_cached_key(|c| (c.dimension(), c.clone()));
    cs
}

/// Every construct of `h` with its covering relation.
pub fn enumerate_constructs(h: &Hypergraph) -> Result<FaceLattice> {
    h.require_connected()?;
    h.check_cap()?;
    let roots = node_choices(h, h.vertices(), false, &mut HashMap::new());
    let constructs = sorted(roots.iter().cloned().map(Construct::from_root_unchecked).collect());
    let dims: Vec<usize> = constructs.iter().map(Construct::dimension).collect();
    let index: HashMap<Construct, usize> = constructs.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let mut covers = Vec::new();
    for (i, c) in constructs.iter().enumerate() {
        for (t, _) in c.contractions() {
            covers.push((i, index[&t]));
        }
    }
    covers.sort_unstable();
    Ok(FaceLattice { constructs, dims, covers, index })
}

/// The constructs of dimension zero.
pub fn enumerate_constructions(h: &Hypergraph) -> Result<Vec<Construct>> {
    h.require_connected()?;
    h.check_cap()?;
    let roots = node_choices(h, h.vertices(), true, &mut HashMap::new());
    let mut out: Vec<Construct> = roots.iter().cloned().map(Construct::from_root_unchecked).collect();
    out.sort();
    Ok(out)
}

/// Counts of constructs per dimension.
pub fn f_vector(h: &Hypergraph) -> Result<Vec<usize>> {
    Ok(enumerate_constructs(h)?.f_vector())
}

/// Every construct covered by `t`, obtained by splitting one node `Z` into
/// a parent `X` and child `Y` such that `Y` stays inside a single component
/// of what remains of the node's support once `X` is removed.
pub fn expansions(h: &Hypergraph, t: &Construct) -> Vec<(Construct, Split)> {
    let mut out = Vec::new();
    for node in t.nodes() {
        let z = node.label();
        if z.len() < 2 {
            continue;
        }
        let ground = node.support();
        for y in z.nonempty_subsets() {
            if y == z {
                continue;
            }
            let x = z - y;
            let skeleton = Node::new(x, vec![Node::leaf(y)]);
            let mut pool = node.children().to_vec();
            if let Ok(sub) = graft(h, ground, &skeleton, &mut pool) {
                if pool.is_empty() {
                    out.push((t.replace_subtree(z, &sub), Split { x, y }));
                }
            }
        }
    }
    out.sort();
    out
}

/// All faces of `t` (constructs below or equal to it), via repeated expansion.
pub fn faces_below(h: &Hypergraph, t: &Construct) -> Vec<Construct> {
    let mut seen: BTreeSet<Construct> = BTreeSet::new();
    let mut stack = vec![t.clone()];
    while let Some(c) = stack.pop() {
        if seen.insert(c.clone()) {
            stack.extend(expansions(h, &c).into_iter().map(|(s, _)| s));
        }
    }
    sorted(seen.into_iter().collect())
}
