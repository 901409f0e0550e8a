//! Constructs: decorated rooted trees that index the faces of the
//! nestohedron of a connected hypergraph. Constructions (all decorations
//! singletons) are its vertices.
//!
//! A construct of the plain restriction to a connected set `K` is built by
//! picking a non-empty `Y ⊆ K` for the root and recursing into the
//! connected components of `K \ Y`. Children are kept in the order of
//! those components (increasing maximal vertex), which makes the tree
//! planar and gives every construct a unique printed form.

mod lattice;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

pub use lattice::{enumerate_constructions, enumerate_constructs, expansions, f_vector, faces_below, FaceLattice, Split};

/// One node of a construct tree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Node {
    label: VertexSet,
    children: Vec<Node>,
}

impl Node {
    pub fn new(label: VertexSet, children: Vec<Node>) -> Self {
        Node { label, children }
    }

    pub fn leaf(label: VertexSet) -> Self {
        Node { label, children: Vec::new() }
    }

    pub fn label(&self) -> VertexSet {
        self.label
    }

    pub fn children(&self) -> &[Node] {
        &self.children
    }

    /// Union of all decorations in this subtree.
    pub fn support(&self) -> VertexSet {
        self.children.iter().fold(self.label, |acc, c| acc | c.support())
    }

    fn visit<'a>(&'a self, out: &mut Vec<&'a Node>) {
        out.push(self);
        for c in &self.children {
            c.visit(out);
        }
    }

    fn find(&self, label: VertexSet) -> Option<&Node> {
        if self.label == label {
            return Some(self);
        }
        self.children.iter().find_map(|c| c.find(label))
    }

    fn find_containing(&self, v: usize) -> Option<&Node> {
        if self.label.contains(v) {
            return Some(self);
        }
        self.children.iter().find_map(|c| c.find_containing(v))
    }

    fn replace(&self, label: VertexSet, new: &Node) -> Node {
        if self.label == label {
            return new.clone();
        }
        Node {
            label: self.label,
            children: self.children.iter().map(|c| c.replace(label, new)).collect(),
        }
    }

    pub(crate) fn sort_children(children: &mut [Node]) {
        children.sort_by_key(|c| c.support().max_vertex());
    }

    /// Relabels vertices and restores the canonical child order.
    pub(crate) fn map_vertices(&self, f: &mut impl FnMut(usize) -> usize) -> Node {
        let mut children: Vec<Node> = self.children.iter().map(|c| c.map_vertices(f)).collect();
        Node::sort_children(&mut children);
        Node { label: self.label.map(&mut *f), children }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, name: &dyn Fn(usize) -> String) -> fmt::Result {
        if self.label.len() == 1 {
            f.write_str(&name(self.label.min_vertex().unwrap()))?;
        } else {
            let parts: Vec<String> = self.label.iter().map(name).collect();
            write!(f, "{{{}}}", parts.join(","))?;
        }
        if !self.children.is_empty() {
            f.write_str("(")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                c.write(f, name)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// A validated construct of some connected hypergraph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Construct {
    root: Node,
}

impl Construct {
    /// The maximal face: a single node decorated by every vertex.
    pub fn top(h: &Hypergraph) -> Construct {
        Construct { root: Node::leaf(h.vertices()) }
    }

    pub(crate) fn from_root_unchecked(root: Node) -> Construct {
        Construct { root }
    }

    /// Checks the recursive construct condition at every node and returns
    /// the canonical (child-sorted) construct.
    pub fn validate(h: &Hypergraph, raw: &Node) -> Result<Construct> {
        h.require_connected()?;
        let mut seen = VertexSet::EMPTY;
        let mut nodes = Vec::new();
        raw.visit(&mut nodes);
        for node in nodes {
            if node.label.is_empty() {
                return Err(Error::invalid("empty decoration"));
            }
            if node.label.intersects(seen) {
                return Err(Error::invalid(format!(
                    "overlapping decorations at {}",
                    h.format_set(node.label & seen)
                )));
            }
            seen = seen | node.label;
        }
        Ok(Construct { root: validate_node(h, raw, h.vertices())? })
    }

    /// Parses and validates a literal such as `{1,3}(2)` or `3(2(1))`.
    /// Vertices are referred to by their labels in `h`.
    pub fn parse(h: &Hypergraph, text: &str) -> Result<Construct> {
        let raw = parse_literal(h, text)?;
        Construct::validate(h, &raw)
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn support(&self) -> VertexSet {
        self.root.support()
    }

    /// All nodes in preorder.
    pub fn nodes(&self) -> Vec<&Node> {
        let mut out = Vec::new();
        self.root.visit(&mut out);
        out
    }

    /// Sum over nodes of `|decoration| - 1`.
    pub fn dimension(&self) -> usize {
        self.nodes().iter().map(|n| n.label.len() - 1).sum()
    }

    pub fn is_construction(&self) -> bool {
        self.nodes().iter().all(|n| n.label.len() == 1)
    }

    /// The subtree rooted at the node decorated by exactly `label`.
    pub fn subtree(&self, label: VertexSet) -> Option<&Node> {
        self.root.find(label)
    }

    /// The node whose decoration contains `v`.
    pub fn node_containing(&self, v: usize) -> Option<&Node> {
        self.root.find_containing(v)
    }

    /// Decoration of the parent of the node decorated by `label`.
    pub fn parent_of(&self, label: VertexSet) -> Option<VertexSet> {
        self.nodes()
            .into_iter()
            .find(|n| n.children.iter().any(|c| c.label == label))
            .map(|n| n.label)
    }

    /// Replaces the subtree at `label` by `new`, which must have the same
    /// support so the sibling order is unaffected.
    pub(crate) fn replace_subtree(&self, label: VertexSet, new: &Node) -> Construct {
        Construct { root: self.root.replace(label, new) }
    }

    /// Contracts the edge between `parent` and its child `child`; the merged
    /// node inherits both families of children.
    pub fn contract(&self, parent: VertexSet, child: VertexSet) -> Result<Construct> {
        let p = self
            .subtree(parent)
            .ok_or_else(|| Error::invalid(format!("no node {parent}")))?;
        let pos = p
            .children
            .iter()
            .position(|c| c.label == child)
            .ok_or_else(|| Error::invalid(format!("{child} is not a child of {parent}")))?;
        let mut children: Vec<Node> = p.children.clone();
        let c = children.remove(pos);
        children.extend(c.children);
        Node::sort_children(&mut children);
        let merged = Node { label: parent | child, children };
        Ok(self.replace_subtree(parent, &merged))
    }

    /// Every construct covering this one, with the contracted (parent, child) pair.
    pub fn contractions(&self) -> Vec<(Construct, (VertexSet, VertexSet))> {
        let mut out = Vec::new();
        for node in self.nodes() {
            for c in &node.children {
                let t = self.contract(node.label, c.label).expect("edge exists");
                out.push((t, (node.label, c.label)));
            }
        }
        out
    }

    /// Relabels through an order-preserving or order-reversing vertex map.
    pub fn map_vertices(&self, mut f: impl FnMut(usize) -> usize) -> Construct {
        Construct { root: self.root.map_vertices(&mut f) }
    }

    /// Printed form using the labels of `h`.
    pub fn display<'a>(&'a self, h: &'a Hypergraph) -> impl fmt::Display + 'a {
        Labelled { construct: self, h }
    }
}

impl fmt::Display for Construct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.write(f, &|v| v.to_string())
    }
}

impl Serialize for Construct {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

struct Labelled<'a> {
    construct: &'a Construct,
    h: &'a Hypergraph,
}

impl fmt::Display for Labelled<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.construct.root.write(f, &|v| self.h.label(v).to_string())
    }
}

fn validate_node(h: &Hypergraph, node: &Node, ground: VertexSet) -> Result<Node> {
    if !node.label.is_subset(ground) {
        return Err(Error::invalid(format!(
            "decoration {} lies outside its support {}",
            h.format_set(node.label),
            h.format_set(ground)
        )));
    }
    let comps = h.components_of(ground - node.label);
    if comps.len() != node.children.len() {
        return Err(Error::invalid(format!(
            "node {} needs {} children (one per component of {}), found {}",
            h.format_set(node.label),
            comps.len(),
            h.format_set(ground - node.label),
            node.children.len()
        )));
    }
    let mut children = Vec::with_capacity(comps.len());
    for comp in comps {
        let child = node
            .children
            .iter()
            .find(|c| c.support() == comp)
            .ok_or_else(|| {
                Error::invalid(format!(
                    "no child of {} has support {}",
                    h.format_set(node.label),
                    h.format_set(comp)
                ))
            })?;
        children.push(validate_node(h, child, comp)?);
    }
    Ok(Node { label: node.label, children })
}

/// Builds the subtree over `ground` whose upper part is `skeleton` and
/// whose remaining branches are taken from `pool`. At each skeleton node the
/// components of what is left decide where things go: a component holding
/// a skeleton child recurses into it, any other component must be the
/// support of a pooled subtree.
pub(crate) fn graft(h: &Hypergraph, ground: VertexSet, skeleton: &Node, pool: &mut Vec<Node>) -> Result<Node> {
    if !skeleton.label.is_subset(ground) {
        return Err(Error::invalid(format!("{} does not fit in {}", skeleton.label, ground)));
    }
    let comps = h.components_of(ground - skeleton.label);
    let mut used = 0;
    let mut children = Vec::with_capacity(comps.len());
    for comp in comps {
        let mut inside = skeleton.children.iter().filter(|c| c.label.intersects(comp));
        match (inside.next(), inside.next()) {
            (Some(sk), None) => {
                used += 1;
                children.push(graft(h, comp, sk, pool)?);
            }
            (None, _) => {
                let i = pool
                    .iter()
                    .position(|t| t.support() == comp)
                    .ok_or_else(|| Error::invalid(format!("no subtree fills component {comp}")))?;
                children.push(pool.swap_remove(i));
            }
            (Some(_), Some(_)) => {
                return Err(Error::invalid(format!("component {comp} holds two skeleton nodes")));
            }
        }
    }
    if used != skeleton.children.len() {
        return Err(Error::invalid(format!("skeleton below {} does not fit", skeleton.label)));
    }
    Ok(Node { label: skeleton.label, children })
}

/// Parses the literal syntax into an unvalidated tree.
pub fn parse_literal(h: &Hypergraph, text: &str) -> Result<Node> {
    let mut p = LiteralParser { chars: text.chars().collect(), pos: 0, h };
    let node = p.tree()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(Error::Parse(format!("trailing input at offset {} in {text:?}", p.pos)));
    }
    Ok(node)
}

struct LiteralParser<'a> {
    chars: Vec<char>,
    pos: usize,
    h: &'a Hypergraph,
}

impl LiteralParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, ch: char) -> Result<()> {
        if self.peek() == Some(ch) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!("expected {ch:?} at offset {}", self.pos)))
        }
    }

    fn vertex(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() {
            let c = self.chars[self.pos];
            if c.is_whitespace() || "{}(),".contains(c) {
                break;
            }
            self.pos += 1;
        }
        let label: String = self.chars[start..self.pos].iter().collect();
        if label.is_empty() {
            return Err(Error::Parse(format!("expected a vertex at offset {start}")));
        }
        self.h
            .vertex_by_label(&label)
            .ok_or_else(|| Error::Parse(format!("unknown vertex {label:?}")))
    }

    fn decoration(&mut self) -> Result<VertexSet> {
        if self.peek() == Some('{') {
            self.pos += 1;
            let mut set = VertexSet::EMPTY;
            loop {
                let v = self.vertex()?;
                if set.contains(v) {
                    return Err(Error::invalid(format!("vertex {} repeated in a decoration", self.h.label(v))));
                }
                set.insert(v);
                match self.peek() {
                    Some(',') => self.pos += 1,
                    Some('}') => {
                        self.pos += 1;
                        return Ok(set);
                    }
                    _ => return Err(Error::Parse(format!("unterminated decoration at offset {}", self.pos))),
                }
            }
        }
        Ok(VertexSet::singleton(self.vertex()?))
    }

    fn tree(&mut self) -> Result<Node> {
        let label = self.decoration()?;
        let mut children = Vec::new();
        if self.peek() == Some('(') {
            self.pos += 1;
            loop {
                children.push(self.tree()?);
                match self.peek() {
                    Some(',') => self.pos += 1,
                    _ => break,
                }
            }
            self.expect(')')?;
        }
        Ok(Node { label, children })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pent() -> Hypergraph {
        Hypergraph::from_lists(3, &[&[1, 2], &[2, 3]]).unwrap()
    }

    #[test]
    fn validate_examples() {
        let h = pent();
        assert_eq!(Construct::parse(&h, "2(1,3)").unwrap().to_string(), "2(1,3)");
        assert_eq!(Construct::parse(&h, "2(3,1)").unwrap().to_string(), "2(1,3)");
        assert_eq!(Construct::parse(&h, "{1,3}(2)").unwrap().to_string(), "{1,3}(2)");
        assert!(matches!(Construct::parse(&h, "1(2,3)"), Err(Error::InvalidConstruct(_))));
        assert!(matches!(Construct::parse(&h, "1(1(2,3))"), Err(Error::InvalidConstruct(_))));
        assert!(matches!(Construct::parse(&h, "1(2"), Err(Error::Parse(_))));
        assert!(matches!(Construct::parse(&h, "1(4)"), Err(Error::Parse(_))));
    }

    #[test]
    fn dimension_examples() {
        let h = pent();
        assert_eq!(Construct::top(&h).dimension(), 2);
        assert_eq!(Construct::parse(&h, "2(1,3)").unwrap().dimension(), 0);
        assert_eq!(Construct::parse(&h, "{1,2}(3)").unwrap().dimension(), 1);
    }

    #[test]
    fn contraction_examples() {
        let h = pent();
        let s = Construct::parse(&h, "1(2(3))").unwrap();
        let covers: Vec<String> = s.contractions().iter().map(|(t, _)| t.to_string()).collect();
        assert_eq!(covers, ["{1,2}(3)", "1({2,3})"]);
        let s = Construct::parse(&h, "{1,2}(3)").unwrap();
        let covers: Vec<String> = s.contractions().iter().map(|(t, _)| t.to_string()).collect();
        assert_eq!(covers, ["{1,2,3}"]);
        assert!(Construct::top(&h).contractions().is_empty());
    }

    #[test]
    fn labelled_printing() {
        let h = Hypergraph::from_lists(3, &[&[1, 2], &[2, 3]])
            .unwrap()
            .with_labels(vec!["a".into(), "b".into(), "c".into()])
            .unwrap();
        let c = Construct::parse(&h, "b(a, c)").unwrap();
        assert_eq!(c.display(&h).to_string(), "b(a,c)");
        assert_eq!(c.to_string(), "2(1,3)");
    }

    #[test]
    fn subtree_queries() {
        let h = pent();
        let c = Construct::parse(&h, "3(1(2))").unwrap();
        assert_eq!(c.subtree(VertexSet::from([1])).unwrap().support(), VertexSet::from([1, 2]));
        assert_eq!(c.parent_of(VertexSet::from([2])), Some(VertexSet::from([1])));
        assert_eq!(c.parent_of(VertexSet::from([3])), None);
        assert_eq!(c.node_containing(2).unwrap().label(), VertexSet::from([2]));
    }
}
