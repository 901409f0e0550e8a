//! Planar rooted trees with labelled edges, and their line graphs.

use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// A planar rooted tree. Each non-root node carries the label of the edge
/// joining it to its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarTree {
    pub label: String,
    pub children: Vec<(String, PlanarTree)>,
}

impl PlanarTree {
    /// Parses `a(z:b(x:c,y:d),u:e)`. An edge label may be omitted
    /// (`a(b,c)`), in which case the child's label is used.
    pub fn parse(text: &str) -> Result<PlanarTree> {
        let chars: Vec<char> = text.chars().collect();
        let mut pos = 0;
        let tree = parse_node(&chars, &mut pos)?;
        skip_ws(&chars, &mut pos);
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input at offset {pos} in tree {text:?}")));
        }
        let labels = tree.edge_labels();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::Parse(format!("edge label {l:?} used twice")));
            }
        }
        Ok(tree)
    }

    /// Edge labels in preorder.
    pub fn edge_labels(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (e, c) in &self.children {
            out.push(e.clone());
            out.extend(c.edge_labels());
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.children.iter().map(|(_, c)| 1 + c.edge_count()).sum()
    }

    /// Pairs of edge indices (preorder) that share a tree vertex.
    fn adjacent_edges(&self) -> Vec<(usize, usize)> {
        fn walk(t: &PlanarTree, parent_edge: Option<usize>, next: &mut usize, out: &mut Vec<(usize, usize)>) {
            let mut mine = Vec::new();
            for (_, c) in &t.children {
                let id = *next;
                *next += 1;
                mine.push(id);
                walk(c, Some(id), next, out);
            }
            for (i, &a) in mine.iter().enumerate() {
                if let Some(p) = parent_edge {
                    out.push((p, a));
                }
                for &b in &mine[i + 1..] {
                    out.push((a, b));
                }
            }
        }
        let mut out = Vec::new();
        walk(self, None, &mut 0, &mut out);
        out
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)?;
        if !self.children.is_empty() {
            f.write_str("(")?;
            for (i, (e, c)) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}:{c}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

fn skip_ws(chars: &[char], pos: &mut usize) {
    while *pos < chars.len() && chars[*pos].is_whitespace() {
        *pos += 1;
    }
}

fn ident(chars: &[char], pos: &mut usize) -> Result<String> {
    skip_ws(chars, pos);
    let start = *pos;
    while *pos < chars.len() && !chars[*pos].is_whitespace() && !"(),:".contains(chars[*pos]) {
        *pos += 1;
    }
    if start == *pos {
        return Err(Error::Parse(format!("expected a label at offset {start}")));
    }
    Ok(chars[start..*pos].iter().collect())
}

fn parse_node(chars: &[char], pos: &mut usize) -> Result<PlanarTree> {
    let label = ident(chars, pos)?;
    let mut children = Vec::new();
    skip_ws(chars, pos);
    if chars.get(*pos) == Some(&'(') {
        *pos += 1;
        loop {
            let first = ident(chars, pos)?;
            skip_ws(chars, pos);
            let (edge, child) = if chars.get(*pos) == Some(&':') {
                *pos += 1;
                (first, parse_node(chars, pos)?)
            } else {
                // No edge label: `first` was the child's own label.
                *pos -= first.chars().count();
                let child = parse_node(chars, pos)?;
                (child.label.clone(), child)
            };
            children.push((edge, child));
            skip_ws(chars, pos);
            match chars.get(*pos) {
                Some(',') => *pos += 1,
                Some(')') => {
                    *pos += 1;
                    break;
                }
                _ => return Err(Error::Parse(format!("expected ',' or ')' at offset {pos}"))),
            }
        }
    }
    Ok(PlanarTree { label, children })
}

/// The line graph of `t`: one vertex per tree edge, adjacent when the tree
/// edges meet. Vertices are ordered by `order` (edge labels) when given,
/// otherwise by preorder.
pub fn line_graph(t: &PlanarTree, order: Option<&[String]>) -> Result<Hypergraph> {
    let labels = t.edge_labels();
    if labels.is_empty() {
        return Err(Error::domain("a tree without edges has no line graph"));
    }
    let rank: Vec<usize> = match order {
        None => (1..=labels.len()).collect(),
        Some(order) => {
            let mut sorted: Vec<&String> = order.iter().collect();
            sorted.sort();
            let mut expected: Vec<&String> = labels.iter().collect();
            expected.sort();
            if sorted != expected {
                return Err(Error::domain("edge order must list every edge label exactly once"));
            }
            labels.iter().map(|l| order.iter().position(|o| o == l).unwrap() + 1).collect()
        }
    };
    let edges = t
        .adjacent_edges()
        .into_iter()
        .map(|(a, b)| VertexSet::singleton(rank[a]) | VertexSet::singleton(rank[b]));
    let mut names = vec![String::new(); labels.len()];
    for (i, l) in labels.iter().enumerate() {
        names[rank[i] - 1] = l.clone();
    }
    Hypergraph::atomized(labels.len(), edges)?.with_labels(names)
}

/// Every planar rooted tree with `edges` edges (a Catalan number of them),
/// nodes named `v0, v1, ...` and edges `e1, e2, ...` in preorder.
pub fn planar_trees(edges: usize) -> Vec<PlanarTree> {
    // Forests with `k` edges: the first tree takes `first` edges including
    // the one to its root.
    fn forests(k: usize) -> Vec<Vec<Shape>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in 1..=k {
            for sub in forests(first - 1) {
                for rest in forests(k - first) {
                    let mut f = vec![Shape(sub.clone())];
                    f.extend(rest);
                    out.push(f);
                }
            }
        }
        out
    }
    #[derive(Clone)]
    struct Shape(Vec<Shape>);
    fn build(children: &[Shape], node: &mut usize, edge: &mut usize) -> PlanarTree {
        let label = format!("v{node}");
        *node += 1;
        let mut kids = Vec::new();
        for c in children {
            *edge += 1;
            let e = format!("e{edge}");
            kids.push((e, build(&c.0, node, edge)));
        }
        PlanarTree { label, children: kids }
    }
    forests(edges).iter().map(|f| build(f, &mut 0, &mut 0)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_tree_line_graph() {
        let t = PlanarTree::parse("a(z:b(x:c,y:d),u:e)").unwrap();
        assert_eq!(t.edge_labels(), ["z", "x", "y", "u"]);
        let g = line_graph(&t, None).unwrap();
        let mut pairs: Vec<String> = g
            .edges()
            .iter()
            .filter(|e| e.len() == 2)
            .map(|e| {
                let mut ls: Vec<&str> = e.iter().map(|v| g.label(v)).collect();
                ls.sort();
                ls.join("")
            })
            .collect();
        pairs.sort();
        assert_eq!(pairs, ["uz", "xy", "xz", "yz"]);
    }

    #[test]
    fn user_edge_order() {
        let t = PlanarTree::parse("a(z:b(x:c,y:d),u:e)").unwrap();
        let order: Vec<String> = ["x", "y", "z", "u"].iter().map(|s| s.to_string()).collect();
        let g = line_graph(&t, Some(&order)).unwrap();
        assert_eq!(g.labels(), ["x", "y", "z", "u"]);
        assert!(g.edges().contains(&VertexSet::from([3, 4])));
        assert!(line_graph(&t, Some(&order[..3])).is_err());
    }

    #[test]
    fn paths_and_stars() {
        let path = PlanarTree::parse("a(b(c(d)))").unwrap();
        let g = line_graph(&path, None).unwrap();
        assert_eq!(g, Hypergraph::from_lists(3, &[&[1, 2], &[2, 3]]).unwrap());
        let star = PlanarTree::parse("a(b,c,d)").unwrap();
        let g = line_graph(&star, None).unwrap();
        assert_eq!(g, Hypergraph::from_lists(3, &[&[1, 2], &[1, 3], &[2, 3]]).unwrap());
        assert!(line_graph(&PlanarTree::parse("a").unwrap(), None).is_err());
    }

    #[test]
    fn tree_parsing() {
        assert!(PlanarTree::parse("a(x:b,x:c)").is_err());
        assert!(PlanarTree::parse("a(b").is_err());
        let t = PlanarTree::parse("a(z:b(x:c,y:d),u:e)").unwrap();
        assert_eq!(PlanarTree::parse(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn catalan_many_trees() {
        let counts: Vec<usize> = (0..=5).map(|k| planar_trees(k).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 14, 42]);
        assert!(planar_trees(4).iter().all(|t| t.edge_count() == 4));
    }
}
