//! Peaks of the flip relation, their joins, and the 2-faces they span.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use super::{normal_form, FlipGraph, FlipOrientation, RewriteStep};
use crate::construct::{enumerate_constructs, faces_below, Construct};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// The four connected hypergraphs on three ordered vertices, up to
/// relabelling, named by their face polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BShape {
    /// Triangle: every vertex separates the other two.
    B1,
    /// Square: two vertices separate the others.
    B2,
    /// Pentagon: one vertex separates the others.
    B3,
    /// Hexagon: no vertex separates the others.
    B4,
}

impl BShape {
    fn from_separators(n: usize) -> BShape {
        match n {
            3 => BShape::B1,
            2 => BShape::B2,
            1 => BShape::B3,
            _ => BShape::B4,
        }
    }

    pub fn polygon(self) -> &'static str {
        match self {
            BShape::B1 => "2-simplex",
            BShape::B2 => "2-cube",
            BShape::B3 => "2-associahedron",
            BShape::B4 => "2-permutahedron",
        }
    }

    /// Number of vertices of the polygon.
    pub fn corners(self) -> usize {
        match self {
            BShape::B1 => 3,
            BShape::B2 => 4,
            BShape::B3 => 5,
            BShape::B4 => 6,
        }
    }
}

impl fmt::Display for BShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Tag of a connected hypergraph on three vertices.
pub fn shape_tag(shape: &Hypergraph) -> Result<BShape> {
    if shape.n() != 3 {
        return Err(Error::domain(format!("a shape has three vertices, got {}", shape.n())));
    }
    let mut n = 0;
    for (a, b, c) in [(1, 2, 3), (2, 1, 3), (3, 1, 2)] {
        if shape.disconnects(a, b, c)? {
            n += 1;
        }
    }
    Ok(BShape::from_separators(n))
}

/// Type of a 2-dimensional construct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoFaceClass {
    /// Two doubleton nodes: a square.
    A,
    /// One tripleton node `x` whose subtree has support `support`.
    B { x: VertexSet, support: VertexSet, shape: Hypergraph, tag: BShape },
}

impl TwoFaceClass {
    pub fn name(&self) -> String {
        match self {
            TwoFaceClass::A => "A".into(),
            TwoFaceClass::B { tag, .. } => tag.to_string(),
        }
    }

    pub fn corners(&self) -> usize {
        match self {
            TwoFaceClass::A => 4,
            TwoFaceClass::B { tag, .. } => tag.corners(),
        }
    }
}

/// Splits 2-faces into type A and the four B shapes. For type B, the tag
/// counts the elements of `x` that separate the other two inside the
/// node's support, and is checked against the reconnected restriction.
pub fn classify_two_face(h: &Hypergraph, t: &Construct) -> Result<TwoFaceClass> {
    if t.dimension() != 2 {
        return Err(Error::domain(format!("{t} has dimension {}, not 2", t.dimension())));
    }
    let big: Vec<VertexSet> = t.nodes().iter().map(|n| n.label()).filter(|l| l.len() > 1).collect();
    if big.len() == 2 {
        return Ok(TwoFaceClass::A);
    }
    let x = big[0];
    let support = t.subtree(x).expect("node exists").support();
    let v = x.to_vec();
    let mut separators = 0;
    for i in 0..3 {
        let (a, b, c) = (v[i], v[(i + 1) % 3], v[(i + 2) % 3]);
        if h.disconnects_within(support, a, b, c) {
            separators += 1;
        }
    }
    let tag = BShape::from_separators(separators);
    let shape = h.reconnected_restrict_within(support, x)?.hypergraph;
    if shape_tag(&shape)? != tag {
        return Err(Error::internal(format!("separator count disagrees with the shape of {t}")));
    }
    Ok(TwoFaceClass::B { x, support, shape, tag })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiagramClass {
    /// Disjoint redexes at independent positions.
    A1,
    /// Disjoint redexes, one below the other.
    A2,
    /// Same parent: `x(y(..), v(..), ..)`.
    BSibling,
    /// A chain: `x(y(v(..), ..), ..)`.
    BChain,
}

impl DiagramClass {
    pub fn name(self) -> &'static str {
        match self {
            DiagramClass::A1 => "a1",
            DiagramClass::A2 => "a2",
            DiagramClass::BSibling => "b-sibling",
            DiagramClass::BChain => "b-chain",
        }
    }

    pub fn is_b(self) -> bool {
        matches!(self, DiagramClass::BSibling | DiagramClass::BChain)
    }
}

/// A peak with two distinct steps and how it closes.
#[derive(Clone, Debug)]
pub struct LocalDiagram {
    pub peak: Construct,
    pub steps: [RewriteStep; 2],
    /// Reductions from each target to the common normal form.
    pub paths: [Vec<Construct>; 2],
    pub joined: bool,
    pub join: Construct,
    pub class: DiagramClass,
    /// The 2-face spanned by the two steps.
    pub face: Construct,
    pub face_class: TwoFaceClass,
    /// Number of constructions of `face`.
    pub corners: usize,
}

fn contract_vertices(c: &Construct, a: usize, b: usize) -> Result<Construct> {
    let parent = c.node_containing(a).ok_or_else(|| Error::internal("vertex missing"))?;
    let child = parent
        .children()
        .iter()
        .find(|n| n.label().contains(b))
        .ok_or_else(|| Error::internal("steps do not span a face"))?;
    c.contract(parent.label(), child.label())
}

fn classify_peak(s: &Construct, a: &RewriteStep, b: &RewriteStep) -> Result<DiagramClass> {
    let (x, y, u, v) = (a.parent, a.child, b.parent, b.child);
    if x == u {
        return Ok(DiagramClass::BSibling);
    }
    if y == u || x == v {
        return Ok(DiagramClass::BChain);
    }
    if y == v {
        return Err(Error::internal("a node with two parents"));
    }
    let below = |top: usize, other: usize| {
        s.subtree(VertexSet::singleton(top)).is_some_and(|n| n.support().contains(other))
    };
    Ok(if below(x, u) || below(u, x) { DiagramClass::A2 } else { DiagramClass::A1 })
}

fn path_of(nf: (Construct, Vec<RewriteStep>), start: &Construct) -> Vec<Construct> {
    let mut path = vec![start.clone()];
    path.extend(nf.1.into_iter().map(|s| s.target));
    path
}

/// One diagram per unordered pair of steps out of each construction.
pub fn peaks_and_joins(h: &Hypergraph, o: FlipOrientation) -> Result<Vec<LocalDiagram>> {
    let graph = FlipGraph::build(h, o)?;
    peaks_in(h, &graph)
}

fn peaks_in(h: &Hypergraph, graph: &FlipGraph) -> Result<Vec<LocalDiagram>> {
    let o = graph.orientation;
    let mut out = Vec::new();
    let mut by_source: Vec<Vec<&RewriteStep>> = vec![Vec::new(); graph.constructions().len()];
    for (step, &(i, _)) in graph.steps().iter().zip(graph.edges()) {
        by_source[i].push(step);
    }
    for (i, steps) in by_source.iter().enumerate() {
        let peak = &graph.constructions()[i];
        for p in 0..steps.len() {
            for q in p + 1..steps.len() {
                let (a, b) = (steps[p], steps[q]);
                let na = normal_form(h, &a.target, o)?;
                let nb = normal_form(h, &b.target, o)?;
                let joined = na.0 == nb.0;
                let ia = graph.index_of(&a.target).expect("known");
                let ib = graph.index_of(&b.target).expect("known");
                if joined != graph.joinable(ia, ib) {
                    return Err(Error::internal("normal-form join disagrees with search"));
                }
                let join = na.0.clone();
                let face = contract_vertices(&contract_vertices(peak, a.parent, a.child)?, b.parent, b.child)?;
                let face_class = classify_two_face(h, &face)?;
                let corners = faces_below(h, &face).iter().filter(|c| c.is_construction()).count();
                out.push(LocalDiagram {
                    peak: peak.clone(),
                    steps: [a.clone(), b.clone()],
                    paths: [path_of(na, &a.target), path_of(nb, &b.target)],
                    joined,
                    join,
                    class: classify_peak(peak, a, b)?,
                    face,
                    face_class,
                    corners,
                });
            }
        }
    }
    Ok(out)
}

/// One `(Y, X)` pair and the hypergraph `(H_Y)_{∩X}`.
#[derive(Clone, Debug)]
pub struct ShapeEntry {
    pub y: VertexSet,
    pub x: VertexSet,
    pub shape: Hypergraph,
    pub tag: BShape,
}

#[derive(Clone, Debug)]
pub struct CriticalPairShapes {
    pub entries: Vec<ShapeEntry>,
    /// Distinct shapes, sorted by tag.
    pub distinct: Vec<(Hypergraph, BShape)>,
}

impl CriticalPairShapes {
    pub fn contains(&self, shape: &Hypergraph) -> bool {
        self.distinct.iter().any(|(s, _)| s == shape)
    }
}

/// The reconnected restrictions `(H_Y)_{∩X}` for every connected `Y` and
/// every three-element `X ⊆ Y`.
pub fn critical_pair_shapes(h: &Hypergraph) -> Result<CriticalPairShapes> {
    h.require_connected()?;
    let mut entries = Vec::new();
    for &y in h.saturation()? {
        if y.len() < 3 {
            continue;
        }
        for x in y.subsets_of_size(3) {
            let shape = h.reconnected_restrict_within(y, x)?.hypergraph;
            let tag = shape_tag(&shape)?;
            entries.push(ShapeEntry { y, x, shape, tag });
        }
    }
    let mut distinct: Vec<(Hypergraph, BShape)> = Vec::new();
    for e in &entries {
        if !distinct.iter().any(|(s, _)| *s == e.shape) {
            distinct.push((e.shape.clone(), e.tag));
        }
    }
    distinct.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.edges().cmp(b.0.edges())));
    Ok(CriticalPairShapes { entries, distinct })
}

/// Everything needed to confirm local and global confluence on one hypergraph.
#[derive(Clone, Debug)]
pub struct ConfluenceReport {
    pub orientation: FlipOrientation,
    pub diagrams: Vec<LocalDiagram>,
    pub edge_count: usize,
    pub acyclic: bool,
    pub unique_normal_forms: bool,
    pub sink: Option<Construct>,
    pub type_a_faces: usize,
    pub type_b_faces: usize,
}

impl ConfluenceReport {
    pub fn build(h: &Hypergraph, o: FlipOrientation) -> Result<ConfluenceReport> {
        let graph = FlipGraph::build(h, o)?;
        let acyclic = graph.is_acyclic();
        if !acyclic {
            return Err(Error::internal("flip digraph has a cycle"));
        }
        let diagrams = peaks_in(h, &graph)?;
        let lattice = enumerate_constructs(h)?;
        let (mut type_a_faces, mut type_b_faces) = (0, 0);
        for &i in &lattice.of_dimension(2) {
            match classify_two_face(h, lattice.get(i))? {
                TwoFaceClass::A => type_a_faces += 1,
                TwoFaceClass::B { .. } => type_b_faces += 1,
            }
        }
        Ok(ConfluenceReport {
            orientation: o,
            edge_count: graph.edges().len(),
            acyclic,
            unique_normal_forms: graph.has_unique_normal_forms(),
            sink: graph.unique_sink().map(|i| graph.constructions()[i].clone()),
            diagrams,
            type_a_faces,
            type_b_faces,
        })
    }

    pub fn count(&self, class: DiagramClass) -> usize {
        self.diagrams.iter().filter(|d| d.class == class).count()
    }

    pub fn all_joined(&self) -> bool {
        self.diagrams.iter().all(|d| d.joined)
    }

    /// Diagram counts agree with the 2-face census.
    pub fn census_matches(&self) -> bool {
        let b = self.count(DiagramClass::BSibling) + self.count(DiagramClass::BChain);
        let a = self.count(DiagramClass::A1) + self.count(DiagramClass::A2);
        a == self.type_a_faces && b == self.type_b_faces
    }

    pub fn to_json(&self, h: &Hypergraph) -> Value {
        let name = |c: &Construct| c.display(h).to_string();
        let peaks: Vec<Value> = self
            .diagrams
            .iter()
            .map(|d| {
                json!({
                    "peak": name(&d.peak),
                    "steps": d.steps.iter().map(|s| json!({
                        "parent": h.label(s.parent),
                        "child": h.label(s.child),
                        "target": name(&s.target),
                    })).collect::<Vec<_>>(),
                    "paths": d.paths.iter().map(|p| p.iter().map(name).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "join": name(&d.join),
                    "joined": d.joined,
                    "class": d.class.name(),
                    "face": name(&d.face),
                    "shape": d.face_class.name(),
                })
            })
            .collect();
        let mut classes = BTreeMap::new();
        let mut shapes = BTreeMap::new();
        for d in &self.diagrams {
            *classes.entry(d.class.name()).or_insert(0usize) += 1;
            if d.class.is_b() {
                *shapes.entry(d.face_class.name()).or_insert(0usize) += 1;
            }
        }
        json!({
            "orientation": self.orientation,
            "peaks": peaks,
            "classes": classes,
            "shapes": shapes,
            "sink": self.sink.as_ref().map(name),
            "edge_count": self.edge_count,
            "acyclic": self.acyclic,
            "unique_normal_forms": self.unique_normal_forms,
            "type_a_faces": self.type_a_faces,
            "type_b_faces": self.type_b_faces,
        })
    }
}
