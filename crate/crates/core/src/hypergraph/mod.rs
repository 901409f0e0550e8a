//! Ordered atomic hypergraphs and the restriction operations used by every
//! other module: connectivity, decomposition, plain and reconnected
//! restriction, saturation and the "disconnects" predicate.
//!
//! Vertices are the integers `1..=n`; their natural order is the total order
//! of the hypergraph. External labels are kept only for display and parsing.

mod format;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

pub use format::HypergraphSpec;

/// Default bound on the number of vertices for anything that enumerates
/// subsets of the vertex set.
pub const DEFAULT_CAP: usize = 16;

/// A finite, totally ordered, atomic hypergraph on the vertices `1..=n`.
///
/// Equality and hashing only look at the vertex count and the hyperedge
/// family; labels and the capacity cap are presentation data.
#[derive(Clone)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
    labels: Vec<String>,
    cap: usize,
    saturation: OnceLock<Vec<VertexSet>>,
}

/// Result of removing a vertex set `X`: the connected components of the
/// plain restriction to the complement, by increasing maximal vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub removed: VertexSet,
    pub components: Vec<VertexSet>,
}

/// A hypergraph obtained from another one on a subset of its vertices,
/// relabelled order-preservingly onto `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub hypergraph: Hypergraph,
    /// `vertex_map[i]` is the original id of new vertex `i + 1`.
    pub vertex_map: Vec<usize>,
}

impl Restriction {
    /// Original vertex set the restriction lives on.
    pub fn support(&self) -> VertexSet {
        self.vertex_map.iter().copied().collect()
    }

    pub fn to_original(&self, set: VertexSet) -> VertexSet {
        set.map(|v| self.vertex_map[v - 1])
    }

    /// Panics if `set` is not contained in [`Restriction::support`].
    pub fn from_original(&self, set: VertexSet) -> VertexSet {
        set.map(|v| {
            self.vertex_map
                .iter()
                .position(|&w| w == v)
                .map(|i| i + 1)
                .expect("vertex outside the restriction")
        })
    }
}

impl Hypergraph {
    /// Builds a hypergraph on `1..=n`. Duplicate hyperedges are merged; a
    /// missing singleton is an error.
    pub fn new(n: usize, edges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("a hypergraph needs at least one vertex"));
        }
        if n > MAX_VERTICES {
            return Err(Error::Capacity { needed: n, cap: MAX_VERTICES });
        }
        let full = VertexSet::full(n);
        let mut list = Vec::new();
        for e in edges {
            if e.is_empty() {
                return Err(Error::domain("empty hyperedge"));
            }
            if !e.is_subset(full) {
                return Err(Error::domain(format!("hyperedge {e} is not a subset of 1..={n}")));
            }
            list.push(e);
        }
        list.sort();
        list.dedup();
        for v in 1..=n {
            if list.binary_search(&VertexSet::singleton(v)).is_err() {
                return Err(Error::NotAtomic(v.to_string()));
            }
        }
        Ok(Hypergraph {
            n,
            edges: list,
            labels: (1..=n).map(|v| v.to_string()).collect(),
            cap: DEFAULT_CAP,
            saturation: OnceLock::new(),
        })
    }

    /// Like [`Hypergraph::new`] but inserts every missing singleton first.
    pub fn atomized(n: usize, edges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let mut all: Vec<VertexSet> = edges.into_iter().collect();
        all.extend((1..=n.min(MAX_VERTICES)).map(VertexSet::singleton));
        Hypergraph::new(n, all)
    }

    /// Convenience constructor from vertex lists; singletons are added.
    pub fn from_lists(n: usize, edges: &[&[usize]]) -> Result<Self> {
        Hypergraph::atomized(n, edges.iter().map(|e| e.iter().copied().collect()))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::domain(format!("expected {} labels, got {}", self.n, labels.len())));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || labels[..i].contains(l) {
                return Err(Error::domain(format!("invalid or duplicate vertex label {l:?}")));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Hyperedges in canonical (lexicographic) order.
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v - 1]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label).map(|i| i + 1)
    }

    /// Renders a vertex set with labels, e.g. `{x,z}`.
    pub fn format_set(&self, set: VertexSet) -> String {
        let inner: Vec<&str> = set.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", inner.join(","))
    }

    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() <= 2)
    }

    pub(crate) fn check_cap(&self) -> Result<()> {
        if self.n > self.cap {
            Err(Error::Capacity { needed: self.n, cap: self.cap })
        } else {
            Ok(())
        }
    }

    fn check_subset(&self, x: VertexSet, what: &str) -> Result<()> {
        if !x.is_subset(self.vertices()) {
            return Err(Error::domain(format!("{what} {x} is not a subset of 1..={}", self.n)));
        }
        Ok(())
    }

    fn check_nonempty(&self, x: VertexSet, what: &str) -> Result<()> {
        if x.is_empty() {
            return Err(Error::domain(format!("{what} must be non-empty")));
        }
        self.check_subset(x, what)
    }

    /// Connected components of the plain restriction to `ground`, ordered
    /// by increasing maximal vertex. Hyperedges inside `ground` are merged
    /// transitively; there is no graph traversal, so any arity works.
    pub fn components_of(&self, ground: VertexSet) -> Vec<VertexSet> {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for &e in &self.edges {
            if e.len() < 2 || !e.is_subset(ground) {
                continue;
            }
            let mut it = e.iter();
            let first = find(&mut parent, it.next().unwrap());
            for v in it {
                let r = find(&mut parent, v);
                if r != first {
                    parent[r] = first;
                }
            }
        }
        let mut comps: Vec<VertexSet> = Vec::new();
        let mut roots: Vec<usize> = Vec::new();
        for v in ground.iter() {
            let r = find(&mut parent, v);
            match roots.iter().position(|&x| x == r) {
                Some(i) => comps[i].insert(v),
                None => {
                    roots.push(r);
                    comps.push(VertexSet::singleton(v));
                }
            }
        }
        comps.sort_by_key(|c| c.max_vertex());
        comps
    }

    /// Whether the plain restriction to `x` is connected.
    pub fn is_connected_set(&self, x: VertexSet) -> Result<bool> {
        self.check_nonempty(x, "vertex set")?;
        Ok(self.components_of(x).len() == 1)
    }

    pub fn is_connected(&self) -> bool {
        self.components_of(self.vertices()).len() == 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Components of the plain restriction to the complement of `x`.
    pub fn decompose(&self, x: VertexSet) -> Result<Decomposition> {
        self.check_subset(x, "removed set")?;
        Ok(Decomposition { removed: x, components: self.components_of(self.vertices() - x) })
    }

    /// The hyperedges contained in `x`, relabelled onto `1..=|x|`.
    pub fn restrict_plain(&self, x: VertexSet) -> Result<Restriction> {
        self.check_nonempty(x, "restriction set")?;
        let edges = self.edges.iter().filter(|e| e.is_subset(x)).copied();
        self.relabelled(x, edges)
    }

    /// All non-empty connected vertex subsets, in lexicographic order.
    /// Computed once per value and cached.
    pub fn saturation(&self) -> Result<&[VertexSet]> {
        if let Some(s) = self.saturation.get() {
            return Ok(s);
        }
        self.check_cap()?;
        let mut sat: Vec<VertexSet> = self
            .vertices()
            .nonempty_subsets()
            .filter(|&x| self.components_of(x).len() == 1)
            .collect();
        sat.sort();
        Ok(self.saturation.get_or_init(|| sat))
    }

    /// The saturated hypergraph on the same vertices (a building set).
    pub fn saturate(&self) -> Result<Hypergraph> {
        let sat = self.saturation()?.to_vec();
        let mut h = Hypergraph::new(self.n, sat)?;
        h.labels = self.labels.clone();
        h.cap = self.cap;
        Ok(h)
    }

    /// Traces on `x` of the saturated hyperedges meeting `x`.
    pub fn reconnected_restrict(&self, x: VertexSet) -> Result<Restriction> {
        self.reconnected_restrict_within(self.vertices(), x)
    }

    /// Reconnected restriction of the plain restriction to `ground`, computed
    /// without relabelling twice: the traces on `x` of connected sets inside
    /// `ground`.
    pub fn reconnected_restrict_within(&self, ground: VertexSet, x: VertexSet) -> Result<Restriction> {
        self.check_nonempty(x, "restriction set")?;
        self.check_subset(ground, "ground set")?;
        if !x.is_subset(ground) {
            return Err(Error::domain(format!("{x} is not a subset of {ground}")));
        }
        let traces: Vec<VertexSet> = self
            .saturation()?
            .iter()
            .filter(|z| z.is_subset(ground) && z.intersects(x))
            .map(|&z| z & x)
            .collect();
        self.relabelled(x, traces.into_iter())
    }

    fn relabelled(&self, x: VertexSet, edges: impl Iterator<Item = VertexSet>) -> Result<Restriction> {
        let vertex_map = x.to_vec();
        let rank = |v: usize| vertex_map.iter().position(|&w| w == v).unwrap() + 1;
        let new_edges: Vec<VertexSet> = edges.map(|e| e.map(rank)).collect();
        let mut h = Hypergraph::new(vertex_map.len(), new_edges)?;
        h.labels = vertex_map.iter().map(|&v| self.labels[v - 1].clone()).collect();
        h.cap = self.cap;
        Ok(Restriction { hypergraph: h, vertex_map })
    }

    /// Whether removing `x` from the plain restriction to `ground` puts `y`
    /// and `z` in different components.
    pub(crate) fn disconnects_within(&self, ground: VertexSet, x: usize, y: usize, z: usize) -> bool {
        let comps = self.components_of(ground - VertexSet::singleton(x));
        let cy = comps.iter().position(|c| c.contains(y));
        let cz = comps.iter().position(|c| c.contains(z));
        cy != cz
    }

    /// Whether `x` disconnects `y` and `z`.
    pub fn disconnects(&self, x: usize, y: usize, z: usize) -> Result<bool> {
        for v in [x, y, z] {
            if v == 0 || v > self.n {
                return Err(Error::domain(format!("vertex {v} out of range")));
            }
        }
        if x == y || y == z || x == z {
            return Err(Error::domain("disconnects needs three distinct vertices"));
        }
        self.require_connected()?;
        Ok(self.disconnects_within(self.vertices(), x, y, z))
    }

    /// The same hypergraph with the total order reversed (`v -> n + 1 - v`).
    pub fn reversed(&self) -> Hypergraph {
        let n = self.n;
        let mut h = Hypergraph::new(n, self.edges.iter().map(|e| e.map(|v| n + 1 - v)))
            .expect("reversal preserves validity");
        h.labels = self.labels.iter().rev().cloned().collect();
        h.cap = self.cap;
        h
    }
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl Hash for Hypergraph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph({self})")
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&self.format_set(*e))?;
        }
        f.write_str("}")
    }
}
