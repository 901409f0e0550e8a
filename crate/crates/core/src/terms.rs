//! Many-sorted terms over the hypergraph signatures and their bijections
//! with constructs.
//!
//! Sorts and variables are the connected subsets of the hypergraph; a
//! variable is identified with its sort. A function symbol `(X, Y)` has
//! output sort `Y` and one input per component of `Y \ X`, in component
//! order. The construction signature only allows singleton heads `X`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::construct::{faces_below, graft, Construct, Node};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Restriction};
use crate::vertex_set::VertexSet;

/// A function symbol `(head, sort)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Symbol {
    pub head: VertexSet,
    pub sort: VertexSet,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.head, self.sort)
    }
}

/// A term, possibly with variables and holes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Term {
    Var(VertexSet),
    App { symbol: Symbol, args: Vec<Term> },
    Hole { label: u8, sort: VertexSet },
}

impl Term {
    pub fn app(head: VertexSet, sort: VertexSet, args: Vec<Term>) -> Term {
        Term::App { symbol: Symbol { head, sort }, args }
    }

    /// The declared output sort, without checking the arguments.
    pub fn outsort(&self) -> VertexSet {
        match self {
            Term::Var(s) | Term::Hole { sort: s, .. } => *s,
            Term::App { symbol, .. } => symbol.sort,
        }
    }

    /// Variables in left-to-right order, with repetitions.
    pub fn vars(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.walk(&mut |t| {
            if let Term::Var(s) = t {
                out.push(*s);
            }
        });
        out
    }

    pub fn var_union(&self) -> VertexSet {
        self.vars().into_iter().fold(VertexSet::EMPTY, |a, b| a | b)
    }

    pub fn is_closed(&self) -> bool {
        self.vars().is_empty()
    }

    /// Every variable occurs at most once.
    pub fn is_linear(&self) -> bool {
        let mut vs = self.vars();
        let n = vs.len();
        vs.sort();
        vs.dedup();
        vs.len() == n
    }

    /// Hole labels in left-to-right order.
    pub fn holes(&self) -> Vec<(u8, VertexSet)> {
        let mut out = Vec::new();
        self.walk(&mut |t| {
            if let Term::Hole { label, sort } = t {
                out.push((*label, *sort));
            }
        });
        out
    }

    fn walk<'a>(&'a self, f: &mut impl FnMut(&'a Term)) {
        f(self);
        if let Term::App { args, .. } = self {
            for a in args {
                a.walk(f);
            }
        }
    }

    /// Replaces each variable `Y` by the constant `(Y, Y)`.
    pub fn close(&self) -> Term {
        match self {
            Term::Var(s) => Term::app(*s, *s, Vec::new()),
            Term::App { symbol, args } => Term::App { symbol: *symbol, args: args.iter().map(Term::close).collect() },
            hole => hole.clone(),
        }
    }

    fn fill_holes(&self, fill: &impl Fn(u8) -> Option<Term>) -> Term {
        match self {
            Term::Hole { label, .. } => fill(*label).unwrap_or_else(|| self.clone()),
            Term::App { symbol, args } => {
                Term::App { symbol: *symbol, args: args.iter().map(|a| a.fill_holes(fill)).collect() }
            }
            var => var.clone(),
        }
    }

    /// Parses `(X,Y)(t1,...,tn)`, `{...}` for a variable and `?{...}` or
    /// `?2{...}` for a hole. Sets are written with vertex ids.
    pub fn parse(text: &str) -> Result<Term> {
        let mut p = TermParser { s: text.as_bytes(), pos: 0 };
        let t = p.term()?;
        p.ws();
        if p.pos != p.s.len() {
            return Err(Error::Parse(format!("trailing input at offset {} in {text:?}", p.pos)));
        }
        Ok(t)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(s) => write!(f, "{s}"),
            Term::Hole { label: 1, sort } => write!(f, "?{sort}"),
            Term::Hole { label, sort } => write!(f, "?{label}{sort}"),
            Term::App { symbol, args } => {
                write!(f, "{symbol}")?;
                if !args.is_empty() {
                    f.write_str("(")?;
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            f.write_str(",")?;
                        }
                        write!(f, "{a}")?;
                    }
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

struct TermParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl TermParser<'_> {
    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::Parse(format!("expected '{}' at offset {}", c as char, self.pos)))
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse(format!("expected a number at offset {start}")))
    }

    fn set(&mut self) -> Result<VertexSet> {
        self.expect(b'{')?;
        let mut set = VertexSet::EMPTY;
        if self.eat(b'}') {
            return Ok(set);
        }
        loop {
            let v = self.number()?;
            if v == 0 || v > crate::vertex_set::MAX_VERTICES {
                return Err(Error::Parse(format!("vertex id {v} out of range")));
            }
            set.insert(v);
            if self.eat(b'}') {
                return Ok(set);
            }
            self.expect(b',')?;
        }
    }

    fn term(&mut self) -> Result<Term> {
        self.ws();
        match self.s.get(self.pos) {
            Some(b'{') => Ok(Term::Var(self.set()?)),
            Some(b'?') => {
                self.pos += 1;
                self.ws();
                let label = if self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    u8::try_from(self.number()?).map_err(|_| Error::Parse("hole label too large".into()))?
                } else {
                    1
                };
                Ok(Term::Hole { label, sort: self.set()? })
            }
            Some(b'(') => {
                self.pos += 1;
                let head = self.set()?;
                self.expect(b',')?;
                let sort = self.set()?;
                self.expect(b')')?;
                let mut args = Vec::new();
                if self.eat(b'(') {
                    loop {
                        args.push(self.term()?);
                        if self.eat(b')') {
                            break;
                        }
                        self.expect(b',')?;
                    }
                }
                Ok(Term::app(head, sort, args))
            }
            _ => Err(Error::Parse(format!("expected a term at offset {}", self.pos))),
        }
    }
}

/// Which of the two hypergraph signatures is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignatureKind {
    /// Symbols `(X, Y)` for every non-empty `X ⊆ Y`.
    Constructs,
    /// Symbols `(x, Y)` with a single vertex `x ∈ Y`.
    Constructions,
}

/// The signature generated by a connected hypergraph.
#[derive(Clone, Copy, Debug)]
pub struct Signature<'h> {
    h: &'h Hypergraph,
    kind: SignatureKind,
}

/// Signature whose closed terms of the top sort are the constructs.
pub fn signature_constructs(h: &Hypergraph) -> Result<Signature<'_>> {
    h.require_connected()?;
    Ok(Signature { h, kind: SignatureKind::Constructs })
}

/// Signature whose closed terms of the top sort are the constructions.
pub fn signature_constructions(h: &Hypergraph) -> Result<Signature<'_>> {
    h.require_connected()?;
    Ok(Signature { h, kind: SignatureKind::Constructions })
}

impl<'h> Signature<'h> {
    pub fn hypergraph(&self) -> &'h Hypergraph {
        self.h
    }

    pub fn kind(&self) -> SignatureKind {
        self.kind
    }

    pub fn is_sort(&self, s: VertexSet) -> bool {
        !s.is_empty() && s.is_subset(self.h.vertices()) && self.h.components_of(s).len() == 1
    }

    /// All sorts (equivalently, variables).
    pub fn sorts(&self) -> Result<Vec<VertexSet>> {
        Ok(self.h.saturation()?.to_vec())
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        let head_ok = match self.kind {
            SignatureKind::Constructs => !sym.head.is_empty(),
            SignatureKind::Constructions => sym.head.len() == 1,
        };
        head_ok && sym.head.is_subset(sym.sort) && self.is_sort(sym.sort)
    }

    /// Input sorts: the components of `sort \ head`, by increasing maximum.
    pub fn insorts(&self, sym: Symbol) -> Result<Vec<VertexSet>> {
        if !self.contains(sym) {
            return Err(Error::term(format!("{sym} is not a symbol of this signature")));
        }
        Ok(self.h.components_of(sym.sort - sym.head))
    }

    pub fn arity(&self, sym: Symbol) -> Result<usize> {
        Ok(self.insorts(sym)?.len())
    }

    /// Every symbol, ordered by output sort and then head.
    pub fn symbols(&self) -> Result<Vec<Symbol>> {
        let mut out = Vec::new();
        for &sort in self.h.saturation()? {
            let heads: Vec<VertexSet> = match self.kind {
                SignatureKind::Constructs => sort.nonempty_subsets().collect(),
                SignatureKind::Constructions => sort.iter().map(VertexSet::singleton).collect(),
            };
            out.extend(heads.into_iter().map(|head| Symbol { head, sort }));
        }
        out.sort_by_key(|s| (s.sort, s.head));
        Ok(out)
    }

    /// Type-checks `t` and returns its sort.
    pub fn sort_of(&self, t: &Term) -> Result<VertexSet> {
        match t {
            Term::Var(s) | Term::Hole { sort: s, .. } => {
                if self.is_sort(*s) {
                    Ok(*s)
                } else {
                    Err(Error::term(format!("{s} is not a sort")))
                }
            }
            Term::App { symbol, args } => {
                let ins = self.insorts(*symbol)?;
                if ins.len() != args.len() {
                    return Err(Error::term(format!(
                        "{symbol} expects {} arguments, got {}",
                        ins.len(),
                        args.len()
                    )));
                }
                for (i, (want, a)) in ins.iter().zip(args).enumerate() {
                    let got = self.sort_of(a)?;
                    if got != *want {
                        return Err(Error::term(format!("argument {} of {symbol} has sort {got}, expected {want}", i + 1)));
                    }
                }
                Ok(symbol.sort)
            }
        }
    }
}

/// A sort-preserving map from variables to terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Substitution(BTreeMap<VertexSet, Term>);

impl Substitution {
    pub fn new(sig: &Signature<'_>, map: BTreeMap<VertexSet, Term>) -> Result<Substitution> {
        for (v, t) in &map {
            let s = sig.sort_of(t)?;
            if s != *v {
                return Err(Error::term(format!("substitution sends {v} to a term of sort {s}")));
            }
        }
        Ok(Substitution(map))
    }

    pub fn get(&self, var: VertexSet) -> Option<&Term> {
        self.0.get(&var)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VertexSet, &Term)> {
        self.0.iter()
    }

    pub fn apply(&self, t: &Term) -> Term {
        match t {
            Term::Var(s) => self.0.get(s).cloned().unwrap_or_else(|| t.clone()),
            Term::App { symbol, args } => Term::App { symbol: *symbol, args: args.iter().map(|a| self.apply(a)).collect() },
            hole => hole.clone(),
        }
    }
}

/// A term with exactly one hole.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Context(Term);

impl Context {
    pub fn new(t: Term) -> Result<Context> {
        match t.holes().as_slice() {
            [_] => Ok(Context(t)),
            hs => Err(Error::term(format!("a context needs exactly one hole, found {}", hs.len()))),
        }
    }

    /// The context consisting of a bare hole.
    pub fn trivial(sort: VertexSet) -> Context {
        Context(Term::Hole { label: 1, sort })
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self.0, Term::Hole { .. })
    }

    pub fn hole_sort(&self) -> VertexSet {
        self.0.holes()[0].1
    }

    pub fn term(&self) -> &Term {
        &self.0
    }

    pub fn fill(&self, t: &Term) -> Term {
        self.0.fill_holes(&|_| Some(t.clone()))
    }
}

/// A term with two holes labelled 1 and 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoHoleContext(Term);

impl TwoHoleContext {
    pub fn new(t: Term) -> Result<TwoHoleContext> {
        let mut labels: Vec<u8> = t.holes().iter().map(|h| h.0).collect();
        labels.sort_unstable();
        if labels != [1, 2] {
            return Err(Error::term("a two-hole context needs holes labelled 1 and 2"));
        }
        Ok(TwoHoleContext(t))
    }

    pub fn term(&self) -> &Term {
        &self.0
    }

    pub fn fill(&self, first: &Term, second: &Term) -> Term {
        self.0.fill_holes(&|l| Some(if l == 1 { first.clone() } else { second.clone() }))
    }
}

fn node_to_term(node: &Node) -> Term {
    Term::app(node.label(), node.support(), node.children().iter().map(node_to_term).collect())
}

fn term_to_node(t: &Term) -> Option<Node> {
    match t {
        Term::App { symbol, args } => {
            Some(Node::new(symbol.head, args.iter().filter_map(term_to_node).collect()))
        }
        _ => None,
    }
}

/// Projects a closed term of the top sort onto the construct it denotes.
pub fn chi_closed(sig: &Signature<'_>, t: &Term) -> Result<Construct> {
    let sort = sig.sort_of(t)?;
    if sort != sig.h.vertices() {
        return Err(Error::term(format!("term has sort {sort}, expected the full vertex set")));
    }
    if !t.is_closed() || !t.holes().is_empty() {
        return Err(Error::term("term is not closed"));
    }
    Ok(Construct::from_root_unchecked(term_to_node(t).expect("closed application")))
}

/// Annotates each node of a construct with its support.
pub fn chi_closed_inverse(c: &Construct) -> Term {
    node_to_term(c.root())
}

/// Image of an open term under pruning: a construct of the reconnected
/// restriction of `H_K` to `X`, where `K` is the term's sort and `X` is
/// what its variables leave uncovered.
#[derive(Clone, Debug)]
pub struct OpenImage {
    pub sort: VertexSet,
    pub x: VertexSet,
    pub shape: Restriction,
    /// Expressed in the vertex ids of `shape.hypergraph`.
    pub construct: Construct,
}

/// Projects every symbol onto its head and prunes the variables.
pub fn chi_open(sig: &Signature<'_>, t: &Term) -> Result<OpenImage> {
    let h = sig.h;
    let sort = sig.sort_of(t)?;
    if !t.holes().is_empty() {
        return Err(Error::term("term has holes"));
    }
    if !t.is_linear() {
        return Err(Error::term("term is not linear"));
    }
    let covered = t.var_union();
    let x = sort - covered;
    if x.is_empty() {
        return Err(Error::term("variables cover the whole sort"));
    }
    let shape = h.reconnected_restrict_within(sort, x)?;
    let root = term_to_node(t).ok_or_else(|| Error::term("a variable has no construct"))?;
    let local = root.map_vertices(&mut |v| shape.vertex_map.iter().position(|&w| w == v).unwrap() + 1);
    let construct = Construct::validate(&shape.hypergraph, &local)
        .map_err(|e| Error::internal(format!("pruned term is not a construct: {e}")))?;
    Ok(OpenImage { sort, x, shape, construct })
}

/// Rebuilds the open term of sort `sort` whose pruning is `c`, a construct
/// of the reconnected restriction of `H_sort` to `x` (in local ids).
pub fn chi_open_inverse(h: &Hypergraph, sort: VertexSet, x: VertexSet, c: &Construct) -> Result<Term> {
    let shape = h.reconnected_restrict_within(sort, x)?;
    if c.support() != shape.hypergraph.vertices() {
        return Err(Error::term("construct does not live on the reconnected restriction"));
    }
    let root = c.root().map_vertices(&mut |v| shape.vertex_map[v - 1]);
    open_term(h, sort, x, &root)
}

fn open_term(h: &Hypergraph, ground: VertexSet, x: VertexSet, node: &Node) -> Result<Term> {
    let mut args = Vec::new();
    for comp in h.components_of(ground - node.label()) {
        if !comp.intersects(x) {
            args.push(Term::Var(comp));
            continue;
        }
        let mut inside = node.children().iter().filter(|c| c.support().is_subset(comp));
        match (inside.next(), inside.next()) {
            (Some(child), None) if child.support() == comp & x => args.push(open_term(h, comp, x, child)?),
            _ => return Err(Error::term(format!("component {comp} does not match the construct"))),
        }
    }
    Ok(Term::app(node.label(), ground, args))
}

/// A face of a construct whose only non-singleton node is `x`.
#[derive(Clone, Debug)]
pub struct XFace {
    pub face: Construct,
    pub x: VertexSet,
    /// Support of the subtree rooted at `x`.
    pub support: VertexSet,
    /// The reconnected restriction of `H_support` to `x`.
    pub shape: Restriction,
}

impl XFace {
    pub fn new(h: &Hypergraph, face: &Construct) -> Result<XFace> {
        let big: Vec<VertexSet> = face.nodes().iter().map(|n| n.label()).filter(|l| l.len() > 1).collect();
        let [x] = big.as_slice() else {
            return Err(Error::domain(format!("{face} does not have exactly one non-singleton node")));
        };
        let support = face.subtree(*x).expect("node exists").support();
        let shape = h.reconnected_restrict_within(support, *x)?;
        Ok(XFace { face: face.clone(), x: *x, support, shape })
    }

    /// Whether this is a 2-dimensional face (`|x| = 3`).
    pub fn is_two_face(&self) -> bool {
        self.x.len() == 3
    }

    fn to_local(&self, v: usize) -> usize {
        self.shape.vertex_map.iter().position(|&w| w == v).unwrap() + 1
    }

    /// Prunes the nodes of `s` not contained in `x`.
    pub fn psi(&self, s: &Construct) -> Result<Construct> {
        fn prune(node: &Node, x: VertexSet) -> Vec<Node> {
            let below: Vec<Node> = node.children().iter().flat_map(|c| prune(c, x)).collect();
            if node.label().is_subset(x) {
                vec![Node::new(node.label(), below)]
            } else {
                below
            }
        }
        let mut top = prune(s.root(), self.x);
        if top.len() != 1 || top[0].support() != self.x {
            return Err(Error::domain(format!("{s} is not a face of {}", self.face)));
        }
        let local = top.pop().unwrap().map_vertices(&mut |v| self.to_local(v));
        Construct::validate(&self.shape.hypergraph, &local)
    }

    /// Grafts the subtrees hanging below `x` back onto a face of the shape.
    pub fn phi(&self, h: &Hypergraph, c: &Construct) -> Result<Construct> {
        let skeleton = c.root().map_vertices(&mut |v| self.shape.vertex_map[v - 1]);
        let mut pool = self.face.subtree(self.x).expect("node exists").children().to_vec();
        let sub = graft(h, self.support, &skeleton, &mut pool)?;
        if !pool.is_empty() {
            return Err(Error::internal("unused subtrees after grafting"));
        }
        Ok(self.face.replace_subtree(self.x, &sub))
    }

    /// All faces of this face.
    pub fn subfaces(&self, h: &Hypergraph) -> Vec<Construct> {
        faces_below(h, &self.face)
    }
}

/// The instantiation-in-context data of an X-face: the term of the face is
/// `context[(x, support)(t_1, ..., t_n)]` and `subst` sends the i-th input
/// sort `U_i` of that symbol to `t_i`.
#[derive(Clone, Debug)]
pub struct Instantiation {
    pub context: Context,
    pub subst: Substitution,
    pub symbol: Symbol,
}

impl Instantiation {
    /// `context[subst(t)]`.
    pub fn xi(&self, t: &Term) -> Term {
        self.context.fill(&self.subst.apply(t))
    }
}

pub fn xi_decompose(sig: &Signature<'_>, xf: &XFace) -> Result<Instantiation> {
    fn split(t: &Term, x: VertexSet, found: &mut Option<(Symbol, Vec<Term>)>) -> Term {
        match t {
            Term::App { symbol, args } if symbol.head == x => {
                *found = Some((*symbol, args.clone()));
                Term::Hole { label: 1, sort: symbol.sort }
            }
            Term::App { symbol, args } => {
                Term::App { symbol: *symbol, args: args.iter().map(|a| split(a, x, found)).collect() }
            }
            other => other.clone(),
        }
    }
    let whole = chi_closed_inverse(&xf.face);
    let mut found = None;
    let ctx = split(&whole, xf.x, &mut found);
    let (symbol, args) = found.ok_or_else(|| Error::internal("X node missing from its own term"))?;
    let map = sig.insorts(symbol)?.into_iter().zip(args).collect();
    Ok(Instantiation { context: Context::new(ctx)?, subst: Substitution::new(sig, map)?, symbol })
}
