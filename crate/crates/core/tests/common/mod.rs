//! Shared corpus and independent oracles for the integration suites.
//!
//! The oracles here work on plain vectors of vertex lists and do not call
//! into the library, so they can be used to check it.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use nestorw_core::families::{
    enumerate_connected, family_instances, generate, planar_trees, FamilyDescriptor, FamilyKind,
};
use nestorw_core::Hypergraph;

/// All connected atomic hypergraphs on at most four vertices.
pub fn small_hypergraphs() -> Vec<(String, Hypergraph)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for h in enumerate_connected(n).unwrap() {
            out.push((name(&h), h));
        }
    }
    out
}

/// `H4[{1,2}{2,3,4}]`: vertex count and non-singleton hyperedges.
pub fn name(h: &Hypergraph) -> String {
    let edges: Vec<String> = h.edges().iter().filter(|e| e.len() > 1).map(|e| e.to_string()).collect();
    format!("H{}[{}]", h.n(), edges.join(""))
}

/// Family instances of dimension at most four, operahedra of every planar
/// tree with at most five edges.
pub fn family_corpus() -> Vec<(String, Hypergraph)> {
    let mut out = Vec::new();
    for kind in [
        FamilyKind::Simplex,
        FamilyKind::Cube,
        FamilyKind::Associahedron,
        FamilyKind::Permutahedron,
        FamilyKind::Cyclohedron,
    ] {
        out.extend(family_instances(kind, 4).unwrap());
    }
    for k in 1..=5 {
        for tree in planar_trees(k) {
            let d = FamilyDescriptor::Operahedron { tree, order: None };
            out.push((d.name(), generate(&d).unwrap()));
        }
    }
    out
}

pub fn full_corpus() -> Vec<(String, Hypergraph)> {
    let mut out = small_hypergraphs();
    out.extend(family_corpus());
    out
}

pub fn path(m: usize) -> Hypergraph {
    generate(&FamilyDescriptor::Associahedron(m - 1)).unwrap()
}

pub fn complete(m: usize) -> Hypergraph {
    generate(&FamilyDescriptor::Permutahedron(m - 1)).unwrap()
}

pub fn catalan(m: u64) -> u64 {
    (0..m).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

pub fn factorial(m: u64) -> u64 {
    (1..=m).product()
}

/// Ordered set partitions of an `m`-set.
pub fn fubini(m: usize) -> u64 {
    let mut a = vec![1u64];
    for k in 1..=m {
        let mut s = 0;
        for j in 1..=k {
            s += binomial(k as u64, j as u64) * a[k - j];
        }
        a.push(s);
    }
    a[m]
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// A hypergraph as plain lists, for the oracles.
pub struct Plain {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl Plain {
    pub fn of(h: &Hypergraph) -> Plain {
        Plain { n: h.n(), edges: h.edges().iter().map(|e| e.to_vec()).collect() }
    }

    /// Components of the induced sub-hypergraph on `ground`, by flood fill.
    pub fn components(&self, ground: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
        let mut left = ground.clone();
        let mut out = Vec::new();
        while let Some(&start) = left.iter().next() {
            let mut comp = BTreeSet::from([start]);
            let mut changed = true;
            while changed {
                changed = false;
                for e in &self.edges {
                    if e.iter().all(|v| ground.contains(v))
                        && e.iter().any(|v| comp.contains(v))
                        && e.iter().any(|v| !comp.contains(v))
                    {
                        comp.extend(e.iter().copied());
                        changed = true;
                    }
                }
            }
            for v in &comp {
                left.remove(v);
            }
            out.push(comp);
        }
        out
    }

    pub fn connected_sets(&self) -> Vec<BTreeSet<usize>> {
        let mut out = Vec::new();
        for mask in 1u32..(1 << self.n) {
            let s: BTreeSet<usize> = (1..=self.n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            if self.components(&s).len() == 1 {
                out.push(s);
            }
        }
        out
    }

    /// Constructions counted by choosing a root and recursing into the
    /// components it leaves.
    pub fn count_constructions(&self) -> u64 {
        let all: BTreeSet<usize> = (1..=self.n).collect();
        let mut memo = HashMap::new();
        self.count_in(&all, &mut memo)
    }

    fn count_in(&self, ground: &BTreeSet<usize>, memo: &mut HashMap<Vec<usize>, u64>) -> u64 {
        let key: Vec<usize> = ground.iter().copied().collect();
        if let Some(&c) = memo.get(&key) {
            return c;
        }
        let mut total = 0;
        for &v in ground {
            let mut rest = ground.clone();
            rest.remove(&v);
            total += self.components(&rest).iter().map(|c| self.count_in(c, memo)).product::<u64>();
        }
        memo.insert(key, total);
        total
    }

    /// Vertices of the sum of the simplices spanned by the connected sets:
    /// for every total order of the vertices, each simplex contributes its
    /// largest vertex.
    pub fn minkowski_vertices(&self) -> BTreeSet<Vec<i64>> {
        let sets = self.connected_sets();
        let mut out = BTreeSet::new();
        for perm in permutations(self.n) {
            // perm[i] is the rank of vertex i + 1.
            let mut point = vec![0i64; self.n];
            for s in &sets {
                let top = *s.iter().max_by_key(|&&v| perm[v - 1]).unwrap();
                point[top - 1] += 1;
            }
            out.insert(point);
        }
        out
    }
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n);
            out.push(q);
        }
    }
    out
}

/// Facial weak order on ordered set partitions: compare the least and the
/// greatest permutation of each face in the weak order.
pub mod weak_order {
    /// Inversions of a word: pairs of values `a < b` with `b` written first.
    fn inversions(word: &[usize]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..word.len() {
            for j in i + 1..word.len() {
                if word[i] > word[j] {
                    out.push((word[j], word[i]));
                }
            }
        }
        out
    }

    fn weak_le(a: &[usize], b: &[usize]) -> bool {
        let ib = inversions(b);
        inversions(a).iter().all(|p| ib.contains(p))
    }

    fn extreme(blocks: &[Vec<usize>], decreasing: bool) -> Vec<usize> {
        let mut out = Vec::new();
        for b in blocks {
            let mut b = b.clone();
            b.sort_unstable();
            if decreasing {
                b.reverse();
            }
            out.extend(b);
        }
        out
    }

    /// `a ≤ b` for ordered set partitions given as lists of blocks.
    pub fn le(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
        weak_le(&extreme(a, false), &extreme(b, false)) && weak_le(&extreme(a, true), &extreme(b, true))
    }
}

/// Generalized Tamari order on Schröder trees written as bracketed products
/// of letters: compare the least and the greatest binary refinements in the
/// Tamari order, using right-subtree sizes.
pub mod tamari {
    #[derive(Clone, Debug)]
    pub enum Tree {
        Leaf,
        Node(Vec<Tree>),
    }

    /// Parses `(X₀⊗X₁)⊗X₂` style words; letter names are ignored.
    pub fn parse(word: &str) -> Tree {
        let chars: Vec<char> = word.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = product(&chars, &mut pos);
        assert_eq!(pos, chars.len(), "unparsed input in {word}");
        t
    }

    fn product(c: &[char], pos: &mut usize) -> Tree {
        let mut factors = vec![factor(c, pos)];
        while *pos < c.len() && c[*pos] == '⊗' {
            *pos += 1;
            factors.push(factor(c, pos));
        }
        if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Tree::Node(factors)
        }
    }

    fn factor(c: &[char], pos: &mut usize) -> Tree {
        if c[*pos] == '(' {
            *pos += 1;
            let t = product(c, pos);
            assert_eq!(c[*pos], ')');
            *pos += 1;
            t
        } else {
            *pos += 1;
            while *pos < c.len() && !"⊗()".contains(c[*pos]) {
                *pos += 1;
            }
            Tree::Leaf
        }
    }

    #[derive(Clone, Debug)]
    enum Bin {
        Leaf,
        Node(Box<Bin>, Box<Bin>),
    }

    fn refine(t: &Tree, right_comb: bool) -> Bin {
        match t {
            Tree::Leaf => Bin::Leaf,
            Tree::Node(kids) => {
                let mut parts: Vec<Bin> = kids.iter().map(|k| refine(k, right_comb)).collect();
                if right_comb {
                    let mut acc = parts.pop().unwrap();
                    while let Some(p) = parts.pop() {
                        acc = Bin::Node(Box::new(p), Box::new(acc));
                    }
                    acc
                } else {
                    let mut it = parts.into_iter();
                    let mut acc = it.next().unwrap();
                    for p in it {
                        acc = Bin::Node(Box::new(acc), Box::new(p));
                    }
                    acc
                }
            }
        }
    }

    fn internal(b: &Bin) -> usize {
        match b {
            Bin::Leaf => 0,
            Bin::Node(l, r) => 1 + internal(l) + internal(r),
        }
    }

    /// Right-subtree sizes of the internal nodes in in-order.
    fn right_sizes(b: &Bin, out: &mut Vec<usize>) {
        if let Bin::Node(l, r) = b {
            right_sizes(l, out);
            out.push(internal(r));
            right_sizes(r, out);
        }
    }

    fn tamari_le(a: &Bin, b: &Bin) -> bool {
        let (mut va, mut vb) = (Vec::new(), Vec::new());
        right_sizes(a, &mut va);
        right_sizes(b, &mut vb);
        va.iter().zip(&vb).all(|(x, y)| x <= y)
    }

    pub fn le(a: &Tree, b: &Tree) -> bool {
        tamari_le(&refine(a, false), &refine(b, false)) && tamari_le(&refine(a, true), &refine(b, true))
    }
}
