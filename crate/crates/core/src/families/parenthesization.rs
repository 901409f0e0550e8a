//! Constructs of the linear graph on `1..=m` as bracketed products of the
//! letters `X₀ … X_m`. A node with label `{z₁ < … < z_k}` is the product of
//! `k + 1` factors, the letter `X_{z}` sitting between vertices `z` and
//! `z + 1`.

use crate::construct::{Construct, Node};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

const SUBSCRIPTS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

fn require_linear(h: &Hypergraph) -> Result<()> {
    let m = h.n();
    let path = Hypergraph::atomized(m, (1..m).map(|i| VertexSet::from([i, i + 1])))?;
    if *h != path {
        return Err(Error::domain("expected the linear graph 1-2-...-m"));
    }
    Ok(())
}

fn letter(i: usize) -> String {
    let digits: String = i.to_string().chars().map(|c| SUBSCRIPTS[c.to_digit(10).unwrap() as usize]).collect();
    format!("X{digits}")
}

fn word(node: &Node) -> String {
    let support = node.support();
    let (lo, hi) = (support.min_vertex().unwrap(), support.max_vertex().unwrap());
    let label = node.label().to_vec();
    let mut factors = Vec::with_capacity(label.len() + 1);
    // Gaps between consecutive label vertices, with the ends of the support.
    let mut prev = lo - 1;
    for &z in label.iter().chain(std::iter::once(&(hi + 1))) {
        let factor = match node.children().iter().find(|c| c.support().min_vertex() == Some(prev + 1)) {
            Some(child) if prev + 1 < z => format!("({})", word(child)),
            _ => letter(prev),
        };
        factors.push(factor);
        prev = z;
    }
    factors.join("⊗")
}

/// The bracketed product of a construct of the linear graph.
pub fn to_parenthesization(h: &Hypergraph, s: &Construct) -> Result<String> {
    require_linear(h)?;
    if s.support() != h.vertices() {
        return Err(Error::invalid("construct does not cover the hypergraph"));
    }
    Ok(word(s.root()))
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

/// A parsed factor: its leaf range and, unless it is a single letter, its node.
type Factor = (usize, usize, Option<Node>);

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.text))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn product(&mut self) -> Result<Factor> {
        let mut factors = vec![self.factor()?];
        loop {
            self.skip_ws();
            match self.chars.get(self.pos) {
                Some('⊗') | Some('*') => {
                    self.pos += 1;
                    factors.push(self.factor()?);
                }
                _ => break,
            }
        }
        if factors.len() == 1 {
            return Ok(factors.pop().unwrap());
        }
        let mut label = VertexSet::EMPTY;
        for w in factors.windows(2) {
            if w[1].0 != w[0].1 + 1 {
                return Err(self.error("letters are not consecutive"));
            }
            label.insert(w[1].0);
        }
        let lo = factors[0].0;
        let hi = factors.last().unwrap().1;
        let children = factors.into_iter().filter_map(|f| f.2).collect();
        Ok((lo, hi, Some(Node::new(label, children))))
    }

    fn factor(&mut self) -> Result<Factor> {
        self.skip_ws();
        match self.chars.get(self.pos) {
            Some('(') => {
                self.pos += 1;
                let inner = self.product()?;
                self.skip_ws();
                if self.chars.get(self.pos) != Some(&')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                if inner.2.is_none() {
                    return Err(self.error("a bracket must hold a product"));
                }
                Ok(inner)
            }
            Some('X') => {
                self.pos += 1;
                let mut digits = String::new();
                while let Some(&c) = self.chars.get(self.pos) {
                    if let Some(d) = SUBSCRIPTS.iter().position(|&s| s == c) {
                        digits.push(char::from(b'0' + d as u8));
                    } else if c.is_ascii_digit() {
                        digits.push(c);
                    } else {
                        break;
                    }
                    self.pos += 1;
                }
                let i: usize = digits.parse().map_err(|_| self.error("expected a letter index"))?;
                Ok((i, i, None))
            }
            _ => Err(self.error("expected a letter or '('")),
        }
    }
}

/// Inverse of [`to_parenthesization`]. Accepts `⊗` or `*` and subscript or
/// ASCII digits.
pub fn from_parenthesization(h: &Hypergraph, text: &str) -> Result<Construct> {
    require_linear(h)?;
    let mut p = Parser { chars: text.chars().collect(), pos: 0, text };
    let (lo, hi, node) = p.product()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.error("trailing input"));
    }
    if lo != 0 || hi != h.n() {
        return Err(Error::invalid(format!("expected letters X0..X{}", h.n())));
    }
    let node = node.ok_or_else(|| Error::invalid("a single letter is not a construct"))?;
    Construct::validate(h, &node)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::enumerate_constructions;

    fn path(m: usize) -> Hypergraph {
        Hypergraph::atomized(m, (1..m).map(|i| VertexSet::from([i, i + 1]))).unwrap()
    }

    #[test]
    fn pentagon_words() {
        let h = path(3);
        let w = |s: &str| to_parenthesization(&h, &Construct::parse(&h, s).unwrap()).unwrap();
        assert_eq!(w("2(1,3)"), "(X₀⊗X₁)⊗(X₂⊗X₃)");
        assert_eq!(w("3(2(1))"), "((X₀⊗X₁)⊗X₂)⊗X₃");
        assert_eq!(w("1(2(3))"), "X₀⊗(X₁⊗(X₂⊗X₃))");
        assert_eq!(w("{1,2,3}"), "X₀⊗X₁⊗X₂⊗X₃");
        assert_eq!(w("{1,3}(2)"), "X₀⊗(X₁⊗X₂)⊗X₃");
    }

    #[test]
    fn round_trip() {
        for m in 1..=5 {
            let h = path(m);
            for s in enumerate_constructions(&h).unwrap() {
                let word = to_parenthesization(&h, &s).unwrap();
                assert_eq!(from_parenthesization(&h, &word).unwrap(), s);
            }
        }
        let h = path(3);
        let s = from_parenthesization(&h, "X0 * (X1 * (X2 * X3))").unwrap();
        assert_eq!(s.to_string(), "1(2(3))");
    }

    #[test]
    fn rejects() {
        let h = path(3);
        assert!(from_parenthesization(&h, "X₀⊗X₂⊗X₃").is_err());
        assert!(from_parenthesization(&h, "(X₀⊗X₁)⊗X₂").is_err());
        assert!(from_parenthesization(&h, "((X₀))⊗X₁⊗X₂⊗X₃").is_err());
        let k3 = Hypergraph::from_lists(3, &[&[1, 2], &[2, 3], &[1, 3]]).unwrap();
        assert!(to_parenthesization(&k3, &Construct::top(&k3)).is_err());
    }
}
