//! Small vertex subsets stored as 64-bit masks.
//!
//! Vertex `i` (1-based) occupies bit `i - 1`, so at most [`MAX_VERTICES`]
//! vertices fit. Iteration is always in increasing vertex order.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Deserialize, Serialize};

/// Hard upper bound on the number of vertices a [`VertexSet`] can hold.
pub const MAX_VERTICES: usize = 63;

/// A set of vertex ids drawn from `1..=MAX_VERTICES`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v), "vertex id {v} out of range");
        VertexSet(1 << (v - 1))
    }

    /// The set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=64).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: usize) {
        *self = *self | VertexSet::singleton(v);
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        !self.intersects(other)
    }

    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All non-empty subsets, in decreasing mask order.
    pub fn nonempty_subsets(self) -> Subsets {
        Subsets { mask: self.0, next: Some(self.0).filter(|&m| m != 0) }
    }

    /// All subsets of size `k`, in increasing lexicographic order of their
    /// sorted element lists.
    pub fn subsets_of_size(self, k: usize) -> Vec<VertexSet> {
        let elems = self.to_vec();
        let mut out = Vec::new();
        let mut pick = Vec::with_capacity(k);
        fn rec(elems: &[usize], start: usize, k: usize, pick: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
            if pick.len() == k {
                out.push(pick.iter().copied().collect());
                return;
            }
            for i in start..elems.len() {
                pick.push(elems[i]);
                rec(elems, i + 1, k, pick, out);
                pick.pop();
            }
        }
        rec(&elems, 0, k, &mut pick, &mut out);
        out
    }

    /// Applies `f` to every element.
    pub fn map(self, mut f: impl FnMut(usize) -> usize) -> VertexSet {
        self.iter().map(&mut f).collect()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(arr: [usize; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Self {
        s.to_vec()
    }
}

impl TryFrom<Vec<usize>> for VertexSet {
    type Error = String;
    fn try_from(v: Vec<usize>) -> Result<Self, String> {
        if let Some(bad) = v.iter().find(|&&x| x == 0 || x > MAX_VERTICES) {
            return Err(format!("vertex id {bad} out of range 1..={MAX_VERTICES}"));
        }
        Ok(v.into_iter().collect())
    }
}

/// Lexicographic order on the increasing element lists, so `{1} < {1,2} < {1,3} < {2}`.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        let following = cur.wrapping_sub(1) & self.mask;
        self.next = (following != 0).then_some(following);
        Some(VertexSet(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = VertexSet::from([1, 3]);
        let b = VertexSet::from([3, 4]);
        assert_eq!((a | b).to_vec(), vec![1, 3, 4]);
        assert_eq!((a & b).to_vec(), vec![3]);
        assert_eq!((a - b).to_vec(), vec![1]);
        assert_eq!(a.min_vertex(), Some(1));
        assert_eq!(b.max_vertex(), Some(4));
        assert_eq!(VertexSet::EMPTY.max_vertex(), None);
        assert_eq!(VertexSet::full(3).to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn lexicographic_order() {
        let mut sets = vec![
            VertexSet::from([2]),
            VertexSet::from([1, 3]),
            VertexSet::from([1]),
            VertexSet::from([1, 2]),
        ];
        sets.sort();
        let shown: Vec<String> = sets.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["{1}", "{1,2}", "{1,3}", "{2}"]);
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(VertexSet::full(4).nonempty_subsets().count(), 15);
        assert_eq!(VertexSet::EMPTY.nonempty_subsets().count(), 0);
        let triples = VertexSet::full(4).subsets_of_size(3);
        assert_eq!(triples.len(), 4);
        assert_eq!(triples[0], VertexSet::from([1, 2, 3]));
    }
}
