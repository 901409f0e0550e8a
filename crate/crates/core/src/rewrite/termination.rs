//! Termination certificates from linear functionals on vertex coordinates.

use std::cmp::Ordering;

use num_rational::Rational64;
use serde::Serialize;

use super::{FlipGraph, FlipOrientation, RewriteStep};
use crate::error::Result;
use crate::geometry::{coordinate_vector, pairing};
use crate::hypergraph::Hypergraph;

#[derive(Clone, Debug, Serialize)]
pub struct TerminationVerdict {
    pub ok: bool,
    /// Common sign of `<mu, v^T - v^S>` over all steps when `ok`.
    pub sign: Option<i8>,
    /// First step breaking the pattern (perpendicular or of the other sign).
    pub offending: Option<RewriteStep>,
    pub edges_checked: usize,
}

/// Checks that `<mu, v^target - v^source>` has one strict sign on every step.
pub fn check_termination(h: &Hypergraph, o: FlipOrientation, mu: &[Rational64]) -> Result<TerminationVerdict> {
    let graph = FlipGraph::build(h, o)?;
    let mut sign: Option<Ordering> = None;
    for (k, step) in graph.steps().iter().enumerate() {
        let before = pairing(mu, &coordinate_vector(h, &step.source)?)?;
        let after = pairing(mu, &coordinate_vector(h, &step.target)?)?;
        let s = after.cmp(&before);
        let bad = s == Ordering::Equal || sign.is_some_and(|prev| prev != s);
        if bad {
            return Ok(TerminationVerdict { ok: false, sign: None, offending: Some(step.clone()), edges_checked: k + 1 });
        }
        sign = Some(s);
    }
    Ok(TerminationVerdict {
        ok: true,
        sign: Some(match sign {
            Some(Ordering::Less) => -1,
            _ => 1,
        }),
        offending: None,
        edges_checked: graph.steps().len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational64> {
        v.iter().map(|&x| Rational64::from_integer(x)).collect()
    }

    #[test]
    fn pentagon_certificates() {
        let h = Hypergraph::from_lists(3, &[&[1, 2], &[2, 3]]).unwrap();
        let v = check_termination(&h, FlipOrientation::PromoteSmaller, &ints(&[3, 2, 1])).unwrap();
        assert!(v.ok);
        assert_eq!(v.sign, Some(1));
        let v = check_termination(&h, FlipOrientation::PromoteSmaller, &ints(&[1, 1, 1])).unwrap();
        assert!(!v.ok);
        assert!(v.offending.is_some());
        let mirrored = check_termination(&h.reversed(), FlipOrientation::PromoteLarger, &ints(&[1, 2, 3])).unwrap();
        assert!(mirrored.ok);
        assert_eq!(mirrored.sign, Some(1));
    }
}
