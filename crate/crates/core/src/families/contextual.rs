//! Contextual hypergraphs and closure checks for families of them.

use std::collections::HashMap;

use serde::Serialize;
use serde_json::{json, Value};

use super::{family_instances, FamilyKind};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContextualVerdict {
    pub contextual: bool,
    /// First failing `(Y, X)`: `Y` by size then lexicographically, then `X`.
    pub witness: Option<(VertexSet, VertexSet)>,
    /// Number of `(Y, X)` pairs examined.
    pub pairs_checked: usize,
}

impl ContextualVerdict {
    pub fn describe(&self, h: &Hypergraph) -> String {
        match self.witness {
            None => "contextual".to_string(),
            Some((y, x)) => format!("not contextual: Y={}, X={}", h.format_set(y), h.format_set(x)),
        }
    }
}

/// Whether each 3-set `X` has the same reconnected restriction inside every
/// connected `Y ⊇ X` as in `h`. The equivalent formulation through the
/// disconnection predicate is evaluated alongside; disagreement is reported
/// as an internal error.
pub fn is_contextual(h: &Hypergraph) -> Result<ContextualVerdict> {
    h.require_connected()?;
    let all = h.vertices();
    let mut ys: Vec<VertexSet> = h.saturation()?.iter().copied().filter(|y| y.len() >= 3).collect();
    ys.sort_by_key(|y| y.len());
    let mut global: HashMap<VertexSet, Hypergraph> = HashMap::new();
    let mut pairs_checked = 0;
    for y in ys {
        let mut xs = y.subsets_of_size(3);
        xs.sort();
        for x in xs {
            pairs_checked += 1;
            let by_disconnection = x.iter().all(|a| {
                let rest = (x - VertexSet::singleton(a)).to_vec();
                h.disconnects_within(y, a, rest[0], rest[1]) == h.disconnects_within(all, a, rest[0], rest[1])
            });
            let whole = match global.get(&x) {
                Some(r) => r.clone(),
                None => {
                    let r = h.reconnected_restrict(x)?.hypergraph;
                    global.insert(x, r.clone());
                    r
                }
            };
            let by_restriction = h.reconnected_restrict_within(y, x)?.hypergraph == whole;
            if by_disconnection != by_restriction {
                return Err(Error::internal(format!(
                    "contextuality conditions disagree at Y={y}, X={x}"
                )));
            }
            if !by_restriction {
                return Ok(ContextualVerdict { contextual: false, witness: Some((y, x)), pairs_checked });
            }
        }
    }
    Ok(ContextualVerdict { contextual: true, witness: None, pairs_checked })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCheckRow {
    pub instance: String,
    /// `"1"`, `"2"`, `"3"`, or `"1-criterion"` for the cube cross-check.
    pub condition: String,
    pub verdict: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyCheckReport {
    pub kind: FamilyKind,
    pub up_to_dimension: usize,
    pub instances: usize,
    pub rows: Vec<FamilyCheckRow>,
    pub pass: bool,
}

impl FamilyCheckReport {
    /// First failing row, if any.
    pub fn first_failure(&self) -> Option<&FamilyCheckRow> {
        self.rows.iter().find(|r| !r.verdict)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind,
            "up_to_dimension": self.up_to_dimension,
            "instances": self.instances,
            "pass": self.pass,
            "rows": self.rows,
        })
    }
}

/// Checks every instance of `kind` up to the given dimension for
/// contextuality (1), closure of `H ∖ X` components (2) and the shape of
/// every reconnected restriction to a 3-set (3).
pub fn contextual_family_check(kind: FamilyKind, up_to_dimension: usize) -> Result<FamilyCheckReport> {
    let instances = family_instances(kind, up_to_dimension)?;
    let mut rows = Vec::new();
    let mut members: HashMap<Hypergraph, bool> = HashMap::new();
    let mut member = |g: Hypergraph| -> Result<bool> {
        if let Some(&b) = members.get(&g) {
            return Ok(b);
        }
        let b = kind.contains(&g)?;
        members.insert(g, b);
        Ok(b)
    };
    for (name, h) in &instances {
        let row = |condition: &str, witness: Option<String>| FamilyCheckRow {
            instance: name.clone(),
            condition: condition.to_string(),
            verdict: witness.is_none(),
            witness,
        };
        let verdict = is_contextual(h)?;
        rows.push(row("1", verdict.witness.map(|_| verdict.describe(h))));
        if kind == FamilyKind::Cube {
            let mismatch = cube_criterion_mismatch(h);
            let w = match (mismatch, verdict.contextual) {
                (Some(m), _) => Some(m),
                (None, false) => Some("criterion predicts contextual".to_string()),
                (None, true) => None,
            };
            rows.push(row("1-criterion", w));
        }

        let mut closure = None;
        'outer: for x in h.vertices().nonempty_subsets() {
            for comp in h.decompose(x)?.components {
                if !member(h.restrict_plain(comp)?.hypergraph)? {
                    closure = Some(format!("X={}, component {}", h.format_set(x), h.format_set(comp)));
                    break 'outer;
                }
            }
        }
        rows.push(row("2", closure));

        let mut shapes = None;
        for x in h.vertices().subsets_of_size(3) {
            let shape = h.reconnected_restrict(x)?.hypergraph;
            if !member(shape.clone())? {
                shapes = Some(format!("X={}, shape {}", h.format_set(x), shape.to_hg().trim_end()));
                break;
            }
        }
        rows.push(row("3", shapes));
    }
    let pass = rows.iter().all(|r| r.verdict);
    Ok(FamilyCheckReport { kind, up_to_dimension, instances: instances.len(), rows, pass })
}

/// In a cube, `k` keeps `i` and `j` together exactly when both lie below
/// `k`, inside every connected `Y` as well as in the whole hypergraph.
fn cube_criterion_mismatch(h: &Hypergraph) -> Option<String> {
    let sat = h.saturation().ok()?;
    for &y in sat.iter().filter(|y| y.len() >= 3) {
        for k in y.iter() {
            for i in y.iter() {
                for j in y.iter().filter(|&j| j > i) {
                    if i == k || j == k {
                        continue;
                    }
                    if h.disconnects_within(y, k, i, j) == (i < k && j < k) {
                        return Some(format!("Y={}, k={k}, i={i}, j={j}", h.format_set(y)));
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilyDescriptor};

    fn named(n: usize, labels: &str, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_lists(n, edges)
            .unwrap()
            .with_labels(labels.chars().map(|c| c.to_string()).collect())
            .unwrap()
    }

    #[test]
    fn non_contextual_examples() {
        let h42 = named(4, "xyzu", &[&[1, 2, 3], &[1, 3, 4]]);
        let v = is_contextual(&h42).unwrap();
        assert!(!v.contextual);
        assert_eq!(v.witness, Some((VertexSet::from([1, 2, 3]), VertexSet::from([1, 2, 3]))));
        assert_eq!(v.describe(&h42), "not contextual: Y={x,y,z}, X={x,y,z}");
        let cyc = generate(&FamilyDescriptor::Cyclohedron(3)).unwrap();
        assert!(!is_contextual(&cyc).unwrap().contextual);
    }

    #[test]
    fn contextual_examples() {
        for d in [
            FamilyDescriptor::Associahedron(2),
            FamilyDescriptor::Simplex(2),
            FamilyDescriptor::Cube(2),
            FamilyDescriptor::Permutahedron(2),
            FamilyDescriptor::Cube(4),
            FamilyDescriptor::Associahedron(4),
        ] {
            assert!(is_contextual(&generate(&d).unwrap()).unwrap().contextual, "{}", d.name());
        }
        assert!(is_contextual(&Hypergraph::from_lists(2, &[]).unwrap()).is_err());
    }

    #[test]
    fn family_checks() {
        let r = contextual_family_check(FamilyKind::Associahedron, 4).unwrap();
        assert!(r.pass);
        assert_eq!(r.instances, 4);
        let r = contextual_family_check(FamilyKind::Cube, 4).unwrap();
        assert!(r.pass);
        assert!(r.rows.iter().any(|row| row.condition == "1-criterion"));
        let r = contextual_family_check(FamilyKind::Cyclohedron, 3).unwrap();
        assert!(!r.pass);
        let fail = r.first_failure().unwrap();
        assert_eq!((fail.instance.as_str(), fail.condition.as_str()), ("cyclohedron(3)", "1"));
    }
}
