//! Family generators, contextuality sweeps and the tensor-word encoding.

mod common;

use std::collections::BTreeSet;

use nestorw_core::construct::enumerate_constructions;
use nestorw_core::families::{
    contextual_family_check, from_parenthesization, generate, graph_class, is_contextual, line_graph,
    planar_trees, to_parenthesization, FamilyDescriptor, FamilyKind, GraphClass, PlanarTree,
};
use nestorw_core::rewrite::{critical_pair_shapes, BShape};
use nestorw_core::{Error, Hypergraph};

#[test]
fn contextual_families_pass() {
    for (kind, dim) in [
        (FamilyKind::Simplex, 5),
        (FamilyKind::Cube, 5),
        (FamilyKind::Associahedron, 5),
        (FamilyKind::Permutahedron, 4),
        (FamilyKind::Operahedron, 4),
        (FamilyKind::GraphFamily, 4),
        (FamilyKind::HypergraphFamily, 3),
    ] {
        let r = contextual_family_check(kind, dim).unwrap();
        assert!(r.pass, "{kind}: {:?}", r.first_failure());
        assert!(r.instances > 0);
    }
}

#[test]
fn cyclohedra_fail_contextuality() {
    let r = contextual_family_check(FamilyKind::Cyclohedron, 3).unwrap();
    assert!(!r.pass);
    let failures: Vec<(&str, &str)> =
        r.rows.iter().filter(|x| !x.verdict).map(|x| (x.instance.as_str(), x.condition.as_str())).collect();
    assert_eq!(failures, [("cyclohedron(3)", "1")]);
    let json = r.to_json();
    assert_eq!(json["pass"], false);
    assert!(json["rows"][0].get("witness").is_some());
}

#[test]
fn sweeps_are_capped() {
    assert!(matches!(contextual_family_check(FamilyKind::HypergraphFamily, 4), Err(Error::Capacity { .. })));
    assert!(matches!(contextual_family_check(FamilyKind::GraphFamily, 5), Err(Error::Capacity { .. })));
}

#[test]
fn associahedron_shapes_are_paths() {
    for m in 3..=6 {
        let shapes = critical_pair_shapes(&common::path(m)).unwrap();
        assert!(shapes.distinct.iter().all(|(_, tag)| matches!(tag, BShape::B2 | BShape::B3)));
    }
}

#[test]
fn figure_tree_is_a_clawfree_block_graph() {
    let t = PlanarTree::parse("a(z:b(x:c,y:d),u:e)").unwrap();
    let g = line_graph(&t, None).unwrap();
    assert_eq!(graph_class(&g).unwrap(), GraphClass::ClawfreeBlock);
    assert!(is_contextual(&g).unwrap().contextual);
    // Every operahedron input gives a clawfree block graph or a special case of one.
    for k in 1..=5 {
        for tree in planar_trees(k) {
            let class = graph_class(&line_graph(&tree, None).unwrap()).unwrap();
            assert!(matches!(class, GraphClass::Linear | GraphClass::Complete | GraphClass::ClawfreeBlock));
        }
    }
}

#[test]
fn path_trees_give_associahedra() {
    let t = PlanarTree::parse("r(a(b(c(d))))").unwrap();
    assert_eq!(line_graph(&t, None).unwrap(), common::path(4));
}

#[test]
fn tensor_words_are_a_bijection() {
    for m in 1..=6 {
        let h = common::path(m);
        let cs = enumerate_constructions(&h).unwrap();
        let words: BTreeSet<String> = cs.iter().map(|c| to_parenthesization(&h, c).unwrap()).collect();
        assert_eq!(words.len() as u64, common::catalan(m as u64));
        for (c, w) in cs.iter().zip(cs.iter().map(|c| to_parenthesization(&h, c).unwrap())) {
            assert_eq!(w.matches('⊗').count(), m);
            assert_eq!(&from_parenthesization(&h, &w).unwrap(), c);
        }
    }
}

#[test]
fn numeric_families_have_expected_classes() {
    let class = |d| graph_class(&generate(&d).unwrap()).unwrap();
    assert_eq!(class(FamilyDescriptor::Associahedron(4)), GraphClass::Linear);
    assert_eq!(class(FamilyDescriptor::Permutahedron(4)), GraphClass::Complete);
    assert_eq!(class(FamilyDescriptor::Cyclohedron(4)), GraphClass::Cycle);
    assert_eq!(class(FamilyDescriptor::Cube(3)), GraphClass::ProperHypergraph);
    let star = Hypergraph::from_lists(4, &[&[1, 2], &[1, 3], &[1, 4]]).unwrap();
    assert_eq!(graph_class(&star).unwrap(), GraphClass::OtherGraph);
}
