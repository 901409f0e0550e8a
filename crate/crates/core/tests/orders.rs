//! The facial order against independent comparators on ordered set
//! partitions and on Schröder trees.

mod common;

use common::{tamari, weak_order};
use nestorw_core::families::to_parenthesization;
use nestorw_core::rewrite::{facial_order, FlipGraph, FlipOrientation};
use nestorw_core::Construct;

fn blocks(c: &Construct) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut node = c.root();
    loop {
        out.push(node.label().to_vec());
        match node.children() {
            [] => break,
            [only] => node = only,
            _ => panic!("branching construct of a complete graph"),
        }
    }
    out.reverse();
    out
}

#[test]
fn permutahedron_facial_weak_order() {
    for m in 1..=4 {
        let f = facial_order(&common::complete(m)).unwrap();
        let cs = f.lattice().constructs();
        assert_eq!(cs.len() as u64, common::fubini(m));
        let reach = f.reachability();
        for (i, a) in cs.iter().enumerate() {
            for (j, b) in cs.iter().enumerate() {
                assert_eq!(reach[i][j], weak_order::le(&blocks(a), &blocks(b)), "{a} vs {b}");
            }
        }
    }
}

#[test]
fn associahedron_generalized_tamari_order() {
    for m in 1..=4 {
        let h = common::path(m);
        let f = facial_order(&h).unwrap();
        let cs = f.lattice().constructs();
        let trees: Vec<tamari::Tree> =
            cs.iter().map(|c| tamari::parse(&to_parenthesization(&h, c).unwrap())).collect();
        let reach = f.reachability();
        for i in 0..cs.len() {
            for j in 0..cs.len() {
                assert_eq!(reach[i][j], tamari::le(&trees[i], &trees[j]), "{} vs {}", cs[i], cs[j]);
            }
        }
    }
}

#[test]
fn flips_on_the_associahedron_are_tamari_rotations() {
    let h = common::path(4);
    let g = FlipGraph::build(&h, FlipOrientation::PromoteSmaller).unwrap();
    for s in g.steps() {
        let a = tamari::parse(&to_parenthesization(&h, &s.source).unwrap());
        let b = tamari::parse(&to_parenthesization(&h, &s.target).unwrap());
        assert!(tamari::le(&a, &b) && !tamari::le(&b, &a));
    }
    assert_eq!(g.steps().len(), 14 * 3 / 2);
}
