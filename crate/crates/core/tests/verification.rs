mod common;

use common::complete_bipartite_edges;
use kron_thickness::constructions::{chen_yin_k4p4p, Guarantee};
use kron_thickness::graph::{make_complete, make_complete_bipartite, Edge, Family, Graph, VertexLabel};
use kron_thickness::verification::{certify_optimal, verify_against, verify_decomposition, Optimality};

fn uv(a: u32, b: u32) -> Edge {
    Edge::new(VertexLabel::new(Family::U, a), VertexLabel::new(Family::V, b)).unwrap()
}

#[test]
fn clean_decomposition_passes() {
    let d = chen_yin_k4p4p(2).unwrap();
    let r = verify_decomposition(&d.target, &d.parts);
    assert!(r.passed);
    assert_eq!(r.summary(), "PASS");
    assert_eq!(r.optimality, Optimality::Optimal);
    assert_eq!(r.part_count, 3);
}

#[test]
fn foreign_edge_is_reported_as_extra() {
    let d = chen_yin_k4p4p(1).unwrap();
    let mut parts = d.parts.clone();
    parts[1] = Graph::from_edges(parts[1].edges().iter().cloned().chain([uv(9, 9)]));
    let r = verify_decomposition(&d.target, &parts);
    assert!(!r.passed);
    assert_eq!(r.coverage_extra, vec![uv(9, 9)]);
    assert!(r.summary().starts_with("FAIL"));
}

#[test]
fn non_planar_part_is_named() {
    let k5 = make_complete(5).unwrap();
    let r = verify_decomposition(&k5, std::slice::from_ref(&k5));
    assert!(!r.passed);
    assert_eq!(r.nonplanar_parts, vec![0]);
    assert!(r.coverage_missing.is_empty() && r.overlap.is_empty());
}

#[test]
fn valid_but_not_minimal() {
    let k33 = make_complete_bipartite(3, 3).unwrap();
    let singles: Vec<Graph> = complete_bipartite_edges(3, 3).into_iter().map(|e| Graph::from_edges([e])).collect();
    let r = verify_against(&k33, &singles, 2);
    assert!(r.passed);
    assert_eq!(r.optimality, Optimality::NotCertified);
}

#[test]
fn certification_follows_the_bound() {
    let d = chen_yin_k4p4p(2).unwrap();
    assert_eq!(certify_optimal(d.clone(), 2).unwrap().guarantee, Guarantee::UpperBoundOnly);
    assert_eq!(certify_optimal(d.clone(), 3).unwrap().guarantee, Guarantee::Optimal);
    let mut broken = d;
    broken.parts.pop();
    assert!(certify_optimal(broken, 2).is_err());
}
