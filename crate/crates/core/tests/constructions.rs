mod common;

use common::*;
use kron_thickness::constructions::{
    chen_yin_k4p4p, kn_times_k2_decomposition, knnn_times_k2_decomposition, restrict_decomposition, ConstructionError,
    Guarantee, NoSeeds, SeedDirectory, SeedProvider,
};
use kron_thickness::format::{decomposition_from_json, decomposition_to_dot, decomposition_to_json};
use kron_thickness::graph::{Family, Graph};
use kron_thickness::verification::verify_decomposition;
use proptest::prelude::*;
use std::path::PathBuf;

fn seeds() -> SeedDirectory {
    SeedDirectory(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/seeds"))
}

#[test]
fn builders_are_deterministic() {
    assert_eq!(chen_yin_k4p4p(3).unwrap(), chen_yin_k4p4p(3).unwrap());
    assert_eq!(kn_times_k2_decomposition(14).unwrap(), kn_times_k2_decomposition(14).unwrap());
    assert_eq!(knnn_times_k2_decomposition(9, None).unwrap(), knnn_times_k2_decomposition(9, None).unwrap());
}

#[test]
fn bipartite_parts_have_equal_size_besides_the_matching() {
    for p in 1..=4 {
        let sizes = chen_yin_k4p4p(p).unwrap().part_sizes();
        let (last, body) = sizes.split_last().unwrap();
        assert_eq!(*last, 4 * p as usize);
        assert!(body.iter().all(|&s| s == 16 * p as usize - 4));
    }
}

#[test]
fn restriction_keeping_everything_is_identity() {
    let d = knnn_times_k2_decomposition(8, None).unwrap();
    let same = restrict_decomposition(&d, |_| true);
    assert_eq!(same.parts, d.parts);
    assert_eq!(same.target, d.target);
}

#[test]
fn restriction_drops_emptied_parts() {
    let d = kn_times_k2_decomposition(12).unwrap();
    let small = restrict_decomposition(&d, |v| v.index().is_some_and(|i| i <= 3));
    assert!(small.parts.iter().all(|p| p.edge_count() > 0));
    check_partition(&complete_double_cover_edges(3), &small.parts).unwrap();
    assert_eq!(small.guarantee, Guarantee::Optimal);
}

#[test]
fn sizes_without_a_seed_report_what_is_needed() {
    for (n, k) in [(6, 7), (7, 7), (10, 11), (11, 11)] {
        assert_eq!(knnn_times_k2_decomposition(n, Some(&NoSeeds)), Err(ConstructionError::SeedRequired { n, k }));
    }
    assert!(seeds().seed(1).is_some());
    assert!(seeds().seed(2).is_none());
    assert!(matches!(
        knnn_times_k2_decomposition(11, Some(&seeds())),
        Err(ConstructionError::SeedRequired { n: 11, k: 11 })
    ));
}

#[test]
fn small_tripartite_sizes() {
    for n in 1..=5 {
        let d = knnn_times_k2_decomposition(n, None).unwrap();
        check_partition(&tripartite_double_cover_edges(n), &d.parts).unwrap();
        all_certified_planar(&d.parts).unwrap();
        assert_eq!(d.part_count() as u64, ceil_div(n as u64 + 1, 2));
    }
}

#[test]
fn seeded_sizes_certify() {
    for n in [6, 7] {
        let d = knnn_times_k2_decomposition(n, Some(&seeds())).unwrap();
        check_partition(&tripartite_double_cover_edges(n), &d.parts).unwrap();
        all_certified_planar(&d.parts).unwrap();
        assert_eq!(d.part_count(), 4);
    }
}

#[test]
fn json_round_trip_preserves_decompositions() {
    for d in [
        chen_yin_k4p4p(2).unwrap(),
        kn_times_k2_decomposition(9).unwrap(),
        knnn_times_k2_decomposition(5, None).unwrap(),
    ] {
        let back = decomposition_from_json(&decomposition_to_json(&d)).unwrap();
        assert_eq!(back, d);
        assert!(verify_decomposition(&back.target, &back.parts).passed);
    }
}

#[test]
fn dot_output_tags_every_edge_with_its_part() {
    let d = kn_times_k2_decomposition(8).unwrap();
    let dot = decomposition_to_dot(&d);
    let tagged = dot.lines().filter(|l| l.contains("[part=")).count();
    assert_eq!(tagged, d.target.edge_count());
}

#[test]
fn restricted_parts_stay_within_families() {
    let d = knnn_times_k2_decomposition(4, None).unwrap();
    let no_z = restrict_decomposition(&d, |v| v.family() != Some(Family::Z));
    let edges: usize = no_z.parts.iter().map(Graph::edge_count).sum();
    assert_eq!(edges, 2 * 16);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn complete_double_cover_always_verifies(n in 2u32..=24) {
        let d = kn_times_k2_decomposition(n).unwrap();
        prop_assert!(check_partition(&complete_double_cover_edges(n), &d.parts).is_ok());
        prop_assert_eq!(d.part_count() as u64, ceil_div(n as u64, 4));
    }

    #[test]
    fn restricting_complete_double_cover(n in 4u32..=20, keep in 2u32..=20) {
        let keep = keep.min(n);
        let d = kn_times_k2_decomposition(n).unwrap();
        let r = restrict_decomposition(&d, |v| v.index().is_some_and(|i| i <= keep));
        prop_assert!(check_partition(&complete_double_cover_edges(keep), &r.parts).is_ok());
        prop_assert!(all_certified_planar(&r.parts).is_ok());
    }
}
