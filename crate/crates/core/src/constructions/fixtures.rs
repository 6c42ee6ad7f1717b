use super::tripartite::target;
use super::{ConstructionError, Decomposition, Provenance, TRIPARTITE_CYCLE};
use crate::format::decomposition_from_json;
use crate::verification::verify_decomposition;

const N3: &str = include_str!("../../data/fixtures/knnn_x_k2_n3.json");
const N5: &str = include_str!("../../data/fixtures/knnn_x_k2_n5.json");

/// Checked-in decompositions of K_{n,n,n}×K₂ for n = 3, 5 (transcribed
/// from drawings), and the single 6-cycle for n = 1. Every fixture is
/// verified on load.
pub fn knnn_times_k2_fixture(n: u32) -> Result<Decomposition, ConstructionError> {
    let (text, parts) = match n {
        1 => return Ok(Decomposition::new(target(1)?, vec![target(1)?], Provenance::new(TRIPARTITE_CYCLE))),
        3 => (N3, 2),
        5 => (N5, 3),
        _ => return Err(ConstructionError::InvalidSize(n)),
    };
    let stored = decomposition_from_json(text).map_err(|e| ConstructionError::Fixture(format!("n={n}: {e}")))?;
    if stored.target != target(n)? {
        return Err(ConstructionError::Fixture(format!("n={n}: target is not K_{{{n},{n},{n}}} x K_2")));
    }
    if stored.parts.len() != parts {
        return Err(ConstructionError::Fixture(format!("n={n}: expected {parts} parts")));
    }
    let report = verify_decomposition(&stored.target, &stored.parts);
    if !report.passed {
        return Err(ConstructionError::Fixture(format!("n={n}: {}", report.summary())));
    }
    Ok(Decomposition::new(stored.target, stored.parts, stored.provenance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::identify_complete_bipartite;

    #[test]
    fn fixtures_load_and_verify() {
        for (n, parts, edges) in [(1, 1, 6), (3, 2, 54), (5, 3, 150)] {
            let d = knnn_times_k2_fixture(n).unwrap();
            assert_eq!(d.part_count(), parts);
            assert_eq!(d.part_sizes().iter().sum::<usize>(), edges);
        }
        assert!(knnn_times_k2_fixture(4).is_err());
    }

    #[test]
    fn single_vertex_case_is_a_six_cycle() {
        let d = knnn_times_k2_fixture(1).unwrap();
        assert_eq!(d.parts[0].edge_count(), 6);
        assert!((0..6).all(|i| d.parts[0].degree(i) == 2));
        assert_eq!(identify_complete_bipartite(&d.parts[0]), None);
    }
}
