//! Explicit planar decompositions.
//!
//! Every builder works at the edge-set level and returns a [`Decomposition`]
//! whose parts are meant to be checked by
//! [`verify_decomposition`](crate::verification::verify_decomposition).

mod bipartite;
mod fixtures;
mod seeded;
mod tripartite;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::graph_lower_bound;
use crate::graph::{Family, Graph, GraphError, VertexLabel};

pub use bipartite::{chen_yin_k4p4p, chen_yin_part, kn_times_k2_decomposition};
pub use fixtures::knnn_times_k2_fixture;
pub use seeded::{
    assemble_from_seed, MinimalBipartiteDecomposition, NoSeeds, OracleSeeds, SeedDirectory, SeedFile, SeedProvider,
};
pub use tripartite::{
    knnn_times_k2_n0mod4, knnn_times_k2_n1mod4, knnn_times_k2_n1mod4_with_ledger, relabel_bipartite_part,
    ExtensionLedger,
};

pub const CHEN_YIN: &str = "chen-yin-bipartite";
pub const COMPLETE_TIMES_K2: &str = "complete-times-k2";
pub const TRIPARTITE_N0: &str = "equal-tripartite-multiple-of-4";
pub const TRIPARTITE_N1: &str = "equal-tripartite-one-mod-4";
pub const TRIPARTITE_SEEDED: &str = "equal-tripartite-seed-assembly";
pub const TRIPARTITE_FIXTURE: &str = "equal-tripartite-figure";
pub const TRIPARTITE_CYCLE: &str = "equal-tripartite-six-cycle";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Guarantee {
    Optimal,
    UpperBoundOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub tag: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub figure: Option<String>,
}

impl Provenance {
    pub fn new(tag: &str) -> Self {
        Provenance { tag: tag.to_string(), figure: None }
    }
}

/// Ordered edge partition of `target` into parts meant to be planar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub target: Graph,
    pub parts: Vec<Graph>,
    pub guarantee: Guarantee,
    pub provenance: Provenance,
}

impl Decomposition {
    /// Guarantee is OPTIMAL iff the part count meets the target's Euler bound.
    pub fn new(target: Graph, parts: Vec<Graph>, provenance: Provenance) -> Self {
        let guarantee = guarantee_for(&target, parts.len());
        Decomposition { target, parts, guarantee, provenance }
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Graph::edge_count).collect()
    }
}

fn guarantee_for(target: &Graph, parts: usize) -> Guarantee {
    if parts as u64 == graph_lower_bound(target) {
        Guarantee::Optimal
    } else {
        Guarantee::UpperBoundOnly
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid size {0}")]
    InvalidSize(u32),
    #[error("size {0} is served by a figure fixture, not this builder")]
    UseFixture(u32),
    #[error("label error: {0}")]
    Label(String),
    #[error("fixture integrity: {0}")]
    Fixture(String),
    #[error("seed invalid: {0}")]
    SeedInvalid(String),
    #[error("construction conflict: {0}")]
    Conflict(String),
    #[error(
        "K_{{{n},{n},{n}}} x K_2 needs a planar decomposition of K_{{{k},{k}}} with a single-edge last part \
         (supply a seed file for K_{k}_{k})"
    )]
    SeedRequired { n: u32, k: u32 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Keeps the vertices satisfying `keep` in the target and every part.
/// Parts left without edges are dropped and the guarantee is recomputed.
pub fn restrict_decomposition<F>(d: &Decomposition, keep: F) -> Decomposition
where
    F: Fn(&VertexLabel) -> bool,
{
    let target = d.target.induced(&keep);
    let parts: Vec<Graph> = d
        .parts
        .iter()
        .map(|part| part.induced(&keep).without_isolated())
        .filter(|part| part.edge_count() > 0)
        .collect();
    Decomposition { guarantee: guarantee_for(&target, parts.len()), target, parts, provenance: d.provenance.clone() }
}

/// True for labels with index at most `n`.
pub(crate) fn index_at_most(n: u32) -> impl Fn(&VertexLabel) -> bool {
    move |v| v.index().is_some_and(|i| i <= n)
}

/// Decomposition of K_{n,n,n}×K₂ into ⌈(n+1)/2⌉ planar parts.
///
/// Sizes n ≡ 2, 3 (mod 4) with n ≥ 6 are assembled from a decomposition of
/// K_{k,k}, k the next size ≡ 3 (mod 4), that ends in a single edge; those
/// come from `seeds`.
pub fn knnn_times_k2_decomposition(
    n: u32,
    seeds: Option<&dyn SeedProvider>,
) -> Result<Decomposition, ConstructionError> {
    match n {
        0 => Err(ConstructionError::InvalidSize(0)),
        1 | 3 | 5 => knnn_times_k2_fixture(n),
        2 => {
            let d = restrict_decomposition(&knnn_times_k2_fixture(3)?, index_at_most(2));
            Ok(Decomposition { provenance: Provenance::new(TRIPARTITE_FIXTURE), ..d })
        }
        _ if n % 4 == 0 => knnn_times_k2_n0mod4(n / 4),
        _ if n % 4 == 1 => knnn_times_k2_n1mod4(n / 4),
        _ => {
            let k = if n % 4 == 3 { n } else { n + 1 };
            let p = (k - 3) / 4;
            let seed = seeds.and_then(|s| s.seed(p)).ok_or(ConstructionError::SeedRequired { n, k })??;
            let full = assemble_from_seed(p, &seed)?;
            if k == n {
                Ok(full)
            } else {
                Ok(restrict_decomposition(&full, index_at_most(n)))
            }
        }
    }
}

pub(crate) fn u(i: u32) -> VertexLabel {
    VertexLabel::new(Family::U, i)
}

pub(crate) fn v(i: u32) -> VertexLabel {
    VertexLabel::new(Family::V, i)
}
