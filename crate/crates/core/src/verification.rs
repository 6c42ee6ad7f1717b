//! Certifying checker for planar decompositions.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::graph_lower_bound;
use crate::constructions::{Decomposition, Guarantee};
use crate::graph::{Edge, Graph};
use crate::planarity::is_planar_indexed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Optimality {
    Optimal,
    NotCertified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    /// Target edges in no part.
    pub coverage_missing: Vec<Edge>,
    /// Part edges that are not target edges.
    pub coverage_extra: Vec<Edge>,
    /// Edges found in two or more parts, with those part indices.
    pub overlap: Vec<(Edge, Vec<usize>)>,
    pub nonplanar_parts: Vec<usize>,
    pub passed: bool,
    pub optimality: Optimality,
    pub part_count: usize,
    pub lower_bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum VerificationError {
    #[error("decomposition failed verification: {0}")]
    Failed(String),
}

impl VerificationReport {
    /// One-line description of the defects, or `PASS`.
    pub fn summary(&self) -> String {
        if self.passed {
            return "PASS".to_string();
        }
        let mut defects = Vec::new();
        if !self.coverage_missing.is_empty() {
            defects.push(format!("{} missing", self.coverage_missing.len()));
        }
        if !self.coverage_extra.is_empty() {
            defects.push(format!("{} extra", self.coverage_extra.len()));
        }
        if !self.overlap.is_empty() {
            defects.push(format!("{} overlapping", self.overlap.len()));
        }
        if !self.nonplanar_parts.is_empty() {
            defects.push(format!("non-planar parts {:?}", self.nonplanar_parts));
        }
        format!("FAIL: {}", defects.join(", "))
    }
}

/// Checks coverage, disjointness and planarity, with optimality measured
/// against the Euler lower bound of `target`.
pub fn verify_decomposition(target: &Graph, parts: &[Graph]) -> VerificationReport {
    verify_against(target, parts, graph_lower_bound(target))
}

/// As [`verify_decomposition`] with an externally supplied lower bound.
pub fn verify_against(target: &Graph, parts: &[Graph], lower_bound: u64) -> VerificationReport {
    let mut owners: BTreeMap<&Edge, Vec<usize>> = BTreeMap::new();
    for (k, part) in parts.iter().enumerate() {
        for e in part.edges() {
            owners.entry(e).or_default().push(k);
        }
    }
    let coverage_missing: Vec<Edge> = target.edges().iter().filter(|e| !owners.contains_key(e)).cloned().collect();
    let coverage_extra: Vec<Edge> = owners.keys().filter(|e| !target.contains_edge(e)).map(|e| (*e).clone()).collect();
    let overlap: Vec<(Edge, Vec<usize>)> =
        owners.iter().filter(|(_, ks)| ks.len() > 1).map(|(e, ks)| ((*e).clone(), ks.clone())).collect();
    let planar: Vec<bool> = parts.par_iter().map(|g| is_planar_indexed(g.vertex_count(), g.index_edges())).collect();
    let nonplanar_parts: Vec<usize> = planar.iter().enumerate().filter(|(_, ok)| !**ok).map(|(k, _)| k).collect();
    let passed =
        coverage_missing.is_empty() && coverage_extra.is_empty() && overlap.is_empty() && nonplanar_parts.is_empty();
    let optimality =
        if passed && parts.len() as u64 == lower_bound { Optimality::Optimal } else { Optimality::NotCertified };
    VerificationReport {
        coverage_missing,
        coverage_extra,
        overlap,
        nonplanar_parts,
        passed,
        optimality,
        part_count: parts.len(),
        lower_bound,
    }
}

/// `d` with its guarantee set from `lower`: OPTIMAL iff the part count equals it.
pub fn certify_optimal(d: Decomposition, lower: u64) -> Result<Decomposition, VerificationError> {
    let report = verify_decomposition(&d.target, &d.parts);
    if !report.passed {
        return Err(VerificationError::Failed(report.summary()));
    }
    let guarantee = if d.parts.len() as u64 == lower { Guarantee::Optimal } else { Guarantee::UpperBoundOnly };
    Ok(Decomposition { guarantee, ..d })
}
