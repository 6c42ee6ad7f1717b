use std::path::{Path, PathBuf};

use super::tripartite::{replicate, target, FIRST_BLOCKS, SECOND_BLOCKS};
use super::{ConstructionError, Decomposition, Provenance, TRIPARTITE_SEEDED};
use crate::format::decomposition_from_json;
use crate::graph::{edge, make_complete_bipartite, x, y, z, Edge, Family, Graph};
use crate::oracle::{find_planar_partition, PartitionConstraints, SearchBudget, SearchOutcome};
use crate::planarity::is_planar_indexed;
use crate::verification::verify_decomposition;

/// Planar decomposition of K_{4p+3,4p+3} into p+2 parts, the last of which
/// is the single edge v_a u_b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalBipartiteDecomposition {
    p: u32,
    parts: Vec<Graph>,
    single_edge: Edge,
}

impl MinimalBipartiteDecomposition {
    /// Checks part count, the single-edge last part, coverage and planarity.
    pub fn new(p: u32, parts: Vec<Graph>) -> Result<Self, ConstructionError> {
        let k = 4 * p + 3;
        let invalid = |msg: String| Err(ConstructionError::SeedInvalid(msg));
        if parts.len() != p as usize + 2 {
            return invalid(format!("K_{{{k},{k}}} seed needs {} parts, found {}", p + 2, parts.len()));
        }
        let last = parts.last().expect("p + 2 parts");
        if last.edge_count() != 1 {
            return invalid(format!("last part has {} edges, expected 1", last.edge_count()));
        }
        let single_edge = last.edges()[0].clone();
        let report = verify_decomposition(&make_complete_bipartite(k, k)?, &parts);
        if !report.passed {
            return invalid(format!("does not decompose K_{{{k},{k}}}: {}", report.summary()));
        }
        Ok(MinimalBipartiteDecomposition { p, parts, single_edge })
    }

    pub fn from_decomposition(d: &Decomposition) -> Result<Self, ConstructionError> {
        let k = d.target.vertex_count() as u32 / 2;
        if k < 3 || k % 4 != 3 {
            return Err(ConstructionError::SeedInvalid(format!("target has {} vertices", d.target.vertex_count())));
        }
        Self::new((k - 3) / 4, d.parts.clone())
    }

    pub fn from_json(text: &str) -> Result<Self, ConstructionError> {
        let d = decomposition_from_json(text).map_err(|e| ConstructionError::SeedInvalid(e.to_string()))?;
        Self::from_decomposition(&d)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn parts(&self) -> &[Graph] {
        &self.parts
    }

    pub fn single_edge(&self) -> &Edge {
        &self.single_edge
    }

    /// Indices `(a, b)` of the single edge v_a u_b.
    pub fn single_edge_indices(&self) -> (u32, u32) {
        let (first, second) = self.single_edge.endpoints();
        let (uu, vv) = if first.family() == Some(Family::U) { (first, second) } else { (second, first) };
        (vv.index().expect("atom"), uu.index().expect("atom"))
    }

    pub fn to_decomposition(&self) -> Decomposition {
        let k = 4 * self.p + 3;
        let target = make_complete_bipartite(k, k).expect("k >= 3");
        Decomposition::new(target, self.parts.clone(), Provenance::new("bipartite-seed"))
    }
}

/// Source of seed decompositions for K_{4p+3,4p+3}.
pub trait SeedProvider {
    /// `None` when this provider has nothing for `p`.
    fn seed(&self, p: u32) -> Option<Result<MinimalBipartiteDecomposition, ConstructionError>>;
}

pub struct NoSeeds;

impl SeedProvider for NoSeeds {
    fn seed(&self, _p: u32) -> Option<Result<MinimalBipartiteDecomposition, ConstructionError>> {
        None
    }
}

fn read_seed(path: &Path) -> Result<MinimalBipartiteDecomposition, ConstructionError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ConstructionError::SeedInvalid(format!("{}: {e}", path.display())))?;
    MinimalBipartiteDecomposition::from_json(&text)
}

/// One seed file, offered only for the size it decomposes.
pub struct SeedFile(pub PathBuf);

impl SeedProvider for SeedFile {
    fn seed(&self, p: u32) -> Option<Result<MinimalBipartiteDecomposition, ConstructionError>> {
        Some(read_seed(&self.0).and_then(|s| {
            if s.p() == p {
                Ok(s)
            } else {
                let (want, have) = (4 * p + 3, 4 * s.p() + 3);
                Err(ConstructionError::SeedInvalid(format!(
                    "seed is for K_{{{have},{have}}}, need K_{{{want},{want}}}"
                )))
            }
        }))
    }
}

/// Directory holding files named `k{k}_{k}.json`.
pub struct SeedDirectory(pub PathBuf);

impl SeedDirectory {
    pub fn path_for(&self, p: u32) -> PathBuf {
        let k = 4 * p + 3;
        self.0.join(format!("k{k}_{k}.json"))
    }
}

impl SeedProvider for SeedDirectory {
    fn seed(&self, p: u32) -> Option<Result<MinimalBipartiteDecomposition, ConstructionError>> {
        let path = self.path_for(p);
        path.is_file().then(|| read_seed(&path))
    }
}

/// Searches for a seed with the exact partition oracle, forcing v_1 u_1
/// into a part of its own.
pub struct OracleSeeds(pub SearchBudget);

impl SeedProvider for OracleSeeds {
    fn seed(&self, p: u32) -> Option<Result<MinimalBipartiteDecomposition, ConstructionError>> {
        let k = 4 * p + 3;
        let g = make_complete_bipartite(k, k).expect("k >= 3");
        let constraints = PartitionConstraints { single_edge_part: Some(edge(super::u(1), super::v(1))) };
        match find_planar_partition(&g, p as usize + 2, &self.0, &constraints) {
            SearchOutcome::Found(d) => Some(MinimalBipartiteDecomposition::new(p, d.parts)),
            SearchOutcome::Infeasible | SearchOutcome::Timeout => None,
        }
    }
}

/// K_{4p+3,4p+3,4p+3}×K₂ in 2p+2 planar parts from a seed, p ≥ 1.
///
/// Each seed part is copied onto the three blocks of each layer. The six
/// copies of the single edge are moved into the first two parts of the
/// opposite layer, where each joins two separate copies.
pub fn assemble_from_seed(p: u32, seed: &MinimalBipartiteDecomposition) -> Result<Decomposition, ConstructionError> {
    if p == 0 {
        return Err(ConstructionError::UseFixture(3));
    }
    if seed.p() != p {
        return Err(ConstructionError::SeedInvalid(format!("seed has p={}, need p={p}", seed.p())));
    }
    let body = &seed.parts()[..=p as usize];
    let first: Vec<Graph> = body.iter().map(|h| replicate(h, &FIRST_BLOCKS)).collect();
    let second: Vec<Graph> = body.iter().map(|h| replicate(h, &SECOND_BLOCKS)).collect();
    let (a, b) = seed.single_edge_indices();
    let moves: [(usize, bool, Vec<Edge>); 4] = [
        (0, true, vec![edge(x(a, 2), y(b, 1)), edge(z(a, 2), x(b, 1))]),
        (0, false, vec![edge(x(a, 1), y(b, 2)), edge(z(a, 1), x(b, 2))]),
        (1, true, vec![edge(y(a, 2), z(b, 1))]),
        (1, false, vec![edge(y(a, 1), z(b, 2))]),
    ];
    let last = seed.parts().last().expect("seed parts");
    let leftover: Vec<Edge> = [replicate(last, &FIRST_BLOCKS), replicate(last, &SECOND_BLOCKS)]
        .iter()
        .flat_map(|g| g.edges().to_vec())
        .collect();
    let mut moved: Vec<Edge> = moves.iter().flat_map(|(_, _, es)| es.clone()).collect();
    moved.sort();
    let mut expected = leftover;
    expected.sort();
    if moved != expected {
        return Err(ConstructionError::Conflict("relocated edges differ from the single-edge copies".into()));
    }
    let (mut first, mut second) = (first, second);
    for (i, in_first, es) in moves {
        let part = if in_first { &mut first[i] } else { &mut second[i] };
        let grown = Graph::from_edges(part.edges().iter().cloned().chain(es));
        if !is_planar_indexed(grown.vertex_count(), grown.index_edges()) {
            let layer = if in_first { 1 } else { 2 };
            return Err(ConstructionError::Conflict(format!("part {} of layer {layer} became non-planar", i + 1)));
        }
        *part = grown;
    }
    first.extend(second);
    Ok(Decomposition::new(target(4 * p + 3)?, first, Provenance::new(TRIPARTITE_SEEDED)))
}
