use std::collections::BTreeSet;

use super::{chen_yin_part, u, v, ConstructionError, Decomposition, Provenance, TRIPARTITE_N0, TRIPARTITE_N1};
use crate::graph::{edge, graph_union, make_complete_tripartite, x, y, z, Edge, Family, Graph, VertexLabel};
use crate::products::times_k2;

type Slot = (Family, u8);

/// The three bipartite blocks of K_{n,n,n}×K₂ whose first side is in layer 1,
/// as (image of V, image of U).
pub(super) const FIRST_BLOCKS: [(Slot, Slot); 3] =
    [((Family::X, 1), (Family::Y, 2)), ((Family::Y, 1), (Family::Z, 2)), ((Family::Z, 1), (Family::X, 2))];
pub(super) const SECOND_BLOCKS: [(Slot, Slot); 3] =
    [((Family::X, 2), (Family::Y, 1)), ((Family::Y, 2), (Family::Z, 1)), ((Family::Z, 2), (Family::X, 1))];

/// Copy of `part` with family `source.0` sent to `dest.0` and `source.1` to
/// `dest.1`, keeping indices.
pub fn relabel_bipartite_part(
    part: &Graph,
    source: (Family, Family),
    dest: (Slot, Slot),
) -> Result<Graph, ConstructionError> {
    let map = |label: &VertexLabel| -> Result<VertexLabel, ConstructionError> {
        let atom = label.atom().ok_or_else(|| ConstructionError::Label(format!("{label} is not an atom")))?;
        let (family, layer) = if atom.family == source.0 {
            dest.0
        } else if atom.family == source.1 {
            dest.1
        } else {
            return Err(ConstructionError::Label(format!("{label} is outside families {:?}", source)));
        };
        Ok(VertexLabel::layered(family, atom.index, layer))
    };
    let vertices = part.vertices().iter().map(map).collect::<Result<BTreeSet<_>, _>>()?;
    let edges = part
        .edges()
        .iter()
        .map(|e| Ok((map(e.first())?, map(e.second())?)))
        .collect::<Result<Vec<_>, ConstructionError>>()?;
    Ok(Graph::new(vertices, edges)?)
}

/// Union of the copies of a `V`/`U` part placed on the given blocks.
pub(super) fn replicate(part: &Graph, blocks: &[(Slot, Slot)]) -> Graph {
    blocks.iter().fold(Graph::empty(), |acc, &dest| {
        let copy = relabel_bipartite_part(part, (Family::V, Family::U), dest).expect("part over U and V");
        graph_union(&acc, &copy)
    })
}

pub(super) fn target(n: u32) -> Result<Graph, ConstructionError> {
    Ok(times_k2(&make_complete_tripartite(n, n, n)?))
}

/// Parts G¹_1..G¹_p, G²_1..G²_p and the 6-cycle part, over indices ≤ 4p.
fn multiple_of_four_parts(p: u32) -> Vec<Graph> {
    let base: Vec<Graph> = (1..=p).map(|r| chen_yin_part(p, r)).collect();
    let mut parts: Vec<Graph> = base.iter().map(|g| replicate(g, &FIRST_BLOCKS)).collect();
    parts.extend(base.iter().map(|g| replicate(g, &SECOND_BLOCKS)));
    let matching = Graph::from_edges((1..=4 * p).map(|i| edge(u(i), v(i))));
    let all: Vec<(Slot, Slot)> = FIRST_BLOCKS.iter().chain(&SECOND_BLOCKS).copied().collect();
    parts.push(replicate(&matching, &all));
    parts
}

/// K_{4p,4p,4p}×K₂ in 2p+1 planar parts. The last part is 4p disjoint
/// 6-cycles x¹_i y²_i z¹_i x²_i y¹_i z²_i.
pub fn knnn_times_k2_n0mod4(p: u32) -> Result<Decomposition, ConstructionError> {
    if p == 0 {
        return Err(ConstructionError::InvalidSize(0));
    }
    Ok(Decomposition::new(target(4 * p)?, multiple_of_four_parts(p), Provenance::new(TRIPARTITE_N0)))
}

/// How the parts for n = 4p+1 differ from those for n = 4p, part by part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionLedger {
    pub base: Decomposition,
    /// Edges in the new part but not the corresponding base part.
    pub added: Vec<BTreeSet<Edge>>,
    /// Edges in the base part but not the new one.
    pub deleted: Vec<BTreeSet<Edge>>,
}

/// Edges added to and deleted from G^s_r, with t the other layer and
/// N = 4p+1 the new index.
fn block_changes(p: u32, r: u32, s: u8) -> (Vec<Edge>, Vec<Edge>) {
    let t = 3 - s;
    let n = 4 * p + 1;
    let (a, b, c, d) = (4 * r - 3, 4 * r - 2, 4 * r - 1, 4 * r);
    // b-vertex of the next block, residues taken in 1..=4p
    let next_b = match (4 * r + 2) % (4 * p) {
        0 => 4 * p,
        m => m,
    };
    let added = vec![
        edge(x(n, s), y(a, t)),
        edge(x(n, s), y(d, t)),
        edge(y(n, t), x(c, s)),
        edge(y(n, t), x(next_b, s)),
        edge(y(n, s), z(b, t)),
        edge(y(n, s), z(c, t)),
        edge(z(n, t), y(b, s)),
        edge(z(n, t), y(c, s)),
        edge(z(n, s), x(a, t)),
        edge(z(n, s), x(d, t)),
        edge(x(n, t), z(a, s)),
        edge(x(n, t), z(d, s)),
        edge(z(d, s), x(d, t)),
        edge(y(c, s), z(c, t)),
        edge(z(b, s), y(b, t)),
        edge(x(a, s), z(a, t)),
    ];
    let deleted = vec![edge(y(a, s), z(d, t)), edge(z(b, s), x(c, t))];
    (added, deleted)
}

/// Edges of the last part for n = 4p+1.
fn final_part(p: u32) -> Graph {
    let n = 4 * p + 1;
    let mut edges = Vec::new();
    for r in 1..=p {
        let (a, b, c, d) = (4 * r - 3, 4 * r - 2, 4 * r - 1, 4 * r);
        for s in [1u8, 2] {
            let t = 3 - s;
            for i in [b, c] {
                edges.extend([
                    edge(x(n, s), y(i, t)),
                    edge(z(n, s), x(i, t)),
                    edge(x(n, s), z(i, t)),
                    edge(x(i, s), z(i, t)),
                ]);
            }
            for i in [a, d] {
                edges.extend([
                    edge(y(n, s), z(i, t)),
                    edge(z(n, s), y(i, t)),
                    edge(y(n, s), x(i, t)),
                    edge(y(i, s), z(i, t)),
                ]);
            }
            edges.extend([a, b, c, d].map(|i| edge(x(i, s), y(i, t))));
            edges.extend([edge(y(a, s), z(d, t)), edge(z(b, s), x(c, t))]);
        }
    }
    edges.extend([
        edge(x(n, 1), y(n, 2)),
        edge(y(n, 2), z(n, 1)),
        edge(z(n, 1), x(n, 2)),
        edge(x(n, 2), y(n, 1)),
        edge(y(n, 1), z(n, 2)),
        edge(z(n, 2), x(n, 1)),
    ]);
    Graph::from_edges(edges)
}

/// K_{4p+1,4p+1,4p+1}×K₂ in 2p+1 planar parts, p ≥ 2, together with the
/// part-by-part changes from the n = 4p decomposition.
pub fn knnn_times_k2_n1mod4_with_ledger(p: u32) -> Result<(Decomposition, ExtensionLedger), ConstructionError> {
    if p < 2 {
        return Err(ConstructionError::UseFixture(4 * p + 1));
    }
    let base = knnn_times_k2_n0mod4(p)?;
    let mut parts = Vec::with_capacity(base.parts.len());
    for (k, old) in base.parts[..2 * p as usize].iter().enumerate() {
        let (s, r) = if k < p as usize { (1, k as u32 + 1) } else { (2, k as u32 + 1 - p) };
        let (added, deleted) = block_changes(p, r, s);
        let mut edges = old.edge_set();
        for e in &deleted {
            if !edges.remove(e) {
                return Err(ConstructionError::Conflict(format!("{e} is not in part {k}")));
            }
        }
        for e in added {
            if !edges.insert(e.clone()) {
                return Err(ConstructionError::Conflict(format!("{e} already in part {k}")));
            }
        }
        parts.push(Graph::from_edges(edges));
    }
    parts.push(final_part(p));
    let diff = |new: &Graph, old: &Graph| -> BTreeSet<Edge> {
        new.edges().iter().filter(|e| !old.contains_edge(e)).cloned().collect()
    };
    let added = parts.iter().zip(&base.parts).map(|(new, old)| diff(new, old)).collect();
    let deleted = parts.iter().zip(&base.parts).map(|(new, old)| diff(old, new)).collect();
    let d = Decomposition::new(target(4 * p + 1)?, parts, Provenance::new(TRIPARTITE_N1));
    Ok((d, ExtensionLedger { base, added, deleted }))
}

pub fn knnn_times_k2_n1mod4(p: u32) -> Result<Decomposition, ConstructionError> {
    knnn_times_k2_n1mod4_with_ledger(p).map(|(d, _)| d)
}
