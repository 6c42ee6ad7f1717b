//! Exact planarity testing with combinatorial embeddings as certificates.

mod lr;

use crate::graph::{component_count, Graph, VertexLabel};

/// Rotation system: for every vertex, its neighbors in clockwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    vertices: Vec<VertexLabel>,
    rotation: Vec<Vec<usize>>,
}

impl Embedding {
    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    /// Clockwise neighbor indices around vertex `i`.
    pub fn rotation(&self, i: usize) -> &[usize] {
        &self.rotation[i]
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Faces traced by the rule "arrive at w from v, leave along the
    /// successor of v in w's rotation". Isolated vertices contribute none.
    pub fn face_count(&self) -> usize {
        let position: Vec<std::collections::HashMap<usize, usize>> =
            self.rotation.iter().map(|r| r.iter().enumerate().map(|(k, &w)| (w, k)).collect()).collect();
        let mut used: Vec<Vec<bool>> = self.rotation.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = 0;
        for v in 0..self.rotation.len() {
            for k in 0..self.rotation[v].len() {
                if used[v][k] {
                    continue;
                }
                faces += 1;
                let (mut a, mut slot) = (v, k);
                while !used[a][slot] {
                    used[a][slot] = true;
                    let b = self.rotation[a][slot];
                    let back = position[b][&a];
                    let len = self.rotation[b].len();
                    (a, slot) = (b, (back + 1) % len);
                }
            }
        }
        faces
    }

    /// Euler's formula V − E + F = 1 + C, with one outer face per
    /// non-trivial component and isolated vertices counted as components.
    pub fn satisfies_euler(&self, components: usize) -> bool {
        let isolated = self.rotation.iter().filter(|r| r.is_empty()).count();
        let nontrivial = components - isolated;
        let v = self.vertices.len() - isolated;
        // each non-trivial component has its own outer face in the orbit count
        v + self.face_count() == self.edge_count() + 2 * nontrivial
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Embedding(Embedding),
    /// The edge count exceeds the Euler limit.
    EdgeCount {
        edges: usize,
        limit: usize,
    },
    /// The left-right constraints are unsatisfiable.
    LeftRightConflict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarityVerdict {
    pub planar: bool,
    pub certificate: Option<Certificate>,
}

impl PlanarityVerdict {
    pub fn embedding(&self) -> Option<&Embedding> {
        match &self.certificate {
            Some(Certificate::Embedding(e)) => Some(e),
            _ => None,
        }
    }
}

pub fn is_planar(g: &Graph) -> PlanarityVerdict {
    let n = g.vertex_count();
    let limit = lr::euler_limit(n, false);
    if g.edge_count() > limit {
        return PlanarityVerdict {
            planar: false,
            certificate: Some(Certificate::EdgeCount { edges: g.edge_count(), limit }),
        };
    }
    match lr::planar_embedding(n, g.index_edges()) {
        Some(rotation) => {
            let embedding = Embedding { vertices: g.vertices().to_vec(), rotation };
            debug_assert!(embedding.satisfies_euler(component_count(g)));
            PlanarityVerdict { planar: true, certificate: Some(Certificate::Embedding(embedding)) }
        }
        None => PlanarityVerdict { planar: false, certificate: Some(Certificate::LeftRightConflict) },
    }
}

/// Planarity of the graph on vertices `0..n` with the given edges, without
/// building a certificate. Edges must be simple and loop-free.
pub fn is_planar_indexed(n: usize, edges: &[(usize, usize)]) -> bool {
    lr::is_planar(n, edges)
}

/// Maximum edge count of a planar simple graph on `v` vertices: 3v−6, or
/// 2v−4 when triangle-free. Below 3 vertices, the complete count C(v,2).
pub fn euler_max_edges(v: usize, triangle_free: bool) -> usize {
    lr::euler_limit(v, triangle_free)
}
