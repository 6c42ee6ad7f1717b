//! Immutable labeled simple graphs.
//!
//! A [`Graph`] is a value: every operation returns a new graph. Vertices are
//! kept sorted by label and edges sorted by their endpoint pair, so iteration
//! order is deterministic everywhere it can be observed.

mod generators;
mod label;
mod ops;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use generators::{
    make_complete, make_complete_bipartite, make_complete_multipartite, make_complete_tripartite, make_cycle,
    make_path, PartSpec,
};
pub(crate) use label::{x, y, z};
pub use label::{Atom, Family, VertexLabel};
pub use ops::{component_count, components, graph_union, identify_complete_bipartite, is_triangle_free, remove_edges};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid size {0}: part sizes must be at least 1")]
    InvalidSize(u32),
    #[error("self-loop at {0}")]
    SelfLoop(VertexLabel),
    #[error("edge endpoint {0} is not a vertex of the graph")]
    UnknownVertex(VertexLabel),
    #[error("edge {0} is not in the graph")]
    MissingEdge(Edge),
}

/// Unordered vertex pair, stored with the smaller label first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(VertexLabel, VertexLabel);

impl Edge {
    /// Returns `None` for a self-loop.
    pub fn new(a: VertexLabel, b: VertexLabel) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge(a, b)),
            std::cmp::Ordering::Greater => Some(Edge(b, a)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn first(&self) -> &VertexLabel {
        &self.0
    }

    pub fn second(&self) -> &VertexLabel {
        &self.1
    }

    pub fn endpoints(&self) -> (&VertexLabel, &VertexLabel) {
        (&self.0, &self.1)
    }

    pub fn contains(&self, v: &VertexLabel) -> bool {
        &self.0 == v || &self.1 == v
    }
}

/// Serialized as the pair of vertex names, e.g. `["x1_3", "y2_4"]`.
impl serde::Serialize for Edge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.0.to_string(), self.1.to_string()).serialize(s)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Builds an edge from two labels the caller knows are distinct.
pub(crate) fn edge(a: VertexLabel, b: VertexLabel) -> Edge {
    Edge::new(a, b).expect("edge endpoints must differ")
}

/// Simple undirected graph with labeled vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: Vec<VertexLabel>,
    edges: Vec<Edge>,
    /// Edges as sorted vertex-index pairs `(i, j)`, `i < j`, parallel to `edges`.
    index_edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on the given vertex set. Duplicate vertices and duplicate edges
    /// collapse; self-loops and dangling endpoints are rejected.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = VertexLabel>,
        E: IntoIterator<Item = (VertexLabel, VertexLabel)>,
    {
        let vertex_set: BTreeSet<VertexLabel> = vertices.into_iter().collect();
        let mut edge_set = BTreeSet::new();
        for (a, b) in edges {
            for endpoint in [&a, &b] {
                if !vertex_set.contains(endpoint) {
                    return Err(GraphError::UnknownVertex(endpoint.clone()));
                }
            }
            let e = Edge::new(a.clone(), b).ok_or(GraphError::SelfLoop(a))?;
            edge_set.insert(e);
        }
        Ok(Self::from_sets(vertex_set, edge_set))
    }

    /// Graph whose vertex set is exactly the endpoints of `edges`.
    pub fn from_edges<E>(edges: E) -> Self
    where
        E: IntoIterator<Item = Edge>,
    {
        let edge_set: BTreeSet<Edge> = edges.into_iter().collect();
        let vertex_set = edge_set.iter().flat_map(|e| [e.0.clone(), e.1.clone()]).collect();
        Self::from_sets(vertex_set, edge_set)
    }

    pub fn empty() -> Self {
        Self::from_sets(BTreeSet::new(), BTreeSet::new())
    }

    /// Caller guarantees every edge endpoint is in `vertex_set`.
    pub(crate) fn from_sets(vertex_set: BTreeSet<VertexLabel>, edge_set: BTreeSet<Edge>) -> Self {
        let vertices: Vec<VertexLabel> = vertex_set.into_iter().collect();
        let edges: Vec<Edge> = edge_set.into_iter().collect();
        let lookup = |v: &VertexLabel| vertices.binary_search(v).expect("endpoint in vertex set");
        let index_edges: Vec<(usize, usize)> = edges.iter().map(|e| (lookup(&e.0), lookup(&e.1))).collect();
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for &(i, j) in &index_edges {
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Graph { vertices, edges, index_edges, adjacency }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn index_edges(&self) -> &[(usize, usize)] {
        &self.index_edges
    }

    pub fn index_of(&self, v: &VertexLabel) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn contains_vertex(&self, v: &VertexLabel) -> bool {
        self.index_of(v).is_some()
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn has_edge(&self, a: &VertexLabel, b: &VertexLabel) -> bool {
        Edge::new(a.clone(), b.clone()).is_some_and(|e| self.contains_edge(&e))
    }

    /// Neighbor indices of vertex `i`, ascending.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn edge_set(&self) -> BTreeSet<Edge> {
        self.edges.iter().cloned().collect()
    }

    /// Subgraph induced on the vertices satisfying `keep`.
    pub fn induced<F>(&self, mut keep: F) -> Graph
    where
        F: FnMut(&VertexLabel) -> bool,
    {
        let vertices: BTreeSet<VertexLabel> = self.vertices.iter().filter(|v| keep(v)).cloned().collect();
        let edges = self.edges.iter().filter(|e| vertices.contains(&e.0) && vertices.contains(&e.1)).cloned().collect();
        Graph::from_sets(vertices, edges)
    }

    /// Same vertex set with isolated vertices dropped.
    pub fn without_isolated(&self) -> Graph {
        Graph::from_edges(self.edges.iter().cloned())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(|V|={}, |E|={}; ", self.vertex_count(), self.edge_count())?;
        for (k, e) in self.edges.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}
