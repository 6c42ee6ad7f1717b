//! Kronecker (tensor) products.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{
    components, edge, identify_complete_bipartite, make_complete, make_complete_bipartite, Family, Graph, GraphError,
    VertexLabel,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("structural violation: {0}")]
    Structure(String),
}

/// Label of the product vertex `(left, right)`.
///
/// When the right factor is a single edge on unlayered atoms, `(v, k)` is
/// flattened to `v` carrying layer `k`, which is how the ×K₂ constructions
/// address vertices (x_i^k). Everything else keeps the pair.
#[derive(Clone, Copy)]
enum Labeling {
    Flatten,
    Pairs,
}

fn labeling(g: &Graph, h: &Graph) -> Labeling {
    let right_is_edge = h.vertex_count() == 2 && h.edge_count() == 1;
    let left_flat = g.vertices().iter().all(|v| v.atom().is_some_and(|a| a.layer.is_none()));
    if right_is_edge && left_flat {
        Labeling::Flatten
    } else {
        Labeling::Pairs
    }
}

fn product_label(mode: Labeling, left: &VertexLabel, right_pos: usize, right: &VertexLabel) -> VertexLabel {
    match mode {
        Labeling::Flatten => left.with_layer(right_pos as u8 + 1).expect("atom label"),
        Labeling::Pairs => VertexLabel::pair(left.clone(), right.clone()),
    }
}

/// G × H: `(g,h) ~ (g',h')` iff `gg' ∈ E(G)` and `hh' ∈ E(H)`.
pub fn kronecker_product(g: &Graph, h: &Graph) -> Graph {
    let mode = labeling(g, h);
    let label = |gi: usize, hi: usize| product_label(mode, &g.vertices()[gi], hi, &h.vertices()[hi]);
    let mut vertices = BTreeSet::new();
    for gi in 0..g.vertex_count() {
        for hi in 0..h.vertex_count() {
            vertices.insert(label(gi, hi));
        }
    }
    let mut edges = BTreeSet::new();
    for &(a, b) in g.index_edges() {
        for &(c, d) in h.index_edges() {
            edges.insert(edge(label(a, c), label(b, d)));
            edges.insert(edge(label(a, d), label(b, c)));
        }
    }
    Graph::from_sets(vertices, edges)
}

/// G × K₂, the bipartite double cover, with layers 1 and 2.
pub fn times_k2(g: &Graph) -> Graph {
    kronecker_product(g, &make_complete(2).expect("K2"))
}

/// K_{m,n} × K_{p,q} split into its two components, which are
/// K_{mp,nq} (holding the product of the first parts) and K_{mq,np}.
pub fn bipartite_factor_split(m: u32, n: u32, p: u32, q: u32) -> Result<(Graph, Graph), ProductError> {
    let left = make_complete_bipartite(m, n)?;
    let right = make_complete_bipartite(p, q)?;
    let product = kronecker_product(&left, &right);
    let anchor = VertexLabel::pair(VertexLabel::new(Family::U, 1), VertexLabel::new(Family::U, 1));
    let mut comps = components(&product);
    if comps.len() != 2 {
        return Err(ProductError::Structure(format!("expected 2 components, found {}", comps.len())));
    }
    if !comps[0].contains_vertex(&anchor) {
        comps.swap(0, 1);
    }
    let second = comps.pop().expect("two components");
    let first = comps.pop().expect("two components");
    let (m, n, p, q) = (m as usize, n as usize, p as usize, q as usize);
    check_sizes(&first, m * p, n * q)?;
    check_sizes(&second, m * q, n * p)?;
    Ok((first, second))
}

fn check_sizes(g: &Graph, a: usize, b: usize) -> Result<(), ProductError> {
    match identify_complete_bipartite(g) {
        Some((s, t)) if (s, t) == (a, b) || (s, t) == (b, a) => Ok(()),
        found => Err(ProductError::Structure(format!("expected K_{{{a},{b}}}, identified {found:?}"))),
    }
}
