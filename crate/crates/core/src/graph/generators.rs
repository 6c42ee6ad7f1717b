use std::collections::BTreeSet;

use super::{edge, Family, Graph, GraphError, VertexLabel};

/// Sizes of the parts of a complete multipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartSpec(Vec<u32>);

impl PartSpec {
    pub fn new(sizes: Vec<u32>) -> Result<Self, GraphError> {
        if sizes.is_empty() {
            return Err(GraphError::InvalidSize(0));
        }
        if let Some(&bad) = sizes.iter().find(|&&s| s == 0) {
            return Err(GraphError::InvalidSize(bad));
        }
        Ok(PartSpec(sizes))
    }

    pub fn sizes(&self) -> &[u32] {
        &self.0
    }
}

fn positive(n: u32) -> Result<u32, GraphError> {
    if n == 0 {
        Err(GraphError::InvalidSize(0))
    } else {
        Ok(n)
    }
}

/// K_n on `Plain` vertices 1..=n.
pub fn make_complete(n: u32) -> Result<Graph, GraphError> {
    positive(n)?;
    let vertices: BTreeSet<_> = (1..=n).map(|i| VertexLabel::new(Family::Plain, i)).collect();
    let mut edges = BTreeSet::new();
    for i in 1..=n {
        for j in i + 1..=n {
            edges.insert(edge(VertexLabel::new(Family::Plain, i), VertexLabel::new(Family::Plain, j)));
        }
    }
    Ok(Graph::from_sets(vertices, edges))
}

/// K_{m,n} with parts `U` (size m) and `V` (size n).
pub fn make_complete_bipartite(m: u32, n: u32) -> Result<Graph, GraphError> {
    positive(m)?;
    positive(n)?;
    complete_multipartite_over(&[(Family::U, m), (Family::V, n)])
}

/// K_{l,m,n} with parts `X`, `Y`, `Z`.
pub fn make_complete_tripartite(l: u32, m: u32, n: u32) -> Result<Graph, GraphError> {
    for s in [l, m, n] {
        positive(s)?;
    }
    complete_multipartite_over(&[(Family::X, l), (Family::Y, m), (Family::Z, n)])
}

/// Two parts map to `U`/`V`, three to `X`/`Y`/`Z`; other part counts use
/// `Plain` vertices numbered consecutively.
pub fn make_complete_multipartite(spec: &PartSpec) -> Graph {
    match *spec.sizes() {
        [m, n] => complete_multipartite_over(&[(Family::U, m), (Family::V, n)]).expect("valid"),
        [l, m, n] => complete_multipartite_over(&[(Family::X, l), (Family::Y, m), (Family::Z, n)]).expect("valid"),
        _ => {
            let mut next = 1;
            let mut parts = Vec::new();
            for &s in spec.sizes() {
                parts.push((next..next + s).map(|i| VertexLabel::new(Family::Plain, i)).collect());
                next += s;
            }
            from_parts(parts)
        }
    }
}

fn complete_multipartite_over(parts: &[(Family, u32)]) -> Result<Graph, GraphError> {
    let parts: Vec<Vec<VertexLabel>> =
        parts.iter().map(|&(family, size)| (1..=size).map(|i| VertexLabel::new(family, i)).collect()).collect();
    Ok(from_parts(parts))
}

fn from_parts(parts: Vec<Vec<VertexLabel>>) -> Graph {
    let mut edges = BTreeSet::new();
    for (a, pa) in parts.iter().enumerate() {
        for pb in &parts[a + 1..] {
            for u in pa {
                for v in pb {
                    edges.insert(edge(u.clone(), v.clone()));
                }
            }
        }
    }
    Graph::from_sets(parts.into_iter().flatten().collect(), edges)
}

/// Path on n vertices (n−1 edges).
pub fn make_path(n: u32) -> Result<Graph, GraphError> {
    positive(n)?;
    let vertices: BTreeSet<_> = (1..=n).map(|i| VertexLabel::new(Family::Plain, i)).collect();
    let edges =
        (1..n).map(|i| edge(VertexLabel::new(Family::Plain, i), VertexLabel::new(Family::Plain, i + 1))).collect();
    Ok(Graph::from_sets(vertices, edges))
}

/// Cycle on n ≥ 3 vertices.
pub fn make_cycle(n: u32) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidSize(n));
    }
    let vertices: BTreeSet<_> = (1..=n).map(|i| VertexLabel::new(Family::Plain, i)).collect();
    let edges =
        (1..=n).map(|i| edge(VertexLabel::new(Family::Plain, i), VertexLabel::new(Family::Plain, i % n + 1))).collect();
    Ok(Graph::from_sets(vertices, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_counts() {
        assert_eq!(make_complete(5).unwrap().edge_count(), 10);
        assert_eq!(make_complete(1).unwrap().edge_count(), 0);
        assert_eq!(make_complete(0), Err(GraphError::InvalidSize(0)));
        for n in 1..=12u32 {
            let g = make_complete(n).unwrap();
            assert_eq!(g.vertex_count() as u32, n);
            assert_eq!(g.edge_count() as u32, n * (n - 1) / 2);
        }
    }

    #[test]
    fn complete_bipartite_counts() {
        assert_eq!(make_complete_bipartite(4, 4).unwrap().edge_count(), 16);
        let k11 = make_complete_bipartite(1, 1).unwrap();
        assert_eq!(k11.edge_count(), 1);
        assert_eq!(k11.vertices()[0], VertexLabel::new(Family::U, 1));
        assert!(make_complete_bipartite(0, 3).is_err());
        for m in 1..=6 {
            for n in 1..=6 {
                assert_eq!(make_complete_bipartite(m, n).unwrap().edge_count() as u32, m * n);
            }
        }
    }

    #[test]
    fn complete_tripartite_counts() {
        let tri = make_complete_tripartite(1, 1, 1).unwrap();
        assert_eq!(tri.edge_count(), 3);
        assert_eq!(make_complete_tripartite(3, 3, 3).unwrap().edge_count(), 27);
        assert_eq!(make_complete_tripartite(2, 3, 4).unwrap().edge_count(), 26);
        assert!(make_complete_tripartite(2, 0, 4).is_err());
        let g = make_complete_tripartite(2, 3, 4).unwrap();
        for e in g.edges() {
            assert_ne!(e.first().family(), e.second().family());
        }
    }

    #[test]
    fn part_spec_validation_and_dispatch() {
        assert!(PartSpec::new(vec![]).is_err());
        assert!(PartSpec::new(vec![2, 0]).is_err());
        let g = make_complete_multipartite(&PartSpec::new(vec![1, 2, 3, 4]).unwrap());
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 2 + 3 + 4 + 6 + 8 + 12);
        let k23 = make_complete_multipartite(&PartSpec::new(vec![2, 3]).unwrap());
        assert_eq!(k23, make_complete_bipartite(2, 3).unwrap());
    }

    #[test]
    fn paths_and_cycles() {
        assert_eq!(make_path(3).unwrap().edge_count(), 2);
        assert_eq!(make_path(1).unwrap().edge_count(), 0);
        assert_eq!(make_cycle(6).unwrap().edge_count(), 6);
        assert!(make_cycle(2).is_err());
    }
}
