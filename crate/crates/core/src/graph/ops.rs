use std::collections::{BTreeSet, VecDeque};

use super::{Edge, Graph, GraphError};

/// Union of vertex sets and edge sets. Equal labels denote the same vertex.
pub fn graph_union(a: &Graph, b: &Graph) -> Graph {
    let vertices = a.vertices().iter().chain(b.vertices()).cloned().collect();
    let edges = a.edges().iter().chain(b.edges()).cloned().collect();
    Graph::from_sets(vertices, edges)
}

/// `g` with the given edges removed. Every edge must be present.
pub fn remove_edges<'a, I>(g: &Graph, edges: I) -> Result<Graph, GraphError>
where
    I: IntoIterator<Item = &'a Edge>,
{
    let mut kept = g.edge_set();
    for e in edges {
        if !kept.remove(e) && !g.contains_edge(e) {
            return Err(GraphError::MissingEdge(e.clone()));
        }
    }
    Ok(Graph::from_sets(g.vertices().iter().cloned().collect(), kept))
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.index_edges().iter().all(|&(i, j)| {
        let (a, b) = (g.neighbors(i), g.neighbors(j));
        // sorted-list intersection
        let (mut s, mut t) = (0, 0);
        while s < a.len() && t < b.len() {
            match a[s].cmp(&b[t]) {
                std::cmp::Ordering::Less => s += 1,
                std::cmp::Ordering::Greater => t += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    })
}

/// Vertex-index sets of the connected components, each sorted, ordered by
/// their smallest vertex.
pub(crate) fn component_indices(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for start in 0..g.vertex_count() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn component_count(g: &Graph) -> usize {
    component_indices(g).len()
}

/// Maximal connected subgraphs, ordered by smallest vertex label.
pub fn components(g: &Graph) -> Vec<Graph> {
    component_indices(g)
        .into_iter()
        .map(|comp| {
            let members: BTreeSet<usize> = comp.iter().copied().collect();
            let vertices = comp.iter().map(|&i| g.vertices()[i].clone()).collect();
            let edges = g
                .index_edges()
                .iter()
                .zip(g.edges())
                .filter(|((i, _), _)| members.contains(i))
                .map(|(_, e)| e.clone())
                .collect();
            Graph::from_sets(vertices, edges)
        })
        .collect()
}

/// Part sizes `(m, n)` if `g` is a complete bipartite graph K_{m,n} with
/// m, n ≥ 1. The part holding the smallest vertex label comes first.
pub fn identify_complete_bipartite(g: &Graph) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    let mut color: Vec<Option<bool>> = vec![None; n];
    color[0] = Some(false);
    let mut queue = VecDeque::from([0usize]);
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        let c = color[v].expect("colored before enqueue");
        for &w in g.neighbors(v) {
            match color[w] {
                None => {
                    color[w] = Some(!c);
                    reached += 1;
                    queue.push_back(w);
                }
                Some(cw) if cw == c => return None,
                Some(_) => {}
            }
        }
    }
    if reached != n {
        return None;
    }
    let first = color.iter().filter(|c| **c == Some(false)).count();
    let second = n - first;
    (first * second == g.edge_count()).then_some((first, second))
}

#[cfg(test)]
mod tests {
    use super::super::{make_complete, make_complete_bipartite, make_cycle, Family, VertexLabel};
    use super::*;

    #[test]
    fn union_identity_and_idempotence() {
        let a = make_complete_bipartite(2, 3).unwrap();
        assert_eq!(graph_union(&a, &Graph::empty()), a);
        assert_eq!(graph_union(&a, &a), a);
    }

    #[test]
    fn remove_all_edges_and_missing_edge() {
        let g = make_complete(4).unwrap();
        let h = remove_edges(&g, g.edges()).unwrap();
        assert_eq!(h.edge_count(), 0);
        assert_eq!(h.vertex_count(), 4);
        let e = g.edges()[0].clone();
        assert_eq!(remove_edges(&h, [&e]), Err(GraphError::MissingEdge(e)));
    }

    #[test]
    fn k44_minus_matching_is_cubic() {
        let g = make_complete_bipartite(4, 4).unwrap();
        let matching: Vec<Edge> = (1..=4)
            .map(|i| Edge::new(VertexLabel::new(Family::U, i), VertexLabel::new(Family::V, i)).unwrap())
            .collect();
        let crown = remove_edges(&g, &matching).unwrap();
        assert_eq!(crown.edge_count(), 12);
        assert!((0..8).all(|i| crown.degree(i) == 3));
    }

    #[test]
    fn triangles() {
        assert!(is_triangle_free(&make_complete_bipartite(3, 5).unwrap()));
        assert!(!is_triangle_free(&make_complete(3).unwrap()));
        assert!(is_triangle_free(&make_cycle(4).unwrap()));
    }

    #[test]
    fn complete_bipartite_identification() {
        assert_eq!(identify_complete_bipartite(&make_complete_bipartite(2, 6).unwrap()), Some((2, 6)));
        assert_eq!(identify_complete_bipartite(&make_cycle(6).unwrap()), None);
        assert_eq!(identify_complete_bipartite(&make_cycle(4).unwrap()), Some((2, 2)));
        assert_eq!(identify_complete_bipartite(&make_complete(1).unwrap()), None);
        assert_eq!(identify_complete_bipartite(&make_complete(3).unwrap()), None);
    }

    #[test]
    fn components_of_connected_graph() {
        let g = make_cycle(5).unwrap();
        assert_eq!(components(&g), vec![g]);
    }
}
