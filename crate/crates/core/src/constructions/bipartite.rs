use std::collections::BTreeSet;

use super::{
    index_at_most, restrict_decomposition, u, v, ConstructionError, Decomposition, Provenance, CHEN_YIN,
    COMPLETE_TIMES_K2,
};
use crate::graph::{edge, make_complete, make_complete_bipartite, Edge, Family, Graph, VertexLabel};
use crate::products::times_k2;

/// Part `G_r` of the (p+1)-part decomposition of K_{4p,4p}, over `U`/`V`.
///
/// Block r is a = 4r−3, b, c, d = 4r. The part is K_{4,4} on the block
/// minus its matching, plus attachments to every other block i:
/// v_a, v_c to u_{4i−3}, u_{4i−2}; v_b, v_d to u_{4i−1}, u_{4i};
/// u_c, u_d to v_{4i−3}, v_{4i−1}; u_a, u_b to v_{4i−2}, v_{4i}.
pub fn chen_yin_part(p: u32, r: u32) -> Graph {
    let block = |r: u32| [4 * r - 3, 4 * r - 2, 4 * r - 1, 4 * r];
    let [a, b, c, d] = block(r);
    let mut edges = BTreeSet::new();
    for i in block(r) {
        for j in block(r) {
            if i != j {
                edges.insert(edge(u(i), v(j)));
            }
        }
    }
    for other in (1..=p).filter(|&i| i != r) {
        let [oa, ob, oc, od] = block(other);
        for (from, to) in [([v(a), v(c)], [u(oa), u(ob)]), ([v(b), v(d)], [u(oc), u(od)])] {
            for f in &from {
                for t in &to {
                    edges.insert(edge(f.clone(), t.clone()));
                }
            }
        }
        for (from, to) in [([u(c), u(d)], [v(oa), v(oc)]), ([u(a), u(b)], [v(ob), v(od)])] {
            for f in &from {
                for t in &to {
                    edges.insert(edge(f.clone(), t.clone()));
                }
            }
        }
    }
    Graph::from_edges(edges)
}

/// K_{4p,4p} in p+1 planar parts; the last is the matching {u_i v_i}.
pub fn chen_yin_k4p4p(p: u32) -> Result<Decomposition, ConstructionError> {
    if p == 0 {
        return Err(ConstructionError::InvalidSize(0));
    }
    let mut parts: Vec<Graph> = (1..=p).map(|r| chen_yin_part(p, r)).collect();
    parts.push(Graph::from_edges((1..=4 * p).map(|i| edge(u(i), v(i)))));
    let target = make_complete_bipartite(4 * p, 4 * p)?;
    Ok(Decomposition::new(target, parts, Provenance::new(CHEN_YIN)))
}

/// v_i ↦ p¹_i, u_i ↦ p²_i: K_{n,n} minus its matching becomes K_n×K₂.
fn to_double_cover(label: &VertexLabel) -> VertexLabel {
    let layer = match label.family() {
        Some(Family::V) => 1,
        Some(Family::U) => 2,
        other => unreachable!("bipartite part with family {other:?}"),
    };
    VertexLabel::layered(Family::Plain, label.index().expect("atom"), layer)
}

fn map_part(part: &Graph) -> Graph {
    Graph::from_edges(part.edges().iter().map(|e| edge(to_double_cover(e.first()), to_double_cover(e.second()))))
}

fn plain(i: u32, layer: u8) -> VertexLabel {
    VertexLabel::layered(Family::Plain, i, layer)
}

/// The part covering every edge at indices 4p+1, 4p+2 of K_{4p+2}×K₂.
fn extra_pair_part(p: u32) -> Graph {
    let (s, t) = (4 * p + 1, 4 * p + 2);
    let mut edges: Vec<Edge> = Vec::new();
    for j in 1..=4 * p {
        for hub in [s, t] {
            edges.push(edge(plain(hub, 1), plain(j, 2)));
            edges.push(edge(plain(hub, 2), plain(j, 1)));
        }
    }
    edges.push(edge(plain(s, 1), plain(t, 2)));
    edges.push(edge(plain(t, 1), plain(s, 2)));
    Graph::from_edges(edges)
}

/// K_n×K₂ in ⌈n/4⌉ planar parts, labelled p^k_i.
pub fn kn_times_k2_decomposition(n: u32) -> Result<Decomposition, ConstructionError> {
    if n <= 1 {
        return Err(ConstructionError::InvalidSize(n));
    }
    match n % 4 {
        0 => {
            let p = n / 4;
            let parts = (1..=p).map(|r| map_part(&chen_yin_part(p, r))).collect();
            let target = times_k2(&make_complete(n)?);
            Ok(Decomposition::new(target, parts, Provenance::new(COMPLETE_TIMES_K2)))
        }
        2 => {
            let p = n / 4;
            let mut parts: Vec<Graph> = (1..=p).map(|r| map_part(&chen_yin_part(p, r))).collect();
            parts.push(extra_pair_part(p));
            let target = times_k2(&make_complete(n)?);
            Ok(Decomposition::new(target, parts, Provenance::new(COMPLETE_TIMES_K2)))
        }
        _ => Ok(restrict_decomposition(&kn_times_k2_decomposition(n + 1)?, index_at_most(n))),
    }
}
