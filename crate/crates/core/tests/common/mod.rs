//! Independent checks shared by the integration tests. Nothing here calls
//! the library's verifier or bounds: expected edge sets and thickness
//! values are rebuilt from their definitions.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use kron_thickness::graph::{Edge, Family, Graph, VertexLabel};
use kron_thickness::planarity::is_planar;

pub fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

fn layered(f: Family, i: u32, k: u8) -> VertexLabel {
    VertexLabel::layered(f, i, k)
}

fn pair(a: VertexLabel, b: VertexLabel) -> Edge {
    Edge::new(a, b).expect("distinct endpoints")
}

/// E(K_{n,n,n}×K₂): x^k_i ~ y^l_j etc. whenever the families differ and k ≠ l.
pub fn tripartite_double_cover_edges(n: u32) -> BTreeSet<Edge> {
    let fams = [Family::X, Family::Y, Family::Z];
    let mut out = BTreeSet::new();
    for (fa, a) in fams.iter().enumerate() {
        for b in &fams[fa + 1..] {
            for i in 1..=n {
                for j in 1..=n {
                    out.insert(pair(layered(*a, i, 1), layered(*b, j, 2)));
                    out.insert(pair(layered(*a, i, 2), layered(*b, j, 1)));
                }
            }
        }
    }
    out
}

/// E(K_n×K₂) over `Plain` vertices: p¹_i ~ p²_j for i ≠ j.
pub fn complete_double_cover_edges(n: u32) -> BTreeSet<Edge> {
    let mut out = BTreeSet::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.insert(pair(layered(Family::Plain, i, 1), layered(Family::Plain, j, 2)));
            }
        }
    }
    out
}

pub fn complete_bipartite_edges(m: u32, n: u32) -> BTreeSet<Edge> {
    let mut out = BTreeSet::new();
    for i in 1..=m {
        for j in 1..=n {
            out.insert(pair(VertexLabel::new(Family::U, i), VertexLabel::new(Family::V, j)));
        }
    }
    out
}

/// Every expected edge in exactly one part and nothing else.
pub fn check_partition(expected: &BTreeSet<Edge>, parts: &[Graph]) -> Result<(), String> {
    let mut count: BTreeMap<&Edge, usize> = BTreeMap::new();
    for part in parts {
        for e in part.edges() {
            *count.entry(e).or_default() += 1;
        }
    }
    if let Some((e, c)) = count.iter().find(|(_, c)| **c > 1) {
        return Err(format!("edge {e} appears {c} times"));
    }
    if let Some(e) = count.keys().find(|e| !expected.contains(**e)) {
        return Err(format!("edge {e} is not in the target"));
    }
    if let Some(e) = expected.iter().find(|e| !count.contains_key(e)) {
        return Err(format!("edge {e} is not covered"));
    }
    Ok(())
}

/// Faces traced from a rotation system (successor rule).
pub fn trace_faces(rotation: &[Vec<usize>]) -> usize {
    let mut used: Vec<Vec<bool>> = rotation.iter().map(|r| vec![false; r.len()]).collect();
    let mut faces = 0;
    for v in 0..rotation.len() {
        for k in 0..rotation[v].len() {
            if used[v][k] {
                continue;
            }
            faces += 1;
            let (mut a, mut s) = (v, k);
            while !used[a][s] {
                used[a][s] = true;
                let b = rotation[a][s];
                let back = rotation[b].iter().position(|&w| w == a).expect("symmetric rotation");
                (a, s) = (b, (back + 1) % rotation[b].len());
            }
        }
    }
    faces
}

fn components(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(a, b) in g.index_edges() {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    (0..n).filter(|&v| find(&mut parent, v) == v).count()
}

/// Planar with an embedding whose rotations match the adjacency and whose
/// traced faces give genus zero in every component.
pub fn certified_planar(g: &Graph) -> Result<(), String> {
    let verdict = is_planar(g);
    let emb = verdict.embedding().ok_or_else(|| format!("part rejected as non-planar: {g:?}"))?;
    let rotation: Vec<Vec<usize>> = (0..g.vertex_count()).map(|i| emb.rotation(i).to_vec()).collect();
    for (i, rot) in rotation.iter().enumerate() {
        let mut sorted = rot.clone();
        sorted.sort_unstable();
        if sorted != g.neighbors(i) {
            return Err(format!("rotation at {} does not match its neighbours", g.vertices()[i]));
        }
    }
    let isolated = (0..g.vertex_count()).filter(|&i| g.degree(i) == 0).count();
    let nontrivial = components(g) - isolated;
    let v = g.vertex_count() - isolated;
    if v + trace_faces(&rotation) != g.edge_count() + 2 * nontrivial {
        return Err("embedding has positive genus".into());
    }
    Ok(())
}

pub fn all_certified_planar(parts: &[Graph]) -> Result<(), String> {
    parts.iter().enumerate().try_for_each(|(k, p)| certified_planar(p).map_err(|e| format!("part {k}: {e}")))
}

/// (vertices, edges) of each component with at least one edge.
pub fn component_sizes(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] || g.degree(s) == 0 {
            continue;
        }
        seen[s] = true;
        let (mut stack, mut verts, mut degs) = (vec![s], 0, 0);
        while let Some(a) = stack.pop() {
            verts += 1;
            degs += g.degree(a);
            for &b in g.neighbors(a) {
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        out.push((verts, degs / 2));
    }
    out
}
