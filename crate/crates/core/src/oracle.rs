//! Exact thickness of small graphs by exhaustive search.
//!
//! Edges are assigned to parts in breadth-first order, a part only accepts
//! an edge if it stays planar, and part indices are opened in first-use
//! order so relabelled duplicates are never explored. Every witness is
//! re-checked by the verifier before it is returned.

use std::collections::VecDeque;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bounds::graph_lower_bound;
use crate::constructions::{Decomposition, Guarantee, Provenance};
use crate::graph::{is_triangle_free, remove_edges, Edge, Graph};
use crate::planarity::{euler_max_edges, is_planar_indexed};
use crate::verification::verify_decomposition;

pub const ORACLE_PROVENANCE: &str = "exhaustive-search";

/// Every graph with at most this many edges is planar (K₃,₃ has 9).
const ALWAYS_PLANAR_EDGES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub wall_limit: Duration,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, wall_limit: Duration) -> Self {
        assert!(max_nodes > 0 && !wall_limit.is_zero(), "budget must be positive");
        SearchBudget { max_nodes, wall_limit }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(50_000_000, Duration::from_secs(60))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionConstraints {
    /// Reserve the last part for exactly this edge.
    pub single_edge_part: Option<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Decomposition),
    /// Exhaustive search proved no partition exists.
    Infeasible,
    Timeout,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OracleStatus {
    Exact,
    /// The node budget ran out; the bounds are still proven.
    BoundsOnly,
    /// The wall-clock limit ran out.
    Timeout,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub status: OracleStatus,
    pub value: Option<u64>,
    pub lower: u64,
    pub upper: u64,
    pub witness: Option<Decomposition>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Stop {
    Nodes,
    Wall,
}

/// Edge indices in breadth-first discovery order from vertex 0 of each
/// component, so parts grow around shared vertices.
fn bfs_edge_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, &(a, b)) in g.index_edges().iter().enumerate() {
        incident[a].push(k);
        incident[b].push(k);
    }
    let mut seen_vertex = vec![false; n];
    let mut seen_edge = vec![false; g.edge_count()];
    let mut order = Vec::with_capacity(g.edge_count());
    for start in 0..n {
        if seen_vertex[start] {
            continue;
        }
        seen_vertex[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &k in &incident[v] {
                if !seen_edge[k] {
                    seen_edge[k] = true;
                    order.push(k);
                }
                let (a, b) = g.index_edges()[k];
                let w = if a == v { b } else { a };
                if !seen_vertex[w] {
                    seen_vertex[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    parts: Vec<Vec<(usize, usize)>>,
    assignment: Vec<usize>,
    per_part_limit: usize,
    nodes: u64,
    budget: &'a SearchBudget,
    deadline: Instant,
}

impl Search<'_> {
    /// Ok(true) when every edge from `depth` on has been placed.
    fn run(&mut self, depth: usize, used: usize) -> Result<bool, Stop> {
        if depth == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Stop::Nodes);
        }
        if self.nodes % 1024 == 0 && Instant::now() >= self.deadline {
            return Err(Stop::Wall);
        }
        let remaining = self.order.len() - depth;
        let slack: usize = self.parts.iter().map(|p| self.per_part_limit - p.len()).sum();
        if remaining > slack {
            return Ok(false);
        }
        let e = self.g.index_edges()[self.order[depth]];
        let open = (used + 1).min(self.parts.len());
        for k in 0..open {
            if self.parts[k].len() == self.per_part_limit {
                continue;
            }
            self.parts[k].push(e);
            let planar =
                self.parts[k].len() <= ALWAYS_PLANAR_EDGES || is_planar_indexed(self.g.vertex_count(), &self.parts[k]);
            if planar {
                self.assignment[self.order[depth]] = k;
                if self.run(depth + 1, used.max(k + 1))? {
                    return Ok(true);
                }
            }
            self.parts[k].pop();
        }
        Ok(false)
    }
}

fn parts_from_assignment(g: &Graph, assignment: &[usize], k: usize) -> Vec<Graph> {
    let mut buckets: Vec<Vec<Edge>> = vec![Vec::new(); k];
    for (e, &part) in g.edges().iter().zip(assignment) {
        buckets[part].push(e.clone());
    }
    buckets.into_iter().map(Graph::from_edges).collect()
}

/// Verified decomposition or a panic: the search never returns a witness
/// the verifier rejects.
fn verified(target: &Graph, parts: Vec<Graph>) -> Decomposition {
    let report = verify_decomposition(target, &parts);
    assert!(report.passed, "oracle produced an invalid witness: {}", report.summary());
    Decomposition::new(target.clone(), parts, Provenance::new(ORACLE_PROVENANCE))
}

fn search(g: &Graph, k: usize, budget: &SearchBudget, deadline: Instant) -> Result<Option<Vec<Graph>>, Stop> {
    if g.edge_count() == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let per_part_limit = euler_max_edges(g.vertex_count(), is_triangle_free(g));
    let mut s = Search {
        g,
        order: bfs_edge_order(g),
        parts: vec![Vec::new(); k],
        assignment: vec![0; g.edge_count()],
        per_part_limit,
        nodes: 0,
        budget,
        deadline,
    };
    if s.run(0, 0)? {
        let parts = parts_from_assignment(g, &s.assignment, k);
        Ok(Some(parts.into_iter().filter(|p| p.edge_count() > 0).collect()))
    } else {
        Ok(None)
    }
}

/// A partition of `g` into at most `k` planar parts, if one exists.
pub fn find_planar_partition(
    g: &Graph,
    k: usize,
    budget: &SearchBudget,
    constraints: &PartitionConstraints,
) -> SearchOutcome {
    let deadline = Instant::now() + budget.wall_limit;
    let (rest, reserved, k) = match &constraints.single_edge_part {
        Some(e) if g.contains_edge(e) && k >= 1 => {
            let rest = remove_edges(g, [e]).expect("edge present");
            (rest, Some(e.clone()), k - 1)
        }
        Some(_) => return SearchOutcome::Infeasible,
        None => (g.clone(), None, k),
    };
    match search(&rest, k, budget, deadline) {
        Ok(Some(mut parts)) => {
            match reserved {
                Some(e) => parts.push(Graph::from_edges([e])),
                None if parts.is_empty() => parts.push(g.clone()),
                None => {}
            }
            SearchOutcome::Found(verified(g, parts))
        }
        Ok(None) => SearchOutcome::Infeasible,
        Err(_) => SearchOutcome::Timeout,
    }
}

/// Greedy first-fit partition in breadth-first edge order.
pub fn greedy_partition(g: &Graph) -> Decomposition {
    let mut parts: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut assignment = vec![0; g.edge_count()];
    for k in bfs_edge_order(g) {
        let e = g.index_edges()[k];
        let slot = parts.iter_mut().position(|p| {
            p.push(e);
            let ok = is_planar_indexed(g.vertex_count(), p);
            if !ok {
                p.pop();
            }
            ok
        });
        assignment[k] = match slot {
            Some(s) => s,
            None => {
                parts.push(vec![e]);
                parts.len() - 1
            }
        };
    }
    let count = parts.len();
    let mut graphs = parts_from_assignment(g, &assignment, count);
    if graphs.is_empty() {
        graphs.push(g.clone());
    }
    verified(g, graphs)
}

/// θ(g) by iterative deepening from the Euler bound up to the greedy bound.
pub fn exact_thickness(g: &Graph, budget: &SearchBudget) -> OracleResult {
    let deadline = Instant::now() + budget.wall_limit;
    let mut lower = graph_lower_bound(g);
    let greedy = greedy_partition(g);
    let mut upper = greedy.part_count() as u64;
    let mut witness = greedy;
    let mut stop = None;
    while lower < upper {
        match search(g, lower as usize, budget, deadline) {
            Ok(Some(parts)) if !parts.is_empty() => {
                upper = parts.len() as u64;
                witness = verified(g, parts);
            }
            Ok(_) => lower += 1,
            Err(s) => {
                stop = Some(s);
                break;
            }
        }
    }
    let exact = lower == upper;
    witness.guarantee = if exact { Guarantee::Optimal } else { Guarantee::UpperBoundOnly };
    OracleResult {
        status: match stop {
            None => OracleStatus::Exact,
            Some(Stop::Nodes) => OracleStatus::BoundsOnly,
            Some(Stop::Wall) => OracleStatus::Timeout,
        },
        value: exact.then_some(lower),
        lower,
        upper,
        witness: Some(witness),
    }
}
