//! Left-right planarity test (de Fraysseix–Rosenstiehl criterion, in the
//! formulation of Brandes) with embedding construction.
//!
//! Works on vertex indices `0..n` and an edge list without loops or
//! duplicates. Runs in linear time after the Euler quick-reject.

use std::collections::HashMap;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn new(low: usize, high: usize) -> Self {
        Interval { low: Some(low), high: Some(high) }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState {
    adj: Vec<Vec<(usize, usize)>>,
    src: Vec<usize>,
    dst: Vec<usize>,
    oriented: Vec<bool>,
    height: Vec<usize>,
    parent_edge: Vec<Option<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    out: Vec<Vec<usize>>,
    roots: Vec<usize>,
    // testing phase
    reference: Vec<Option<usize>>,
    side: Vec<i8>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<Option<usize>>,
}

/// Cyclic neighbor order around each vertex.
pub(crate) type Rotation = Vec<Vec<usize>>;

/// `Some(rotation)` if the graph is planar.
pub(crate) fn planar_embedding(n: usize, edges: &[(usize, usize)]) -> Option<Rotation> {
    let mut state = LrState::new(n, edges)?;
    if !state.run_test() {
        return None;
    }
    Some(state.embed(n))
}

pub(crate) fn is_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    LrState::new(n, edges).is_some_and(|mut s| s.run_test())
}

/// Largest edge count a planar simple graph on `n` vertices can have.
pub(crate) fn euler_limit(n: usize, triangle_free: bool) -> usize {
    match n {
        0 | 1 => 0,
        2 => 1,
        _ if triangle_free => 2 * n - 4,
        _ => 3 * n - 6,
    }
}

impl LrState {
    fn new(n: usize, edges: &[(usize, usize)]) -> Option<Self> {
        if edges.len() > euler_limit(n, false) {
            return None;
        }
        let m = edges.len();
        let mut adj = vec![Vec::new(); n];
        for (eid, &(a, b)) in edges.iter().enumerate() {
            adj[a].push((b, eid));
            adj[b].push((a, eid));
        }
        Some(LrState {
            adj,
            src: vec![NONE; m],
            dst: vec![NONE; m],
            oriented: vec![false; m],
            height: vec![NONE; n],
            parent_edge: vec![None; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            out: vec![Vec::new(); n],
            roots: Vec::new(),
            reference: vec![None; m],
            side: vec![1; m],
            stack: Vec::new(),
            stack_bottom: vec![0; m],
            lowpt_edge: vec![None; m],
        })
    }

    fn run_test(&mut self) -> bool {
        let n = self.height.len();
        for v in 0..n {
            if self.height[v] == NONE {
                self.height[v] = 0;
                self.roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..n {
            let depth = &self.nesting_depth;
            self.out[v].sort_by_key(|&e| depth[e]);
        }
        let roots = self.roots.clone();
        roots.into_iter().all(|r| self.test(r))
    }

    fn orient(&mut self, v: usize) {
        let parent = self.parent_edge[v];
        for k in 0..self.adj[v].len() {
            let (w, e) = self.adj[v][k];
            if self.oriented[e] {
                continue;
            }
            self.oriented[e] = true;
            self.src[e] = v;
            self.dst[e] = w;
            self.out[v].push(e);
            self.lowpt[e] = self.height[v];
            self.lowpt2[e] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = Some(e);
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[e] = self.height[w];
            }
            self.nesting_depth[e] = 2 * self.lowpt[e] as i64;
            if self.lowpt2[e] < self.height[v] {
                self.nesting_depth[e] += 1;
            }
            if let Some(pe) = parent {
                if self.lowpt[e] < self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[e]);
                    self.lowpt[pe] = self.lowpt[e];
                } else if self.lowpt[e] > self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[e]);
                } else {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[e]);
                }
            }
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let parent = self.parent_edge[v];
        for k in 0..self.out[v].len() {
            let ei = self.out[v][k];
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.stack.push(ConflictPair { left: Interval::default(), right: Interval::new(ei, ei) });
            }
            if self.lowpt[ei] < self.height[v] {
                let pe = parent.expect("return edge below the root");
                if k == 0 {
                    self.lowpt_edge[pe] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, pe) {
                    return false;
                }
            }
        }
        if let Some(pe) = parent {
            self.remove_back_edges(pe);
        }
        true
    }

    fn conflicting(&self, interval: &Interval, b: usize) -> bool {
        match interval.high {
            Some(h) if !interval.is_empty() => self.lowpt[h] > self.lowpt[b],
            _ => false,
        }
    }

    fn lowest(&self, pair: &ConflictPair) -> usize {
        match (pair.left.low, pair.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => unreachable!("empty conflict pair on stack"),
        }
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut merged = ConflictPair::default();
        // merge return edges of ei into merged.right
        loop {
            let mut q = self.stack.pop().expect("return edges of ei on stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("non-empty right interval");
            if self.lowpt[q_low] > self.lowpt[e] {
                if merged.right.is_empty() {
                    merged.right = q.right;
                } else {
                    let low = merged.right.low.expect("non-empty");
                    self.reference[low] = q.right.high;
                }
                merged.right.low = q.right.low;
            } else {
                self.reference[q_low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // merge conflicting return edges of earlier siblings into merged.left
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("peeked");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(low) = merged.right.low {
                self.reference[low] = q.right.high;
            }
            if q.right.low.is_some() {
                merged.right.low = q.right.low;
            }
            if merged.left.is_empty() {
                merged.left = q.left;
            } else if let Some(low) = merged.left.low {
                self.reference[low] = q.left.high;
            }
            merged.left.low = q.left.low;
        }
        if !(merged.left.is_empty() && merged.right.is_empty()) {
            self.stack.push(merged);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().expect("peeked");
            if let Some(low) = p.left.low {
                self.side[low] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(low) = p.left.low {
                    self.reference[low] = p.right.low;
                    self.side[low] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(low) = p.right.low {
                    self.reference[low] = p.left.low;
                    self.side[low] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("return edge of e on stack");
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }

    fn sign(&mut self, e: usize) -> i8 {
        // follow the reference chain, then resolve back to front
        let mut chain = vec![e];
        while let Some(r) = self.reference[*chain.last().expect("non-empty")] {
            chain.push(r);
        }
        for k in (0..chain.len() - 1).rev() {
            let (cur, next) = (chain[k], chain[k + 1]);
            self.side[cur] *= self.side[next];
            self.reference[cur] = None;
        }
        self.side[e]
    }

    fn embed(&mut self, n: usize) -> Rotation {
        let m = self.src.len();
        for e in 0..m {
            let s = self.sign(e) as i64;
            self.nesting_depth[e] *= s;
        }
        let mut emb = HalfEdges::new(n);
        for v in 0..n {
            let depth = &self.nesting_depth;
            self.out[v].sort_by_key(|&e| depth[e]);
            let mut prev = None;
            for &e in &self.out[v] {
                let w = self.dst[e];
                emb.add_cw(v, w, prev);
                prev = Some(w);
            }
        }
        let mut left_ref = vec![NONE; n];
        let mut right_ref = vec![NONE; n];
        let roots = self.roots.clone();
        for r in roots {
            self.embed_dfs(r, &mut emb, &mut left_ref, &mut right_ref);
        }
        emb.rotation()
    }

    fn embed_dfs(&self, v: usize, emb: &mut HalfEdges, left_ref: &mut [usize], right_ref: &mut [usize]) {
        for &ei in &self.out[v] {
            let w = self.dst[ei];
            if self.parent_edge[w] == Some(ei) {
                emb.add_first(w, v);
                left_ref[v] = w;
                right_ref[v] = w;
                self.embed_dfs(w, emb, left_ref, right_ref);
            } else if self.side[ei] == 1 {
                emb.add_cw(w, v, Some(right_ref[w]));
            } else {
                emb.add_ccw(w, v, Some(left_ref[w]));
                left_ref[w] = v;
            }
        }
    }
}

/// Doubly linked cyclic adjacency lists, keyed by half-edge `(v, w)`.
struct HalfEdges {
    cw: HashMap<(usize, usize), usize>,
    ccw: HashMap<(usize, usize), usize>,
    first: Vec<Option<usize>>,
}

impl HalfEdges {
    fn new(n: usize) -> Self {
        HalfEdges { cw: HashMap::new(), ccw: HashMap::new(), first: vec![None; n] }
    }

    /// Insert `end` clockwise after `reference` around `start`.
    fn add_cw(&mut self, start: usize, end: usize, reference: Option<usize>) {
        match reference {
            None => {
                self.cw.insert((start, end), end);
                self.ccw.insert((start, end), end);
                self.first[start] = Some(end);
            }
            Some(r) => {
                let after = self.cw[&(start, r)];
                self.cw.insert((start, r), end);
                self.cw.insert((start, end), after);
                self.ccw.insert((start, after), end);
                self.ccw.insert((start, end), r);
            }
        }
    }

    /// Insert `end` counter-clockwise before `reference` around `start`.
    fn add_ccw(&mut self, start: usize, end: usize, reference: Option<usize>) {
        match reference {
            None => self.add_cw(start, end, None),
            Some(r) => {
                let before = self.ccw[&(start, r)];
                self.add_cw(start, end, Some(before));
                if self.first[start] == Some(r) {
                    self.first[start] = Some(end);
                }
            }
        }
    }

    fn add_first(&mut self, start: usize, end: usize) {
        let reference = self.first[start];
        self.add_ccw(start, end, reference);
    }

    fn rotation(&self) -> Rotation {
        (0..self.first.len())
            .map(|v| {
                let mut order = Vec::new();
                if let Some(start) = self.first[v] {
                    let mut w = start;
                    loop {
                        order.push(w);
                        w = self.cw[&(v, w)];
                        if w == start {
                            break;
                        }
                    }
                }
                order
            })
            .collect()
    }
}
