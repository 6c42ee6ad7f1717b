//! Closed-form thickness values and bounds, each reported with the
//! argument that produced it.
//!
//! All arithmetic is exact integer ceiling division.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{is_triangle_free, Graph};
use crate::planarity::{euler_max_edges, is_planar};
use crate::products::times_k2;

/// Euler bound on the product's edge count (3v−6 per planar part).
pub const EULER_PRODUCT: &str = "euler-product";
/// Euler bound for a triangle-free product (2v−4 per planar part).
pub const TRIANGLE_FREE_PRODUCT: &str = "triangle-free-product";
/// G×H as the union of the copies G×e over the edges e of H.
pub const EDGE_SPLIT_UPPER: &str = "edge-split-upper";
/// Euler bound applied to the double cover G×K₂.
pub const DOUBLE_COVER_LOWER: &str = "double-cover-lower";
/// G×K₂ is a subgraph of K_n×K₂.
pub const DOUBLE_COVER_UPPER: &str = "double-cover-upper";
/// The double cover passed the planarity tester.
pub const PLANARITY_TEST: &str = "planarity-test";
/// θ(K_{n,n}) = ⌈(n+2)/4⌉.
pub const COMPLETE_BIPARTITE_DIAGONAL: &str = "complete-bipartite-diagonal";
/// K_{m,n} with a part of size at most 2 is planar.
pub const PLANAR_SMALL_PART: &str = "planar-small-part";
/// θ(K_{m,n}) for unequal parts larger than 2 is not known in closed form.
pub const OPEN_CASE: &str = "open-case";
/// θ(K_n×K₂) = ⌈n/4⌉.
pub const COMPLETE_TIMES_K2: &str = "complete-times-k2";
/// K_{m,n}×K_{p,q} = K_{mp,nq} ∪ K_{mq,np}.
pub const BIPARTITE_FACTOR_SPLIT: &str = "bipartite-factor-split";
/// K_{l,m,n}×K₂ split into two unions of disjoint complete bipartite graphs.
pub const TRIPARTITE_SPLIT: &str = "tripartite-split";
/// θ(K_{n,n,n}×K₂) = ⌈(n+1)/2⌉.
pub const EQUAL_TRIPARTITE_TIMES_K2: &str = "equal-tripartite-times-k2";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("precondition violated: {0}")]
    Precondition(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub lower: u64,
    #[serde(serialize_with = "upper_out", deserialize_with = "upper_in")]
    pub upper: Option<u64>,
    pub exact: Option<u64>,
    pub provenance: Vec<String>,
}

fn upper_out<S: Serializer>(upper: &Option<u64>, s: S) -> Result<S::Ok, S::Error> {
    match upper {
        Some(u) => s.serialize_u64(*u),
        None => s.serialize_str("unknown"),
    }
}

fn upper_in<'de, D: Deserializer<'de>>(d: D) -> Result<Option<u64>, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Upper {
        Known(u64),
        Unknown(String),
    }
    match Upper::deserialize(d)? {
        Upper::Known(u) => Ok(Some(u)),
        Upper::Unknown(s) if s == "unknown" => Ok(None),
        Upper::Unknown(s) => Err(serde::de::Error::custom(format!("bad upper bound {s:?}"))),
    }
}

impl BoundReport {
    /// Report with `exact` filled in when the bounds meet.
    pub fn new(lower: u64, upper: u64, provenance: &[&str]) -> Self {
        BoundReport {
            lower,
            upper: Some(upper),
            exact: (lower == upper).then_some(lower),
            provenance: provenance.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn exact(value: u64, provenance: &[&str]) -> Self {
        Self::new(value, value, provenance)
    }

    fn tag(mut self, tag: &str) -> Self {
        if !self.provenance.iter().any(|t| t == tag) {
            self.provenance.push(tag.to_string());
        }
        self
    }
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

fn sizes(g: &Graph) -> (u64, u64) {
    (g.vertex_count() as u64, g.edge_count() as u64)
}

/// Euler lower bound on θ(g×h); the triangle-free form applies when either
/// factor is triangle-free, since a triangle in G×H projects to a triangle
/// in each factor.
pub fn product_lower_bound(g: &Graph, h: &Graph) -> Result<u64, BoundsError> {
    let ((vg, eg), (vh, eh)) = (sizes(g), sizes(h));
    if vg < 2 || vh < 2 {
        return Err(BoundsError::Precondition("both factors need at least two vertices".into()));
    }
    if eg == 0 || eh == 0 {
        return Ok(0);
    }
    let bound = if is_triangle_free(g) || is_triangle_free(h) {
        ceil_div(eg * eh, vg * vh - 2)
    } else {
        ceil_div(2 * eg * eh, 3 * vg * vh - 6)
    };
    Ok(bound.max(1))
}

/// Euler lower bound on θ(g) from g alone: ⌈|E| / max planar edges⌉, with
/// the triangle-free limit when it applies. At least 1.
pub fn graph_lower_bound(g: &Graph) -> u64 {
    let limit = euler_max_edges(g.vertex_count(), is_triangle_free(g)) as u64;
    if g.edge_count() == 0 || limit == 0 {
        return 1;
    }
    ceil_div(g.edge_count() as u64, limit).max(1)
}

/// Upper bound on θ(x×K₂): 1 when it is planar, otherwise ⌈|V(x)|/4⌉.
fn double_cover_estimate(x: &Graph) -> u64 {
    if is_planar(&times_k2(x)).planar {
        1
    } else {
        ceil_div(x.vertex_count() as u64, 4)
    }
}

/// min(|E(h)|·θ̂(g×K₂), |E(g)|·θ̂(h×K₂)), using G×e ≅ G×K₂ for each edge e.
pub fn product_upper_bound(g: &Graph, h: &Graph) -> u64 {
    let (eg, eh) = (g.edge_count() as u64, h.edge_count() as u64);
    if eg == 0 || eh == 0 {
        return 1;
    }
    (eh * double_cover_estimate(g)).min(eg * double_cover_estimate(h))
}

pub fn product_bounds(g: &Graph, h: &Graph) -> Result<BoundReport, BoundsError> {
    let lower = product_lower_bound(g, h)?;
    let tag = if is_triangle_free(g) || is_triangle_free(h) { TRIANGLE_FREE_PRODUCT } else { EULER_PRODUCT };
    let upper = product_upper_bound(g, h);
    Ok(BoundReport::new(lower.max(1), upper, &[tag, EDGE_SPLIT_UPPER]))
}

/// θ(K_{n,n}) = ⌈(n+2)/4⌉.
pub fn theta_knn(n: u64) -> u64 {
    ceil_div(n + 2, 4)
}

/// θ(K_n×K₂) = ⌈n/4⌉, and 1 for the edgeless n = 1 product.
pub fn theta_kn_times_k2(n: u64) -> u64 {
    ceil_div(n, 4).max(1)
}

pub fn g_times_k2_bounds(g: &Graph) -> Result<BoundReport, BoundsError> {
    let (n, e) = sizes(g);
    if n < 2 {
        return Err(BoundsError::Precondition("graph needs at least two vertices".into()));
    }
    let lower = ceil_div(e, 2 * n - 2).max(1);
    if is_planar(&times_k2(g)).planar {
        return Ok(BoundReport::new(lower, 1, &[DOUBLE_COVER_LOWER, PLANARITY_TEST]));
    }
    Ok(BoundReport::new(lower, ceil_div(n, 4), &[DOUBLE_COVER_LOWER, DOUBLE_COVER_UPPER]))
}

/// θ(K_{a,b}) where known, else Euler lower bound and the envelope
/// K_{a,b} ⊆ K_{max,max}, exact only when those two meet.
pub fn complete_bipartite_bounds(a: u64, b: u64) -> BoundReport {
    if a.min(b) <= 2 {
        BoundReport::exact(1, &[PLANAR_SMALL_PART])
    } else if a == b {
        BoundReport::exact(theta_knn(a), &[COMPLETE_BIPARTITE_DIAGONAL])
    } else {
        let lower = ceil_div(a * b, 2 * (a + b) - 4);
        let upper = theta_knn(a.max(b));
        let report = BoundReport::new(lower, upper, &[TRIANGLE_FREE_PRODUCT, COMPLETE_BIPARTITE_DIAGONAL]);
        if report.exact.is_some() {
            report
        } else {
            report.tag(OPEN_CASE)
        }
    }
}

/// max over the two components K_{mp,nq} and K_{mq,np}.
pub fn theta_kmn_times_kpq(m: u64, n: u64, p: u64, q: u64) -> Result<BoundReport, BoundsError> {
    if [m, n, p, q].contains(&0) {
        return Err(BoundsError::Precondition("part sizes must be positive".into()));
    }
    let first = complete_bipartite_bounds(m * p, n * q);
    let second = complete_bipartite_bounds(m * q, n * p);
    let mut provenance = vec![BIPARTITE_FACTOR_SPLIT.to_string()];
    for t in first.provenance.iter().chain(&second.provenance) {
        if !provenance.contains(t) {
            provenance.push(t.clone());
        }
    }
    let exact = match (first.exact, second.exact) {
        (Some(a), Some(b)) => Some(a.max(b)),
        _ => None,
    };
    Ok(BoundReport {
        lower: first.lower.max(second.lower),
        upper: first.upper.zip(second.upper).map(|(a, b)| a.max(b)),
        exact,
        provenance,
    })
}

/// θ(K_{m,n}×K₂) = θ(K_{m,n}), as K_{m,n}×K₂ is two disjoint copies of K_{m,n}.
pub fn theta_kmn_times_k2(m: u64, n: u64) -> Result<BoundReport, BoundsError> {
    theta_kmn_times_kpq(m, n, 1, 1)
}

/// θ(K_{n,n,n}×K₂) = ⌈(n+1)/2⌉.
pub fn theta_knnn_times_k2(n: u64) -> u64 {
    ceil_div(n + 1, 2)
}

pub fn knnn_times_k2_bounds(n: u64) -> Result<BoundReport, BoundsError> {
    if n == 0 {
        return Err(BoundsError::Precondition("n must be positive".into()));
    }
    Ok(BoundReport::exact(theta_knnn_times_k2(n), &[DOUBLE_COVER_LOWER, EQUAL_TRIPARTITE_TIMES_K2]))
}

pub fn tripartite_times_k2_bounds(l: u64, m: u64, n: u64) -> Result<BoundReport, BoundsError> {
    if !(1 <= l && l <= m && m <= n) {
        return Err(BoundsError::Precondition(format!("need 1 <= l <= m <= n, got ({l}, {m}, {n})")));
    }
    let lower = ceil_div(l * m + l * n + m * n, 2 * (l + m + n) - 2).max(1);
    let bipartite = complete_bipartite_bounds(m, n);
    let upper = 2 * bipartite.upper.expect("envelope always gives an upper bound");
    let report = BoundReport::new(lower, upper, &[DOUBLE_COVER_LOWER, TRIPARTITE_SPLIT]);
    Ok(match bipartite.exact {
        Some(_) => report,
        None => BoundReport { exact: None, ..report }.tag(OPEN_CASE),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_complete_tripartite, make_cycle, make_path};

    #[test]
    fn lower_bound_examples() {
        let k2 = make_complete(2).unwrap();
        for n in 2..=40u32 {
            let kn = make_complete(n).unwrap();
            assert_eq!(product_lower_bound(&kn, &k2).unwrap(), theta_kn_times_k2(n as u64));
        }
        let k5 = make_complete(5).unwrap();
        assert_eq!(product_lower_bound(&k5, &k5).unwrap(), 3);
        assert!(product_lower_bound(&make_complete(1).unwrap(), &k2).is_err());
    }

    #[test]
    fn lower_bound_for_equal_tripartite() {
        let k2 = make_complete(2).unwrap();
        for n in 1..=20u32 {
            let g = make_complete_tripartite(n, n, n).unwrap();
            assert_eq!(product_lower_bound(&g, &k2).unwrap(), theta_knnn_times_k2(n as u64), "n={n}");
        }
    }

    #[test]
    fn lower_bound_is_clamped_for_sparse_factors() {
        let p2 = make_path(2).unwrap();
        assert_eq!(product_lower_bound(&p2, &p2).unwrap(), 1);
        let plain = |i| crate::graph::VertexLabel::new(crate::graph::Family::Plain, i);
        let two_isolated = Graph::new([plain(1), plain(2)], []).unwrap();
        assert_eq!(product_lower_bound(&two_isolated, &p2).unwrap(), 0);
    }

    #[test]
    fn upper_bound_examples() {
        let k2 = make_complete(2).unwrap();
        assert_eq!(product_upper_bound(&k2, &k2), 1);
        let k5 = make_complete(5).unwrap();
        assert_eq!(product_upper_bound(&k5, &k2), 2);
        let p3 = make_path(3).unwrap();
        let c6 = make_cycle(6).unwrap();
        assert_eq!(product_upper_bound(&c6, &p3), 2);
    }

    #[test]
    fn graph_level_bound_matches_product_bound() {
        let k2 = make_complete(2).unwrap();
        for n in 2..=20u32 {
            let g = make_complete(n).unwrap();
            let tri = make_complete_tripartite(n, n, n).unwrap();
            for f in [&g, &tri] {
                let direct = graph_lower_bound(&times_k2(f));
                assert_eq!(direct, product_lower_bound(f, &k2).unwrap());
            }
        }
        assert_eq!(graph_lower_bound(&make_complete(5).unwrap()), 2);
        assert_eq!(graph_lower_bound(&Graph::empty()), 1);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(theta_knn(4), 2);
        assert_eq!(theta_knn(2), 1);
        assert_eq!(theta_knn(7), 3);
        assert_eq!(theta_kn_times_k2(5), 2);
        assert_eq!(theta_kn_times_k2(2), 1);
        assert_eq!(theta_kn_times_k2(4), 1);
        assert_eq!(theta_kn_times_k2(1), 1);
        assert_eq!(theta_knnn_times_k2(1), 1);
        assert_eq!(theta_knnn_times_k2(8), 5);
        assert_eq!(theta_knnn_times_k2(3), 2);
    }

    #[test]
    fn double_cover_bounds() {
        let r = g_times_k2_bounds(&make_complete(9).unwrap()).unwrap();
        assert_eq!((r.lower, r.upper, r.exact), (3, Some(3), Some(3)));
        let r = g_times_k2_bounds(&make_complete(2).unwrap()).unwrap();
        assert_eq!(r.exact, Some(1));
        let r = g_times_k2_bounds(&make_cycle(6).unwrap()).unwrap();
        assert_eq!((r.lower, r.exact), (1, Some(1)));
    }

    #[test]
    fn bipartite_products() {
        for n in 1..=12 {
            assert_eq!(theta_kmn_times_kpq(n, n, 1, 1).unwrap().exact, Some(theta_knn(n)));
        }
        assert_eq!(theta_kmn_times_kpq(2, 9, 1, 1).unwrap().exact, Some(1));
        // K_{2,6} is planar, K_{4,3} is not: Euler bound 2 meets the K_{4,4} envelope
        assert_eq!(theta_kmn_times_kpq(2, 3, 1, 2).unwrap().exact, Some(2));
        let open = theta_kmn_times_k2(3, 7).unwrap();
        assert_eq!(open.exact, None);
        assert!(open.provenance.iter().any(|t| t == OPEN_CASE));
        assert!(open.lower <= open.upper.unwrap());
    }

    #[test]
    fn tripartite_bounds() {
        for p in 0..6 {
            let n = 4 * p + 2;
            let r = tripartite_times_k2_bounds(n, n, n).unwrap();
            assert_eq!(r.exact, Some(2 * p + 2), "n={n}");
        }
        let r = tripartite_times_k2_bounds(1, 1, 1).unwrap();
        assert_eq!(r.lower, 1);
        let r = tripartite_times_k2_bounds(2, 2, 2).unwrap();
        assert_eq!((r.lower, r.upper), (2, Some(2)));
        assert!(tripartite_times_k2_bounds(3, 2, 4).is_err());
        assert_eq!(knnn_times_k2_bounds(8).unwrap().exact, Some(5));
        assert!(knnn_times_k2_bounds(0).is_err());
    }

    #[test]
    fn report_json_round_trip() {
        let r = BoundReport { lower: 2, upper: None, exact: None, provenance: vec![OPEN_CASE.into()] };
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"unknown\""));
        assert_eq!(serde_json::from_str::<BoundReport>(&text).unwrap(), r);
    }
}
