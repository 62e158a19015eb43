//! Deterministic independent sets meeting the averaging bound
//! `((ℓ−1)/ℓ) · n · min(1, d^{−1/(ℓ−1)})`, `d = ℓe/n`.
//!
//! Each vertex is kept with weight `p`; the potential `Σ q_v − Σ_e Π_{u∈e} q_u` starts at
//! the bound and is linear in each `q_v`, so fixing vertices one at a time to the better
//! of 0 and 1 never lowers it. One vertex per surviving edge is then deleted.

use crate::cotree::{HomogeneousKind, HomogeneousResult};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Slack absorbed by the certified bound for floating-point rounding.
pub const ROUNDING_SLACK: f64 = 1e-9;

/// Sampling weight `min(1, d^{−1/(ℓ−1)})`.
pub fn sampling_weight(n: usize, ell: usize, edges: usize) -> f64 {
    if n == 0 || edges == 0 {
        return 1.0;
    }
    let d = (ell * edges) as f64 / n as f64;
    if d <= 1.0 {
        1.0
    } else {
        d.powf(-1.0 / (ell as f64 - 1.0))
    }
}

/// The averaging bound `((ℓ−1)/ℓ) · n · min(1, d^{−1/(ℓ−1)})`.
pub fn spencer_bound(n: usize, ell: usize, edges: usize) -> f64 {
    (ell as f64 - 1.0) / ell as f64 * n as f64 * sampling_weight(n, ell, edges)
}

pub fn spencer_independent_set(g: &Hypergraph) -> HomogeneousResult {
    let (n, ell) = (g.n(), g.ell());
    let p = sampling_weight(n, ell, g.edge_count());
    let incidence = g.incidence();
    let mut q = vec![p; n];
    for v in 0..n {
        let loss: f64 = incidence[v]
            .iter()
            .map(|&e| {
                g.edge(e)
                    .iter()
                    .filter(|&&u| u != v)
                    .map(|&u| q[u])
                    .product::<f64>()
            })
            .sum();
        q[v] = if 1.0 - loss >= 0.0 { 1.0 } else { 0.0 };
    }
    let mut kept: VertexSet = (0..n).filter(|&v| q[v] == 1.0).collect();
    for e in g.edges() {
        if e.iter().all(|&u| kept.contains(u)) {
            kept.remove(e[ell - 1]);
        }
    }
    let bound = spencer_bound(n, ell, g.edge_count());
    HomogeneousResult {
        kind: HomogeneousKind::Independent,
        vertices: kept,
        certified_bound: (bound - ROUNDING_SLACK).ceil().max(0.0) as u64,
    }
}
