//! Crossing-degree bound: if no edge has ℓ−1 vertices in `X` and one in `Y`, then an
//! (ℓ−1)-set `A` with `i ≥ 1` vertices in `Y` extends to fewer than `2^{i−1}` edges by a
//! vertex of `X`.

use std::collections::HashMap;

use super::partition::{side_hypergraph, PartitionTrace};
use crate::combinatorics::rank;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::structure::require_disperse;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingDegreeReport {
    /// `max_count[i - 1]` is the largest extension count over sets with `i` vertices in `Y`.
    pub max_count: Vec<usize>,
    /// An (ℓ−1)-set reaching `2^{i−1}` extensions, with its count.
    pub violation: Option<(Vec<usize>, usize)>,
}

impl CrossingDegreeReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn verify_crossing_degree(g: &Hypergraph, x: &VertexSet, y: &VertexSet) -> Result<CrossingDegreeReport> {
    require_disperse(g)?;
    verify_crossing_degree_unchecked(g, x, y)
}

fn verify_crossing_degree_unchecked(g: &Hypergraph, x: &VertexSet, y: &VertexSet) -> Result<CrossingDegreeReport> {
    let ell = g.ell();
    if !x.is_disjoint(y) {
        return Err(Error::Overlap);
    }
    let base = g.crossing_edge_count(x, y, ell - 1)?;
    if base != 0 {
        return Err(Error::HypothesisViolated(format!(
            "{base} edges have ℓ-1 vertices in X and one in Y"
        )));
    }
    let mut counts: HashMap<u64, (usize, usize)> = HashMap::new();
    let mut a = Vec::with_capacity(ell - 1);
    for e in g.edges() {
        let in_y = e.iter().filter(|&&v| y.contains(v)).count();
        let in_x = e.iter().filter(|&&v| x.contains(v)).count();
        if in_y == 0 || in_x == 0 || in_x + in_y != ell {
            continue;
        }
        for &drop in e.iter().filter(|&&v| x.contains(v)) {
            a.clear();
            a.extend(e.iter().copied().filter(|&v| v != drop));
            counts.entry(rank(&a)).or_insert((in_y, 0)).1 += 1;
        }
    }
    let mut max_count = vec![0usize; ell - 1];
    let mut violation: Option<(u64, usize, usize)> = None;
    for (&r, &(i, count)) in &counts {
        max_count[i - 1] = max_count[i - 1].max(count);
        if count >= 1 << (i - 1) && violation.is_none_or(|(vr, _, _)| r < vr) {
            violation = Some((r, i, count));
        }
    }
    Ok(CrossingDegreeReport {
        max_count,
        violation: violation.map(|(r, _, c)| (crate::combinatorics::unrank(r, ell - 1), c)),
    })
}

/// Checks the bound for every split of `trace`, on the chosen side restricted to the part.
pub fn verify_trace_crossing_degree(g: &Hypergraph, trace: &PartitionTrace) -> Result<Vec<CrossingDegreeReport>> {
    trace
        .splits
        .iter()
        .map(|s| {
            let (h, map) = side_hypergraph(g, &s.w, s.side)?;
            let mut report = verify_crossing_degree_unchecked(&h, &map.forward_set(&s.x), &map.forward_set(&s.y))?;
            if let Some((a, _)) = report.violation.as_mut() {
                for v in a.iter_mut() {
                    *v = map.lift(*v);
                }
            }
            Ok(report)
        })
        .collect()
}
