//! Split graphs, and the structure of 3-graphs whose links are all split.
//!
//! When every link is split, fixing a split certificate `(A_v, B_v)` per vertex classifies
//! each pair `xy` as good when `x ∈ A_y ⇔ y ∈ A_x`. The bad pairs contain no `K4`, so a
//! large vertex set `U` avoids them, and on `U` the hypergraph is determined by the graph
//! `F = {xy : x ∈ B_y, y ∈ B_x}` via `xyz ∈ E ⇔ e_F(xyz) ≥ 2`.

use crate::combinatorics::Combinations;
use crate::error::{Error, Result};
use crate::extraction::exact_max_homogeneous;
use crate::generators::{derive_seed, gen_split_link, Seed};
use crate::graph::SimpleGraph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Largest bad-pair graph solved by exact maximum independent set.
pub const EXACT_INDEPENDENT_CAP: usize = 60;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitCertificate {
    pub clique_side: VertexSet,
    pub independent_side: VertexSet,
}

impl SplitCertificate {
    pub fn verify(&self, h: &SimpleGraph) -> bool {
        self.clique_side.is_disjoint(&self.independent_side)
            && self.clique_side.union(&self.independent_side) == VertexSet::full(h.n())
            && h.is_clique(&self.clique_side)
            && h.is_independent(&self.independent_side)
    }
}

/// A split partition of `h` with the largest clique side, colex-smallest among those.
/// An edgeless graph gets an empty clique side.
pub fn split_partition(h: &SimpleGraph) -> Option<SplitCertificate> {
    let n = h.n();
    if h.edge_count() == 0 {
        return Some(SplitCertificate {
            clique_side: VertexSet::new(),
            independent_side: VertexSet::full(n),
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    let deg: Vec<usize> = order.iter().map(|&v| h.degree(v)).collect();
    // degree-sequence characterization
    let m = (0..n).filter(|&i| deg[i] >= i).max().map_or(0, |i| i + 1);
    let head: usize = deg[..m].iter().sum();
    let tail: usize = deg[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let mut clique: VertexSet = order[..m].iter().copied().collect();
    let mut indep: VertexSet = order[m..].iter().copied().collect();
    let cert = SplitCertificate {
        clique_side: clique.clone(),
        independent_side: indep.clone(),
    };
    if !cert.verify(h) {
        return None;
    }
    if let Some(v) = indep.iter().find(|&v| clique.is_subset(h.neighbors(v))) {
        clique.insert(v);
        indep.remove(v);
    }
    // other maximum clique sides trade one clique vertex for one independent vertex
    let mut best = clique.clone();
    for v in indep.iter() {
        let missing = clique.difference(h.neighbors(v));
        if missing.len() != 1 {
            continue;
        }
        let u = missing.first().unwrap();
        if h.neighbors(u).is_disjoint(&indep) {
            let mut swapped = clique.clone();
            swapped.remove(u);
            swapped.insert(v);
            if swapped < best {
                best = swapped;
            }
        }
    }
    Some(SplitCertificate {
        independent_side: VertexSet::full(n).difference(&best),
        clique_side: best,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitStructure {
    pub u: VertexSet,
    /// Graph on all of `V(G)` with edges only inside `u`.
    pub f: SimpleGraph,
    pub bad_pairs: SimpleGraph,
    /// Per-vertex certificates of the links, in original labels.
    pub certificates: Vec<SplitCertificate>,
}

/// Smallest `m` with `m³ ≥ n`.
pub fn ceil_cbrt(n: usize) -> usize {
    (0..).find(|m: &usize| m.pow(3) >= n).unwrap()
}

pub fn extract_split_structure(g: &Hypergraph) -> Result<SplitStructure> {
    if g.ell() != 3 {
        return Err(Error::InvalidParameter(format!(
            "split-link structure needs a 3-graph, got uniformity {}",
            g.ell()
        )));
    }
    let n = g.n();
    let mut certificates = Vec::with_capacity(n);
    for v in 0..n {
        let (link, map) = g.link(v)?;
        let link = SimpleGraph::from_hypergraph(&link)?;
        let cert = split_partition(&link).ok_or(Error::LinkNotSplit { vertex: v })?;
        certificates.push(SplitCertificate {
            clique_side: map.lift_set(&cert.clique_side),
            independent_side: map.lift_set(&cert.independent_side),
        });
    }
    let in_a = |x: usize, y: usize| certificates[y].independent_side.contains(x);
    let mut bad_pairs = SimpleGraph::new(n);
    for y in 1..n {
        for x in 0..y {
            if in_a(x, y) != in_a(y, x) {
                bad_pairs.add_edge(x, y);
            }
        }
    }
    if let Some(q) = bad_pairs.find_k4() {
        return Err(Error::BadPairClique { vertices: q });
    }
    let u = if n <= EXACT_INDEPENDENT_CAP {
        bad_pairs.max_independent_set()
    } else {
        bad_pairs.ramsey_independent_set(4)
    };
    if u.len() < ceil_cbrt(n) {
        return Err(Error::BoundViolated(format!(
            "bad-pair independent set has {} vertices, below n^(1/3) for n = {n}",
            u.len()
        )));
    }
    let mut f = SimpleGraph::new(n);
    let members = u.to_vec();
    for (i, &x) in members.iter().enumerate() {
        for &y in &members[i + 1..] {
            if certificates[y].clique_side.contains(x) && certificates[x].clique_side.contains(y) {
                f.add_edge(x, y);
            }
        }
    }
    let mut it = Combinations::new(members, 3);
    while let Some(t) = it.next_subset() {
        let e = f.has_edge(t[0], t[1]) as u8 + f.has_edge(t[0], t[2]) as u8 + f.has_edge(t[1], t[2]) as u8;
        if g.has_sorted_edge(t) != (e >= 2) {
            return Err(Error::EquivalenceViolated {
                triple: [t[0], t[1], t[2]],
            });
        }
    }
    Ok(SplitStructure {
        u,
        f,
        bad_pairs,
        certificates,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallnessRow {
    pub seed: Seed,
    pub alpha: usize,
    pub omega: usize,
}

impl SmallnessRow {
    pub fn max(&self) -> usize {
        self.alpha.max(self.omega)
    }
}

/// Exact homogeneous-set sizes of sampled split-link 3-graphs.
pub fn report_homogeneous_smallness(n: usize, trials: usize, seed: Seed) -> Result<Vec<SmallnessRow>> {
    (0..trials)
        .map(|t| {
            let s = derive_seed(seed, t as u64);
            let (g, _) = gen_split_link(n, s)?;
            let exact = exact_max_homogeneous(&g)?;
            Ok(SmallnessRow {
                seed: s,
                alpha: exact.alpha,
                omega: exact.omega,
            })
        })
        .collect()
}
