//! The partition procedure: repeatedly split a large part along the support of a large
//! tight component of the part or of its complement, collecting the ℓ-sets a homogeneous
//! cohypergraph must avoid.

use std::fmt::Write as _;

use super::thresholds::Exponents;
use crate::combinatorics::{rank, Combinations};
use crate::cotree::{Cotree, Polarity};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::structure::{require_disperse, tight_components, TupleClassPartition};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// The induced subhypergraph itself.
    Graph,
    /// Its complement.
    Complement,
}

impl Side {
    /// Join type of the split in the hypergraph: the chosen side has no crossing edges
    /// left outside the bad set, so the original has none (graph side) or all of them.
    pub fn polarity(self) -> Polarity {
        match self {
            Side::Graph => Polarity::JoinNone,
            Side::Complement => Polarity::JoinAll,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::Graph => "graph",
            Side::Complement => "complement",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub w: VertexSet,
    /// Support of the chosen tight component.
    pub x: VertexSet,
    pub y: VertexSet,
    pub side: Side,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EarlyStop {
    pub part: VertexSet,
    pub side: Side,
    pub max_support: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PartitionTrace {
    pub n: usize,
    pub ell: usize,
    pub parts: Vec<VertexSet>,
    pub splits: Vec<Split>,
    /// Crossing edges of the chosen side, as colex ranks of ℓ-sets.
    pub b1: Vec<u64>,
    /// ℓ-sets inside the final parts.
    pub b2: Vec<u64>,
    pub terminated_early: bool,
    pub early: Option<EarlyStop>,
    pub epsilon: f64,
    pub gamma: f64,
}

impl PartitionTrace {
    /// The ℓ-graph on `V(G)` whose edges are `b1 ∪ b2`.
    pub fn bad_set(&self) -> Result<Hypergraph> {
        let mut ranks = self.b1.clone();
        ranks.extend_from_slice(&self.b2);
        Hypergraph::from_ranks(self.n, self.ell, ranks)
    }

    /// The decomposition recorded by the splits, with each final part made edgeless,
    /// restricted to `keep` when given. `None` if nothing is kept.
    pub fn split_cotree(&self, keep: Option<&VertexSet>) -> Option<Cotree> {
        let root = VertexSet::full(self.n);
        self.subtree(&root, keep)
    }

    fn subtree(&self, w: &VertexSet, keep: Option<&VertexSet>) -> Option<Cotree> {
        let children: Vec<Cotree>;
        let polarity;
        if let Some(split) = self.splits.iter().find(|s| &s.w == w) {
            polarity = split.side.polarity();
            children = [&split.x, &split.y]
                .into_iter()
                .filter_map(|part| self.subtree(part, keep))
                .collect();
        } else {
            polarity = Polarity::JoinNone;
            children = w
                .iter()
                .filter(|&v| keep.is_none_or(|k| k.contains(v)))
                .map(Cotree::Leaf)
                .collect();
        }
        match children.len() {
            0 => None,
            1 => children.into_iter().next(),
            _ => Some(Cotree::Join { polarity, children }),
        }
    }

    /// Line-oriented summary.
    pub fn report(&self) -> String {
        let mut out = String::new();
        writeln!(out, "epsilon {:.6} gamma {:.6}", self.epsilon, self.gamma).unwrap();
        for (i, s) in self.splits.iter().enumerate() {
            writeln!(
                out,
                "split {i} side {} |W| {} X {} Y {}",
                s.side.name(),
                s.w.len(),
                s.x,
                s.y
            )
            .unwrap();
        }
        writeln!(out, "parts {}", self.parts.len()).unwrap();
        writeln!(out, "b1 {} b2 {}", self.b1.len(), self.b2.len()).unwrap();
        match &self.early {
            Some(e) => writeln!(
                out,
                "terminated early on |W| {} side {} max support {}",
                e.part.len(),
                e.side.name(),
                e.max_support
            )
            .unwrap(),
            None => writeln!(out, "ran to completion").unwrap(),
        }
        out
    }
}

/// The chosen side hypergraph on a part, in local labels `0..|W|`.
pub fn side_hypergraph(g: &Hypergraph, w: &VertexSet, side: Side) -> Result<(Hypergraph, crate::Relabel)> {
    let (h, map) = g.induced(w);
    match side {
        Side::Graph => Ok((h, map)),
        Side::Complement => Ok((h.complement()?, map)),
    }
}

fn choose_side(
    g_parts: &TupleClassPartition,
    c_parts: &TupleClassPartition,
) -> Option<Side> {
    match (g_parts.len() != 1, c_parts.len() != 1) {
        (true, true) if c_parts.max_support() > g_parts.max_support() => Some(Side::Complement),
        (true, _) => Some(Side::Graph),
        (false, true) => Some(Side::Complement),
        (false, false) => None,
    }
}

pub fn partition_algorithm(g: &Hypergraph) -> Result<PartitionTrace> {
    require_disperse(g)?;
    let (n, ell) = (g.n(), g.ell());
    let ex = Exponents::new(ell);
    let mut parts = vec![VertexSet::full(n)];
    let mut splits = Vec::new();
    let mut b1 = Vec::new();
    let mut early = None;
    // parts below ℓ vertices hold no ℓ-set and cannot be split
    while let Some(idx) = parts
        .iter()
        .position(|w| w.len() >= ell && ex.part_is_large(w.len(), n))
    {
        let w = parts[idx].clone();
        let (gw, map) = g.induced(&w);
        let cw = gw.complement()?;
        let g_parts = tight_components(&gw)?;
        let c_parts = tight_components(&cw)?;
        let Some(side) = choose_side(&g_parts, &c_parts) else {
            return Err(Error::TheoremViolated(format!(
                "both the part {{{w}}} and its complement are tightly connected"
            )));
        };
        let (h, h_parts) = match side {
            Side::Graph => (gw, g_parts),
            Side::Complement => (cw, c_parts),
        };
        let max_support = h_parts.max_support();
        if !ex.exceeds_component_threshold(max_support, n) {
            early = Some(EarlyStop {
                part: w,
                side,
                max_support,
            });
            break;
        }
        let x_local = h_parts
            .classes()
            .iter()
            .map(|c| &c.support)
            .max_by(|a, b| a.len().cmp(&b.len()).then(b.cmp(a)))
            .unwrap()
            .clone();
        let y_local = VertexSet::full(w.len()).difference(&x_local);
        if y_local.is_empty() {
            return Err(Error::TheoremViolated(format!(
                "tight component spans the whole part {{{w}}}"
            )));
        }
        if h.crossing_edge_count(&x_local, &y_local, ell - 1)? != 0 {
            return Err(Error::TheoremViolated(format!(
                "edge with ℓ-1 vertices in a component support crosses the split of {{{w}}}"
            )));
        }
        let mut lifted = Vec::with_capacity(ell);
        for i in 1..=ell.saturating_sub(2) {
            for e in h.crossing_edges(&x_local, &y_local, i)? {
                lifted.clear();
                lifted.extend(e.iter().map(|&v| map.lift(v)));
                b1.push(rank(&lifted));
            }
        }
        let x = map.lift_set(&x_local);
        let y = map.lift_set(&y_local);
        parts[idx] = x.clone();
        parts.insert(idx + 1, y.clone());
        splits.push(Split { w, x, y, side });
    }
    let mut b2 = Vec::new();
    if early.is_none() {
        for w in &parts {
            let mut it = Combinations::new(w.to_vec(), ell);
            while let Some(s) = it.next_subset() {
                b2.push(rank(s));
            }
        }
    }
    b1.sort_unstable();
    b1.dedup();
    b2.sort_unstable();
    if !ex.first_bad_set_within(b1.len(), n) {
        return Err(Error::BoundViolated(format!(
            "first bad set has {} tuples, above 2^ℓ n^(ℓ-1+ε)",
            b1.len()
        )));
    }
    if !ex.second_bad_set_within(b2.len(), n) {
        return Err(Error::BoundViolated(format!(
            "second bad set has {} tuples, above n^(ℓ-(ℓ-1)γ)",
            b2.len()
        )));
    }
    Ok(PartitionTrace {
        n,
        ell,
        parts,
        splits,
        b1,
        b2,
        terminated_early: early.is_some(),
        early,
        epsilon: ex.epsilon(),
        gamma: ex.gamma(),
    })
}
