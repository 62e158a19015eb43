//! Homogeneous sets of disperse hypergraphs via the partition procedure, and the
//! cohypergraph obtained by editing only bad ℓ-sets.

use super::exact::{exact_max_homogeneous, oracle_cap};
use super::partition::{partition_algorithm, side_hypergraph, PartitionTrace, Side};
use super::spencer::spencer_independent_set;
use super::thresholds::{ceil_sqrt, Exponents};
use crate::cotree::{extract_homogeneous, reconstruct, Cotree, HomogeneousKind, HomogeneousResult};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// All tight components of some large part were small.
    EarlyTermination,
    /// An independent set of the bad set induces a cohypergraph.
    Cohypergraph,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::EarlyTermination => "early-termination",
            Branch::Cohypergraph => "cohypergraph",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PipelineOptions {
    /// On instances small enough for the exact oracle, return its witness when larger.
    pub oracle_fallback: bool,
}

#[derive(Debug, Clone)]
pub struct PipelineResult {
    pub result: HomogeneousResult,
    pub branch: Branch,
    /// The bad-set independent set, in the cohypergraph branch.
    pub u: Option<VertexSet>,
    pub trace: PartitionTrace,
    pub from_oracle: bool,
}

pub fn homogeneous_pipeline(g: &Hypergraph) -> Result<PipelineResult> {
    homogeneous_pipeline_with(g, &PipelineOptions::default())
}

pub fn homogeneous_pipeline_with(g: &Hypergraph, options: &PipelineOptions) -> Result<PipelineResult> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("homogeneous set of an empty vertex set".into()));
    }
    let trace = partition_algorithm(g)?;
    let (mut result, branch, u) = match &trace.early {
        Some(stop) => (early_result(g, &stop.part, stop.side)?, Branch::EarlyTermination, None),
        None => {
            let (r, u) = cohypergraph_result(g, &trace)?;
            (r, Branch::Cohypergraph, Some(u))
        }
    };
    if !result.holds_in(g) {
        return Err(Error::CertificationFailed(format!(
            "returned {} {{{}}} is not homogeneous in the input",
            result.kind, result.vertices
        )));
    }
    let mut from_oracle = false;
    if options.oracle_fallback && g.n() <= oracle_cap(g.ell()) {
        let exact = exact_max_homogeneous(g)?;
        if exact.max() > result.len() {
            result = if exact.omega >= exact.alpha {
                HomogeneousResult {
                    kind: HomogeneousKind::Clique,
                    certified_bound: exact.omega as u64,
                    vertices: exact.clique,
                }
            } else {
                HomogeneousResult {
                    kind: HomogeneousKind::Independent,
                    certified_bound: exact.alpha as u64,
                    vertices: exact.independent,
                }
            };
            from_oracle = true;
        }
    }
    Ok(PipelineResult {
        result,
        branch,
        u,
        trace,
        from_oracle,
    })
}

fn early_result(g: &Hypergraph, w: &VertexSet, side: Side) -> Result<HomogeneousResult> {
    let (h, map) = side_hypergraph(g, w, side)?;
    let s = spencer_independent_set(&h);
    Ok(HomogeneousResult {
        kind: match side {
            Side::Graph => HomogeneousKind::Independent,
            Side::Complement => HomogeneousKind::Clique,
        },
        vertices: map.lift_set(&s.vertices),
        certified_bound: s.certified_bound,
    })
}

fn cohypergraph_result(g: &Hypergraph, trace: &PartitionTrace) -> Result<(HomogeneousResult, VertexSet)> {
    let bad = trace.bad_set()?;
    let u = spencer_independent_set(&bad).vertices;
    let tree = trace
        .split_cotree(Some(&u))
        .ok_or_else(|| Error::CertificationFailed("bad-set independent set is empty".into()))?;
    let (gu, map) = g.induced(&u);
    let local = tree.map_leaves(&|v| map.forward(v).unwrap());
    if reconstruct(&local, gu.n(), g.ell())? != gu {
        return Err(Error::CertificationFailed(format!(
            "split history does not describe the subhypergraph on {{{u}}}"
        )));
    }
    let (clique, indep) = extract_homogeneous(&local);
    let best = if clique.len() >= indep.len() { clique } else { indep };
    Ok((
        HomogeneousResult {
            kind: best.kind,
            vertices: map.lift_set(&best.vertices),
            certified_bound: ceil_sqrt(u.len() as u64),
        },
        u,
    ))
}

#[derive(Debug, Clone)]
pub struct Completion {
    pub graph: Hypergraph,
    pub cotree: Cotree,
    /// Ranks of the ℓ-sets whose membership changed.
    pub edits: Vec<u64>,
}

/// Edits only bad ℓ-sets of `g` to obtain the cohypergraph described by the split history.
pub fn cohypergraph_completion(g: &Hypergraph, trace: &PartitionTrace) -> Result<Completion> {
    if trace.terminated_early {
        return Err(Error::InvalidParameter(
            "completion needs a trace that ran to completion".into(),
        ));
    }
    if trace.n != g.n() || trace.ell != g.ell() {
        return Err(Error::InvalidParameter("trace belongs to a different hypergraph".into()));
    }
    let cotree = trace
        .split_cotree(None)
        .ok_or_else(|| Error::InvalidParameter("completion of an empty vertex set".into()))?;
    let graph = reconstruct(&cotree, g.n(), g.ell())?;
    let edits = symmetric_difference(g.edge_ranks(), graph.edge_ranks());
    if let Some(&r) = edits
        .iter()
        .find(|r| trace.b1.binary_search(r).is_err() && trace.b2.binary_search(r).is_err())
    {
        return Err(Error::CertificationFailed(format!(
            "completion edits the ℓ-set {:?} outside the bad set",
            crate::combinatorics::unrank(r, g.ell())
        )));
    }
    if !Exponents::new(g.ell()).bad_set_within(edits.len(), g.n()) {
        return Err(Error::BoundViolated(format!(
            "{} edits exceed (2^ℓ+1) n^((3ℓ²-3ℓ+2)/(3ℓ-1))",
            edits.len()
        )));
    }
    Ok(Completion { graph, cotree, edits })
}

fn symmetric_difference(a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(*x);
                i += 1;
            }
            (Some(_), Some(y)) => {
                out.push(*y);
                j += 1;
            }
            (Some(x), None) => {
                out.push(*x);
                i += 1;
            }
            (None, Some(y)) => {
                out.push(*y);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}
