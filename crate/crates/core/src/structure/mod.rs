//! Disperse checking, tight walks and tight components.
//!
//! A hypergraph is disperse when every (ℓ+1)-set spans 0, 1, ℓ or ℓ+1 edges. Tight
//! components partition the (ℓ−1)-sets: two of them are connected when a sequence of
//! edges, consecutive ones sharing at least ℓ−1 vertices, starts at an edge containing
//! the first and ends at an edge containing the second.

mod lemmas;

pub use lemmas::{verify_lemma_suite, Budget, LemmaId, LemmaOutcome, LemmaReport, LemmaStatus};

use std::collections::VecDeque;

use crate::combinatorics::{binomial, rank, unrank, unrank_into, Combinations};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::hypergraph::Hypergraph;
use crate::limits::Limits;
use crate::union_find::UnionFind;
use crate::vertex_set::VertexSet;

/// Colex rank of an (ℓ−1)-subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TupleId(pub u64);

impl TupleId {
    pub fn of(sorted: &[usize]) -> Self {
        TupleId(rank(sorted))
    }

    pub fn vertices(self, size: usize) -> Vec<usize> {
        unrank(self.0, size)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisperseReport {
    pub ok: bool,
    /// Colex-first (ℓ+1)-set whose edge count is outside {0, 1, ℓ, ℓ+1}, with that count.
    pub witness: Option<(VertexSet, usize)>,
    /// Total number of violating sets, when run in census mode.
    pub violations: Option<u64>,
}

/// Rank of `x` with position `skip` removed, for sorted `x`.
#[inline]
fn rank_without(x: &[usize], skip: usize) -> u64 {
    let mut r = 0;
    for (i, &v) in x.iter().enumerate() {
        if i < skip {
            r += binomial(v, i + 1).unwrap_or(0);
        } else if i > skip {
            r += binomial(v, i).unwrap_or(0);
        }
    }
    r
}

/// Edge count of every (ℓ+1)-set, checked against {0, 1, ℓ, ℓ+1}. Valid for any ℓ ≥ 2.
pub(crate) fn scan_disperse(g: &Hypergraph, census: bool, limits: &Limits) -> Result<DisperseReport> {
    let ell = g.ell();
    limits.check_subsets("enumerate (ell+1)-sets", g.n(), ell + 1)?;
    let mut witness = None;
    let mut violations = 0u64;
    let mut it = Combinations::of_range(g.n(), ell + 1);
    while let Some(x) = it.next_subset() {
        let count = (0..=ell)
            .filter(|&j| g.contains_rank(rank_without(x, j)))
            .count();
        if (2..ell).contains(&count) {
            violations += 1;
            if witness.is_none() {
                witness = Some((x.iter().copied().collect(), count));
            }
            if !census {
                break;
            }
        }
    }
    Ok(DisperseReport {
        ok: witness.is_none(),
        witness,
        violations: census.then_some(violations),
    })
}

/// Exhaustive disperse check; stops at the colex-first violation.
pub fn check_disperse(g: &Hypergraph) -> Result<DisperseReport> {
    if g.ell() < 3 {
        return Err(Error::DisperseUndefined { ell: g.ell() });
    }
    scan_disperse(g, false, Limits::global())
}

/// Like [`check_disperse`] but counts every violating (ℓ+1)-set.
pub fn disperse_census(g: &Hypergraph) -> Result<DisperseReport> {
    if g.ell() < 3 {
        return Err(Error::DisperseUndefined { ell: g.ell() });
    }
    scan_disperse(g, true, Limits::global())
}

pub(crate) fn require_disperse(g: &Hypergraph) -> Result<()> {
    let report = check_disperse(g)?;
    match report.witness {
        Some((witness, count)) => Err(Error::NotDisperse { witness, count }),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleClass {
    pub members: Vec<TupleId>,
    /// Union of the member tuples.
    pub support: VertexSet,
}

/// The tight components of a hypergraph, as a partition of its (ℓ−1)-sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleClassPartition {
    tuple_size: usize,
    class_of: Vec<usize>,
    classes: Vec<TupleClass>,
}

impl TupleClassPartition {
    pub fn tuple_size(&self) -> usize {
        self.tuple_size
    }

    /// Classes ordered by their smallest member.
    pub fn classes(&self) -> &[TupleClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    #[inline]
    pub fn class_of(&self, t: TupleId) -> usize {
        self.class_of[t.0 as usize]
    }

    pub fn class_of_tuple(&self, sorted: &[usize]) -> usize {
        self.class_of(TupleId::of(sorted))
    }

    pub fn same_class(&self, a: TupleId, b: TupleId) -> bool {
        self.class_of(a) == self.class_of(b)
    }

    /// Size of the largest support.
    pub fn max_support(&self) -> usize {
        self.classes.iter().map(|c| c.support.len()).max().unwrap_or(0)
    }
}

pub fn tight_components(g: &Hypergraph) -> Result<TupleClassPartition> {
    tight_components_with(g, Limits::global())
}

pub fn tight_components_with(g: &Hypergraph, limits: &Limits) -> Result<TupleClassPartition> {
    let k = g.ell() - 1;
    let total = limits.check_subsets("index (ell-1)-sets", g.n(), k)? as usize;
    let mut uf = UnionFind::new(total);
    for e in g.edges() {
        let first = rank_without(e, 0) as usize;
        for j in 1..e.len() {
            uf.union(first, rank_without(e, j) as usize);
        }
    }
    let class_of = uf.labels();
    let mut classes = vec![
        TupleClass {
            members: Vec::new(),
            support: VertexSet::new(),
        };
        uf.set_count()
    ];
    let mut buf = Vec::with_capacity(k);
    for (r, &c) in class_of.iter().enumerate() {
        unrank_into(r as u64, k, &mut buf);
        let class = &mut classes[c];
        class.members.push(TupleId(r as u64));
        class.support.extend(buf.iter().copied());
    }
    Ok(TupleClassPartition {
        tuple_size: k,
        class_of,
        classes,
    })
}

/// True iff there is exactly one tight component.
pub fn is_tightly_connected(g: &Hypergraph) -> Result<bool> {
    Ok(tight_components(g)?.len() == 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCheck {
    /// Set when the input is not disperse, so the conclusion may legitimately fail.
    pub hypothesis_violated: bool,
    /// Index of the first class whose members are not all (ℓ−1)-subsets of its support.
    pub violation: Option<usize>,
}

/// Checks that every tight component is the full family of (ℓ−1)-subsets of its support.
pub fn verify_components_are_cliques(g: &Hypergraph) -> Result<CliqueCheck> {
    let disperse = check_disperse(g)?.ok;
    let parts = tight_components(g)?;
    let violation = parts.classes().iter().position(|c| {
        binomial(c.support.len(), parts.tuple_size()) != Ok(c.members.len() as u64)
    });
    Ok(CliqueCheck {
        hypothesis_violated: !disperse,
        violation,
    })
}

/// True unless both `g` and its complement are tightly connected.
pub fn verify_not_both_connected(g: &Hypergraph) -> Result<bool> {
    Ok(!(is_tightly_connected(g)? && is_tightly_connected(&g.complement()?)?))
}

/// A sequence of edges, consecutive ones sharing at least ℓ−1 vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightWalk {
    pub edges: Vec<Vec<usize>>,
}

impl TightWalk {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_valid(&self, ell: usize) -> bool {
        !self.edges.is_empty()
            && self.edges.windows(2).all(|w| {
                w[0].iter().filter(|v| w[1].contains(v)).count() + 1 >= ell
            })
    }
}

/// Edge adjacency of a hypergraph: edges are adjacent when they share an (ℓ−1)-set.
#[derive(Debug, Clone)]
pub struct EdgeAdjacency {
    /// Edge indices containing each (ℓ−1)-set, indexed by tuple rank.
    pub tuple_edges: Vec<Vec<usize>>,
    /// Distinct neighbouring edges of each edge.
    pub neighbors: Vec<Vec<usize>>,
}

impl EdgeAdjacency {
    pub fn new(g: &Hypergraph) -> Result<Self> {
        let k = g.ell() - 1;
        let total = Limits::global().check_subsets("index (ell-1)-sets", g.n(), k)? as usize;
        let mut tuple_edges = vec![Vec::new(); total];
        for (i, e) in g.edges().enumerate() {
            for j in 0..e.len() {
                tuple_edges[rank_without(e, j) as usize].push(i);
            }
        }
        let mut neighbors = vec![Vec::new(); g.edge_count()];
        for (i, e) in g.edges().enumerate() {
            let nb = &mut neighbors[i];
            for j in 0..e.len() {
                nb.extend(
                    tuple_edges[rank_without(e, j) as usize]
                        .iter()
                        .filter(|&&f| f != i),
                );
            }
            nb.sort_unstable();
            nb.dedup();
        }
        Ok(EdgeAdjacency {
            tuple_edges,
            neighbors,
        })
    }

    /// Minimum-length tight walk from an edge containing `a` to an edge containing `b`.
    pub fn shortest_walk(&self, g: &Hypergraph, a: TupleId, b: TupleId) -> Option<TightWalk> {
        let sources = self.tuple_edges.get(a.0 as usize)?;
        let targets = self.tuple_edges.get(b.0 as usize)?;
        if targets.is_empty() {
            return None;
        }
        let mut prev = vec![usize::MAX; g.edge_count()];
        let mut queue = VecDeque::new();
        for &s in sources {
            prev[s] = s;
            queue.push_back(s);
        }
        let mut hit = None;
        while let Some(e) = queue.pop_front() {
            if targets.binary_search(&e).is_ok() {
                hit = Some(e);
                break;
            }
            for &f in &self.neighbors[e] {
                if prev[f] == usize::MAX {
                    prev[f] = e;
                    queue.push_back(f);
                }
            }
        }
        let mut cur = hit?;
        let mut path = vec![cur];
        while prev[cur] != cur {
            cur = prev[cur];
            path.push(cur);
        }
        path.reverse();
        Some(TightWalk {
            edges: path.into_iter().map(|i| g.edge(i).to_vec()).collect(),
        })
    }
}

/// Breadth-first search over the edge-adjacency graph.
pub fn shortest_tight_walk(g: &Hypergraph, a: TupleId, b: TupleId) -> Result<Option<TightWalk>> {
    Ok(EdgeAdjacency::new(g)?.shortest_walk(g, a, b))
}

/// Links of a 3-graph, or iterated links on ℓ−2 vertices of an ℓ-graph, as simple graphs.
pub(crate) fn two_links(g: &Hypergraph) -> Result<Vec<(Vec<usize>, SimpleGraph, crate::Relabel)>> {
    let depth = g.ell() - 2;
    let mut out = Vec::new();
    let mut it = Combinations::of_range(g.n(), depth);
    while let Some(vs) = it.next_subset() {
        let (l, map) = g.iterated_link(vs)?;
        out.push((vs.to_vec(), SimpleGraph::from_hypergraph(&l)?, map));
    }
    Ok(out)
}
