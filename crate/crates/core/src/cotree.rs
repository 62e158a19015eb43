//! Cohypergraph recognition and homogeneous sets from decomposition trees.
//!
//! A cohypergraph on one vertex is a leaf; otherwise its vertices split into parts such
//! that every ℓ-set meeting two or more parts is an edge (join-all) or none is
//! (join-none), and each part is again a cohypergraph.

use std::fmt;

use crate::combinatorics::{rank, Combinations};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Relabel};
use crate::limits::Limits;
use crate::union_find::UnionFind;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    /// Every ℓ-set meeting two or more children is an edge.
    JoinAll,
    /// No ℓ-set meeting two or more children is an edge.
    JoinNone,
}

impl Polarity {
    pub fn label(self) -> &'static str {
        match self {
            Polarity::JoinAll => "ALL",
            Polarity::JoinNone => "NONE",
        }
    }

    pub fn flip(self) -> Polarity {
        match self {
            Polarity::JoinAll => Polarity::JoinNone,
            Polarity::JoinNone => Polarity::JoinAll,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Cotree {
    Leaf(usize),
    Join {
        polarity: Polarity,
        children: Vec<Cotree>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    Cohypergraph(Cotree),
    /// A vertex set whose induced subgraph and its complement are both weakly connected.
    Irreducible(VertexSet),
}

impl Recognition {
    pub fn cotree(&self) -> Option<&Cotree> {
        match self {
            Recognition::Cohypergraph(t) => Some(t),
            Recognition::Irreducible(_) => None,
        }
    }

    pub fn into_cotree(self) -> Option<Cotree> {
        match self {
            Recognition::Cohypergraph(t) => Some(t),
            Recognition::Irreducible(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HomogeneousKind {
    Clique,
    Independent,
}

impl fmt::Display for HomogeneousKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HomogeneousKind::Clique => "clique",
            HomogeneousKind::Independent => "independent",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousResult {
    pub kind: HomogeneousKind,
    pub vertices: VertexSet,
    /// Lower bound on `vertices.len()` guaranteed by the method that produced it.
    pub certified_bound: u64,
}

impl HomogeneousResult {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks the set is a genuine clique or independent set of `g` and meets its bound.
    pub fn holds_in(&self, g: &Hypergraph) -> bool {
        let homogeneous = match self.kind {
            HomogeneousKind::Clique => g.is_clique(&self.vertices),
            HomogeneousKind::Independent => g.is_independent(&self.vertices),
        };
        homogeneous && self.len() as u64 >= self.certified_bound
    }
}

impl Cotree {
    pub fn leaves(&self) -> VertexSet {
        let mut out = VertexSet::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut VertexSet) {
        match self {
            Cotree::Leaf(v) => {
                out.insert(*v);
            }
            Cotree::Join { children, .. } => children.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Cotree::Leaf(_) => 1,
            Cotree::Join { children, .. } => children.iter().map(Cotree::leaf_count).sum(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Cotree::Leaf(_) => 0,
            Cotree::Join { children, .. } => 1 + children.iter().map(Cotree::depth).max().unwrap_or(0),
        }
    }

    /// Leaves partition `0..n` and every internal node has at least two children.
    pub fn validate(&self, n: usize) -> Result<()> {
        let mut seen = VertexSet::new();
        self.validate_into(n, &mut seen)?;
        if seen.len() != n {
            return Err(Error::InvalidParameter(format!(
                "cotree covers {} of {n} vertices",
                seen.len()
            )));
        }
        Ok(())
    }

    fn validate_into(&self, n: usize, seen: &mut VertexSet) -> Result<()> {
        match self {
            Cotree::Leaf(v) => {
                if *v >= n {
                    return Err(Error::VertexOutOfRange { vertex: *v, n });
                }
                if !seen.insert(*v) {
                    return Err(Error::InvalidParameter(format!("leaf {v} appears twice")));
                }
                Ok(())
            }
            Cotree::Join { children, .. } => {
                if children.len() < 2 {
                    return Err(Error::InvalidParameter(
                        "internal cotree node with fewer than two children".into(),
                    ));
                }
                children.iter().try_for_each(|c| c.validate_into(n, seen))
            }
        }
    }

    /// Renames every leaf through `map`.
    pub fn relabel(&self, map: &Relabel) -> Cotree {
        self.map_leaves(&|v| map.lift(v))
    }

    pub fn map_leaves(&self, f: &dyn Fn(usize) -> usize) -> Cotree {
        match self {
            Cotree::Leaf(v) => Cotree::Leaf(f(*v)),
            Cotree::Join { polarity, children } => Cotree::Join {
                polarity: *polarity,
                children: children.iter().map(|c| c.map_leaves(f)).collect(),
            },
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph cotree {\n");
        let mut next = 0usize;
        self.dot_node(&mut out, &mut next);
        out.push_str("}\n");
        out
    }

    fn dot_node(&self, out: &mut String, next: &mut usize) -> usize {
        let id = *next;
        *next += 1;
        match self {
            Cotree::Leaf(v) => out.push_str(&format!("  n{id} [label=\"{v}\"];\n")),
            Cotree::Join { polarity, children } => {
                out.push_str(&format!("  n{id} [label=\"{}\"];\n", polarity.label()));
                for c in children {
                    let cid = c.dot_node(out, next);
                    out.push_str(&format!("  n{id} -- n{cid};\n"));
                }
            }
        }
        id
    }
}

/// Nested text form, e.g. `ALL(0 NONE(1 2))`.
impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cotree::Leaf(v) => write!(f, "{v}"),
            Cotree::Join { polarity, children } => {
                write!(f, "{}(", polarity.label())?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

pub fn recognize_cohypergraph(g: &Hypergraph) -> Result<Recognition> {
    recognize_cohypergraph_with(g, Limits::global())
}

pub fn recognize_cohypergraph_with(g: &Hypergraph, limits: &Limits) -> Result<Recognition> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("cotree of an empty vertex set".into()));
    }
    match recognize_local(g, &Relabel::identity(g.n()), limits)? {
        Ok(t) => Ok(Recognition::Cohypergraph(t)),
        Err(bad) => Ok(Recognition::Irreducible(bad)),
    }
}

/// Recognizes the subhypergraph induced on `s`, with leaves in original labels.
pub fn recognize_induced(g: &Hypergraph, s: &VertexSet) -> Result<Recognition> {
    if s.is_empty() {
        return Err(Error::InvalidParameter("cotree of an empty vertex set".into()));
    }
    let (h, map) = g.induced(s);
    match recognize_local(&h, &map, Limits::global())? {
        Ok(t) => Ok(Recognition::Cohypergraph(t)),
        Err(bad) => Ok(Recognition::Irreducible(bad)),
    }
}

fn weak_components(h: &Hypergraph) -> Vec<VertexSet> {
    let mut uf = UnionFind::new(h.n());
    for e in h.edges() {
        for w in e.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    group(&mut uf)
}

fn co_weak_components(h: &Hypergraph, limits: &Limits) -> Result<Vec<VertexSet>> {
    limits.check_subsets("complement", h.n(), h.ell())?;
    let mut uf = UnionFind::new(h.n());
    let mut it = Combinations::of_range(h.n(), h.ell());
    while let Some(s) = it.next_subset() {
        if uf.set_count() == 1 {
            break;
        }
        if !h.contains_rank(rank(s)) {
            for w in s.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
    }
    Ok(group(&mut uf))
}

fn group(uf: &mut UnionFind) -> Vec<VertexSet> {
    let labels = uf.labels();
    let mut out = vec![VertexSet::new(); uf.set_count()];
    for (v, &l) in labels.iter().enumerate() {
        out[l].insert(v);
    }
    out
}

/// `Ok(Ok(tree))` on success, `Ok(Err(set))` with an irreducible set in original labels.
fn recognize_local(
    h: &Hypergraph,
    map: &Relabel,
    limits: &Limits,
) -> Result<std::result::Result<Cotree, VertexSet>> {
    if h.n() == 1 {
        return Ok(Ok(Cotree::Leaf(map.lift(0))));
    }
    let (polarity, parts) = {
        let comps = weak_components(h);
        if comps.len() >= 2 {
            (Polarity::JoinNone, comps)
        } else {
            let co = co_weak_components(h, limits)?;
            if co.len() < 2 {
                return Ok(Err(VertexSet::full(h.n()).iter().map(|v| map.lift(v)).collect()));
            }
            (Polarity::JoinAll, co)
        }
    };
    let mut children = Vec::with_capacity(parts.len());
    for part in &parts {
        let (sub, inner) = h.induced(part);
        match recognize_local(&sub, &map.compose(&inner), limits)? {
            Ok(t) => children.push(t),
            Err(bad) => return Ok(Err(bad)),
        }
    }
    Ok(Ok(Cotree::Join { polarity, children }))
}

/// The ℓ-graph on `0..n` described by `t`.
pub fn reconstruct(t: &Cotree, n: usize, ell: usize) -> Result<Hypergraph> {
    t.validate(n)?;
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("uniformity {ell} < 2")));
    }
    Limits::global().check_subsets("reconstruct", n, ell)?;
    // root-to-leaf node paths; an ℓ-set's deepest common node decides it
    let mut polarities = Vec::new();
    let mut paths = vec![Vec::new(); n];
    fn walk(t: &Cotree, stack: &mut Vec<u32>, pol: &mut Vec<Polarity>, paths: &mut [Vec<u32>]) {
        match t {
            Cotree::Leaf(v) => paths[*v] = stack.clone(),
            Cotree::Join { polarity, children } => {
                stack.push(pol.len() as u32);
                pol.push(*polarity);
                for c in children {
                    walk(c, stack, pol, paths);
                }
                stack.pop();
            }
        }
    }
    walk(t, &mut Vec::new(), &mut polarities, &mut paths);
    let mut ranks = Vec::new();
    let mut it = Combinations::of_range(n, ell);
    while let Some(s) = it.next_subset() {
        let first = &paths[s[0]];
        let common = s[1..].iter().fold(first.len(), |len, &v| {
            first[..len]
                .iter()
                .zip(&paths[v])
                .take_while(|(a, b)| a == b)
                .count()
        });
        if polarities[first[common - 1] as usize] == Polarity::JoinAll {
            ranks.push(rank(s));
        }
    }
    Ok(Hypergraph::from_sorted_ranks(n, ell, ranks))
}

/// Clique and independent set following the tree: a join-all node unions its children's
/// cliques and keeps the largest child independent set, a join-none node the reverse.
/// The sizes multiply to at least the number of leaves.
pub fn extract_homogeneous(t: &Cotree) -> (HomogeneousResult, HomogeneousResult) {
    let (clique, indep) = extract_rec(t);
    let n = t.leaf_count() as u64;
    let clique_bound = n.div_ceil(indep.len() as u64);
    let indep_bound = n.div_ceil(clique.len() as u64);
    (
        HomogeneousResult {
            kind: HomogeneousKind::Clique,
            vertices: clique,
            certified_bound: clique_bound,
        },
        HomogeneousResult {
            kind: HomogeneousKind::Independent,
            vertices: indep,
            certified_bound: indep_bound,
        },
    )
}

fn extract_rec(t: &Cotree) -> (VertexSet, VertexSet) {
    match t {
        Cotree::Leaf(v) => (VertexSet::singleton(*v), VertexSet::singleton(*v)),
        Cotree::Join { polarity, children } => {
            let mut union = VertexSet::new();
            let mut largest = VertexSet::new();
            for child in children {
                let (clique, indep) = extract_rec(child);
                let (joined, kept) = match polarity {
                    Polarity::JoinAll => (clique, indep),
                    Polarity::JoinNone => (indep, clique),
                };
                union = union.union(&joined);
                if kept.len() > largest.len() {
                    largest = kept;
                }
            }
            match polarity {
                Polarity::JoinAll => (union, largest),
                Polarity::JoinNone => (largest, union),
            }
        }
    }
}
