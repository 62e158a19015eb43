//! Exhaustive checks of the structural facts about disperse hypergraphs.
//!
//! Each check enumerates every instantiation of a hypothesis at the size of the given
//! hypergraph, up to a budget, and tests the conclusion. A counterexample on a disperse
//! input means an implementation bug.

use std::fmt;

use super::{
    require_disperse, rank_without, scan_disperse, tight_components, two_links, EdgeAdjacency,
    TupleClassPartition, TupleId,
};
use crate::combinatorics::{rank, Combinations};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Relabel};
use crate::limits::Limits;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    /// Every link of a disperse hypergraph is disperse.
    LinksDisperse,
    /// For edges `f, g` sharing ℓ−1 vertices and `v ∈ f`, any two (ℓ−2)-subsets of
    /// `g ∖ {v}` are connected in the link of `v`.
    AdjacentEdgeLinkConnected,
    /// A three-edge walk from an edge through `v` to an edge containing an (ℓ−1)-set `B`
    /// can be replaced by a walk of at most two edges.
    ThreeWalkShortcut,
    /// Along any tight walk starting at an edge through `v`, each consecutive intersection
    /// lies in an edge at most one step from an edge through `v`.
    IntersectionNearVertex,
    /// If `A ∪ {v}` and `B ∪ {v}` are connected, then `A` and `B` are connected in the link of `v`.
    LinkInheritsConnectivity,
    /// Links of a tightly connected disperse hypergraph are tightly connected.
    LinksTightlyConnected,
    /// Links of disperse 3-graphs, and links on ℓ−2 vertices in general, are cographs.
    LinksAreCographs,
    /// Connected (ℓ−1)-sets meeting in ℓ−2 vertices are joined by a walk of at most two edges.
    ShortWalkForNearTuples,
    /// If two (ℓ−1)-subsets of an ℓ-set share a component, all of its (ℓ−1)-subsets do.
    SharedComponentClosure,
    /// All (ℓ−1)-subsets of the union of a tight walk lie in one component.
    WalkUnionInComponent,
}

impl LemmaId {
    pub const ALL: [LemmaId; 10] = [
        LemmaId::LinksDisperse,
        LemmaId::AdjacentEdgeLinkConnected,
        LemmaId::ThreeWalkShortcut,
        LemmaId::IntersectionNearVertex,
        LemmaId::LinkInheritsConnectivity,
        LemmaId::LinksTightlyConnected,
        LemmaId::LinksAreCographs,
        LemmaId::ShortWalkForNearTuples,
        LemmaId::SharedComponentClosure,
        LemmaId::WalkUnionInComponent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::LinksDisperse => "links-disperse",
            LemmaId::AdjacentEdgeLinkConnected => "adjacent-edge-link-connected",
            LemmaId::ThreeWalkShortcut => "three-walk-shortcut",
            LemmaId::IntersectionNearVertex => "intersection-near-vertex",
            LemmaId::LinkInheritsConnectivity => "link-inherits-connectivity",
            LemmaId::LinksTightlyConnected => "links-tightly-connected",
            LemmaId::LinksAreCographs => "links-are-cographs",
            LemmaId::ShortWalkForNearTuples => "short-walk-near-tuples",
            LemmaId::SharedComponentClosure => "shared-component-closure",
            LemmaId::WalkUnionInComponent => "walk-union-in-component",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaStatus {
    /// No counterexample among the checked instances; `truncated` if the budget ran out.
    Passed { truncated: bool },
    Failed { counterexample: String },
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaOutcome {
    pub lemma: LemmaId,
    pub status: LemmaStatus,
    /// Hypothesis instantiations checked.
    pub instances: u64,
}

impl LemmaOutcome {
    pub fn passed(&self) -> bool {
        matches!(self.status, LemmaStatus::Passed { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub outcomes: Vec<LemmaOutcome>,
}

impl LemmaReport {
    pub fn get(&self, lemma: LemmaId) -> Option<&LemmaOutcome> {
        self.outcomes.iter().find(|o| o.lemma == lemma)
    }

    /// No check failed (skipped checks do not count as failures).
    pub fn all_passed(&self) -> bool {
        self.outcomes
            .iter()
            .all(|o| !matches!(o.status, LemmaStatus::Failed { .. }))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    /// Per-check cap on hypothesis instantiations; 0 skips the check.
    pub max_instances: u64,
    pub skip: Vec<LemmaId>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_instances: 5_000_000,
            skip: Vec::new(),
        }
    }
}

struct Counter {
    count: u64,
    cap: u64,
    truncated: bool,
}

impl Counter {
    fn new(cap: u64) -> Self {
        Counter {
            count: 0,
            cap,
            truncated: false,
        }
    }

    /// Records one instantiation; false once the budget is exhausted.
    fn tick(&mut self) -> bool {
        if self.count >= self.cap {
            self.truncated = true;
            return false;
        }
        self.count += 1;
        true
    }
}

type CheckResult = std::result::Result<(), String>;

/// Shared precomputation for all checks.
struct Context<'a> {
    g: &'a Hypergraph,
    parts: TupleClassPartition,
    adj: EdgeAdjacency,
    incidence: Vec<Vec<usize>>,
    links: Vec<(Hypergraph, Relabel, TupleClassPartition)>,
}

impl<'a> Context<'a> {
    fn new(g: &'a Hypergraph) -> Result<Self> {
        let mut links = Vec::with_capacity(g.n());
        for v in 0..g.n() {
            let (l, map) = g.link(v)?;
            let p = tight_components(&l)?;
            links.push((l, map, p));
        }
        Ok(Context {
            parts: tight_components(g)?,
            adj: EdgeAdjacency::new(g)?,
            incidence: g.incidence(),
            links,
            g,
        })
    }

    fn ell(&self) -> usize {
        self.g.ell()
    }

    /// Class in the link of `v` of an (ℓ−2)-set given in original labels.
    fn link_class(&self, v: usize, a: &[usize]) -> usize {
        let (_, map, parts) = &self.links[v];
        let local: Vec<usize> = a.iter().map(|&u| map.forward(u).unwrap()).collect();
        parts.class_of_tuple(&local)
    }

    /// Marks the (ℓ−1)-sets contained in an edge within one step of an edge through `v`.
    fn near_tuples(&self, v: usize) -> (Vec<bool>, Vec<bool>) {
        let m = self.g.edge_count();
        let mut n1 = vec![false; m];
        for &e in &self.incidence[v] {
            n1[e] = true;
            for &f in &self.adj.neighbors[e] {
                n1[f] = true;
            }
        }
        let mut near = vec![false; self.adj.tuple_edges.len()];
        for (e, _) in n1.iter().enumerate().filter(|(_, &b)| b) {
            let edge = self.g.edge(e);
            for j in 0..edge.len() {
                near[rank_without(edge, j) as usize] = true;
            }
        }
        (n1, near)
    }
}

fn render(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn links_disperse(cx: &Context<'_>, c: &mut Counter) -> CheckResult {
    for (v, (l, map, _)) in cx.links.iter().enumerate() {
        if !c.tick() {
            return Ok(());
        }
        let report = scan_disperse(l, false, Limits::global()).map_err(|e| e.to_string())?;
        if let Some((x, count)) = report.witness {
            return Err(format!(
                "link of {v}: {{{}}} spans {count} edges",
                map.lift_set(&x)
            ));
        }
    }
    Ok(())
}

fn adjacent_edge_link_connected(cx: &Context<'_>, c: &mut Counter) -> CheckResult {
    let ell = cx.ell();
    for (gi, g) in cx.g.edges().enumerate() {
        let mut through: VertexSet = g.iter().copied().collect();
        for &f in &cx.adj.neighbors[gi] {
            through.extend(cx.g.edge(f).iter().copied());
        }
        for v in through.iter() {
            if !c.tick() {
                return Ok(());
            }
            let rest: Vec<usize> = g.iter().copied().filter(|&u| u != v).collect();
            let mut it = Combinations::new(rest, ell - 2);
            let mut class = None;
            while let Some(a) = it.next_subset() {
                let k = cx.link_class(v, a);
                match class {
                    None => class = Some(k),
                    Some(k0) if k0 != k => {
                        return Err(format!(
                            "edge {{{}}}, vertex {v}: {{{}}} not connected to the first subset",
                            render(g),
                            render(a)
                        ))
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(())
}

fn three_walk_shortcut(cx: &Context<'_>, c: &mut Counter) -> CheckResult {
    for v in 0..cx.g.n() {
        let (n1, near) = cx.near_tuples(v);
        let mut n2 = n1.clone();
        for (e, _) in n1.iter().enumerate().filter(|(_, &b)| b) {
            for &f in &cx.adj.neighbors[e] {
                n2[f] = true;
            }
        }
        for (e, _) in n2.iter().enumerate().filter(|(_, &b)| b) {
            let edge = cx.g.edge(e);
            for j in 0..edge.len() {
                if !c.tick() {
                    return Ok(());
                }
                if !near[rank_without(edge, j) as usize] {
                    let b: Vec<usize> = edge.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &u)| u).collect();
                    return Err(format!(
                        "vertex {v}, set {{{}}} reachable in three steps but not two",
                        render(&b)
                    ));
                }
            }
        }
    }
    Ok(())
}

fn intersection_near_vertex(cx: &Context<'_>, c: &mut Counter) -> CheckResult {
    for v in 0..cx.g.n() {
        if cx.incidence[v].is_empty() {
            continue;
        }
        let (_, near) = cx.near_tuples(v);
        let mut classes: Vec<usize> = cx.incidence[v]
            .iter()
            .map(|&e| cx.parts.class_of(TupleId(rank_without(cx.g.edge(e), 0))))
            .collect();
        classes.sort_unstable();
        classes.dedup();
        for &k in &classes {
            for t in &cx.parts.classes()[k].members {
                if cx.adj.tuple_edges[t.0 as usize].len() < 2 {
                    continue;
                }
                if !c.tick() {
                    return Ok(());
                }
                if !near[t.0 as usize] {
                    return Err(format!(
                        "vertex {v}: intersection {{{}}} is not within one step",
                        render(&t.vertices(cx.ell() - 1))
                    ));
                }
            }
        }
    }
    Ok(())
}

fn link_inherits_connectivity(cx: &Context<'_>, c: &mut Counter) -> CheckResult {
    let ell = cx.ell();
    for v in 0..cx.g.n() {
        let others: Vec<usize> = (0..cx.g.n()).filter(|&u| u != v).collect();
        let mut seen: std::collections::HashMap<usize, (usize, Vec<usize>)> = Default::default();
        let mut it = Combinations::new(others, ell - 2);
        let mut with_v = Vec::with_capacity(ell - 1);
        while let Some(a) = it.next_subset() {
            if !c.tick() {
                return Ok(());
            }
            with_v.clear();
            with_v.extend_from_slice(a);
            with_v.push(v);
            with_v.sort_unstable();
            let gk = cx.parts.class_of_tuple(&with_v);
            let lk = cx.link_class(v, a);
            match seen.get(&gk) {
                None => {
                    seen.insert(gk, (lk, a.to_vec()));
                }
                Some((lk0, a0)) if *lk0 != lk => {
                    return Err(format!(
                        "vertex {v}: {{{}}} and {{{}}} connected with {v} but not in its link",
                        render(a0),
                        render(a)
                    ))
                }
                _ => {}
            }
        }
    }
    Ok(())
}

fn links_tightly_connected(cx: &Context<'_>, c: &mut Counter) -> CheckResult {
    if cx.parts.len() != 1 {
        return Ok(());
    }
    for (v, (_, _, parts)) in cx.links.iter().enumerate() {
        if !c.tick() {
            return Ok(());
        }
        if parts.len() != 1 {
            return Err(format!("link of {v} has {} tight components", parts.len()));
        }
    }
    Ok(())
}

fn links_are_cographs(cx: &Context<'_>, c: &mut Counter) -> CheckResult {
    for (vs, link, map) in two_links(cx.g).map_err(|e| e.to_string())? {
        if !c.tick() {
            return Ok(());
        }
        if !link.is_cograph() {
            let p4 = link
                .find_induced_p4()
                .map(|q| render(&q.map(|u| map.lift(u))))
                .unwrap_or_default();
            return Err(format!("link of {{{}}} is not a cograph (P4: {p4})", render(&vs)));
        }
    }
    Ok(())
}

fn short_walk_for_near_tuples(cx: &Context<'_>, c: &mut Counter) -> CheckResult {
    let ell = cx.ell();
    let n = cx.g.n();
    let mut it = Combinations::of_range(n, ell - 2);
    let mut a = Vec::with_capacity(ell - 1);
    let mut b = Vec::with_capacity(ell - 1);
    while let Some(core) = it.next_subset() {
        let outside: Vec<usize> = (0..n).filter(|u| !core.contains(u)).collect();
        for (i, &x) in outside.iter().enumerate() {
            for &y in &outside[i + 1..] {
                a.clear();
                a.extend_from_slice(core);
                a.push(x);
                a.sort_unstable();
                b.clear();
                b.extend_from_slice(core);
                b.push(y);
                b.sort_unstable();
                let (ta, tb) = (TupleId(rank(&a)), TupleId(rank(&b)));
                if !cx.parts.same_class(ta, tb) {
                    continue;
                }
                if !c.tick() {
                    return Ok(());
                }
                let ea = &cx.adj.tuple_edges[ta.0 as usize];
                let eb = &cx.adj.tuple_edges[tb.0 as usize];
                let short = ea.iter().any(|e1| {
                    eb.iter()
                        .any(|e2| e1 == e2 || cx.adj.neighbors[*e1].binary_search(e2).is_ok())
                });
                if !short {
                    return Err(format!(
                        "{{{}}} and {{{}}} need more than two edges",
                        render(&a),
                        render(&b)
                    ));
                }
            }
        }
    }
    Ok(())
}

fn shared_component_closure(cx: &Context<'_>, c: &mut Counter) -> CheckResult {
    let ell = cx.ell();
    let mut it = Combinations::of_range(cx.g.n(), ell);
    let mut classes = Vec::with_capacity(ell);
    while let Some(b) = it.next_subset() {
        classes.clear();
        classes.extend((0..ell).map(|j| cx.parts.class_of(TupleId(rank_without(b, j)))));
        let mut sorted = classes.clone();
        sorted.sort_unstable();
        let repeated = sorted.windows(2).any(|w| w[0] == w[1]);
        if !repeated {
            continue;
        }
        if !c.tick() {
            return Ok(());
        }
        if sorted.first() != sorted.last() {
            return Err(format!(
                "{{{}}}: two subsets share a component but not all do",
                render(b)
            ));
        }
    }
    Ok(())
}

fn union_in_component(cx: &Context<'_>, union: &VertexSet, class: usize) -> bool {
    let mut it = Combinations::new(union.to_vec(), cx.ell() - 1);
    while let Some(t) = it.next_subset() {
        if cx.parts.class_of_tuple(t) != class {
            return false;
        }
    }
    true
}

fn walk_union_in_component(cx: &Context<'_>, c: &mut Counter) -> CheckResult {
    // walks of two and three edges, indexed by their middle edge
    for (fi, f) in cx.g.edges().enumerate() {
        let class = cx.parts.class_of(TupleId(rank_without(f, 0)));
        let fset: VertexSet = f.iter().copied().collect();
        let nb = &cx.adj.neighbors[fi];
        for (i, &e) in nb.iter().enumerate() {
            let with_e = fset.union(&cx.g.edge(e).iter().copied().collect());
            if e > fi {
                if !c.tick() {
                    return Ok(());
                }
                if !union_in_component(cx, &with_e, class) {
                    return Err(format!("walk {{{}}}, {{{}}}", render(f), render(cx.g.edge(e))));
                }
            }
            for &h in &nb[i + 1..] {
                if !c.tick() {
                    return Ok(());
                }
                let all = with_e.union(&cx.g.edge(h).iter().copied().collect());
                if !union_in_component(cx, &all, class) {
                    return Err(format!(
                        "walk {{{}}}, {{{}}}, {{{}}}",
                        render(cx.g.edge(e)),
                        render(f),
                        render(cx.g.edge(h))
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Runs every structural check against a disperse hypergraph.
pub fn verify_lemma_suite(g: &Hypergraph, budget: &Budget) -> Result<LemmaReport> {
    if g.ell() < 3 {
        return Err(Error::DisperseUndefined { ell: g.ell() });
    }
    require_disperse(g)?;
    let cx = Context::new(g)?;
    let outcomes = LemmaId::ALL
        .iter()
        .map(|&lemma| {
            if budget.max_instances == 0 || budget.skip.contains(&lemma) {
                return LemmaOutcome {
                    lemma,
                    status: LemmaStatus::Skipped {
                        reason: "excluded by budget".into(),
                    },
                    instances: 0,
                };
            }
            let mut counter = Counter::new(budget.max_instances);
            let result = match lemma {
                LemmaId::LinksDisperse => links_disperse(&cx, &mut counter),
                LemmaId::AdjacentEdgeLinkConnected => adjacent_edge_link_connected(&cx, &mut counter),
                LemmaId::ThreeWalkShortcut => three_walk_shortcut(&cx, &mut counter),
                LemmaId::IntersectionNearVertex => intersection_near_vertex(&cx, &mut counter),
                LemmaId::LinkInheritsConnectivity => link_inherits_connectivity(&cx, &mut counter),
                LemmaId::LinksTightlyConnected => links_tightly_connected(&cx, &mut counter),
                LemmaId::LinksAreCographs => links_are_cographs(&cx, &mut counter),
                LemmaId::ShortWalkForNearTuples => short_walk_for_near_tuples(&cx, &mut counter),
                LemmaId::SharedComponentClosure => shared_component_closure(&cx, &mut counter),
                LemmaId::WalkUnionInComponent => walk_union_in_component(&cx, &mut counter),
            };
            let status = match result {
                Ok(()) => LemmaStatus::Passed {
                    truncated: counter.truncated,
                },
                Err(counterexample) => LemmaStatus::Failed { counterexample },
            };
            LemmaOutcome {
                lemma,
                status,
                instances: counter.count,
            }
        })
        .collect();
    Ok(LemmaReport { outcomes })
}
