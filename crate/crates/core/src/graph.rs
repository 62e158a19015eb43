//! Simple undirected graphs as adjacency bitsets.
//!
//! Links of 3-graphs, the split-link construction, and the bad-pair graph all live here.
//! The 2-uniform [`Hypergraph`] is the interchange form.

use crate::combinatorics::Combinations;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<VertexSet>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![VertexSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = SimpleGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn from_hypergraph(h: &Hypergraph) -> Result<Self> {
        if h.ell() != 2 {
            return Err(Error::InvalidParameter(format!(
                "expected a 2-graph, got uniformity {}",
                h.ell()
            )));
        }
        Ok(Self::from_edges(h.n(), h.edges().map(|e| (e[0], e[1]))))
    }

    pub fn to_hypergraph(&self) -> Result<Hypergraph> {
        Hypergraph::new(self.n(), 2, self.edges().map(|(u, v)| [u, v]))
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n() && v < self.n(), "invalid edge {u}-{v}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.n();
        let full = VertexSet::full(n);
        SimpleGraph {
            adj: (0..n)
                .map(|v| {
                    let mut row = full.difference(&self.adj[v]);
                    row.remove(v);
                    row
                })
                .collect(),
        }
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut others = s.clone();
            others.remove(v);
            others.is_subset(&self.adj[v])
        })
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Connected components of the subgraph induced on `within`, ordered by smallest vertex.
    pub fn components_within(&self, within: &VertexSet, complemented: bool) -> Vec<VertexSet> {
        let mut left = within.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp.clone();
            left.remove(start);
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for v in frontier.iter() {
                    let reach = if complemented {
                        left.difference(&self.adj[v])
                    } else {
                        left.intersection(&self.adj[v])
                    };
                    next = next.union(&reach);
                }
                left = left.difference(&next);
                comp = comp.union(&next);
                frontier = next;
            }
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&VertexSet::full(self.n()), false)
    }

    /// Complement-reducibility test: every induced subgraph on two or more vertices is
    /// disconnected or has a disconnected complement.
    pub fn is_cograph(&self) -> bool {
        let mut stack = vec![VertexSet::full(self.n())];
        while let Some(s) = stack.pop() {
            if s.len() <= 1 {
                continue;
            }
            let comps = self.components_within(&s, false);
            if comps.len() > 1 {
                stack.extend(comps);
                continue;
            }
            let co = self.components_within(&s, true);
            if co.len() > 1 {
                stack.extend(co);
                continue;
            }
            return false;
        }
        true
    }

    /// Brute-force search for an induced path on four vertices, colex-first.
    pub fn find_induced_p4(&self) -> Option<[usize; 4]> {
        let mut it = Combinations::of_range(self.n(), 4);
        while let Some(q) = it.next_subset() {
            let mut deg = [0usize; 4];
            let mut edges = 0;
            for i in 0..4 {
                for j in i + 1..4 {
                    if self.has_edge(q[i], q[j]) {
                        deg[i] += 1;
                        deg[j] += 1;
                        edges += 1;
                    }
                }
            }
            let mut sorted = deg;
            sorted.sort_unstable();
            if edges == 3 && sorted == [1, 1, 2, 2] {
                return Some([q[0], q[1], q[2], q[3]]);
            }
        }
        None
    }

    /// A maximum independent set, by branch and bound.
    pub fn max_independent_set(&self) -> VertexSet {
        let mut best = VertexSet::new();
        self.mis_branch(VertexSet::full(self.n()), VertexSet::new(), &mut best);
        best
    }

    fn mis_branch(&self, mut cand: VertexSet, mut chosen: VertexSet, best: &mut VertexSet) {
        loop {
            if chosen.len() + cand.len() <= best.len() {
                return;
            }
            // vertices with no neighbour among the candidates are always taken
            let mut pivot = None;
            let mut pivot_deg = 0;
            let mut isolated = VertexSet::new();
            for v in cand.iter() {
                let d = self.adj[v].intersection_len(&cand);
                if d == 0 {
                    isolated.insert(v);
                } else if d > pivot_deg {
                    pivot = Some(v);
                    pivot_deg = d;
                }
            }
            chosen = chosen.union(&isolated);
            cand = cand.difference(&isolated);
            let Some(v) = pivot else {
                if chosen.len() > best.len() {
                    *best = chosen;
                }
                return;
            };
            if pivot_deg <= 1 {
                // candidates induce a matching: one endpoint per edge
                let mut rest = cand.clone();
                while let Some(u) = rest.first() {
                    chosen.insert(u);
                    rest.remove(u);
                    rest = rest.difference(&self.adj[u]);
                }
                if chosen.len() > best.len() {
                    *best = chosen;
                }
                return;
            }
            let mut with_v = cand.difference(&self.adj[v]);
            with_v.remove(v);
            let mut chosen_v = chosen.clone();
            chosen_v.insert(v);
            self.mis_branch(with_v, chosen_v, best);
            cand.remove(v);
        }
    }

    /// Independent set in a graph known to be `K_clique_free`-free, following the
    /// Erdős–Szekeres recursion `R(k, m) <= R(k - 1, m) + R(k, m - 1)`: on at least
    /// `C(m + k - 2, k - 1)` vertices it finds `m` independent vertices. The result is
    /// then extended greedily to a maximal independent set.
    pub fn ramsey_independent_set(&self, clique_free: usize) -> VertexSet {
        let mut found = self.ramsey_rec(&VertexSet::full(self.n()), clique_free);
        for v in 0..self.n() {
            if !found.contains(v) && self.adj[v].is_disjoint(&found) {
                found.insert(v);
            }
        }
        found
    }

    fn ramsey_rec(&self, s: &VertexSet, k: usize) -> VertexSet {
        if s.is_empty() || k <= 1 {
            return VertexSet::new();
        }
        if k == 2 {
            // no edges remain by hypothesis; keep an independent subset regardless
            let mut out = VertexSet::new();
            for v in s.iter() {
                if self.adj[v].is_disjoint(&out) {
                    out.insert(v);
                }
            }
            return out;
        }
        let v = s.first().unwrap();
        let nb = s.intersection(&self.adj[v]);
        let mut non = s.difference(&self.adj[v]);
        non.remove(v);
        let mut with_v = self.ramsey_rec(&non, k);
        with_v.insert(v);
        let inside = self.ramsey_rec(&nb, k - 1);
        if inside.len() > with_v.len() {
            inside
        } else {
            with_v
        }
    }

    /// A `K4` in the graph, colex-first by its largest vertices, if one exists.
    pub fn find_k4(&self) -> Option<[usize; 4]> {
        for (a, b) in self.edges() {
            let common = self.adj[a].intersection(&self.adj[b]);
            for c in common.iter().filter(|&c| c > b) {
                if let Some(d) = self.adj[c].intersection(&common).iter().find(|&d| d > c) {
                    return Some([a, b, c, d]);
                }
            }
        }
        None
    }
}
