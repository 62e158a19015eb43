//! The canonical ℓ-uniform hypergraph representation and its basic operations.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::combinatorics::{binomial, rank, unrank_into, Combinations};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::vertex_set::VertexSet;

/// An ℓ-uniform hypergraph on vertices `0..n`.
///
/// Edges are kept sorted by colex rank, with a bitset over all `C(n, ℓ)` ranks for
/// constant-time membership. Two hypergraphs are equal iff they have the same `n`, `ℓ`
/// and edge set.
#[derive(Clone)]
pub struct Hypergraph {
    n: usize,
    ell: usize,
    ranks: Vec<u64>,
    flat: Vec<usize>,
    index: Vec<u64>,
}

/// Maps the vertices of a derived hypergraph back to the vertices they came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabel {
    original: Vec<usize>,
}

impl Relabel {
    pub fn identity(n: usize) -> Self {
        Relabel {
            original: (0..n).collect(),
        }
    }

    pub fn from_sorted(original: Vec<usize>) -> Self {
        debug_assert!(original.windows(2).all(|w| w[0] < w[1]));
        Relabel { original }
    }

    pub fn len(&self) -> usize {
        self.original.len()
    }

    pub fn is_empty(&self) -> bool {
        self.original.is_empty()
    }

    /// Original label of new vertex `v`.
    #[inline]
    pub fn lift(&self, v: usize) -> usize {
        self.original[v]
    }

    pub fn lift_set(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.original[v]).collect()
    }

    /// New label of original vertex `v`, if it survived.
    pub fn forward(&self, v: usize) -> Option<usize> {
        self.original.binary_search(&v).ok()
    }

    pub fn forward_set(&self, s: &VertexSet) -> VertexSet {
        s.iter().filter_map(|v| self.forward(v)).collect()
    }

    pub fn originals(&self) -> &[usize] {
        &self.original
    }

    /// `self` after `inner`: relabels of a relabel.
    pub fn compose(&self, inner: &Relabel) -> Relabel {
        Relabel {
            original: inner.original.iter().map(|&v| self.original[v]).collect(),
        }
    }
}

fn check_uniformity(ell: usize) -> Result<()> {
    if ell < 2 {
        return Err(Error::InvalidParameter(format!(
            "uniformity must be at least 2 (got {ell})"
        )));
    }
    Ok(())
}

impl Hypergraph {
    /// Builds a hypergraph from edges given as vertex lists in any order.
    pub fn new<I, E>(n: usize, ell: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        Self::new_with(n, ell, edges, Limits::global())
    }

    pub fn new_with<I, E>(n: usize, ell: usize, edges: I, limits: &Limits) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        check_uniformity(ell)?;
        limits.check_subsets("index", n, ell)?;
        binomial(n, ell)?;
        let mut ranks = Vec::new();
        let mut buf = Vec::with_capacity(ell);
        for e in edges {
            let e = e.as_ref();
            if e.len() != ell {
                return Err(Error::WrongEdgeSize {
                    edge: e.to_vec(),
                    len: e.len(),
                    ell,
                });
            }
            buf.clear();
            buf.extend_from_slice(e);
            buf.sort_unstable();
            if let Some(&v) = buf.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if buf.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertex { edge: e.to_vec() });
            }
            ranks.push(rank(&buf));
        }
        ranks.sort_unstable();
        if let Some(w) = ranks.windows(2).find(|w| w[0] == w[1]) {
            let mut edge = Vec::new();
            unrank_into(w[0], ell, &mut edge);
            return Err(Error::DuplicateEdge { edge });
        }
        Ok(Self::from_sorted_ranks(n, ell, ranks))
    }

    /// Builds a hypergraph from colex ranks of its edges.
    pub fn from_ranks(n: usize, ell: usize, mut ranks: Vec<u64>) -> Result<Self> {
        check_uniformity(ell)?;
        Limits::global().check_subsets("index", n, ell)?;
        let total = binomial(n, ell)?;
        ranks.sort_unstable();
        if let Some(&r) = ranks.iter().find(|&&r| r >= total) {
            return Err(Error::InvalidParameter(format!(
                "rank {r} out of range for C({n}, {ell}) = {total}"
            )));
        }
        if let Some(w) = ranks.windows(2).find(|w| w[0] == w[1]) {
            let mut edge = Vec::new();
            unrank_into(w[0], ell, &mut edge);
            return Err(Error::DuplicateEdge { edge });
        }
        Ok(Self::from_sorted_ranks(n, ell, ranks))
    }

    /// Caller guarantees: ranks strictly increasing, below `C(n, ell)`, and the guard passed.
    pub(crate) fn from_sorted_ranks(n: usize, ell: usize, ranks: Vec<u64>) -> Self {
        let total = binomial(n, ell).unwrap_or(0) as usize;
        let mut index = vec![0u64; total.div_ceil(64)];
        let mut flat = Vec::with_capacity(ranks.len() * ell);
        let mut buf = Vec::with_capacity(ell);
        for &r in &ranks {
            index[(r / 64) as usize] |= 1 << (r % 64);
            unrank_into(r, ell, &mut buf);
            flat.extend_from_slice(&buf);
        }
        Hypergraph {
            n,
            ell,
            ranks,
            flat,
            index,
        }
    }

    pub fn empty(n: usize, ell: usize) -> Result<Self> {
        check_uniformity(ell)?;
        Limits::global().check_subsets("index", n, ell)?;
        binomial(n, ell)?;
        Ok(Self::from_sorted_ranks(n, ell, Vec::new()))
    }

    pub fn complete(n: usize, ell: usize) -> Result<Self> {
        check_uniformity(ell)?;
        let total = Limits::global().check_subsets("index", n, ell)?;
        Ok(Self::from_sorted_ranks(n, ell, (0..total).collect()))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// The uniformity ℓ.
    #[inline]
    pub fn ell(&self) -> usize {
        self.ell
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.ranks.len()
    }

    /// Edges as sorted vertex slices, in colex order.
    pub fn edges(&self) -> std::slice::ChunksExact<'_, usize> {
        self.flat.chunks_exact(self.ell)
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.flat[i * self.ell..(i + 1) * self.ell]
    }

    pub fn edge_ranks(&self) -> &[u64] {
        &self.ranks
    }

    #[inline]
    pub fn contains_rank(&self, r: u64) -> bool {
        self.index
            .get((r / 64) as usize)
            .is_some_and(|w| w & (1 << (r % 64)) != 0)
    }

    /// Membership test for a strictly increasing ℓ-tuple.
    #[inline]
    pub fn has_sorted_edge(&self, e: &[usize]) -> bool {
        debug_assert_eq!(e.len(), self.ell);
        self.contains_rank(rank(e))
    }

    /// Membership test for an ℓ-set given in any order.
    pub fn has_edge(&self, e: &[usize]) -> bool {
        if e.len() != self.ell || e.iter().any(|&v| v >= self.n) {
            return false;
        }
        let mut buf = e.to_vec();
        buf.sort_unstable();
        buf.windows(2).all(|w| w[0] < w[1]) && self.has_sorted_edge(&buf)
    }

    pub fn complement(&self) -> Result<Hypergraph> {
        self.complement_with(Limits::global())
    }

    pub fn complement_with(&self, limits: &Limits) -> Result<Hypergraph> {
        let total = limits.check_subsets("complement", self.n, self.ell)?;
        let ranks = (0..total).filter(|&r| !self.contains_rank(r)).collect();
        Ok(Self::from_sorted_ranks(self.n, self.ell, ranks))
    }

    /// `G[s]`, relabeled to `0..|s|` in increasing order.
    pub fn induced(&self, s: &VertexSet) -> (Hypergraph, Relabel) {
        let relabel = Relabel::from_sorted(s.iter().filter(|&v| v < self.n).collect());
        let m = relabel.len();
        let mut ranks = Vec::new();
        let mut buf = Vec::with_capacity(self.ell);
        if exhaustive_is_cheaper(m, self.ell, self.edge_count()) {
            let mut it = Combinations::new(relabel.originals().to_vec(), self.ell);
            let mut local = 0u64;
            while let Some(t) = it.next_subset() {
                if self.has_sorted_edge(t) {
                    ranks.push(local);
                }
                local += 1;
            }
        } else {
            for e in self.edges() {
                if e.iter().all(|&v| s.contains(v)) {
                    buf.clear();
                    buf.extend(e.iter().map(|&v| relabel.forward(v).unwrap()));
                    ranks.push(rank(&buf));
                }
            }
            ranks.sort_unstable();
        }
        (Self::from_sorted_ranks(m, self.ell, ranks), relabel)
    }

    /// Number of edges contained in `x`.
    pub fn count_induced_edges(&self, x: &VertexSet) -> usize {
        let members: Vec<usize> = x.iter().filter(|&v| v < self.n).collect();
        if exhaustive_is_cheaper(members.len(), self.ell, self.edge_count()) {
            let mut count = 0;
            let mut it = Combinations::new(members, self.ell);
            while let Some(t) = it.next_subset() {
                count += self.has_sorted_edge(t) as usize;
            }
            count
        } else {
            self.edges()
                .filter(|e| e.iter().all(|&v| x.contains(v)))
                .count()
        }
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        self.count_induced_edges(s) == 0
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let possible = binomial(s.len(), self.ell).unwrap_or(u64::MAX) as usize;
        possible <= self.edge_count() && self.count_induced_edges(s) == possible
    }

    /// The (ℓ−1)-graph of edges through `v`, with `v` removed and the rest relabeled.
    pub fn link(&self, v: usize) -> Result<(Hypergraph, Relabel)> {
        self.iterated_link(&[v])
    }

    /// Links taken successively over distinct vertices `vs`; at most ℓ − 2 of them.
    pub fn iterated_link(&self, vs: &[usize]) -> Result<(Hypergraph, Relabel)> {
        if let Some(&v) = vs.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let removed: VertexSet = vs.iter().copied().collect();
        if removed.len() != vs.len() {
            return Err(Error::InvalidParameter(
                "link vertices must be distinct".into(),
            ));
        }
        if vs.len() + 2 > self.ell {
            return Err(Error::LinkTooSmall);
        }
        if vs.is_empty() {
            return Ok((self.clone(), Relabel::identity(self.n)));
        }
        let relabel =
            Relabel::from_sorted((0..self.n).filter(|&u| !removed.contains(u)).collect());
        let k = self.ell - vs.len();
        let mut ranks = Vec::new();
        let mut buf = Vec::with_capacity(k);
        for e in self.edges() {
            if vs.iter().all(|v| e.contains(v)) {
                buf.clear();
                buf.extend(
                    e.iter()
                        .filter(|&&u| !removed.contains(u))
                        .map(|&u| relabel.forward(u).unwrap()),
                );
                ranks.push(rank(&buf));
            }
        }
        ranks.sort_unstable();
        Ok((Self::from_sorted_ranks(relabel.len(), k, ranks), relabel))
    }

    /// Edges with exactly `i` vertices in `x` and `ℓ − i` in `y`, for disjoint `x`, `y`.
    pub fn crossing_edges<'a>(
        &'a self,
        x: &'a VertexSet,
        y: &'a VertexSet,
        i: usize,
    ) -> Result<impl Iterator<Item = &'a [usize]> + 'a> {
        if !x.is_disjoint(y) {
            return Err(Error::Overlap);
        }
        if i == 0 || i >= self.ell {
            return Err(Error::InvalidParameter(format!(
                "crossing index must satisfy 1 <= i <= ell - 1 (got {i})"
            )));
        }
        let ell = self.ell;
        Ok(self.edges().filter(move |e| {
            let in_x = e.iter().filter(|&&v| x.contains(v)).count();
            let in_y = e.iter().filter(|&&v| y.contains(v)).count();
            in_x == i && in_y == ell - i
        }))
    }

    pub fn crossing_edge_count(&self, x: &VertexSet, y: &VertexSet, i: usize) -> Result<usize> {
        Ok(self.crossing_edges(x, y, i)?.count())
    }

    /// Edge indices grouped by vertex.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }
}

fn exhaustive_is_cheaper(m: usize, ell: usize, edges: usize) -> bool {
    binomial(m, ell).is_ok_and(|c| (c as usize) < edges)
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.ell == other.ell && self.ranks == other.ranks
    }
}

impl Eq for Hypergraph {}

impl Hash for Hypergraph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.ell.hash(state);
        self.ranks.hash(state);
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph")
            .field("n", &self.n)
            .field("ell", &self.ell)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn construction_validates() {
        assert!(matches!(
            Hypergraph::new(4, 3, [[0, 1, 4]]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        ));
        assert!(matches!(
            Hypergraph::new(4, 3, [[0, 1, 1]]),
            Err(Error::RepeatedVertex { .. })
        ));
        assert!(matches!(
            Hypergraph::new(4, 3, [[0, 1, 2], [2, 1, 0]]),
            Err(Error::DuplicateEdge { .. })
        ));
        assert!(matches!(
            Hypergraph::new(4, 3, [vec![0, 1]]),
            Err(Error::WrongEdgeSize { .. })
        ));
        assert!(Hypergraph::empty(4, 1).is_err());
    }

    #[test]
    fn canonical_order_is_colex() {
        let g = Hypergraph::new(5, 3, [[2, 3, 4], [0, 1, 2], [0, 1, 3]]).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![&[0, 1, 2][..], &[0, 1, 3], &[2, 3, 4]]);
        assert!(g.has_edge(&[3, 1, 0]));
        assert!(!g.has_edge(&[0, 1, 4]));
    }

    #[test]
    fn complement_examples() {
        let empty = Hypergraph::empty(5, 3).unwrap();
        let k = empty.complement().unwrap();
        assert_eq!(k.edge_count(), 10);
        assert_eq!(k, Hypergraph::complete(5, 3).unwrap());

        let g = Hypergraph::new(4, 3, [[0, 1, 2], [0, 1, 3]]).unwrap();
        assert_eq!(g.complement().unwrap().complement().unwrap(), g);

        let k4 = Hypergraph::complete(4, 3).unwrap();
        assert_eq!(k4.complement().unwrap().edge_count(), 0);
    }

    #[test]
    fn complement_guard() {
        let g = Hypergraph::empty(30, 5).unwrap();
        let tight = Limits { max_cells: 1000 };
        assert!(matches!(
            g.complement_with(&tight),
            Err(Error::TooLarge { what: "complement", .. })
        ));
    }

    #[test]
    fn induced_examples() {
        let g = Hypergraph::new(5, 3, [[0, 1, 2], [0, 3, 4]]).unwrap();
        let (h, map) = g.induced(&set(&[0, 1, 2]));
        assert_eq!(h, Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap());
        assert_eq!(map.originals(), &[0, 1, 2]);

        let (same, _) = g.induced(&VertexSet::full(5));
        assert_eq!(same, g);

        let k5 = Hypergraph::complete(5, 3).unwrap();
        let (k4, map) = k5.induced(&set(&[0, 2, 3, 4]));
        assert_eq!(k4, Hypergraph::complete(4, 3).unwrap());
        assert_eq!(map.lift(1), 2);
    }

    #[test]
    fn count_induced_examples() {
        let k5 = Hypergraph::complete(5, 3).unwrap();
        assert_eq!(k5.count_induced_edges(&set(&[0, 1, 2, 4])), 4);
        let empty = Hypergraph::empty(5, 3).unwrap();
        assert_eq!(empty.count_induced_edges(&VertexSet::full(5)), 0);
        let g = Hypergraph::new(4, 3, [[0, 1, 2], [0, 1, 3]]).unwrap();
        assert_eq!(g.count_induced_edges(&set(&[0, 1, 2, 3])), 2);
    }

    #[test]
    fn link_examples() {
        let g = Hypergraph::new(4, 3, [[0, 1, 2], [0, 1, 3], [1, 2, 3]]).unwrap();
        let (l, map) = g.link(0).unwrap();
        assert_eq!(l.ell(), 2);
        assert_eq!(l.n(), 3);
        let lifted: Vec<Vec<usize>> = l
            .edges()
            .map(|e| e.iter().map(|&v| map.lift(v)).collect())
            .collect();
        assert_eq!(lifted, vec![vec![1, 2], vec![1, 3]]);

        let k = Hypergraph::complete(6, 4).unwrap();
        assert_eq!(k.link(2).unwrap().0, Hypergraph::complete(5, 3).unwrap());

        let iso = Hypergraph::new(5, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(iso.link(4).unwrap().0.edge_count(), 0);

        let pairs = Hypergraph::complete(4, 2).unwrap();
        assert_eq!(pairs.link(0).unwrap_err(), Error::LinkTooSmall);
    }

    #[test]
    fn iterated_link_examples() {
        let g = Hypergraph::new(5, 3, [[0, 1, 2], [1, 3, 4]]).unwrap();
        assert_eq!(g.iterated_link(&[]).unwrap().0, g);
        assert_eq!(g.iterated_link(&[1]).unwrap(), g.link(1).unwrap());

        let k = Hypergraph::complete(6, 4).unwrap();
        let (l, map) = k.iterated_link(&[4, 1]).unwrap();
        assert_eq!(l, Hypergraph::complete(4, 2).unwrap());
        assert_eq!(map.originals(), &[0, 2, 3, 5]);
        assert_eq!(k.iterated_link(&[1, 4]).unwrap().0, l);
        assert_eq!(k.iterated_link(&[1, 2, 3]).unwrap_err(), Error::LinkTooSmall);
    }

    #[test]
    fn crossing_examples() {
        let g = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(g.crossing_edge_count(&set(&[0, 1]), &set(&[2]), 2).unwrap(), 1);
        // 023 and 123 have one vertex in {0,1}; 012 and 013 have two
        let k4 = Hypergraph::complete(4, 3).unwrap();
        assert_eq!(k4.crossing_edge_count(&set(&[0, 1]), &set(&[2, 3]), 1).unwrap(), 2);
        assert_eq!(k4.crossing_edge_count(&set(&[0]), &set(&[1]), 1).unwrap(), 0);
        assert_eq!(
            k4.crossing_edge_count(&set(&[0, 1]), &set(&[1, 2]), 1).unwrap_err(),
            Error::Overlap
        );
    }

    #[test]
    fn clique_and_independence_tests() {
        let g = Hypergraph::new(5, 3, [[0, 1, 2]]).unwrap();
        assert!(g.is_clique(&set(&[0, 1, 2])));
        assert!(g.is_clique(&set(&[3, 4])));
        assert!(!g.is_clique(&set(&[0, 1, 2, 3])));
        assert!(g.is_independent(&set(&[0, 1, 3, 4])));
    }
}
