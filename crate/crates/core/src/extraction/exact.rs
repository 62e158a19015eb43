//! Exact independence and clique numbers for small instances.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Largest `n` accepted by the exact oracle for the given uniformity.
pub fn oracle_cap(ell: usize) -> usize {
    if ell == 3 {
        20
    } else {
        14
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactHomogeneous {
    pub alpha: usize,
    pub omega: usize,
    pub independent: VertexSet,
    pub clique: VertexSet,
}

impl ExactHomogeneous {
    pub fn max(&self) -> usize {
        self.alpha.max(self.omega)
    }
}

pub fn exact_max_homogeneous(g: &Hypergraph) -> Result<ExactHomogeneous> {
    let cap = oracle_cap(g.ell());
    if g.n() > cap {
        return Err(Error::OracleTooLarge { n: g.n(), cap });
    }
    let independent = max_independent(g);
    let clique = max_independent(&g.complement()?);
    Ok(ExactHomogeneous {
        alpha: independent.len(),
        omega: clique.len(),
        independent,
        clique,
    })
}

/// Branch and bound over bitmasks; `rest[u]` lists `e ∖ {u}` for edges `e ∋ u`.
fn max_independent(g: &Hypergraph) -> VertexSet {
    let n = g.n();
    let mut rest: Vec<Vec<u32>> = vec![Vec::new(); n];
    for e in g.edges() {
        let mask: u32 = e.iter().map(|&v| 1u32 << v).sum();
        for &u in e {
            rest[u].push(mask & !(1 << u));
        }
    }
    let mut best = 0u32;
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    branch(&rest, 0, all, &mut best);
    (0..n).filter(|&v| best & (1 << v) != 0).collect()
}

fn branch(rest: &[Vec<u32>], chosen: u32, mut cand: u32, best: &mut u32) {
    while cand != 0 {
        if (chosen | cand).count_ones() <= best.count_ones() {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= !(1 << v);
        let with_v = chosen | (1 << v);
        let mut next = 0u32;
        let mut c = cand;
        while c != 0 {
            let u = c.trailing_zeros() as usize;
            c &= c - 1;
            if rest[u].iter().all(|&m| m & with_v != m) {
                next |= 1 << u;
            }
        }
        branch(rest, with_v, next, best);
    }
    if chosen.count_ones() > best.count_ones() {
        *best = chosen;
    }
}
