//! Seeded instance generators and the default disperse corpus.
//!
//! All randomness comes from [`SplitMix64`], so equal parameters and seed give identical
//! instances on every platform.

use crate::combinatorics::{rank, unrank_into, Combinations};
use crate::cotree::{reconstruct, Cotree, Polarity};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::hypergraph::Hypergraph;
use crate::limits::Limits;
use crate::structure::check_disperse;

pub type Seed = u64;

/// SplitMix64 (Steele, Lea, Flood).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: Seed) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..bound`, rejection-sampled; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            xs.swap(i, j);
        }
    }
}

/// Stream seed for the `index`-th item derived from `seed`.
pub fn derive_seed(seed: Seed, index: u64) -> Seed {
    let mut rng = SplitMix64::new(seed ^ index.wrapping_mul(0xd1b5_4a32_d192_ed03));
    rng.next_u64()
}

/// Each ℓ-set, in colex order, becomes an edge with probability `p`.
pub fn gen_random(n: usize, ell: usize, p: f64, seed: Seed) -> Result<Hypergraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("probability {p} outside [0, 1]")));
    }
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("uniformity {ell} < 2")));
    }
    let total = Limits::global().check_subsets("random", n, ell)?;
    let mut rng = SplitMix64::new(seed);
    let ranks = (0..total).filter(|_| rng.next_f64() < p).collect();
    Ok(Hypergraph::from_sorted_ranks(n, ell, ranks))
}

/// Greedy packing over a shuffled order of all ℓ-sets: a set is kept unless it shares
/// ℓ−1 vertices with a kept edge. No two edges of the result meet in ℓ−1 vertices.
pub fn gen_partial_steiner(n: usize, ell: usize, seed: Seed) -> Result<Hypergraph> {
    if ell < 2 || n < ell {
        return Err(Error::InvalidParameter(format!(
            "partial Steiner system needs 2 <= ell <= n, got n={n} ell={ell}"
        )));
    }
    let total = Limits::global().check_subsets("steiner", n, ell)?;
    let tuples = crate::combinatorics::binomial(n, ell - 1)?;
    let mut order: Vec<u64> = (0..total).collect();
    SplitMix64::new(seed).shuffle(&mut order);
    let mut used = vec![false; tuples as usize];
    let mut kept = Vec::new();
    let mut edge = Vec::with_capacity(ell);
    let mut sub = Vec::with_capacity(ell - 1);
    for r in order {
        unrank_into(r, ell, &mut edge);
        let sub_ranks: Vec<u64> = (0..ell)
            .map(|skip| {
                sub.clear();
                sub.extend(edge.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
                rank(&sub)
            })
            .collect();
        if sub_ranks.iter().all(|&t| !used[t as usize]) {
            for t in sub_ranks {
                used[t as usize] = true;
            }
            kept.push(r);
        }
    }
    Hypergraph::from_ranks(n, ell, kept)
}

/// Random binary cotree (uniform split sizes, random polarity) over a shuffled vertex
/// order, together with the hypergraph it describes.
pub fn gen_cohypergraph(n: usize, ell: usize, seed: Seed) -> Result<(Hypergraph, Cotree)> {
    if n == 0 {
        return Err(Error::InvalidParameter("cohypergraph on zero vertices".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let mut order: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut order);
    let tree = random_cotree(&order, &mut rng);
    let g = reconstruct(&tree, n, ell)?;
    Ok((g, tree))
}

fn random_cotree(vs: &[usize], rng: &mut SplitMix64) -> Cotree {
    if vs.len() == 1 {
        return Cotree::Leaf(vs[0]);
    }
    let k = 1 + rng.below(vs.len() as u64 - 1) as usize;
    let polarity = if rng.coin() {
        Polarity::JoinAll
    } else {
        Polarity::JoinNone
    };
    let left = random_cotree(&vs[..k], rng);
    let right = random_cotree(&vs[k..], rng);
    Cotree::Join {
        polarity,
        children: vec![left, right],
    }
}

/// The 3-graph whose edges are the triples spanning at least two edges of `f`.
pub fn split_link_from(f: &SimpleGraph) -> Result<Hypergraph> {
    let mut edges = Vec::new();
    let mut it = Combinations::of_range(f.n(), 3);
    while let Some(t) = it.next_subset() {
        let e = f.has_edge(t[0], t[1]) as u8 + f.has_edge(t[0], t[2]) as u8 + f.has_edge(t[1], t[2]) as u8;
        if e >= 2 {
            edges.push(rank(t));
        }
    }
    Ok(Hypergraph::from_sorted_ranks(f.n(), 3, edges))
}

/// `F ~ G(n, 1/2)` and the 3-graph of triples spanning at least two `F`-edges.
pub fn gen_split_link(n: usize, seed: Seed) -> Result<(Hypergraph, SimpleGraph)> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("split-link graph needs n >= 3, got {n}")));
    }
    Limits::global().check_subsets("splitlink", n, 3)?;
    let mut rng = SplitMix64::new(seed);
    let mut f = SimpleGraph::new(n);
    for v in 1..n {
        for u in 0..v {
            if rng.coin() {
                f.add_edge(u, v);
            }
        }
    }
    Ok((split_link_from(&f)?, f))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Random,
    Steiner,
    ComplementSteiner,
    Cotree,
    SplitLink,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Random => "random",
            Family::Steiner => "steiner",
            Family::ComplementSteiner => "co-steiner",
            Family::Cotree => "cotree",
            Family::SplitLink => "splitlink",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusInstance {
    pub index: usize,
    pub family: Family,
    pub seed: Seed,
    pub graph: Hypergraph,
}

impl CorpusInstance {
    pub fn label(&self) -> String {
        format!(
            "{:03}-{}-n{}-l{}",
            self.index,
            self.family.name(),
            self.graph.n(),
            self.graph.ell()
        )
    }
}

/// Per-uniformity recipe: vertex range and number of instances drawn per family.
const RECIPE: [(usize, usize, usize, usize); 3] = [
    // (ell, min n, max n, instances per family)
    (3, 5, 24, 40),
    (4, 6, 13, 24),
    (5, 7, 10, 16),
];

/// Random candidates expect about `n / 2` edges, sparse enough to be disperse fairly often.
fn random_density(n: usize, ell: usize) -> f64 {
    let total = crate::combinatorics::binomial_wide(n, ell) as f64;
    (n as f64 / 2.0 / total).min(0.5)
}
const RANDOM_ATTEMPTS: u64 = 200;

/// The default seeded corpus of disperse instances: partial Steiner systems, their
/// complements, random cohypergraphs, and random hypergraphs kept only when disperse.
pub fn default_corpus(seed: Seed) -> Result<Vec<CorpusInstance>> {
    let families = [
        Family::Steiner,
        Family::ComplementSteiner,
        Family::Cotree,
        Family::Random,
    ];
    let mut out = Vec::new();
    let mut stream = 0u64;
    for &(ell, lo, hi, per_family) in &RECIPE {
        for &family in &families {
            for _ in 0..per_family {
                stream += 1;
                let s = derive_seed(seed, stream);
                let mut rng = SplitMix64::new(s);
                let n = lo + rng.below((hi - lo + 1) as u64) as usize;
                let graph = match family {
                    Family::Steiner => gen_partial_steiner(n, ell, rng.next_u64())?,
                    Family::ComplementSteiner => gen_partial_steiner(n, ell, rng.next_u64())?.complement()?,
                    Family::Cotree => gen_cohypergraph(n, ell, rng.next_u64())?.0,
                    Family::Random => match filtered_random(n, ell, &mut rng)? {
                        Some(g) => g,
                        None => continue,
                    },
                    Family::SplitLink => unreachable!(),
                };
                out.push(CorpusInstance {
                    index: out.len(),
                    family,
                    seed: s,
                    graph,
                });
            }
        }
    }
    Ok(out)
}

fn filtered_random(n: usize, ell: usize, rng: &mut SplitMix64) -> Result<Option<Hypergraph>> {
    for _ in 0..RANDOM_ATTEMPTS {
        let g = gen_random(n, ell, random_density(n, ell), rng.next_u64())?;
        if g.edge_count() > 0 && check_disperse(&g)?.ok {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cotree::recognize_cohypergraph;

    #[test]
    fn splitmix_reference_values() {
        // first outputs of the reference algorithm for seed 1234567
        let mut rng = SplitMix64::new(1234567);
        assert_eq!(rng.next_u64(), 6457827717110365317);
        assert_eq!(rng.next_u64(), 3203168211198807973);
        assert_eq!(rng.next_u64(), 9817491932198370423);
    }

    #[test]
    fn random_extremes_and_determinism() {
        assert_eq!(gen_random(8, 3, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(gen_random(8, 3, 1.0, 1).unwrap(), Hypergraph::complete(8, 3).unwrap());
        assert_eq!(gen_random(9, 3, 0.5, 42).unwrap(), gen_random(9, 3, 0.5, 42).unwrap());
        assert_ne!(gen_random(9, 3, 0.5, 42).unwrap(), gen_random(9, 3, 0.5, 43).unwrap());
        assert!(gen_random(5, 3, 1.5, 0).is_err());
    }

    #[test]
    fn steiner_packing_properties() {
        for seed in 0..20 {
            for (n, ell) in [(9, 3), (10, 4), (8, 5)] {
                let g = gen_partial_steiner(n, ell, seed).unwrap();
                let edges: Vec<&[usize]> = g.edges().collect();
                for (i, a) in edges.iter().enumerate() {
                    for b in &edges[i + 1..] {
                        let common = a.iter().filter(|v| b.contains(v)).count();
                        assert!(common <= ell - 2);
                    }
                }
                assert!(check_disperse(&g).unwrap().ok);
                // maximal: every non-edge meets some edge in ell-1 vertices
                let mut it = Combinations::of_range(n, ell);
                while let Some(s) = it.next_subset() {
                    if !g.has_sorted_edge(s) {
                        assert!(edges
                            .iter()
                            .any(|e| e.iter().filter(|v| s.contains(v)).count() == ell - 1));
                    }
                }
            }
        }
        assert_eq!(gen_partial_steiner(4, 4, 3).unwrap().edge_count(), 1);
    }

    #[test]
    fn cohypergraphs_are_disperse_and_recognized() {
        for seed in 0..30 {
            let (g, t) = gen_cohypergraph(9, 3, seed).unwrap();
            t.validate(9).unwrap();
            assert!(check_disperse(&g).unwrap().ok);
            let back = recognize_cohypergraph(&g).unwrap().into_cotree().unwrap();
            assert_eq!(reconstruct(&back, 9, 3).unwrap(), g);
        }
    }

    #[test]
    fn split_link_examples() {
        let complete = SimpleGraph::from_edges(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))));
        assert_eq!(split_link_from(&complete).unwrap(), Hypergraph::complete(5, 3).unwrap());
        assert_eq!(split_link_from(&SimpleGraph::new(5)).unwrap().edge_count(), 0);
        let path = SimpleGraph::from_edges(4, [(0, 1), (1, 2)]);
        let g = split_link_from(&path).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![&[0, 1, 2][..]]);
    }

    #[test]
    fn split_link_neighbourhoods_split_each_link() {
        let (g, f) = gen_split_link(12, 5).unwrap();
        for v in 0..12 {
            let (link, map) = g.link(v).unwrap();
            let link = SimpleGraph::from_hypergraph(&link).unwrap();
            let nb = map.forward_set(f.neighbors(v));
            let non = crate::VertexSet::full(11).difference(&nb);
            assert!(link.is_clique(&nb));
            assert!(link.is_independent(&non));
        }
    }

    #[test]
    fn corpus_is_large_disperse_and_reproducible() {
        let a = default_corpus(1).unwrap();
        assert!(a.len() >= 300, "corpus has {} instances", a.len());
        for inst in &a {
            assert!(check_disperse(&inst.graph).unwrap().ok, "{}", inst.label());
            let (n, ell) = (inst.graph.n(), inst.graph.ell());
            assert!(match ell {
                3 => n <= 24,
                4 => n <= 13,
                5 => n <= 10,
                _ => false,
            });
        }
        let b = default_corpus(1).unwrap();
        assert!(a.iter().zip(&b).all(|(x, y)| x.graph == y.graph && x.seed == y.seed));
    }
}
