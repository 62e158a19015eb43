//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line per criterion and exits
//! nonzero if any failed.

use std::collections::BTreeMap;
use std::fs;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use disperse_cli::{parse_hypergraph, serialize, write_corpus, GenFamily, GenParams};
use disperse_core::combinatorics::{rank, Combinations};
use disperse_core::cotree::recognize_cohypergraph;
use disperse_core::extraction::{
    cohypergraph_completion, exact_max_homogeneous, homogeneous_pipeline, spencer_bound,
    spencer_independent_set, verify_trace_crossing_degree, Branch, CrossingDegreeReport,
    Exponents, PipelineResult,
};
use disperse_core::generators::{default_corpus, gen_random, gen_split_link, CorpusInstance, SplitMix64};
use disperse_core::graph::SimpleGraph;
use disperse_core::splitlinks::{ceil_cbrt, extract_split_structure};
use disperse_core::structure::{
    tight_components, verify_components_are_cliques, verify_lemma_suite, verify_not_both_connected,
    Budget, LemmaId, LemmaReport, LemmaStatus, TupleId,
};
use disperse_core::{Hypergraph, VertexSet};
use rayon::prelude::*;

const CORPUS_SEED: u64 = 1;
const MIN_CORPUS: usize = 300;
const CORPUS_TIME_LIMIT: Duration = Duration::from_secs(300);
const SPLIT_TIME_LIMIT: Duration = Duration::from_secs(120);
/// Lemmas that must be exercised on at least this many corpus instances.
const MIN_NONVACUOUS: usize = 50;
const REQUIRED_LEMMAS: [LemmaId; 7] = [
    LemmaId::LinksDisperse,
    LemmaId::AdjacentEdgeLinkConnected,
    LemmaId::LinksTightlyConnected,
    LemmaId::LinksAreCographs,
    LemmaId::ShortWalkForNearTuples,
    LemmaId::SharedComponentClosure,
    LemmaId::WalkUnionInComponent,
];
/// Relative tolerance of the floating-point cross-check of the integer bad-set bounds.
const FLOAT_BOUND_TOLERANCE: f64 = 1e-9;
/// Absolute slack allowed between the greedy independent set and the averaging bound.
const SPENCER_SLACK: f64 = 1e-9;
const SPENCER_TRIALS: usize = 1000;
const ORACLE_MAX_N: usize = 20;
const SPLIT_SIZES: [usize; 3] = [27, 64, 125];
const SPLIT_INSTANCES: usize = 50;
const COGRAPH_MAX_N: usize = 12;
const WALK_INSTANCES: usize = 100;

struct Record {
    label: String,
    graph: Hypergraph,
    cliques_violation: bool,
    not_both: bool,
    lemmas: LemmaReport,
    pipeline: PipelineResult,
    crossing: Vec<CrossingDegreeReport>,
}

fn record(inst: &CorpusInstance) -> Record {
    let g = &inst.graph;
    let pipeline = homogeneous_pipeline(g).unwrap();
    Record {
        label: inst.label(),
        graph: g.clone(),
        cliques_violation: verify_components_are_cliques(g).unwrap().violation.is_some(),
        not_both: verify_not_both_connected(g).unwrap(),
        lemmas: verify_lemma_suite(g, &Budget::default()).unwrap(),
        crossing: verify_trace_crossing_degree(g, &pipeline.trace).unwrap(),
        pipeline,
    }
}

type Verdict = Result<String, String>;

fn criterion_structure(records: &[Record], elapsed: Duration) -> Verdict {
    if records.len() < MIN_CORPUS {
        return Err(format!("corpus has {} instances", records.len()));
    }
    let mut by_ell = BTreeMap::new();
    for r in records {
        let (n, ell) = (r.graph.n(), r.graph.ell());
        let cap = match ell {
            3 => 24,
            4 => 13,
            5 => 10,
            _ => return Err(format!("{}: uniformity outside the recipe", r.label)),
        };
        if n > cap {
            return Err(format!("{}: n above {cap}", r.label));
        }
        *by_ell.entry(ell).or_insert(0) += 1;
        if r.cliques_violation {
            return Err(format!("{}: component support is not a clique", r.label));
        }
        if !r.not_both {
            return Err(format!("{}: both sides tightly connected", r.label));
        }
    }
    if elapsed > CORPUS_TIME_LIMIT {
        return Err(format!("corpus checks took {elapsed:?}"));
    }
    Ok(format!("{} instances {by_ell:?} in {elapsed:.1?}", records.len()))
}

fn criterion_lemmas(records: &[Record]) -> Verdict {
    let mut nonvacuous: BTreeMap<LemmaId, usize> = BTreeMap::new();
    for r in records {
        for o in &r.lemmas.outcomes {
            if let LemmaStatus::Failed { counterexample } = &o.status {
                return Err(format!("{}: {} {counterexample}", r.label, o.lemma.name()));
            }
            if o.instances > 0 {
                *nonvacuous.entry(o.lemma).or_default() += 1;
            }
        }
    }
    for lemma in REQUIRED_LEMMAS {
        let count = nonvacuous.get(&lemma).copied().unwrap_or(0);
        if count < MIN_NONVACUOUS {
            return Err(format!("{} exercised on only {count} instances", lemma.name()));
        }
    }
    let least = REQUIRED_LEMMAS.iter().map(|l| nonvacuous[l]).min().unwrap();
    Ok(format!("{} checks, each exercised on >= {least} instances", LemmaId::ALL.len()))
}

/// `⌈0.5 · n^{1/(3ℓ−1)}⌉` by searching for the least `m` with `(2m)^(3ℓ−1) ≥ n`.
fn early_bound_oracle(n: usize, ell: usize) -> u64 {
    let q = 3 * ell as u32 - 1;
    (0u64..).find(|&m| (2 * m as u128).pow(q) >= n as u128).unwrap()
}

fn criterion_pipeline(records: &[Record]) -> Verdict {
    let (mut early, mut coh, mut oracle) = (0, 0, 0);
    for r in records {
        let (g, p) = (&r.graph, &r.pipeline);
        let (n, ell) = (g.n(), g.ell());
        let size = p.result.len() as u64;
        if !p.result.holds_in(g) {
            return Err(format!("{}: result not homogeneous", r.label));
        }
        match p.branch {
            Branch::EarlyTermination => {
                early += 1;
                let bound = early_bound_oracle(n, ell);
                if size < bound {
                    return Err(format!("{}: early size {size} < {bound}", r.label));
                }
            }
            Branch::Cohypergraph => {
                coh += 1;
                let u = p.u.as_ref().map_or(0, VertexSet::len) as u64;
                if size < u.isqrt() {
                    return Err(format!("{}: size {size} < floor(sqrt({u}))", r.label));
                }
            }
        }
        if ell == 3 && n <= ORACLE_MAX_N {
            oracle += 1;
            let exact = exact_max_homogeneous(g).unwrap();
            if size as usize > exact.max() {
                return Err(format!("{}: size {size} above optimum {}", r.label, exact.max()));
            }
        }
    }
    if early == 0 || coh == 0 {
        return Err(format!("branches not both exercised (early {early}, cohypergraph {coh})"));
    }
    Ok(format!("early {early}, cohypergraph {coh}, oracle comparisons {oracle}"))
}

fn within_float(count: usize, bound: f64) -> bool {
    count as f64 <= bound * (1.0 + FLOAT_BOUND_TOLERANCE)
}

fn criterion_bad_sets(records: &[Record]) -> Verdict {
    let mut completions = 0;
    for r in records {
        let (g, t) = (&r.graph, &r.pipeline.trace);
        let (n, ell) = (g.n() as f64, g.ell());
        let ex = Exponents::new(ell);
        let l = ell as f64;
        let b1_bound = 2f64.powi(ell as i32) * n.powf(l - 1.0 + ex.epsilon());
        let b2_bound = n.powf(l - (l - 1.0) * ex.gamma());
        let (b1, b2) = (t.b1.len(), t.b2.len());
        if !ex.first_bad_set_within(b1, g.n()) || !within_float(b1, b1_bound) {
            return Err(format!("{}: |b1| = {b1} > {b1_bound:.1}", r.label));
        }
        if !ex.second_bad_set_within(b2, g.n()) || !within_float(b2, b2_bound) {
            return Err(format!("{}: |b2| = {b2} > {b2_bound:.1}", r.label));
        }
        if t.terminated_early {
            continue;
        }
        completions += 1;
        let c = cohypergraph_completion(g, t).map_err(|e| format!("{}: {e}", r.label))?;
        if recognize_cohypergraph(&c.graph).unwrap().cotree().is_none() {
            return Err(format!("{}: completion not recognized", r.label));
        }
        if c.edits.len() > b1 + b2 {
            return Err(format!("{}: {} edits > |b1| + |b2|", r.label, c.edits.len()));
        }
    }
    Ok(format!("{} traces, {completions} completions recognized", records.len()))
}

fn criterion_spencer() -> Verdict {
    let mut rng = SplitMix64::new(5);
    for trial in 0..SPENCER_TRIALS {
        let ell = 2 + trial % 3;
        let n = 1 + rng.below(30) as usize;
        let p = [0.1, 0.5, 0.9][(trial / 3) % 3];
        let g = gen_random(n, ell, p, rng.next_u64()).unwrap();
        let s = spencer_independent_set(&g);
        if s != spencer_independent_set(&g) {
            return Err(format!("trial {trial}: nondeterministic"));
        }
        if !g.is_independent(&s.vertices) {
            return Err(format!("trial {trial}: not independent"));
        }
        let bound = spencer_bound(n, ell, g.edge_count());
        if (s.len() as f64) < bound - SPENCER_SLACK {
            return Err(format!("trial {trial}: {} < {bound}", s.len()));
        }
    }
    Ok(format!("{SPENCER_TRIALS} trials"))
}

fn criterion_crossing(records: &[Record]) -> Verdict {
    let mut splits = 0;
    for r in records {
        for rep in &r.crossing {
            splits += 1;
            for (idx, &count) in rep.max_count.iter().enumerate() {
                let limit = 1usize << idx;
                if count >= limit || (idx == 0 && count != 0) {
                    return Err(format!("{}: i = {} count {count}", r.label, idx + 1));
                }
            }
        }
    }
    if splits == 0 {
        return Err("no splits recorded".into());
    }
    Ok(format!("{splits} splits"))
}

fn criterion_split_links(elapsed_out: &mut Duration) -> Verdict {
    let start = Instant::now();
    let mut sizes = Vec::new();
    for i in 0..SPLIT_INSTANCES {
        let n = SPLIT_SIZES[i % SPLIT_SIZES.len()];
        let (g, _) = gen_split_link(n, 1000 + i as u64).unwrap();
        let s = extract_split_structure(&g).map_err(|e| format!("n {n} seed {i}: {e}"))?;
        if s.u.len() < ceil_cbrt(n) {
            return Err(format!("n {n}: |U| = {}", s.u.len()));
        }
        if let Some(q) = s.bad_pairs.find_k4() {
            return Err(format!("n {n}: bad pairs contain K4 {q:?}"));
        }
        let members = s.u.to_vec();
        let mut it = Combinations::new(members, 3);
        while let Some(t) = it.next_subset() {
            let e = [(0, 1), (0, 2), (1, 2)]
                .iter()
                .filter(|&&(a, b)| s.f.has_edge(t[a], t[b]))
                .count();
            if g.has_edge(t) != (e >= 2) {
                return Err(format!("n {n}: triple {t:?} breaks the equivalence"));
            }
        }
        sizes.push(s.u.len());
    }
    *elapsed_out = start.elapsed();
    if *elapsed_out > SPLIT_TIME_LIMIT {
        return Err(format!("took {elapsed_out:?}"));
    }
    Ok(format!(
        "{SPLIT_INSTANCES} instances, min |U| {} in {elapsed_out:.1?}",
        sizes.iter().min().unwrap()
    ))
}

fn walk_connected(g: &Hypergraph, a: &[usize], b: &[usize]) -> bool {
    let edges: Vec<&[usize]> = g.edges().collect();
    let contains = |e: &[usize], t: &[usize]| t.iter().all(|v| e.contains(v));
    let mut seen: Vec<bool> = edges.iter().map(|e| contains(e, a)).collect();
    let mut stack: Vec<usize> = (0..edges.len()).filter(|&i| seen[i]).collect();
    while let Some(i) = stack.pop() {
        if contains(edges[i], b) {
            return true;
        }
        for j in 0..edges.len() {
            if !seen[j] && edges[i].iter().filter(|v| edges[j].contains(v)).count() >= g.ell() - 1 {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    false
}

fn has_induced_p4(h: &SimpleGraph) -> bool {
    let n = h.n();
    let mut it = Combinations::of_range(n, 4);
    while let Some(s) = it.next_subset() {
        let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
            .iter()
            .filter(|&&(a, b)| h.has_edge(s[a], s[b]))
            .count();
        if edges != 3 {
            continue;
        }
        let mut degrees: Vec<usize> = (0..4)
            .map(|i| (0..4).filter(|&j| j != i && h.has_edge(s[i], s[j])).count())
            .collect();
        degrees.sort_unstable();
        if degrees == [1, 1, 2, 2] {
            return true;
        }
    }
    false
}

fn criterion_cross_oracles(corpus: &[CorpusInstance]) -> Verdict {
    let mut rng = SplitMix64::new(77);
    let mut pairs_checked = 0usize;
    for _ in 0..WALK_INSTANCES {
        let n = 4 + rng.below(7) as usize;
        let p = [0.1, 0.3, 0.6, 0.9][rng.below(4) as usize];
        let g = gen_random(n, 3, p, rng.next_u64()).unwrap();
        let parts = tight_components(&g).unwrap();
        let mut all = Vec::new();
        let mut it = Combinations::of_range(n, 2);
        while let Some(t) = it.next_subset() {
            all.push(t.to_vec());
        }
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                pairs_checked += 1;
                if parts.same_class(TupleId(rank(a)), TupleId(rank(b))) != walk_connected(&g, a, b) {
                    return Err(format!("tight components disagree on {a:?} {b:?} in {g:?}"));
                }
            }
        }
    }
    let links: usize = corpus
        .par_iter()
        .map(|inst| -> Result<usize, String> {
            let g = &inst.graph;
            let ell = g.ell();
            if g.n() - (ell - 2) > COGRAPH_MAX_N {
                return Ok(0);
            }
            let mut count = 0;
            let mut it = Combinations::of_range(g.n(), ell - 2);
            while let Some(vs) = it.next_subset() {
                let (link, _) = g.iterated_link(vs).unwrap();
                let h = SimpleGraph::from_hypergraph(&link).unwrap();
                if h.is_cograph() == has_induced_p4(&h) {
                    return Err(format!("{}: cograph test disagrees on link of {vs:?}", inst.label()));
                }
                count += 1;
            }
            Ok(count)
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum();
    Ok(format!("{pairs_checked} tuple pairs, {links} link graphs"))
}

fn criterion_serialization(corpus: &[CorpusInstance]) -> Verdict {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let (a, b) = (tmp.path().join("a"), tmp.path().join("b"));
    let paths = write_corpus(CORPUS_SEED, &a).map_err(|e| e.to_string())?;
    let again = write_corpus(CORPUS_SEED, &b).map_err(|e| e.to_string())?;
    if paths.len() != corpus.len() || again.len() != corpus.len() {
        return Err("corpus size changed between runs".into());
    }
    for ((pa, pb), inst) in paths.iter().zip(&again).zip(corpus) {
        let (ta, tb) = (fs::read(pa).unwrap(), fs::read(pb).unwrap());
        if ta != tb {
            return Err(format!("{}: bytes differ between runs", inst.label()));
        }
        let parsed = parse_hypergraph(&String::from_utf8(ta).unwrap(), usize::MAX)
            .map_err(|e| format!("{}: {e}", inst.label()))?;
        if parsed != inst.graph {
            return Err(format!("{}: parse does not invert serialize", inst.label()));
        }
        if parse_hypergraph(&serialize(&parsed), usize::MAX).unwrap() != parsed {
            return Err(format!("{}: round trip failed", inst.label()));
        }
    }
    let mut generated = 0;
    for family in [GenFamily::Random, GenFamily::Steiner, GenFamily::Cotree, GenFamily::SplitLink] {
        for seed in 0..10 {
            let params = GenParams {
                family,
                n: 12,
                ell: 3,
                p: 0.3,
                seed,
            };
            let text = disperse_cli::generate(&params, 64).unwrap();
            if text != disperse_cli::generate(&params, 64).unwrap() {
                return Err(format!("{family:?} seed {seed}: output not reproducible"));
            }
            let g = parse_hypergraph(&text, 64).unwrap();
            if parse_hypergraph(&serialize(&g), 64).unwrap() != g {
                return Err(format!("{family:?} seed {seed}: round trip failed"));
            }
            generated += 1;
        }
    }
    Ok(format!("{} corpus files identical across runs, {generated} generated files", paths.len()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = default_corpus(CORPUS_SEED).unwrap();
    let records: Vec<Record> = corpus.par_iter().map(record).collect();
    let corpus_time = start.elapsed();
    let mut split_time = Duration::ZERO;

    let results: Vec<(&str, Verdict)> = vec![
        ("1 structural theorems", criterion_structure(&records, corpus_time)),
        ("2 lemma suite", criterion_lemmas(&records)),
        ("3 pipeline soundness", criterion_pipeline(&records)),
        ("4 bad-set bounds", criterion_bad_sets(&records)),
        ("5 greedy independent sets", criterion_spencer()),
        ("6 crossing degrees", criterion_crossing(&records)),
        ("7 split links", criterion_split_links(&mut split_time)),
        ("8 cross-oracle equivalence", criterion_cross_oracles(&corpus)),
        ("9 serialization", criterion_serialization(&corpus)),
    ];
    let mut failed = 0;
    for (name, verdict) in &results {
        match verdict {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed, {:.1?}", results.len() - failed, start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
