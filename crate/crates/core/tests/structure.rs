use std::collections::{BTreeMap, VecDeque};

use disperse_core::combinatorics::{rank, Combinations};
use disperse_core::generators::{default_corpus, gen_random, SplitMix64};
use disperse_core::structure::{
    check_disperse, shortest_tight_walk, tight_components, verify_components_are_cliques,
    verify_lemma_suite, verify_not_both_connected, Budget, LemmaId, TupleId,
};
use disperse_core::Hypergraph;

/// Connectivity of (ℓ−1)-sets by breadth-first search over tight walks, pair by pair.
fn walk_connected(g: &Hypergraph, a: &[usize], b: &[usize]) -> bool {
    let ell = g.ell();
    let contains = |e: &[usize], t: &[usize]| t.iter().all(|v| e.contains(v));
    let edges: Vec<&[usize]> = g.edges().collect();
    let mut seen = vec![false; edges.len()];
    let mut queue = VecDeque::new();
    for (i, e) in edges.iter().enumerate() {
        if contains(e, a) {
            seen[i] = true;
            queue.push_back(i);
        }
    }
    while let Some(i) = queue.pop_front() {
        if contains(edges[i], b) {
            return true;
        }
        for (j, f) in edges.iter().enumerate() {
            if !seen[j] && edges[i].iter().filter(|v| f.contains(v)).count() >= ell - 1 {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    false
}

#[test]
fn theorems_hold_on_corpus() {
    let corpus = default_corpus(1).unwrap();
    assert!(corpus.len() >= 300);
    for inst in &corpus {
        let check = verify_components_are_cliques(&inst.graph).unwrap();
        assert!(!check.hypothesis_violated);
        assert_eq!(check.violation, None, "{}", inst.label());
        assert!(verify_not_both_connected(&inst.graph).unwrap(), "{}", inst.label());
    }
}

#[test]
fn lemma_suite_passes_on_corpus_with_instances() {
    let corpus = default_corpus(1).unwrap();
    let mut nonvacuous: BTreeMap<LemmaId, usize> = BTreeMap::new();
    for inst in &corpus {
        let report = verify_lemma_suite(&inst.graph, &Budget::default()).unwrap();
        assert!(report.all_passed(), "{}: {:?}", inst.label(), report);
        for o in &report.outcomes {
            if o.instances > 0 {
                *nonvacuous.entry(o.lemma).or_default() += 1;
            }
        }
    }
    for lemma in LemmaId::ALL {
        let count = nonvacuous.get(&lemma).copied().unwrap_or(0);
        assert!(count >= 50, "{lemma} non-vacuous on only {count} instances");
    }
}

#[test]
fn components_agree_with_walk_oracle() {
    let mut rng = SplitMix64::new(8);
    let mut instances = 0;
    while instances < 100 {
        let n = 4 + rng.below(7) as usize;
        let p = [0.1, 0.3, 0.6, 0.9][rng.below(4) as usize];
        let g = gen_random(n, 3, p, rng.next_u64()).unwrap();
        instances += 1;
        let parts = tight_components(&g).unwrap();
        let pairs: Vec<Vec<usize>> = {
            let mut it = Combinations::of_range(n, 2);
            let mut out = Vec::new();
            while let Some(t) = it.next_subset() {
                out.push(t.to_vec());
            }
            out
        };
        for (i, a) in pairs.iter().enumerate() {
            for b in &pairs[i + 1..] {
                let same = parts.same_class(TupleId(rank(a)), TupleId(rank(b)));
                assert_eq!(same, walk_connected(&g, a, b), "{g:?} {a:?} {b:?}");
                let walk = shortest_tight_walk(&g, TupleId(rank(a)), TupleId(rank(b))).unwrap();
                assert_eq!(walk.is_some(), same);
                if let Some(w) = walk {
                    assert!(w.is_valid(3));
                }
            }
        }
    }
}

#[test]
fn random_disperse_instances_satisfy_theorems() {
    let mut rng = SplitMix64::new(21);
    let mut found = 0;
    for _ in 0..4000 {
        let ell = 3 + rng.below(2) as usize;
        let n = ell + 1 + rng.below(5) as usize;
        let g = gen_random(n, ell, [0.05, 0.5, 0.95][rng.below(3) as usize], rng.next_u64()).unwrap();
        if !check_disperse(&g).unwrap().ok {
            continue;
        }
        found += 1;
        assert_eq!(verify_components_are_cliques(&g).unwrap().violation, None, "{g:?}");
        assert!(verify_not_both_connected(&g).unwrap(), "{g:?}");
        let report = verify_lemma_suite(&g, &Budget::default()).unwrap();
        assert!(report.all_passed(), "{g:?}: {report:?}");
    }
    assert!(found > 100, "only {found} disperse samples");
}
