use disperse_core::cotree::recognize_cohypergraph;
use disperse_core::extraction::{
    cohypergraph_completion, exact_max_homogeneous, homogeneous_pipeline, spencer_bound,
    spencer_independent_set, verify_trace_crossing_degree, Branch, Exponents, ROUNDING_SLACK,
};
use disperse_core::generators::{default_corpus, gen_random, SplitMix64};
use disperse_core::structure::check_disperse;
use proptest::prelude::*;

#[test]
fn pipeline_on_corpus() {
    let corpus = default_corpus(1).unwrap();
    let (mut early, mut coh, mut oracle_runs, mut splits) = (0, 0, 0, 0);
    for inst in &corpus {
        let g = &inst.graph;
        let (n, ell) = (g.n(), g.ell());
        let ex = Exponents::new(ell);
        let r = homogeneous_pipeline(g).unwrap();
        assert!(r.result.holds_in(g), "{}", inst.label());
        match r.branch {
            Branch::EarlyTermination => {
                early += 1;
                assert!(r.result.len() as u64 >= ex.early_bound(n), "{}", inst.label());
            }
            Branch::Cohypergraph => {
                coh += 1;
                let u = r.u.as_ref().unwrap();
                assert!(r.result.len() as u64 >= (u.len() as u64).isqrt(), "{}", inst.label());
                let c = cohypergraph_completion(g, &r.trace).unwrap();
                assert!(recognize_cohypergraph(&c.graph).unwrap().cotree().is_some());
                assert!(c.edits.len() <= r.trace.b1.len() + r.trace.b2.len());
                assert!(check_disperse(&c.graph).unwrap().ok);
            }
        }
        assert!(ex.first_bad_set_within(r.trace.b1.len(), n));
        assert!(ex.second_bad_set_within(r.trace.b2.len(), n));
        splits += r.trace.splits.len();
        for rep in verify_trace_crossing_degree(g, &r.trace).unwrap() {
            assert!(rep.holds(), "{}: {rep:?}", inst.label());
            assert_eq!(rep.max_count[0], 0);
        }
        if ell == 3 && n <= 20 {
            oracle_runs += 1;
            let exact = exact_max_homogeneous(g).unwrap();
            assert!(r.result.len() <= exact.max(), "{}", inst.label());
        }
    }
    println!("early {early} cohypergraph {coh} oracle {oracle_runs} splits {splits}");
    assert!(early > 0 && coh > 0 && splits > 0);
}

#[test]
fn spencer_meets_bound_on_random_inputs() {
    let mut rng = SplitMix64::new(2024);
    for trial in 0..1000 {
        let ell = 2 + trial % 3;
        let n = 1 + rng.below(30) as usize;
        let p = [0.1, 0.5, 0.9][trial / 3 % 3];
        let g = gen_random(n, ell, p, rng.next_u64()).unwrap();
        let s = spencer_independent_set(&g);
        assert!(g.is_independent(&s.vertices));
        let bound = spencer_bound(n, ell, g.edge_count());
        assert!(s.len() as f64 >= bound - ROUNDING_SLACK, "{g:?}");
        assert!(s.len() as u64 >= s.certified_bound);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn spencer_is_deterministic_and_sound(n in 1usize..16, ell in 2usize..5, p in 0.0f64..1.0, seed: u64) {
        let g = gen_random(n, ell, p, seed).unwrap();
        let a = spencer_independent_set(&g);
        prop_assert_eq!(&a, &spencer_independent_set(&g));
        prop_assert!(g.is_independent(&a.vertices));
        prop_assert!(a.len() as u64 >= a.certified_bound);
    }
}
