//! Corpus runs: every structural property and extraction claim, checked per instance.

use std::fmt::Write;

use disperse_core::cotree::recognize_cohypergraph;
use disperse_core::extraction::{
    cohypergraph_completion, exact_max_homogeneous, homogeneous_pipeline, oracle_cap,
    verify_trace_crossing_degree, Branch, Exponents,
};
use disperse_core::structure::{
    check_disperse, verify_components_are_cliques, verify_lemma_suite, verify_not_both_connected,
    Budget, LemmaStatus,
};
use disperse_core::Hypergraph;
use rayon::prelude::*;

/// Result of checking one instance; `failures` is empty when everything held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceReport {
    pub label: String,
    pub failures: Vec<String>,
    pub branch: Option<Branch>,
    pub size: Option<usize>,
}

impl InstanceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn line(&self) -> String {
        let mut out = self.label.clone();
        if let (Some(b), Some(s)) = (self.branch, self.size) {
            write!(out, " {} {s}", b.name()).unwrap();
        }
        if self.passed() {
            out.push_str(" ok");
        } else {
            write!(out, " FAIL {}", self.failures.join("; ")).unwrap();
        }
        out
    }
}

pub fn check_instance(label: &str, g: &Hypergraph) -> InstanceReport {
    let mut report = InstanceReport {
        label: label.to_string(),
        failures: Vec::new(),
        branch: None,
        size: None,
    };
    if let Err(e) = check_all(g, &mut report) {
        report.failures.push(e.to_string());
    }
    report
}

fn check_all(g: &Hypergraph, report: &mut InstanceReport) -> disperse_core::Result<()> {
    let fail = &mut report.failures;
    let (n, ell) = (g.n(), g.ell());
    if let Some((w, count)) = check_disperse(g)?.witness {
        fail.push(format!("not disperse: {{{w}}} spans {count} edges"));
        return Ok(());
    }
    if let Some(v) = verify_components_are_cliques(g)?.violation {
        fail.push(format!("component support is not a clique: {v:?}"));
    }
    if !verify_not_both_connected(g)? {
        fail.push("hypergraph and complement both tightly connected".into());
    }
    for o in verify_lemma_suite(g, &Budget::default())?.outcomes {
        if let LemmaStatus::Failed { counterexample } = o.status {
            fail.push(format!("{}: {counterexample}", o.lemma.name()));
        }
    }

    let ex = Exponents::new(ell);
    let r = homogeneous_pipeline(g)?;
    report.branch = Some(r.branch);
    report.size = Some(r.result.len());
    if !r.result.holds_in(g) {
        fail.push("returned set is not homogeneous".into());
    }
    match r.branch {
        Branch::EarlyTermination => {
            if (r.result.len() as u64) < ex.early_bound(n) {
                fail.push(format!(
                    "early-termination size {} below {}",
                    r.result.len(),
                    ex.early_bound(n)
                ));
            }
        }
        Branch::Cohypergraph => {
            let u = r.u.as_ref().map_or(0, |u| u.len()) as u64;
            if (r.result.len() as u64) < u.isqrt() {
                fail.push(format!("cohypergraph size {} below floor sqrt {u}", r.result.len()));
            }
            let c = cohypergraph_completion(g, &r.trace)?;
            if recognize_cohypergraph(&c.graph)?.cotree().is_none() {
                fail.push("completion is not a cohypergraph".into());
            }
            if c.edits.len() > r.trace.b1.len() + r.trace.b2.len() {
                fail.push(format!("completion makes {} edits", c.edits.len()));
            }
        }
    }
    if !ex.first_bad_set_within(r.trace.b1.len(), n) {
        fail.push(format!("|b1| = {} over bound", r.trace.b1.len()));
    }
    if !ex.second_bad_set_within(r.trace.b2.len(), n) {
        fail.push(format!("|b2| = {} over bound", r.trace.b2.len()));
    }
    for rep in verify_trace_crossing_degree(g, &r.trace)? {
        if !rep.holds() || rep.max_count.first().is_some_and(|&c| c != 0) {
            fail.push(format!("crossing degree {:?}", rep.max_count));
        }
    }
    if n <= oracle_cap(ell) {
        let exact = exact_max_homogeneous(g)?;
        if r.result.len() > exact.max() {
            fail.push(format!("size {} exceeds exact optimum {}", r.result.len(), exact.max()));
        }
    }
    Ok(())
}

/// Checks instances on the current rayon pool; reports come back in input order.
pub fn check_many(instances: &[(String, Hypergraph)]) -> Vec<InstanceReport> {
    instances
        .par_iter()
        .map(|(label, g)| check_instance(label, g))
        .collect()
}
