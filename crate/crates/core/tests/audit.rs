use std::collections::BTreeSet;

use nullspace_core::audit::{all_cases, run_case, run_suite, Expected, Observed, MANIFEST};

#[test]
fn reports_are_deterministic() {
    assert_eq!(run_suite(7, 20), run_suite(7, 20));
    let (a, b) = (run_suite(7, 20), run_suite(8, 20));
    assert_eq!(a.cases.len(), b.cases.len());
}

#[test]
fn every_manifest_case_runs_once() {
    let rep = run_suite(1, 1);
    let ids: Vec<&str> = rep.cases.iter().map(|c| c.id.as_str()).collect();
    let set: BTreeSet<&str> = ids.iter().copied().collect();
    assert_eq!(set.len(), ids.len());
    assert_eq!(set, MANIFEST.iter().copied().collect());
    assert!(rep.missing.is_empty());
}

#[test]
fn default_audit_is_green() {
    let rep = run_suite(42, 500);
    let bad: Vec<_> = rep.cases.iter().filter(|c| !c.matches).map(|c| c.id.clone()).collect();
    assert!(bad.is_empty(), "mismatched: {bad:?}");
    assert!(rep.green());
}

#[test]
fn a_single_trial_is_enough_for_green() {
    for seed in 0..50 {
        let rep = run_suite(seed, 1);
        let bad: Vec<_> = rep.cases.iter().filter(|c| !c.matches).map(|c| c.id.clone()).collect();
        assert!(bad.is_empty(), "seed {seed}: {bad:?}");
    }
}

#[test]
fn expected_failures_reproduce_their_witnesses() {
    let rep = run_suite(42, 1);
    let ce = |id: &str| rep.case(id).and_then(|c| c.counterexample.clone()).unwrap_or_default();
    assert!(ce("L2.3-general-distributivity").contains("[1,3]"), "{}", ce("L2.3-general-distributivity"));
    assert_eq!(ce("R7.singleton-closed"), "[0,2]");
    let detail = rep.case("R7.singleton-closed").and_then(|c| c.detail.clone()).unwrap();
    assert!(detail.contains("[-1,3]"), "{detail}");
    for c in rep.cases.iter().filter(|c| c.expected == Expected::Fail) {
        assert_eq!(c.observed, Observed::Fail, "{}", c.id);
        assert!(c.counterexample.is_some(), "{}", c.id);
    }
}

#[test]
fn conditional_cases_record_their_trials_separately() {
    for case in all_cases().iter().filter(|c| c.expected() == Expected::Conditional) {
        let r = run_case(case.as_ref(), 42, 200);
        assert_eq!(r.trials, r.passes + r.fails + r.vacuous, "{}", r.id);
        assert!(r.passes > 0, "{}", r.id);
        assert_eq!(r.fails, 0, "{}", r.id);
    }
}
