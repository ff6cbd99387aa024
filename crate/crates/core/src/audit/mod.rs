//! Proposition auditor.
//!
//! Each statement of the theory becomes a [`Case`]: a generator, an optional
//! hypothesis and a conclusion, evaluated over seeded random instances after
//! any fixed witnesses. Results are compared against the expected status.

mod case;
mod cases;
mod gen;
mod report;

use alloc::boxed::Box;
use alloc::vec::Vec;

pub use case::{case_seed, AuditCase, Case, Expected, Observed, Operand, Verdict};
pub use gen::Gen;
pub use report::{AuditReport, CaseResult};

/// Every statement id the catalogue must cover.
pub const MANIFEST: &[&str] = &[
    // vector space
    "D2.1.i",
    "D2.1.ii",
    "D2.1.iii.comm",
    "D2.1.iii.assoc",
    "L2.vector-distributive",
    "L2.positive-vector-distributive",
    "L2.scalar-associative",
    "L2.positive-scalar-associative",
    "L2.3-general-distributivity",
    "L2.3-positive-distributivity",
    "L2.3-negative-distributivity",
    "L2.same-sign-distributivity",
    "E2.1.no-inverse",
    "E2.2.null-set",
    "R2.1",
    "P2.1.i",
    "P2.1.ii",
    "P2.1.iii",
    "P2.2.sum",
    "P2.2.diff",
    "P2.3",
    "C2.1",
    "R2.2.subspace",
    "R2.3.collapse",
    "R2.3.zero-multiple",
    "P2.4.span",
    // decomposition
    "D3.1.null-decomposition",
    "E3.1.null-decomposition",
    "R3.1",
    "D3.2.self-decomposition-model",
    "E3.2.omega-sum",
    "E3.2.owns-self-decomposition",
    // metric
    "D4.1.i",
    "D4.1.i-prime-fails",
    "D4.1.ii",
    "D4.1.iii",
    "D4.1.iv",
    "D4.1.iv-prime",
    "D4.1.v",
    "D4.1.v-prime",
    "R4.1",
    "E4.1.witness",
    "E4.1.zero-sum-fold",
    "D4.2.translation-invariance",
    "D4.2.absolute-homogeneity",
    "E4.2.ic-i",
    "E4.2.ic-ii",
    "E4.2.ic-iii",
    "E4.2.ic-v-prime",
    "E4.2.ic-omega",
    "E4.2.ic-axioms",
    "E4.2.ic-operations",
    // balls
    "D5.ball-shapes",
    "P5.1.i",
    "P5.1.ii",
    "P5.2.i",
    "P5.ball-omega-eq",
    "P5.3.i",
    "P5.3.ii",
    "P5.4.i.a",
    "P5.4.i.b",
    "P5.4.ii.a",
    "P5.4.ii.b",
    "P5.4.ii.c",
    "P5.4.iii",
    "P5.4.iv.a",
    "P5.4.iv.b",
    "P5.5",
    "P5.6",
    "P5.7",
    // open sets
    "D6.1.oracle",
    "D6.2.oracle",
    "R6.1.a",
    "R6.1.b",
    "R6.1.c",
    "R6.1.d",
    "R6.1.e",
    "E6.1.omega-sum",
    "R6.2",
    "R6.3.a",
    "R6.3.b",
    "R6.3.c",
    "R6.3.d",
    "R6.4.a",
    "R6.4.b",
    "R6.5.a",
    "R6.5.b",
    "R6.5.c",
    "R6.5.d",
    "P6.1.i",
    "P6.1.ii",
    "P6.1.iii.a",
    "P6.1.iii.b",
    "P6.2.i",
    "P6.2.ii",
    "P6.2.iii.a",
    "P6.2.iii.b",
    "P6.2.iv",
    "P6.2.v",
    "P6.2.vi.a",
    "P6.2.vi.b",
    "P6.3.i",
    "P6.3.ii",
    "P6.3.iii",
    "P6.3.iv",
    "P6.3.v",
    "P6.3.vi",
    "P6.3.vii",
    "P6.3.viii",
    "P6.4",
    "P6.5",
    "P6.6.i",
    "P6.6.ii",
    "P6.6.iii",
    // closed sets
    "D7.1.oracle",
    "R7.1",
    "R7.2.a",
    "R7.2.b",
    "R7.2.c",
    "R7.3",
    "R7.4.i",
    "R7.4.ii",
    "R7.4.iii",
    "R7.4.iv",
    "R7.singleton-closed",
    "P7.1",
    "L7.1.i",
    "L7.1.i-subset",
    "L7.1.ii.a",
    "L7.1.ii.b",
    "L7.1.iii",
    "P7.2",
    "P7.3.i.a",
    "P7.3.i.b",
    "P7.3.ii.a",
    "P7.3.ii.b",
    "P7.4.i",
    "P7.4.ii",
    "P7.5.i",
    "P7.5.ii",
    "P7.6",
    "P7.7.i",
    "P7.7.ii",
    "P7.7.iii",
    // topologies
    "T8.tau0",
    "T8.tauI",
    "T8.tauII-tilde",
    "T8.tauIII-tilde",
    "T8.ptauII",
    "T8.ptauIII",
    "R8.1.reason",
    "L8.1",
    "L8.1.eq",
    "P8.1.i",
    "P8.1.ii",
    "R8.2",
    "L8.2.i",
    "L8.2.ii",
];

/// The full catalogue, in declaration order.
pub fn all_cases() -> Vec<Box<dyn AuditCase>> {
    cases::all()
}

pub fn run_case(case: &dyn AuditCase, seed: u64, trials: usize) -> CaseResult {
    case.run(seed, trials)
}

/// Runs every case sequentially. Per-case seeds depend only on the suite
/// seed and the case id, so a parallel runner produces the same report.
pub fn run_suite(seed: u64, trials: usize) -> AuditReport {
    let results = all_cases().iter().map(|c| c.run(seed, trials)).collect();
    AuditReport::assemble(seed, trials, results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn manifest_matches_catalogue() {
        let manifest: BTreeSet<&str> = MANIFEST.iter().copied().collect();
        assert_eq!(manifest.len(), MANIFEST.len(), "duplicate manifest id");
        let cases = all_cases();
        let ids: BTreeSet<&str> = cases.iter().map(|c| c.id()).collect();
        assert_eq!(ids.len(), cases.len(), "duplicate case id");
        assert_eq!(ids, manifest);
    }

    #[test]
    fn guarded_cases_carry_a_live_witness() {
        for c in all_cases().iter().filter(|c| c.guarded()) {
            let r = c.run(0, 0);
            assert!(r.passes + r.fails > 0, "{} has no witness meeting its hypothesis", c.id());
            assert!(r.matches, "{} witnesses give {:?}", c.id(), r.observed);
        }
    }

    #[test]
    fn suite_is_green_at_default_seed() {
        let rep = run_suite(42, 100);
        for c in rep.cases.iter().filter(|c| !c.matches) {
            std::eprintln!("{} {} {:?} {:?} {:?}", c.id, c.expected, c.observed, c.counterexample, c.detail);
        }
        assert!(rep.green());
    }
}
