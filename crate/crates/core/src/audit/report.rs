//! Per-case results and the suite report.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::case::{Expected, Observed};
use super::MANIFEST;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub id: String,
    pub anchor: String,
    pub expected: Expected,
    pub observed: Observed,
    pub trials: usize,
    pub passes: usize,
    pub fails: usize,
    pub vacuous: usize,
    /// First failing instance, shrunk unless it was an embedded witness.
    pub counterexample: Option<String>,
    pub detail: Option<String>,
    /// For conditional cases: an instance outside the hypothesis on which
    /// the conclusion fails. Informational only.
    pub vacuous_witness: Option<String>,
    pub matches: bool,
}

impl CaseResult {
    pub fn new(
        id: &str,
        anchor: &str,
        expected: Expected,
        (trials, passes, fails, vacuous): (usize, usize, usize, usize),
        counterexample: Option<String>,
        detail: Option<String>,
        vacuous_witness: Option<String>,
    ) -> CaseResult {
        let observed = if fails > 0 {
            Observed::Fail
        } else if passes == 0 {
            Observed::Inconclusive
        } else {
            Observed::Pass
        };
        let matches = match expected {
            Expected::Fail => observed == Observed::Fail,
            Expected::Pass | Expected::Conditional => observed == Observed::Pass,
        };
        CaseResult {
            id: id.to_string(),
            anchor: anchor.to_string(),
            expected,
            observed,
            trials,
            passes,
            fails,
            vacuous,
            counterexample,
            detail,
            vacuous_witness,
            matches,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub seed: u64,
    pub trials: usize,
    /// Sorted by case id.
    pub cases: Vec<CaseResult>,
    /// Manifest ids with no case in the catalogue.
    pub missing: Vec<String>,
}

impl AuditReport {
    /// Orders results by id and checks manifest coverage. The input order
    /// does not matter.
    pub fn assemble(seed: u64, trials: usize, mut cases: Vec<CaseResult>) -> AuditReport {
        cases.sort_by(|a, b| a.id.cmp(&b.id));
        let missing = MANIFEST
            .iter()
            .filter(|id| cases.binary_search_by(|c| c.id.as_str().cmp(id)).is_err())
            .map(|id| id.to_string())
            .collect();
        AuditReport { seed, trials, cases, missing }
    }

    pub fn green(&self) -> bool {
        self.missing.is_empty() && self.cases.iter().all(|c| c.matches)
    }

    pub fn verdict(&self) -> &'static str {
        if self.green() {
            "GREEN"
        } else {
            "RED"
        }
    }

    pub fn case(&self, id: &str) -> Option<&CaseResult> {
        self.cases.iter().find(|c| c.id == id)
    }
}
