//! The audit suite spread over a thread pool.

use nullspace_core::audit::{all_cases, AuditReport};
use rayon::prelude::*;

/// Same report as [`nullspace_core::audit::run_suite`]: each case seeds its
/// own generator from `(seed, id)` and the report is sorted by id.
pub fn run_suite_parallel(seed: u64, trials: usize) -> AuditReport {
    let cases = all_cases();
    let results = cases.par_iter().map(|c| c.run(seed, trials)).collect();
    AuditReport::assemble(seed, trials, results)
}
