//! Plain-text tables for `--format table`.

use std::fmt::Write;

use crate::formats::{AuditReportJson, PieceJson, RegionJson, TopologyReportJson};

fn piece(p: &PieceJson) -> String {
    if p[0] == p[2] && p[1] == "closed" && p[3] == "closed" {
        return format!("{{{}}}", p[0]);
    }
    let l = if p[1] == "closed" { '[' } else { '(' };
    let r = if p[3] == "closed" { ']' } else { ')' };
    format!("{l}{}, {}{r}", p[0], p[2])
}

pub fn region(j: &RegionJson) -> String {
    if j.is_empty() {
        return "(empty region)\n".to_string();
    }
    let rows: Vec<(String, String)> = j.iter().map(|b| (piece(&b.m), piece(&b.r))).collect();
    let w = rows.iter().map(|r| r.0.len()).max().unwrap_or(0).max(1);
    let mut out = format!("{:<w$}  r\n", "m");
    for (m, r) in rows {
        let _ = writeln!(out, "{m:<w$}  {r}");
    }
    out
}

pub fn topology(rep: &TopologyReportJson) -> String {
    let mut out = format!("class {}  members {}  {}\n", rep.class, rep.members, if rep.passed { "PASS" } else { "FAIL" });
    let w = rep.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &rep.checks {
        let _ = writeln!(out, "  {:<w$}  {}", c.name, if c.passed { "ok" } else { "FAIL" });
    }
    out
}

pub fn audit(rep: &AuditReportJson) -> String {
    let w = rep.cases.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
    let mut out = format!(
        "{:<w$}  {:<13}  {:<12}  {:>6}  {:>6}  {:>5}  {:>7}  {}\n",
        "id", "expected", "observed", "trials", "passes", "fails", "vacuous", "status"
    );
    for c in &rep.cases {
        let _ = writeln!(
            out,
            "{:<w$}  {:<13}  {:<12}  {:>6}  {:>6}  {:>5}  {:>7}  {}",
            c.id, c.expected, c.observed, c.trials, c.passes, c.fails, c.vacuous, c.status
        );
        if let Some(ce) = &c.counterexample {
            let _ = writeln!(out, "{:w$}  counterexample {ce}", "");
        }
    }
    for m in &rep.missing {
        let _ = writeln!(out, "{m:<w$}  missing");
    }
    let _ = writeln!(out, "seed {}  trials {}  cases {}  {}", rep.seed, rep.trials, rep.cases_run, rep.verdict);
    out
}
