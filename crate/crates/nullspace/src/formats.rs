//! JSON shapes for every value the CLI reads or writes.
//!
//! Rationals travel as strings (`"3/2"`, `"-4"`), extended reals add `"inf"`
//! and `"-inf"`, and a piece of the line is `[lo, "open"|"closed", hi, flag]`.

use std::str::FromStr;

use nullspace_core::audit::{AuditReport, CaseResult};
use nullspace_core::numerics::{ExtReal, MSet, Piece, Rational};
use nullspace_core::region::{Rect, Region};
use nullspace_core::topology::TopologyReport;
use nullspace_core::{GridIntervalFunction, Interval};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Value(#[from] nullspace_core::Error),
    #[error("bound flag must be \"open\" or \"closed\", got {0:?}")]
    Flag(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalJson {
    pub lo: String,
    pub hi: String,
}

/// `[lo, flag, hi, flag]`.
pub type PieceJson = [String; 4];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxJson {
    pub m: PieceJson,
    pub r: PieceJson,
}

pub type RegionJson = Vec<BoxJson>;
pub type MSetJson = Vec<PieceJson>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridFnJson {
    pub grid: Vec<String>,
    pub values: Vec<IntervalJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub counterexample: Vec<RegionJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologyReportJson {
    pub class: String,
    pub members: usize,
    pub passed: bool,
    pub checks: Vec<CheckJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseJson {
    pub id: String,
    pub anchor: String,
    pub expected: String,
    pub observed: String,
    pub status: String,
    pub trials: usize,
    pub passes: usize,
    pub fails: usize,
    pub vacuous: usize,
    pub counterexample: Option<String>,
    pub detail: Option<String>,
    pub vacuous_witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReportJson {
    pub seed: u64,
    pub trials: usize,
    pub cases_run: usize,
    pub verdict: String,
    pub missing: Vec<String>,
    pub cases: Vec<CaseJson>,
}

pub fn rational(s: &str) -> Result<Rational, FormatError> {
    Ok(Rational::from_str(s)?)
}

pub fn interval_json(x: &Interval) -> IntervalJson {
    IntervalJson { lo: x.lo().to_string(), hi: x.hi().to_string() }
}

pub fn interval_from(j: &IntervalJson) -> Result<Interval, FormatError> {
    Ok(Interval::new(rational(&j.lo)?, rational(&j.hi)?)?)
}

fn flag(closed: bool) -> String {
    if closed { "closed" } else { "open" }.to_string()
}

fn parse_flag(s: &str) -> Result<bool, FormatError> {
    match s {
        "closed" => Ok(true),
        "open" => Ok(false),
        other => Err(FormatError::Flag(other.to_string())),
    }
}

pub fn piece_json(p: &Piece) -> PieceJson {
    [p.lo.to_string(), flag(p.lo_closed), p.hi.to_string(), flag(p.hi_closed)]
}

pub fn piece_from(j: &PieceJson) -> Result<Piece, FormatError> {
    let lo = ExtReal::from_str(&j[0])?;
    let hi = ExtReal::from_str(&j[2])?;
    Ok(Piece::new(lo, parse_flag(&j[1])?, hi, parse_flag(&j[3])?)?)
}

pub fn mset_json(s: &MSet) -> MSetJson {
    s.pieces().iter().map(piece_json).collect()
}

pub fn mset_from(j: &MSetJson) -> Result<MSet, FormatError> {
    let pieces = j.iter().map(piece_from).collect::<Result<Vec<_>, _>>()?;
    Ok(MSet::normalize(pieces)?)
}

/// The canonical boxes of a region, one per band and radius piece.
pub fn region_json(a: &Region) -> RegionJson {
    a.rects().iter().map(|b| BoxJson { m: piece_json(&b.m), r: piece_json(&b.r) }).collect()
}

pub fn region_from(j: &RegionJson) -> Result<Region, FormatError> {
    let rects = j
        .iter()
        .map(|b| Ok(Rect::new(piece_from(&b.m)?, piece_from(&b.r)?)?))
        .collect::<Result<Vec<_>, FormatError>>()?;
    Ok(Region::from_rects(rects))
}

pub fn gridfn_json(f: &GridIntervalFunction) -> GridFnJson {
    GridFnJson { grid: f.grid().to_vec(), values: f.values().iter().map(interval_json).collect() }
}

pub fn gridfn_from(j: &GridFnJson) -> Result<GridIntervalFunction, FormatError> {
    let values = j.values.iter().map(interval_from).collect::<Result<Vec<_>, _>>()?;
    Ok(GridIntervalFunction::new(j.grid.clone(), values)?)
}

pub fn topology_json(rep: &TopologyReport) -> TopologyReportJson {
    TopologyReportJson {
        class: rep.class.name().to_string(),
        members: rep.members,
        passed: rep.passed(),
        checks: rep
            .checks
            .iter()
            .map(|c| CheckJson {
                name: c.name.clone(),
                passed: c.passed,
                counterexample: c.counterexample.iter().map(region_json).collect(),
            })
            .collect(),
    }
}

fn case_json(c: &CaseResult) -> CaseJson {
    CaseJson {
        id: c.id.clone(),
        anchor: c.anchor.clone(),
        expected: c.expected.name().to_string(),
        observed: c.observed.name().to_string(),
        status: if c.matches { "ok" } else { "mismatch" }.to_string(),
        trials: c.trials,
        passes: c.passes,
        fails: c.fails,
        vacuous: c.vacuous,
        counterexample: c.counterexample.clone(),
        detail: c.detail.clone(),
        vacuous_witness: c.vacuous_witness.clone(),
    }
}

pub fn audit_json(rep: &AuditReport) -> AuditReportJson {
    AuditReportJson {
        seed: rep.seed,
        trials: rep.trials,
        cases_run: rep.cases.len(),
        verdict: rep.verdict().to_string(),
        missing: rep.missing.clone(),
        cases: rep.cases.iter().map(case_json).collect(),
    }
}

pub fn read_region(text: &str) -> Result<Region, FormatError> {
    region_from(&serde_json::from_str(text)?)
}

pub fn read_family(text: &str) -> Result<Vec<Region>, FormatError> {
    let fam: Vec<RegionJson> = serde_json::from_str(text)?;
    fam.iter().map(region_from).collect()
}

pub fn to_pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("DTOs always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn piece_flags_and_infinities() {
        let p = piece_from(&["-inf".into(), "open".into(), "3/2".into(), "closed".into()]).unwrap();
        assert_eq!(piece_json(&p), ["-inf", "open", "3/2", "closed"].map(String::from));
        assert!(piece_from(&["0".into(), "half".into(), "1".into(), "open".into()]).is_err());
        assert!(piece_from(&["-inf".into(), "closed".into(), "1".into(), "open".into()]).is_err());
    }

    #[test]
    fn region_example_reads_back() {
        let a = read_region(r#"[{"m":["0","closed","2","closed"],"r":["0","closed","1","closed"]}]"#).unwrap();
        let again = region_from(&region_json(&a)).unwrap();
        assert_eq!(a, again);
    }
}
