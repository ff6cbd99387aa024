//! Checks of the topology axioms for finite families of regions.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{absorbs_null, is_open, is_pseudo_open, Kind};
use crate::region::Region;
use crate::Error;

/// The six candidate open-set families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyClass {
    Tau0,
    TauI,
    TauIITilde,
    TauIIITilde,
    PTauII,
    PTauIII,
}

impl FamilyClass {
    pub const ALL: [FamilyClass; 6] = [
        FamilyClass::Tau0,
        FamilyClass::TauI,
        FamilyClass::TauIITilde,
        FamilyClass::TauIIITilde,
        FamilyClass::PTauII,
        FamilyClass::PTauIII,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyClass::Tau0 => "tau0",
            FamilyClass::TauI => "tauI",
            FamilyClass::TauIITilde => "tauII_tilde",
            FamilyClass::TauIIITilde => "tauIII_tilde",
            FamilyClass::PTauII => "ptauII",
            FamilyClass::PTauIII => "ptauIII",
        }
    }

    /// Class membership: the openness notion, plus the membership filter for
    /// the restricted families (which admit `∅` by fiat).
    pub fn contains(self, a: &Region) -> bool {
        match self {
            FamilyClass::Tau0 => is_open(a, Kind::Plain),
            FamilyClass::TauI => is_open(a, Kind::TypeI),
            FamilyClass::TauIITilde => a.is_empty() || (is_open(a, Kind::TypeII) && absorbs_null(a)),
            FamilyClass::TauIIITilde => a.is_empty() || (is_pseudo_open(a, Kind::TypeIII) && absorbs_null(a)),
            FamilyClass::PTauII => is_pseudo_open(a, Kind::TypeII),
            FamilyClass::PTauIII => is_pseudo_open(a, Kind::TypeIII),
        }
    }
}

impl fmt::Display for FamilyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<FamilyClass, Error> {
        match s {
            "tau0" => Ok(FamilyClass::Tau0),
            "tauI" => Ok(FamilyClass::TauI),
            "tauII" | "tauII_tilde" => Ok(FamilyClass::TauIITilde),
            "tauIII" | "tauIII_tilde" => Ok(FamilyClass::TauIIITilde),
            "ptauII" => Ok(FamilyClass::PTauII),
            "ptauIII" => Ok(FamilyClass::PTauIII),
            _ => Err(Error::Unknown { what: "class", value: s.to_string() }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// The offending region(s), when the check failed.
    pub counterexample: Vec<Region>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologyReport {
    pub class: FamilyClass,
    pub members: usize,
    pub checks: Vec<CheckResult>,
}

impl TopologyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Index subsets of `0..n` with `lo <= len <= hi`, in lexicographic order.
fn subsets(n: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let len = mask.count_ones() as usize;
        if (lo..=hi).contains(&len) {
            out.push((0..n).filter(|i| mask & (1 << i) != 0).collect());
        }
    }
    out.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

/// Largest family for which every sub-family union is checked.
const EXHAUSTIVE_LIMIT: usize = 10;

/// Verifies membership of every region, of `∅` and `X`, of every 2-, 3- and
/// 4-wise intersection, and of the union of every sub-family (families
/// larger than ten members get their unions checked pairwise and in full).
pub fn family_check(regions: &[Region], class: FamilyClass) -> TopologyReport {
    let mut checks = Vec::new();
    let mut check = |name: String, set: &Region, parts: Vec<Region>| {
        let passed = class.contains(set);
        checks.push(CheckResult { name, passed, counterexample: if passed { Vec::new() } else { parts } });
    };
    for (i, a) in regions.iter().enumerate() {
        check(format!("member[{i}]"), a, alloc::vec![a.clone()]);
    }
    check("empty".into(), &Region::empty(), alloc::vec![Region::empty()]);
    check("whole".into(), &Region::whole(), alloc::vec![Region::whole()]);

    let n = regions.len();
    let label = |idx: &[usize]| idx.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
    let pick = |idx: &[usize]| idx.iter().map(|&i| regions[i].clone()).collect::<Vec<_>>();
    let small = n <= EXHAUSTIVE_LIMIT;

    for idx in subsets(n.min(EXHAUSTIVE_LIMIT), 2, 4) {
        let inter = idx[1..].iter().fold(regions[idx[0]].clone(), |acc, &i| acc.intersect(&regions[i]));
        check(format!("intersection[{}]", label(&idx)), &inter, pick(&idx));
    }
    let unions = if small { subsets(n, 2, n) } else { subsets(EXHAUSTIVE_LIMIT, 2, 2) };
    for idx in unions {
        let uni = idx[1..].iter().fold(regions[idx[0]].clone(), |acc, &i| acc.union(&regions[i]));
        check(format!("union[{}]", label(&idx)), &uni, pick(&idx));
    }
    if !small {
        let all: Vec<usize> = (0..n).collect();
        let uni = regions.iter().fold(Region::empty(), |acc, r| acc.union(r));
        check(format!("union[{}]", label(&all)), &uni, regions.to_vec());
    }
    TopologyReport { class, members: n, checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::Interval;
    use crate::numerics::{Piece, Rational};
    use crate::region::Rect;
    use crate::topology::{open_ball, BallSpec};

    fn ball(lo: i64, hi: i64, eps: i64) -> Region {
        open_ball(&BallSpec::new(Interval::int(lo, hi), Rational::from_integer(eps)).unwrap())
    }

    #[test]
    fn overlapping_balls_form_a_topology_base() {
        let fam = [ball(0, 2, 2), ball(1, 3, 2)];
        for class in FamilyClass::ALL {
            assert!(family_check(&fam, class).passed(), "{class}");
        }
    }

    #[test]
    fn trivial_family() {
        let fam = [Region::empty(), Region::whole(), ball(0, 0, 1)];
        assert!(family_check(&fam, FamilyClass::Tau0).passed());
    }

    #[test]
    fn truncated_box_fails_the_filter() {
        let q = Rational::from_integer;
        let b = Region::from_rect(Rect::new(Piece::closed(q(0), q(1)), Piece::closed(q(0), q(1))).unwrap());
        let rep = family_check(&[b], FamilyClass::TauIITilde);
        assert!(!rep.passed());
        assert!(!rep.checks[0].passed);
        assert_eq!(rep.checks[0].counterexample.len(), 1);
    }
}
