//! Audit cases and the trial loop.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::gen::Gen;
use super::report::CaseResult;
use crate::function_space::GridIntervalFunction;
use crate::interval::{Interval, OmegaElement};
use crate::numerics::Rational;
use crate::region::Region;
use crate::topology::{BallSpec, FamilyClass, Kind};

/// `Ok` when the conclusion holds, otherwise a description of the failure.
pub type Verdict = Result<(), String>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Expected {
    Pass,
    Fail,
    /// The statement's hypotheses only hold on some instances of the model;
    /// the case checks the conclusion on exactly those instances.
    Conditional,
}

impl Expected {
    pub fn name(self) -> &'static str {
        match self {
            Expected::Pass => "EXPECTED_PASS",
            Expected::Fail => "EXPECTED_FAIL",
            Expected::Conditional => "CONDITIONAL",
        }
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Observed {
    Pass,
    Fail,
    /// No trial satisfied the hypothesis.
    Inconclusive,
}

impl Observed {
    pub fn name(self) -> &'static str {
        match self {
            Observed::Pass => "PASS",
            Observed::Fail => "FAIL",
            Observed::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl fmt::Display for Observed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A value the auditor can generate, print and shrink.
pub trait Operand: Clone {
    fn describe(&self) -> String;

    /// Simpler candidates, tried in order while shrinking.
    fn shrink(&self) -> Vec<Self> {
        Vec::new()
    }
}

impl Operand for Rational {
    fn describe(&self) -> String {
        self.to_string()
    }

    fn shrink(&self) -> Vec<Self> {
        let two = BigInt::from(2);
        let mut out = Vec::new();
        for c in [
            Rational::zero(),
            Rational::from_big(self.numer() / self.denom(), BigInt::from(1)),
            Rational::from_big(self.numer() / &two, self.denom().clone()),
        ] {
            if &c != self && !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }
}

impl Operand for Interval {
    fn describe(&self) -> String {
        self.to_string()
    }

    fn shrink(&self) -> Vec<Self> {
        let mut out = Vec::new();
        if !self.is_degenerate() {
            out.push(Interval::point(self.lo().clone()));
        }
        for lo in self.lo().shrink() {
            if let Ok(x) = Interval::new(lo, self.hi().clone()) {
                out.push(x);
            }
        }
        for hi in self.hi().shrink() {
            if let Ok(x) = Interval::new(self.lo().clone(), hi) {
                out.push(x);
            }
        }
        out
    }
}

impl Operand for OmegaElement {
    fn describe(&self) -> String {
        self.to_string()
    }

    fn shrink(&self) -> Vec<Self> {
        self.k().shrink().into_iter().filter_map(|k| OmegaElement::new(k).ok()).collect()
    }
}

impl Operand for Region {
    fn describe(&self) -> String {
        self.to_string()
    }

    /// Drops one box at a time.
    fn shrink(&self) -> Vec<Self> {
        let rects = self.rects();
        (0..rects.len())
            .map(|i| {
                let mut rest = rects.clone();
                rest.remove(i);
                Region::from_rects(rest)
            })
            .collect()
    }
}

impl Operand for BallSpec {
    fn describe(&self) -> String {
        self.to_string()
    }

    fn shrink(&self) -> Vec<Self> {
        let mut out: Vec<BallSpec> =
            self.center().shrink().into_iter().filter_map(|c| BallSpec::new(c, self.epsilon().clone()).ok()).collect();
        out.extend(self.epsilon().shrink().into_iter().filter_map(|e| BallSpec::new(self.center().clone(), e).ok()));
        out
    }
}

impl Operand for Kind {
    fn describe(&self) -> String {
        self.name().to_string()
    }
}

impl Operand for bool {
    fn describe(&self) -> String {
        self.to_string()
    }
}

impl Operand for usize {
    fn describe(&self) -> String {
        self.to_string()
    }
}

impl Operand for FamilyClass {
    fn describe(&self) -> String {
        self.name().to_string()
    }
}

impl Operand for GridIntervalFunction {
    fn describe(&self) -> String {
        let parts: Vec<String> = self.grid().iter().zip(self.values()).map(|(t, v)| format!("{t}:{v}")).collect();
        format!("{{{}}}", parts.join(" "))
    }

    fn shrink(&self) -> Vec<Self> {
        let mut out = Vec::new();
        for (i, v) in self.values().iter().enumerate() {
            for s in v.shrink() {
                let mut vals = self.values().to_vec();
                vals[i] = s;
                out.extend(GridIntervalFunction::new(self.grid().to_vec(), vals).ok());
            }
        }
        out
    }
}

impl<T: Operand> Operand for Vec<T> {
    fn describe(&self) -> String {
        let parts: Vec<String> = self.iter().map(Operand::describe).collect();
        format!("[{}]", parts.join(", "))
    }

    fn shrink(&self) -> Vec<Self> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            let mut v = self.clone();
            v.remove(i);
            out.push(v);
        }
        for (i, x) in self.iter().enumerate() {
            for s in x.shrink() {
                let mut v = self.clone();
                v[i] = s;
                out.push(v);
            }
        }
        out
    }
}

macro_rules! tuple_operand {
    ($($name:ident $idx:tt),+) => {
        impl<$($name: Operand),+> Operand for ($($name,)+) {
            fn describe(&self) -> String {
                let parts: Vec<String> = alloc::vec![$(self.$idx.describe()),+];
                format!("({})", parts.join("; "))
            }

            fn shrink(&self) -> Vec<Self> {
                let mut out = Vec::new();
                $(
                    for s in self.$idx.shrink() {
                        let mut t = self.clone();
                        t.$idx = s;
                        out.push(t);
                    }
                )+
                out
            }
        }
    };
}

tuple_operand!(A 0, B 1);
tuple_operand!(A 0, B 1, C 2);
tuple_operand!(A 0, B 1, C 2, D 3);
tuple_operand!(A 0, B 1, C 2, D 3, E 4);
tuple_operand!(A 0, B 1, C 2, D 3, E 4, F 5);

/// A case as seen by the runner.
pub trait AuditCase: Send + Sync {
    fn id(&self) -> &'static str;
    fn anchor(&self) -> &'static str;
    fn expected(&self) -> Expected;
    /// Whether the case only applies to instances meeting a hypothesis.
    fn guarded(&self) -> bool;
    fn run(&self, seed: u64, trials: usize) -> CaseResult;
}

pub struct Case<I> {
    pub id: &'static str,
    pub anchor: &'static str,
    pub expected: Expected,
    pub gen: fn(&mut Gen) -> I,
    pub hyp: fn(&I) -> bool,
    pub concl: fn(&I) -> Verdict,
    /// Fixed instances evaluated before any random trial, never shrunk.
    pub witnesses: fn() -> Vec<I>,
    pub guarded: bool,
}

fn always<I>(_: &I) -> bool {
    true
}

fn no_witnesses<I>() -> Vec<I> {
    Vec::new()
}

/// Bound on conclusion evaluations spent shrinking one counterexample.
const SHRINK_BUDGET: usize = 200;

impl<I: Operand + 'static> Case<I> {
    pub fn new(
        id: &'static str,
        anchor: &'static str,
        expected: Expected,
        gen: fn(&mut Gen) -> I,
        concl: fn(&I) -> Verdict,
    ) -> Self {
        Case { id, anchor, expected, gen, hyp: always::<I>, concl, witnesses: no_witnesses::<I>, guarded: false }
    }

    pub fn when(mut self, hyp: fn(&I) -> bool) -> Self {
        self.hyp = hyp;
        self.guarded = true;
        self
    }

    pub fn witnesses(mut self, w: fn() -> Vec<I>) -> Self {
        self.witnesses = w;
        self
    }

    pub fn boxed(self) -> Box<dyn AuditCase> {
        Box::new(self)
    }

    fn shrink(&self, mut cur: I, mut detail: String) -> (I, String) {
        let mut budget = SHRINK_BUDGET;
        'outer: loop {
            for cand in cur.shrink() {
                if budget == 0 {
                    break 'outer;
                }
                budget -= 1;
                if (self.hyp)(&cand) {
                    if let Err(d) = (self.concl)(&cand) {
                        cur = cand;
                        detail = d;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        (cur, detail)
    }
}

struct Tally<I> {
    trials: usize,
    passes: usize,
    fails: usize,
    vacuous: usize,
    first_fail: Option<(I, String, bool)>,
    vacuous_witness: Option<String>,
}

/// FNV-1a over the case id, mixed with the suite seed.
pub fn case_seed(seed: u64, id: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in id.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

impl<I: Operand + 'static> AuditCase for Case<I> {
    fn id(&self) -> &'static str {
        self.id
    }

    fn anchor(&self) -> &'static str {
        self.anchor
    }

    fn expected(&self) -> Expected {
        self.expected
    }

    fn guarded(&self) -> bool {
        self.guarded
    }

    fn run(&self, seed: u64, trials: usize) -> CaseResult {
        let mut t = Tally { trials: 0, passes: 0, fails: 0, vacuous: 0, first_fail: None, vacuous_witness: None };
        let eval = |inst: I, embedded: bool, t: &mut Tally<I>| {
            t.trials += 1;
            if !(self.hyp)(&inst) {
                t.vacuous += 1;
                if self.expected == Expected::Conditional && t.vacuous_witness.is_none() {
                    if let Err(d) = (self.concl)(&inst) {
                        t.vacuous_witness = Some(format!("{} => {d}", inst.describe()));
                    }
                }
                return;
            }
            match (self.concl)(&inst) {
                Ok(()) => t.passes += 1,
                Err(d) => {
                    t.fails += 1;
                    if t.first_fail.is_none() {
                        t.first_fail = Some((inst, d, embedded));
                    }
                }
            }
        };
        for w in (self.witnesses)() {
            eval(w, true, &mut t);
        }
        let mut g = Gen::new(case_seed(seed, self.id));
        for _ in 0..trials {
            let inst = (self.gen)(&mut g);
            eval(inst, false, &mut t);
        }
        let (counterexample, detail) = match t.first_fail.take() {
            Some((inst, d, true)) => (Some(inst.describe()), Some(d)),
            Some((inst, d, false)) => {
                let (inst, d) = self.shrink(inst, d);
                (Some(inst.describe()), Some(d))
            }
            None => (None, None),
        };
        CaseResult::new(
            self.id,
            self.anchor,
            self.expected,
            (t.trials, t.passes, t.fails, t.vacuous),
            counterexample,
            detail,
            t.vacuous_witness,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen_pair(g: &mut Gen) -> (Rational, Rational) {
        (g.rational(), g.rational())
    }

    #[test]
    fn shrinking_keeps_the_failure() {
        let c = Case::new("T.shrink", "", Expected::Fail, gen_pair, |(a, b)| {
            if a + b < Rational::from_integer(50) {
                Ok(())
            } else {
                Err("sum too large".into())
            }
        });
        let r = c.run(3, 200);
        assert!(r.fails > 0);
        let ce = r.counterexample.unwrap();
        assert!(ce.starts_with('('));
        assert!(r.matches);
    }

    #[test]
    fn vacuous_only_is_inconclusive() {
        let c = Case::new("T.vacuous", "", Expected::Pass, gen_pair, |_| Ok(())).when(|_| false);
        let r = c.run(1, 10);
        assert_eq!(r.observed, Observed::Inconclusive);
        assert!(!r.matches);
    }

    #[test]
    fn witnesses_run_first_and_are_kept() {
        let c = Case::new("T.witness", "", Expected::Fail, gen_pair, |(a, _)| {
            if a.is_zero() {
                Err("zero".into())
            } else {
                Ok(())
            }
        })
        .witnesses(|| alloc::vec![(Rational::zero(), Rational::from_integer(7))]);
        let r = c.run(9, 0);
        assert_eq!(r.trials, 1);
        assert_eq!(r.counterexample.as_deref(), Some("(0; 7)"));
    }
}
