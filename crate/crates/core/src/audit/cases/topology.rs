//! The candidate topologies and the intersection lemma behind them.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{ensure, mixed_region, q, rect, same, slab, within};
use crate::audit::case::{AuditCase, Case, Expected::*, Verdict};
use crate::audit::gen::Gen;
use crate::interval::Interval;
use crate::numerics::{MSet, Piece, Rational};
use crate::region::Region;
use crate::topology::{absorbs_null, family_check, interior_of, is_open, open_ball, FamilyClass, Kind};

/// `(A1 + O) ∩ (A2 + O)` and `(A1 ∩ A2) + O`.
fn sides(a1: &Region, a2: &Region) -> (Region, Region) {
    (a1.upward_closure().intersect(&a2.upward_closure()), a1.intersect(a2).upward_closure())
}

fn family_is_topology(fam: &[Region], class: FamilyClass) -> Verdict {
    let rep = family_check(fam, class);
    match rep.checks.iter().find(|c| !c.passed) {
        None => Ok(()),
        Some(c) => {
            let parts: Vec<_> = c.counterexample.iter().map(|r| format!("{r}")).collect();
            Err(format!("{class}: {} fails on {}", c.name, parts.join(", ")))
        }
    }
}

macro_rules! topology_case {
    ($id:literal, $anchor:literal, $class:expr) => {
        Case::new(
            $id,
            $anchor,
            Pass,
            |g: &mut Gen| g.family(),
            |fam: &Vec<Region>| family_is_topology(fam, $class),
        )
        .when(|fam: &Vec<Region>| fam.iter().all(|a| $class.contains(a)))
        .witnesses(|| vec![vec![Region::empty(), Region::whole(), slab(0, 2, false), slab(1, 3, false)]])
        .boxed()
    };
}

fn pseudo_open_pair(g: &mut Gen) -> (Region, Region, Kind) {
    let k = *g.pick(&[Kind::TypeII, Kind::TypeIII]);
    let one = |g: &mut Gen| if g.coin() { interior_of(&g.region(), k, true) } else { g.family_member() };
    let a1 = one(g);
    (a1, one(g), k)
}

fn is_pseudo_open_pair((a1, a2, k): &(Region, Region, Kind)) -> bool {
    crate::topology::is_pseudo_open(a1, *k) && crate::topology::is_pseudo_open(a2, *k)
}

/// Column of `a` at the midpoint of `x`, cut to radii at most that of `x`.
fn low_column(a: &Region, x: &Interval) -> MSet {
    a.column_at(&x.midpoint()).intersect(&MSet::from_piece(Piece::closed(Rational::zero(), x.radius())))
}

type EqSetup = (Region, Region, Interval, bool);

fn eq_setup(g: &mut Gen) -> EqSetup {
    let (mut a1, mut a2) = (mixed_region(g), mixed_region(g));
    let swap = g.coin();
    let up = if swap { &mut a1 } else { &mut a2 };
    if g.coin() {
        *up = up.upward_closure();
    }
    let x = g.point_near(&a1.union(&a2));
    (a1, a2, x, swap)
}

/// The side condition on the upward-closed operand, plus the instance of the
/// self-decomposition the argument uses at `x`: some radius of the other
/// operand below `r_x` is reached by a null shift of the closed-up one.
fn eq_hypothesis((a1, a2, x, swap): &EqSetup) -> bool {
    let (other, up) = if *swap { (a2, a1) } else { (a1, a2) };
    if !absorbs_null(up) {
        return false;
    }
    let (lhs, _) = sides(a1, a2);
    !lhs.member(x) || !low_column(other, x).intersect(&low_column(up, x).upward()).is_empty()
}

pub(super) fn cases() -> Vec<Box<dyn AuditCase>> {
    vec![
        topology_case!("T8.tau0", "the open sets form a topology", FamilyClass::Tau0),
        topology_case!("T8.tauI", "the type-I open sets form a topology", FamilyClass::TauI),
        topology_case!(
            "T8.tauII-tilde",
            "type-II open sets closed under adding O form a topology",
            FamilyClass::TauIITilde
        ),
        topology_case!(
            "T8.tauIII-tilde",
            "type-III pseudo-open sets closed under adding O form a topology",
            FamilyClass::TauIIITilde
        ),
        topology_case!("T8.ptauII", "with self-decomposition the type-II pseudo-open sets form a topology", FamilyClass::PTauII),
        topology_case!(
            "T8.ptauIII",
            "with null and self-decomposition the type-III pseudo-open sets form a topology",
            FamilyClass::PTauIII
        ),
        Case::new(
            "R8.1.reason",
            "type-II open sets alone need not form a topology since (A1 + O) ∩ (A2 + O) can exceed (A1 ∩ A2) + O",
            Conditional,
            |g| {
                let k = Kind::TypeII;
                let one = |g: &mut Gen| if g.coin() { interior_of(&g.region(), k, false) } else { mixed_region(g) };
                let a1 = one(g);
                (a1, one(g))
            },
            |(a1, a2)| {
                let (lhs, rhs) = sides(a1, a2);
                same("(A1 + O) ∩ (A2 + O) vs (A1 ∩ A2) + O", &lhs, &rhs)
            },
        )
        .when(|(a1, a2)| is_open(a1, Kind::TypeII) && is_open(a2, Kind::TypeII))
        .witnesses(|| {
            let m = || Piece::open(q(0), q(2));
            vec![
                (rect(m(), Piece::closed(q(0), q(1))), rect(m(), Piece::closed(q(0), q(3)))),
                (rect(m(), Piece::closed(q(0), q(1))), rect(m(), Piece::closed(q(5), q(6)))),
            ]
        })
        .boxed(),
        Case::new(
            "L8.1",
            "(A1 ∩ A2) + O is inside (A1 + O) ∩ (A2 + O)",
            Pass,
            |g| (mixed_region(g), mixed_region(g)),
            |(a1, a2)| {
                let (lhs, rhs) = sides(a1, a2);
                within("(A1 ∩ A2) + O", &rhs, &lhs)
            },
        )
        .boxed(),
        Case::new(
            "L8.1.eq",
            "(A1 + O) ∩ (A2 + O) = (A1 ∩ A2) + O when one side is closed under O, read per point",
            Conditional,
            eq_setup,
            |(a1, a2, x, _)| {
                let (lhs, rhs) = sides(a1, a2);
                let (l, r) = (lhs.member(x), rhs.member(x));
                ensure(l == r, || format!("{x}: in (A1 + O) ∩ (A2 + O) {l}, in (A1 ∩ A2) + O {r}"))
            },
        )
        .when(eq_hypothesis)
        .witnesses(|| vec![(slab(0, 2, false), slab(1, 3, false), Interval::int(1, 2), false)])
        .boxed(),
        Case::new("P8.1.i", "open balls belong to the restricted type-II family", Pass, |g| g.ballspec(), |s| {
            ensure(FamilyClass::TauIITilde.contains(&open_ball(s)), || format!("{s}"))
        })
        .boxed(),
        Case::new("P8.1.ii", "open balls belong to the restricted type-III family", Pass, |g| g.ballspec(), |s| {
            ensure(FamilyClass::TauIIITilde.contains(&open_ball(s)), || format!("{s}"))
        })
        .boxed(),
        Case::new(
            "R8.2",
            "with null decomposition the open and type-I open sets coincide, as do the type-II and III families",
            Pass,
            mixed_region,
            |a| {
                let c = |f: FamilyClass| f.contains(a);
                ensure(c(FamilyClass::Tau0) == c(FamilyClass::TauI), || format!("{a}: tau0 vs tauI"))?;
                ensure(c(FamilyClass::TauIITilde) == c(FamilyClass::TauIIITilde), || format!("{a}: restricted II vs III"))?;
                ensure(is_open(a, Kind::TypeII) == is_open(a, Kind::TypeIII), || format!("{a}: II vs III open"))
            },
        )
        .boxed(),
        Case::new(
            "L8.2.i",
            "for pseudo-open A1, A2, (A1 ∩ A2) + O is inside (A1 + O) ∩ (A2 + O)",
            Pass,
            pseudo_open_pair,
            |(a1, a2, _)| {
                let (lhs, rhs) = sides(a1, a2);
                within("(A1 ∩ A2) + O", &rhs, &lhs)
            },
        )
        .when(is_pseudo_open_pair)
        .witnesses(|| vec![(slab(0, 2, false), slab(1, 3, false), Kind::TypeII)])
        .boxed(),
        Case::new(
            "L8.2.ii",
            "for pseudo-open A1, A2, (A1 + O) ∩ (A2 + O) = (A1 ∩ A2) + O",
            Pass,
            pseudo_open_pair,
            |(a1, a2, _)| {
                let (lhs, rhs) = sides(a1, a2);
                same("(A1 + O) ∩ (A2 + O) vs (A1 ∩ A2) + O", &lhs, &rhs)
            },
        )
        .when(is_pseudo_open_pair)
        .witnesses(|| vec![(slab(0, 2, false), slab(1, 3, false), Kind::TypeIII)])
        .boxed(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intersection_lemma_fails_without_hypotheses() {
        let m = || Piece::open(q(0), q(2));
        let (a1, a2) = (rect(m(), Piece::closed(q(0), q(1))), rect(m(), Piece::closed(q(5), q(6))));
        let (lhs, rhs) = sides(&a1, &a2);
        assert!(rhs.is_empty());
        assert_eq!(lhs, rect(m(), Piece::from(q(5), true)));
        assert!(is_open(&a1, Kind::TypeII));
        assert!(!is_open(&a2, Kind::TypeII));
    }
}
