//! Closures, closedness and complements.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{ensure, iv, kind, mixed_region, q, rect, region_point, same, slab, within};
use crate::audit::case::{AuditCase, Case, Expected::*, Verdict};
use crate::audit::gen::Gen;
use crate::interval::{Interval, OmegaElement};
use crate::numerics::{Piece, Rational};
use crate::region::Region;
use crate::topology::oracle::epsilon_candidates;
use crate::topology::{
    closed_ball, closure_of, interior_of, is_closed, is_open, open_ball, oracle_point_check, BallSpec, Kind,
    OracleMode,
};

use Kind::{Plain, TypeI, TypeII, TypeIII};

fn cl(a: &Region, k: Kind) -> Region {
    closure_of(a, k)
}

fn closure_point(a: &Region, x: &Interval, k: Kind) -> bool {
    oracle_point_check(a, x, OracleMode::Closure, k)
}

fn ball(x: &Interval, eps: &Rational) -> Region {
    open_ball(&BallSpec::new(x.clone(), eps.clone()).expect("positive radius"))
}

/// Sets that are closed, open or neither in roughly equal measure.
fn closed_mix(g: &mut Gen) -> Region {
    match g.below(4) {
        0 => cl(&g.region(), Plain),
        1 => g.open_region().complement(),
        2 => interior_of(&g.region(), TypeII, false),
        _ => mixed_region(g),
    }
}

/// A region with a probe point and a null element.
fn set_point_omega(g: &mut Gen) -> (Region, Interval, OmegaElement) {
    let (a, x) = region_point(g);
    (a, x, g.omega())
}

/// The region with a probe point, a null element and a shift `x0`.
fn shifted_setup(g: &mut Gen) -> (Region, Interval, OmegaElement, Interval) {
    let (a, x, w) = set_point_omega(g);
    let x0 = if g.coin() { Interval::zero() } else { g.local_interval() };
    (a, x, w, x0)
}

/// A type-II open box whose complement has the whole line as closure.
fn thin_box() -> Region {
    rect(Piece::open(q(0), q(2)), Piece::closed(q(0), q(1)))
}

fn all_closed(a: &Region) -> [bool; 4] {
    [is_closed(a, Plain), is_closed(a, TypeI), is_closed(a, TypeII), is_closed(a, TypeIII)]
}

fn kinds_agree(a: &Region, x: &Interval, pairs: &[(Kind, Kind)], iff: bool) -> Verdict {
    for &(p, c) in pairs {
        let (hp, hc) = (closure_point(a, x, p), closure_point(a, x, c));
        let ok = if iff { hp == hc } else { !hp || hc };
        ensure(ok, || format!("{x}: {p} closure point {hp}, {c} closure point {hc}"))?;
    }
    Ok(())
}

fn complement_closed(a: &Region, k: Kind) -> Verdict {
    let c = a.complement();
    let clc = cl(&c, k);
    ensure(clc == c, || format!("complement {c} has {k} closure {clc}; extra {}", clc.difference(&c)))
}

fn complement_open(a: &Region, kinds: &[Kind]) -> Verdict {
    let c = a.complement();
    for &k in kinds {
        ensure(is_open(&c, k), || format!("complement {c} is not {k}-open"))?;
    }
    Ok(())
}

pub(super) fn cases() -> Vec<Box<dyn AuditCase>> {
    vec![
        Case::new(
            "D7.1.oracle",
            "compiled closures agree with the ball definitions point by point",
            Pass,
            region_point,
            |(a, x)| {
                for k in Kind::ALL {
                    let (c, o) = (cl(a, k).member(x), closure_point(a, x, k));
                    ensure(c == o, || format!("kind {k} at {x}: compiled {c}, oracle {o}"))?;
                }
                Ok(())
            },
        )
        .boxed(),
        Case::new(
            "R7.1",
            "for x in A, B + O meets A, B meets A + O and B + O meets A + O",
            Pass,
            |g| {
                let (a, x) = region_point(g);
                (a, x, g.ballspec().epsilon().clone())
            },
            |(a, x, e)| {
                let b = ball(x, e);
                let (bo, ao) = (b.upward_closure(), a.upward_closure());
                ensure(bo.meets(a) && b.meets(&ao) && bo.meets(&ao), || format!("B({x};{e}) misses {a}"))
            },
        )
        .when(|(a, x, _)| a.member(x))
        .witnesses(|| vec![(slab(0, 2, true), iv(0, 2), q(1))])
        .boxed(),
        Case::new(
            "R7.2.a",
            "under the null equalities type-I closure points are closure points and type-III ones are type-II",
            Pass,
            region_point,
            |(a, x)| kinds_agree(a, x, &[(TypeI, Plain), (TypeIII, TypeII), (TypeII, TypeIII)], false),
        )
        .boxed(),
        Case::new(
            "R7.2.b",
            "with null decomposition closure points are type-I and type-II ones are type-III",
            Pass,
            region_point,
            |(a, x)| kinds_agree(a, x, &[(Plain, TypeI), (TypeII, TypeIII)], false),
        )
        .boxed(),
        Case::new(
            "R7.2.c",
            "closure and type-I closure agree, as do types II and III",
            Pass,
            region_point,
            |(a, x)| kinds_agree(a, x, &[(Plain, TypeI), (TypeII, TypeIII)], true),
        )
        .boxed(),
        Case::new(
            "R7.3",
            "the type-I closure needs no separate clause for points of A",
            Pass,
            region_point,
            |(a, x)| {
                let every = epsilon_candidates(a, x).iter().all(|e| ball(x, e).upward_closure().meets(a));
                let compiled = cl(a, TypeI).member(x);
                ensure(every == compiled, || format!("{x}: ball test {every}, closure {compiled}"))
            },
        )
        .boxed(),
        Case::new("R7.4.i", "A is inside each of its closures", Pass, mixed_region, |a| {
            for k in Kind::ALL {
                within(k.name(), a, &cl(a, k))?;
            }
            Ok(())
        })
        .boxed(),
        Case::new("R7.4.ii", "the empty set and X are closed of every kind", Pass, kind, |k| {
            ensure(is_closed(&Region::empty(), *k) && is_closed(&Region::whole(), *k), || format!("{k}"))
        })
        .boxed(),
        Case::new(
            "R7.4.iii",
            "the closure is inside every closed set containing A",
            Pass,
            |g| {
                let a = mixed_region(g);
                let c = cl(&a.union(&g.region()), Plain);
                (a, c, kind(g))
            },
            |(a, c, k)| within("closure", &cl(a, *k), c),
        )
        .when(|(a, c, k)| is_closed(c, *k) && a.is_subset(c))
        .witnesses(|| vec![(slab(0, 1, true), slab(0, 2, true), Plain)])
        .boxed(),
        Case::new(
            "R7.4.iv",
            "a set containing its closure is closed",
            Pass,
            |g| (closed_mix(g), kind(g)),
            |(a, k)| ensure(is_closed(a, *k), || format!("{a} is not {k}-closed")),
        )
        .when(|(a, k)| cl(a, *k).is_subset(a))
        .witnesses(|| vec![(slab(0, 2, true), TypeII)])
        .boxed(),
        Case::new(
            "R7.singleton-closed",
            "a singleton is claimed to be closed of every kind",
            Fail,
            |g| g.local_interval(),
            |x| {
                let s = Region::singleton(x);
                for k in Kind::ALL {
                    let c = cl(&s, k);
                    if c != s {
                        let y = Interval::from_midrad(&x.midpoint(), &(x.radius() + Rational::one())).expect("radius");
                        return Err(format!("{k} closure of {{{x}}} also holds {y}"));
                    }
                }
                Ok(())
            },
        )
        .witnesses(|| vec![iv(0, 2)])
        .boxed(),
        Case::new("P7.1", "each closure is idempotent", Pass, |g| (mixed_region(g), kind(g)), |(a, k)| {
            let c = cl(a, *k);
            same("cl(cl)", &cl(&c, *k), &c)
        })
        .boxed(),
        Case::new(
            "L7.1.i",
            "x + w in A + O + x0 gives x in A + O + x0; with the self-decomposition read per instance",
            Conditional,
            shifted_setup,
            |(a, x, w, x0)| {
                let t = a.upward_closure().translate(x0);
                ensure(!t.member(&x.add(&w.to_interval())) || t.member(x), || format!("{x} escapes {t}"))
            },
        )
        .when(|(_, x, w, _)| x.is_degenerate() && w.is_theta())
        .witnesses(|| vec![(thin_box(), iv(1, 1), OmegaElement::theta(), iv(-1, 1))])
        .boxed(),
        Case::new("L7.1.i-subset", "A is inside A + O", Pass, mixed_region, |a| within("A", a, &a.upward_closure()))
            .boxed(),
        Case::new("L7.1.ii.a", "x + w in A + w gives x in A + O", Pass, set_point_omega, |(a, x, w)| {
            let wi = w.to_interval();
            ensure(!a.translate(&wi).member(&x.add(&wi)) || a.upward_closure().member(x), || format!("{x} escapes"))
        })
        .boxed(),
        Case::new(
            "L7.1.ii.b",
            "x + w in A gives x in A + O; with the self-decomposition read per instance",
            Conditional,
            set_point_omega,
            |(a, x, w)| {
                ensure(!a.member(&x.add(&w.to_interval())) || a.upward_closure().member(x), || format!("{x} escapes"))
            },
        )
        .when(|(_, x, w)| x.is_degenerate() && w.is_theta())
        .witnesses(|| vec![(thin_box(), iv(1, 1), OmegaElement::theta())])
        .boxed(),
        Case::new(
            "L7.1.iii",
            "x + w is in A + O + x0 exactly when x is; with the self-decomposition read per instance",
            Conditional,
            shifted_setup,
            |(a, x, w, x0)| {
                let t = a.upward_closure().translate(x0);
                let xw = x.add(&w.to_interval());
                ensure(t.member(&xw) == t.member(x), || format!("{x} and {xw} disagree on {t}"))
            },
        )
        .when(|(_, x, w, _)| x.is_degenerate() && w.is_theta())
        .witnesses(|| vec![(thin_box(), iv(1, 1), OmegaElement::theta(), iv(-1, 1))])
        .boxed(),
        Case::new(
            "P7.2",
            "the type-II and III closures lie inside their own shift by w",
            Conditional,
            |g| (mixed_region(g), g.omega()),
            |(a, w)| {
                let wi = w.to_interval();
                for k in [TypeII, TypeIII] {
                    let c = cl(a, k);
                    within(k.name(), &c, &c.translate(&wi))?;
                }
                Ok(())
            },
        )
        .when(|(_, w)| w.is_theta())
        .witnesses(|| vec![(thin_box(), OmegaElement::theta())])
        .boxed(),
        Case::new(
            "P7.3.i.a",
            "the complement of an open set is closed",
            Pass,
            |g| closed_mix(g).complement(),
            |a| complement_closed(a, Plain),
        )
        .when(|a| is_open(a, Plain))
        .witnesses(|| vec![slab(0, 2, false)])
        .boxed(),
        Case::new("P7.3.i.b", "the complement of a closed set is open", Pass, closed_mix, |a| {
            complement_open(a, &[Plain])
        })
        .when(|a| is_closed(a, Plain))
        .witnesses(|| vec![slab(0, 2, true)])
        .boxed(),
        Case::new("P7.3.ii.a", "the complement of a type-I closed set is type-I open", Pass, closed_mix, |a| {
            complement_open(a, &[TypeI])
        })
        .when(|a| is_closed(a, TypeI))
        .witnesses(|| vec![slab(0, 2, true)])
        .boxed(),
        Case::new(
            "P7.3.ii.b",
            "the complement of a type-I open set is type-I closed",
            Pass,
            |g| closed_mix(g).complement(),
            |a| complement_closed(a, TypeI),
        )
        .when(|a| is_open(a, TypeI))
        .witnesses(|| vec![slab(0, 2, false)])
        .boxed(),
        Case::new(
            "P7.4.i",
            "the complement of a type-II open set is claimed to be type-II closed",
            Fail,
            closed_mix,
            |a| complement_closed(a, TypeII),
        )
        .when(|a| is_open(a, TypeII))
        .witnesses(|| vec![thin_box()])
        .boxed(),
        Case::new(
            "P7.4.ii",
            "the complement of a type-III open set is claimed to be type-III closed",
            Fail,
            closed_mix,
            |a| complement_closed(a, TypeIII),
        )
        .when(|a| is_open(a, TypeIII))
        .witnesses(|| vec![thin_box()])
        .boxed(),
        Case::new(
            "P7.5.i",
            "the complement of a type-II closed set is open and type-II open",
            Pass,
            closed_mix,
            |a| complement_open(a, &[Plain, TypeII]),
        )
        .when(|a| is_closed(a, TypeII))
        .witnesses(|| vec![slab(0, 2, true)])
        .boxed(),
        Case::new(
            "P7.5.ii",
            "the complement of a type-III closed set is type-I and type-III open",
            Pass,
            closed_mix,
            |a| complement_open(a, &[TypeI, TypeIII]),
        )
        .when(|a| is_closed(a, TypeIII))
        .witnesses(|| vec![slab(0, 2, true)])
        .boxed(),
        Case::new("P7.6", "closed or type-I closed gives closed of all four kinds", Pass, closed_mix, |a| {
            let c = all_closed(a);
            ensure(c.iter().all(|&b| b), || format!("{a}: closed flags {c:?}"))
        })
        .when(|a| is_closed(a, Plain) || is_closed(a, TypeI))
        .witnesses(|| vec![slab(0, 2, true)])
        .boxed(),
        Case::new("P7.7.i", "closed balls are closed and type-III closed", Pass, |g| g.ballspec(), |s| {
            closed_ball_is(s, &[Plain, TypeIII])
        })
        .boxed(),
        Case::new("P7.7.ii", "closed balls are type-I closed", Pass, |g| g.ballspec(), |s| closed_ball_is(s, &[TypeI]))
            .boxed(),
        Case::new("P7.7.iii", "closed balls are type-II closed", Pass, |g| g.ballspec(), |s| {
            closed_ball_is(s, &[TypeII])
        })
        .boxed(),
    ]
}

fn closed_ball_is(s: &BallSpec, kinds: &[Kind]) -> Verdict {
    let b = closed_ball(s);
    for &k in kinds {
        ensure(is_closed(&b, k), || format!("closed {s} is not {k}-closed"))?;
    }
    Ok(())
}
