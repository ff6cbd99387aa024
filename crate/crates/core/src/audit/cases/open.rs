//! Interiors, pseudo-interiors and the four notions of openness.

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
use crate::topology::{
    absorbs_null, interior_of, is_open, is_pseudo_open, omega_region, open_ball, oracle_point_check, BallSpec, Kind,
    OracleMode,
};

use Kind::{Plain, TypeI, TypeII, TypeIII};

fn int(a: &Region, k: Kind) -> Region {
    interior_of(a, k, false)
}

fn pint(a: &Region, k: Kind) -> Region {
    interior_of(a, k, true)
}

/// Regions that are open in some sense more often than not: full-column
/// unions, interiors of every kind and the general mix.
fn open_mix(g: &mut Gen) -> Region {
    match g.below(4) {
        0 => g.open_region(),
        1 => {
            let k = kind(g);
            int(&g.region(), k)
        }
        2 => int(&g.region(), TypeII),
        _ => mixed_region(g),
    }
}

fn pseudo_open_mix(g: &mut Gen) -> (Region, Kind) {
    let k = kind(g);
    let a = if g.coin() { pint(&g.region(), k) } else { mixed_region(g) };
    (a, k)
}

/// Two stacked boxes over `(0,2)`: type-II-open, yet a null shift carries a
/// point of the gap between them into the upper box.
fn stacked_boxes() -> Region {
    let m = || Piece::open(q(0), q(2));
    rect(m(), Piece::closed(q(0), q(1))).union(&rect(m(), Piece::closed(q(3), q(4))))
}

fn w1() -> OmegaElement {
    OmegaElement::new(q(1)).expect("nonnegative half-width")
}

fn closed_under_null(what: &str, a: &Region) -> Verdict {
    within(what, &a.upward_closure(), a)
}

fn lattice(a: &Region) -> [bool; 4] {
    [is_open(a, Plain), is_open(a, TypeI), is_open(a, TypeII), is_open(a, TypeIII)]
}

fn implies(what: &str, a: &Region, premise: bool, conclusion: bool) -> Verdict {
    ensure(!premise || conclusion, || {
        let [o, i, ii, iii] = lattice(a);
        format!("{what} on {a}: open={o} I={i} II={ii} III={iii}")
    })
}

fn oracle_agrees(a: &Region, x: &Interval, mode: OracleMode) -> Verdict {
    let pseudo = mode == OracleMode::PseudoInterior;
    for k in Kind::ALL {
        let compiled = interior_of(a, k, pseudo).member(x);
        let direct = oracle_point_check(a, x, mode, k);
        ensure(compiled == direct, || format!("kind {k} at {x}: compiled {compiled}, oracle {direct}"))?;
    }
    Ok(())
}

pub(super) fn cases() -> Vec<Box<dyn AuditCase>> {
    vec![
        Case::new(
            "D6.1.oracle",
            "compiled interiors agree with the ball definitions point by point",
            Pass,
            region_point,
            |(a, x)| oracle_agrees(a, x, OracleMode::Interior),
        )
        .boxed(),
        Case::new(
            "D6.2.oracle",
            "compiled pseudo-interiors agree with the ball definitions point by point",
            Pass,
            region_point,
            |(a, x)| oracle_agrees(a, x, OracleMode::PseudoInterior),
        )
        .boxed(),
        Case::new("R6.1.a", "int(A) is inside the type-III interior", Pass, mixed_region, |a| {
            within("int", &int(a, Plain), &int(a, TypeIII))
        })
        .boxed(),
        Case::new("R6.1.b", "with O + O = O the type-I interior is inside the type-III one", Pass, mixed_region, |a| {
            within("int I", &int(a, TypeI), &int(a, TypeIII))
        })
        .boxed(),
        Case::new(
            "R6.1.c",
            "under the null equalities int is inside int I and int II inside int III",
            Pass,
            mixed_region,
            |a| {
                within("int", &int(a, Plain), &int(a, TypeI))?;
                within("int II", &int(a, TypeII), &int(a, TypeIII))
            },
        )
        .boxed(),
        Case::new(
            "R6.1.d",
            "with null decomposition int I is inside int and int III inside int II",
            Pass,
            mixed_region,
            |a| {
                within("int I", &int(a, TypeI), &int(a, Plain))?;
                within("int III", &int(a, TypeIII), &int(a, TypeII))
            },
        )
        .boxed(),
        Case::new("R6.1.e", "int = int I and int II = int III", Pass, mixed_region, |a| {
            same("int vs int I", &int(a, Plain), &int(a, TypeI))?;
            same("int II vs int III", &int(a, TypeII), &int(a, TypeIII))
        })
        .boxed(),
        Case::new(
            "E6.1.omega-sum",
            "O + O = O for closed intervals",
            Pass,
            |g| g.omega(),
            |w| {
                let o = omega_region();
                same("O + O", &o.upward_closure(), &o)?;
                let h = OmegaElement::new(w.k().half()).map_err(|e| format!("{e}"))?;
                ensure(h.add(&h) == *w, || format!("{h} + {h} != {w}"))
            },
        )
        .boxed(),
        Case::new(
            "R6.2",
            "with null decomposition the center lies in B + O",
            Pass,
            |g| g.ballspec(),
            |s| {
                let b = open_ball(s).upward_closure();
                ensure(b.member(s.center()), || format!("{} not in {s} + O", s.center()))
            },
        )
        .boxed(),
        Case::new("R6.3.a", "every interior is inside the matching pseudo-interior", Pass, mixed_region, |a| {
            for k in Kind::ALL {
                within(k.name(), &int(a, k), &pint(a, k))?;
            }
            Ok(())
        })
        .boxed(),
        Case::new("R6.3.b", "pint I is inside int, which is inside A", Pass, mixed_region, |a| {
            within("pint I", &pint(a, TypeI), &int(a, Plain))?;
            within("int", &int(a, Plain), a)
        })
        .boxed(),
        Case::new("R6.3.c", "if A + O is inside A then pint II is inside int", Pass, mixed_region, |a| {
            within("pint II", &pint(a, TypeII), &int(a, Plain))
        })
        .when(absorbs_null)
        .witnesses(|| vec![slab(0, 2, false)])
        .boxed(),
        Case::new("R6.3.d", "if A + O is inside A then pint III is inside int", Pass, mixed_region, |a| {
            within("pint III", &pint(a, TypeIII), &int(a, Plain))
        })
        .when(absorbs_null)
        .witnesses(|| vec![slab(0, 2, false)])
        .boxed(),
        Case::new(
            "R6.4.a",
            "an open set lies inside its pseudo-interior",
            Pass,
            |g| (open_mix(g), kind(g)),
            |(a, k)| within("A", a, &pint(a, *k)),
        )
        .when(|(a, k)| is_open(a, *k))
        .witnesses(|| vec![(slab(0, 2, false), TypeII)])
        .boxed(),
        Case::new(
            "R6.4.b",
            "the interior is the largest open subset",
            Pass,
            |g| {
                let o = g.open_region();
                let a = o.union(&g.region());
                (o, a, kind(g))
            },
            |(o, a, k)| {
                within("int", &int(a, *k), a)?;
                within("open subset", o, &int(a, *k))
            },
        )
        .when(|(o, a, k)| is_open(o, *k) && o.is_subset(a))
        .witnesses(|| vec![(slab(0, 2, false), slab(-1, 3, true), Plain)])
        .boxed(),
        extremes("R6.5.a", "the empty set and X are open and pseudo-open", Plain),
        extremes("R6.5.b", "the empty set and X are type-I open and pseudo-open", TypeI),
        extremes("R6.5.c", "with null decomposition X is type-II open and pseudo-open", TypeII),
        extremes("R6.5.d", "the empty set and X are type-III open and pseudo-open", TypeIII),
        Case::new(
            "P6.1.i",
            "for a pseudo-open A, a is in A exactly when a + w is",
            Pass,
            |g| {
                let (a, k) = pseudo_open_mix(g);
                let x = g.point_near(&a);
                (a, k, x, g.omega())
            },
            |(a, _, x, w)| {
                let xw = x.add(&w.to_interval());
                ensure(a.member(x) == a.member(&xw), || format!("{x} and {xw} disagree"))
            },
        )
        .when(|(a, k, _, _)| is_pseudo_open(a, *k))
        .witnesses(|| vec![(slab(0, 2, false), TypeII, iv(0, 2), w1())])
        .boxed(),
        Case::new(
            "P6.1.ii",
            "a pseudo-open A has A + O and A + w inside A, and a + w in A + w gives a in A",
            Pass,
            |g| {
                let (a, k) = pseudo_open_mix(g);
                let x = g.point_near(&a);
                (a, k, x, g.omega())
            },
            |(a, _, x, w)| {
                closed_under_null("A + O", a)?;
                let wi = w.to_interval();
                let aw = a.translate(&wi);
                within("A + w", &aw, a)?;
                ensure(!aw.member(&x.add(&wi)) || a.member(x), || format!("cancellation fails at {x}"))
            },
        )
        .when(|(a, k, _, _)| is_pseudo_open(a, *k))
        .witnesses(|| vec![(slab(0, 2, false), TypeIII, iv(0, 2), w1())])
        .boxed(),
        Case::new(
            "P6.1.iii.a",
            "a pseudo-open A satisfies A = A + O",
            Pass,
            pseudo_open_mix,
            |(a, _)| same("A + O", &a.upward_closure(), a),
        )
        .when(|(a, k)| is_pseudo_open(a, *k))
        .witnesses(|| vec![(slab(0, 2, false), TypeII)])
        .boxed(),
        Case::new(
            "P6.1.iii.b",
            "a pseudo-open A satisfies A = A + w; in this model only for w = 0",
            Conditional,
            |g| {
                let (a, k) = pseudo_open_mix(g);
                (a, k, g.omega())
            },
            |(a, _, w)| same("A + w", &a.translate(&w.to_interval()), a),
        )
        .when(|(a, k, w)| w.is_theta() && is_pseudo_open(a, *k))
        .witnesses(|| vec![(slab(0, 2, false), TypeII, OmegaElement::theta())])
        .boxed(),
        Case::new(
            "P6.2.i",
            "int I(A) + O is inside A, and a type-I open A has A + O inside A",
            Pass,
            mixed_region,
            |a| {
                within("int I + O", &int(a, TypeI).upward_closure(), a)?;
                if is_open(a, TypeI) {
                    closed_under_null("A + O", a)?;
                }
                Ok(())
            },
        )
        .boxed(),
        Case::new(
            "P6.2.ii",
            "int II(A) is inside A + O, and a type-II open A is inside A + O",
            Pass,
            open_mix,
            |a| {
                let ao = a.upward_closure();
                within("int II", &int(a, TypeII), &ao)?;
                within("A", a, &ao)
            },
        )
        .boxed(),
        Case::new(
            "P6.2.iii.a",
            "the complement of int II(A) is claimed to be closed under adding O",
            Fail,
            open_mix,
            |a| closed_under_null("complement of int II", &int(a, TypeII).complement()),
        )
        .witnesses(|| vec![stacked_boxes()])
        .boxed(),
        Case::new(
            "P6.2.iii.b",
            "the complement of a type-II open set is claimed to be closed under adding O",
            Fail,
            open_mix,
            |a| closed_under_null("complement", &a.complement()),
        )
        .when(|a| is_open(a, TypeII))
        .witnesses(|| vec![stacked_boxes()])
        .boxed(),
        Case::new(
            "P6.2.iv",
            "int(A) + O is inside A, and an open A has A + O inside A",
            Pass,
            open_mix,
            |a| {
                within("int + O", &int(a, Plain).upward_closure(), a)?;
                if is_open(a, Plain) {
                    closed_under_null("A + O", a)?;
                }
                Ok(())
            },
        )
        .boxed(),
        Case::new(
            "P6.2.v",
            "int III(A) is inside A + O, and a type-III open A is inside A + O",
            Pass,
            open_mix,
            |a| {
                let ao = a.upward_closure();
                within("int III", &int(a, TypeIII), &ao)?;
                within("A", a, &ao)
            },
        )
        .boxed(),
        Case::new(
            "P6.2.vi.a",
            "the complement of int III(A) is claimed to be closed under adding O",
            Fail,
            open_mix,
            |a| closed_under_null("complement of int III", &int(a, TypeIII).complement()),
        )
        .witnesses(|| vec![stacked_boxes()])
        .boxed(),
        Case::new(
            "P6.2.vi.b",
            "the complement of a type-III open set is claimed to be closed under adding O",
            Fail,
            open_mix,
            |a| closed_under_null("complement", &a.complement()),
        )
        .when(|a| is_open(a, TypeIII))
        .witnesses(|| vec![stacked_boxes()])
        .boxed(),
        Case::new("P6.3.i", "open implies type-III open", Pass, open_mix, |a| {
            let [o, _, _, iii] = lattice(a);
            implies("open => III", a, o, iii)
        })
        .boxed(),
        Case::new("P6.3.ii", "open implies type-I open, and type-II open implies type-III open", Pass, open_mix, |a| {
            let [o, i, ii, iii] = lattice(a);
            implies("open => I", a, o, i)?;
            implies("II => III", a, ii, iii)
        })
        .boxed(),
        Case::new("P6.3.iii", "with O + O = O, type-I open implies type-III open", Pass, open_mix, |a| {
            let [_, i, _, iii] = lattice(a);
            implies("I => III", a, i, iii)
        })
        .boxed(),
        Case::new("P6.3.iv", "type-I and type-II open together give open and type-III open", Pass, open_mix, |a| {
            let [o, i, ii, iii] = lattice(a);
            implies("I and II => open and III", a, i && ii, o && iii)
        })
        .boxed(),
        Case::new("P6.3.v", "open and type-III open together give type-I open", Pass, open_mix, |a| {
            let [o, i, _, iii] = lattice(a);
            implies("open and III => I", a, o && iii, i)
        })
        .boxed(),
        Case::new("P6.3.vi", "for an open set, type-I and type-III openness agree", Pass, open_mix, |a| {
            let [o, i, _, iii] = lattice(a);
            implies("open => (I <=> III)", a, o, i == iii)
        })
        .boxed(),
        Case::new("P6.3.vii", "open iff type-I open, and type-II open iff type-III open", Pass, open_mix, |a| {
            let [o, i, ii, iii] = lattice(a);
            implies("open <=> I and II <=> III", a, true, o == i && ii == iii)
        })
        .boxed(),
        Case::new("P6.3.viii", "open or type-I open gives all four kinds", Pass, open_mix, |a| {
            let [o, i, ii, iii] = lattice(a);
            implies("open or I => all", a, o || i, o && i && ii && iii)
        })
        .boxed(),
        Case::new(
            "P6.4",
            "an open set satisfies A = A + O",
            Pass,
            |g| (open_mix(g), *g.pick(&[Plain, TypeI])),
            |(a, _)| same("A + O", &a.upward_closure(), a),
        )
        .when(|(a, k)| is_open(a, *k))
        .witnesses(|| vec![(slab(0, 2, false), Plain)])
        .boxed(),
        Case::new("P6.5", "each interior is open of its own kind", Pass, |g| (mixed_region(g), kind(g)), |(a, k)| {
            let i = int(a, *k);
            same("int(int)", &int(&i, *k), &i)
        })
        .boxed(),
        Case::new("P6.6.i", "open balls are open and type-III open", Pass, |g| g.ballspec(), |s| {
            let b = open_ball(s);
            ensure(is_open(&b, Plain) && is_open(&b, TypeIII), || format!("{s} is not open"))
        })
        .boxed(),
        Case::new("P6.6.ii", "open balls are type-I open", Pass, |g| g.ballspec(), |s| {
            ensure(is_open(&open_ball(s), TypeI), || format!("{s} is not type-I open"))
        })
        .boxed(),
        Case::new("P6.6.iii", "open balls are type-II open", Pass, |g| g.ballspec(), |s| {
            ensure(is_open(&open_ball(s), TypeII), || format!("{s} is not type-II open"))
        })
        .witnesses(|| vec![BallSpec::new(Interval::int(0, 2), Rational::from_integer(1)).unwrap()])
        .boxed(),
    ]
}

fn extremes(id: &'static str, anchor: &'static str, k: Kind) -> Box<dyn AuditCase> {
    // The kind is fixed per case, so it travels with the sampled point.
    Case::new(id, anchor, Pass, move_gen(k), |(k, x)| {
        let (e, w) = (Region::empty(), Region::whole());
        for set in [&e, &w] {
            ensure(is_open(set, *k) && is_pseudo_open(set, *k), || format!("{set} is not {k}-open"))?;
        }
        ensure(oracle_point_check(&w, x, OracleMode::Interior, *k), || format!("{x} not interior to X"))?;
        ensure(oracle_point_check(&w, x, OracleMode::PseudoInterior, *k), || format!("{x} not pseudo-interior to X"))
    })
    .boxed()
}

fn move_gen(k: Kind) -> fn(&mut Gen) -> (Kind, Interval) {
    match k {
        Plain => |g| (Plain, g.local_interval()),
        TypeI => |g| (TypeI, g.local_interval()),
        TypeII => |g| (TypeII, g.local_interval()),
        TypeIII => |g| (TypeIII, g.local_interval()),
    }
}
