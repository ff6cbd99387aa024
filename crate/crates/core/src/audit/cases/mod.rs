//! The case catalogue, one module per part of the theory.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::case::{AuditCase, Verdict};
use super::gen::Gen;
use crate::interval::{law_check, LawId, LawSample};
use crate::interval::Interval;
use crate::numerics::{Piece, Rational};
use crate::region::{Rect, Region};
use crate::topology::{closed_ball, closure_of, interior_of, open_ball, Kind};

mod algebra;
mod balls;
mod closed;
mod metric;
mod open;
mod topology;

pub(super) fn all() -> Vec<Box<dyn AuditCase>> {
    let mut v = algebra::cases();
    v.extend(metric::cases());
    v.extend(balls::cases());
    v.extend(open::cases());
    v.extend(closed::cases());
    v.extend(topology::cases());
    v
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Verdict {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn law(id: LawId, sample: LawSample) -> Verdict {
    match law_check(id, &sample) {
        Ok(o) if o.holds => Ok(()),
        Ok(o) => {
            let show = |v: &[crate::interval::LawValue]| {
                v.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(", ")
            };
            Err(format!("{id}: lhs ({}) vs rhs ({})", show(&o.lhs), show(&o.rhs)))
        }
        Err(e) => Err(format!("{id}: {e}")),
    }
}

/// Exact region equality.
fn same(what: &str, got: &Region, want: &Region) -> Verdict {
    ensure(got == want, || format!("{what}: {got} != {want}"))
}

/// `a ⊆ b`, reporting the excess.
fn within(what: &str, a: &Region, b: &Region) -> Verdict {
    ensure(a.is_subset(b), || format!("{what}: {a} not within {b}; excess {}", a.difference(b)))
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn iv(a: i64, b: i64) -> Interval {
    Interval::int(a, b)
}

fn rect(m: Piece, r: Piece) -> Region {
    Region::from_rect(Rect::new(m, r).expect("valid box"))
}

/// Full columns over the `m`-interval `(a, b)`, or `[a, b]` when `closed`.
fn slab(a: i64, b: i64, closed: bool) -> Region {
    let p = if closed { Piece::closed(q(a), q(b)) } else { Piece::open(q(a), q(b)) };
    Region::columns_over(&crate::numerics::MSet::from_piece(p))
}

fn kind(g: &mut Gen) -> Kind {
    *g.pick(&Kind::ALL)
}

/// A region drawn from a mix of shapes so that open, closed and
/// upward-closed sets all turn up regularly.
fn mixed_region(g: &mut Gen) -> Region {
    match g.below(8) {
        0 | 1 => g.open_region(),
        2 => g.region().upward_closure(),
        3 => {
            let k = kind(g);
            interior_of(&g.region(), k, g.coin())
        }
        4 => closure_of(&g.region(), Kind::Plain),
        5 => {
            let s = g.ballspec();
            if g.coin() {
                open_ball(&s)
            } else {
                closed_ball(&s)
            }
        }
        _ => g.region(),
    }
}

/// A region together with a point biased towards its boundary.
fn region_point(g: &mut Gen) -> (Region, Interval) {
    let a = mixed_region(g);
    let x = g.point_near(&a);
    (a, x)
}
