//! Open balls, their translates and their behaviour under the null set.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{ensure, iv, q, same, within};
use crate::audit::case::{AuditCase, Case, Expected::*};
use crate::audit::gen::Gen;
use crate::interval::{metric_d, owns_self_decomposition_wrt, Interval, OmegaElement};
use crate::numerics::{Piece, Rational};
use crate::region::Region;
use crate::topology::{closed_ball, omega_region, open_ball, sphere, BallSpec};

fn ball(c: &Interval, eps: &Rational) -> Region {
    open_ball(&BallSpec::new(c.clone(), eps.clone()).expect("positive radius"))
}

fn null_ball(w: &OmegaElement, eps: &Rational) -> Region {
    ball(&w.to_interval(), eps)
}

/// A ball spec, a shift and a probe point.
fn spec_shift(g: &mut Gen) -> (BallSpec, Interval, Interval) {
    let s = g.ballspec();
    (s, g.local_interval(), g.local_interval())
}

fn spec_omega(g: &mut Gen) -> (BallSpec, OmegaElement) {
    (g.ballspec(), g.omega())
}

fn spec(c: Interval, eps: i64) -> BallSpec {
    BallSpec::new(c, q(eps)).expect("positive radius")
}

fn w(k: i64) -> OmegaElement {
    OmegaElement::new(q(k)).expect("nonnegative half-width")
}

fn omega_eps(g: &mut Gen) -> (OmegaElement, Rational) {
    let eps = g.ballspec().epsilon().clone();
    (g.omega(), eps)
}

/// The strip `|m - m0| < eps/2` (or `<=`) over every radius.
fn strip(center: &Interval, eps: &Rational, closed: bool) -> Region {
    let (m, h) = (center.midpoint(), eps.half());
    let p = if closed { Piece::closed(&m - &h, &m + &h) } else { Piece::open(&m - &h, &m + &h) };
    Region::columns_over(&crate::numerics::MSet::from_piece(p))
}

pub(super) fn cases() -> Vec<Box<dyn AuditCase>> {
    vec![
        Case::new(
            "D5.ball-shapes",
            "balls are the strips d(x,x0) < eps and <= eps, spheres the two edge columns",
            Pass,
            |g| {
                let s = g.ballspec();
                let x = g.point_near(&open_ball(&s));
                (s, x)
            },
            |(s, x)| {
                let (c, e) = (s.center(), s.epsilon());
                same("open ball", &open_ball(s), &strip(c, e, false))?;
                same("closed ball", &closed_ball(s), &strip(c, e, true))?;
                let d = metric_d(x, c);
                let sp = sphere(c, e).map_err(|err| format!("{err}"))?;
                ensure(open_ball(s).member(x) == (&d < e), || format!("open ball membership of {x}, d = {d}"))?;
                ensure(closed_ball(s).member(x) == (&d <= e), || format!("closed ball membership of {x}, d = {d}"))?;
                ensure(sp.member(x) == (&d == e), || format!("sphere membership of {x}, d = {d}"))
            },
        )
        .boxed(),
        Case::new(
            "P5.1.i",
            "x + w in a ball puts x in the ball",
            Pass,
            |g| {
                let s = g.ballspec();
                (s, g.local_interval(), g.omega())
            },
            |(s, x, _)| ensure(open_ball(s).member(x), || format!("{x} not in {s}")),
        )
        .when(|(s, x, w)| open_ball(s).member(&x.add(&w.to_interval())))
        .witnesses(|| vec![(spec(iv(0, 2), 2), iv(0, 2), w(1))])
        .boxed(),
        Case::new(
            "P5.1.ii",
            "x + w is in a ball exactly when x is, and B + O is inside B",
            Pass,
            |g| {
                let s = g.ballspec();
                (s, g.local_interval(), g.omega())
            },
            |(s, x, w)| {
                let b = open_ball(s);
                let xw = x.add(&w.to_interval());
                ensure(b.member(&xw) == b.member(x), || format!("{x} and {xw} disagree on {s}"))?;
                within("B + O", &b.upward_closure(), &b)
            },
        )
        .boxed(),
        Case::new("P5.2.i", "B(x0 + w; eps) is inside B(x0; eps)", Pass, spec_omega, |(s, w)| {
            let shifted = ball(&s.center().add(&w.to_interval()), s.epsilon());
            within("shifted ball", &shifted, &open_ball(s))
        })
        .boxed(),
        Case::new("P5.ball-omega-eq", "B(x0 + w; eps) = B(x0; eps)", Pass, spec_omega, |(s, w)| {
            let shifted = ball(&s.center().add(&w.to_interval()), s.epsilon());
            same("shifted ball", &shifted, &open_ball(s))
        })
        .boxed(),
        Case::new("P5.3.i", "B is inside B + O", Pass, |g| g.ballspec(), |s| {
            let b = open_ball(s);
            within("ball", &b, &b.upward_closure())
        })
        .boxed(),
        Case::new("P5.3.ii", "B + O = B", Pass, |g| g.ballspec(), |s| {
            let b = open_ball(s);
            same("B + O", &b.upward_closure(), &b)
        })
        .boxed(),
        Case::new("P5.4.i.a", "B(x; eps) + xh is inside B(x + xh; eps)", Pass, spec_shift, |(s, xh, _)| {
            let lhs = open_ball(s).translate(xh);
            within("translated ball", &lhs, &ball(&s.center().add(xh), s.epsilon()))
        })
        .boxed(),
        Case::new(
            "P5.4.i.b",
            "B(x; eps) + wx is inside x + B(wx; eps) where wx = x - x",
            Pass,
            |g| g.ballspec(),
            |s| {
                let x = s.center();
                let wx = x.sub(x);
                let lhs = open_ball(s).translate(&wx);
                let rhs = ball(&wx, s.epsilon()).translate(x);
                within("B(x) + wx", &lhs, &rhs)
            },
        )
        .boxed(),
        Case::new("P5.4.ii.a", "B(x; eps) + w is inside B(x; eps)", Pass, spec_omega, |(s, w)| {
            within("B + w", &open_ball(s).translate(&w.to_interval()), &open_ball(s))
        })
        .boxed(),
        Case::new(
            "P5.4.ii.b",
            "B(w; eps) + xh is inside B(xh; eps)",
            Pass,
            |g| {
                let (w, e) = omega_eps(g);
                (w, e, g.local_interval())
            },
            |(w, e, xh)| within("B(w) + xh", &null_ball(w, e).translate(xh), &ball(xh, e)),
        )
        .boxed(),
        Case::new(
            "P5.4.ii.c",
            "B(x + xh; eps) + wxh is inside B(x; eps) + xh",
            Pass,
            spec_shift,
            |(s, xh, _)| {
                let w = xh.sub(xh);
                let lhs = ball(&s.center().add(xh), s.epsilon()).translate(&w);
                within("B(x + xh) + wxh", &lhs, &open_ball(s).translate(xh))
            },
        )
        .boxed(),
        Case::new(
            "P5.4.iii",
            "B(x + xh; eps) = B(x; eps) + xh; in this model only when xh is degenerate",
            Conditional,
            spec_shift,
            |(s, xh, _)| {
                let lhs = ball(&s.center().add(xh), s.epsilon());
                same("B(x + xh) vs B(x) + xh", &lhs, &open_ball(s).translate(xh))
            },
        )
        .when(|(_, xh, _)| xh.is_degenerate())
        .witnesses(|| vec![(spec(iv(0, 2), 2), iv(1, 1), iv(0, 0))])
        .boxed(),
        Case::new(
            "P5.4.iv.a",
            "B(x; eps) + w = B(x; eps); in this model only for w = 0",
            Conditional,
            spec_omega,
            |(s, w)| same("B + w", &open_ball(s).translate(&w.to_interval()), &open_ball(s)),
        )
        .when(|(_, w)| w.is_theta())
        .witnesses(|| vec![(spec(iv(0, 2), 2), OmegaElement::theta())])
        .boxed(),
        Case::new(
            "P5.4.iv.b",
            "B(w; eps) + xh = B(xh; eps); in this model only for degenerate xh",
            Conditional,
            |g| {
                let (w, e) = omega_eps(g);
                (w, e, g.local_interval())
            },
            |(w, e, xh)| same("B(w) + xh", &null_ball(w, e).translate(xh), &ball(xh, e)),
        )
        .when(|(_, _, xh)| xh.is_degenerate())
        .witnesses(|| vec![(w(1), q(2), iv(3, 3))])
        .boxed(),
        Case::new(
            "P5.5",
            "B + w0 = B + O when the null set splits against w0",
            Conditional,
            spec_omega,
            |(s, w0)| {
                let b = open_ball(s);
                same("B + w0 vs B + O", &b.translate(&w0.to_interval()), &b.upward_closure())
            },
        )
        .when(|(_, w0)| owns_self_decomposition_wrt(w0))
        .witnesses(|| vec![(spec(iv(0, 2), 2), OmegaElement::theta())])
        .boxed(),
        Case::new(
            "P5.6",
            "every null element is at distance zero from w, so O is inside B(w; eps)",
            Pass,
            |g| {
                let (w, e) = omega_eps(g);
                (w, e, g.omega())
            },
            |(w, e, v)| {
                ensure(metric_d(&v.to_interval(), &w.to_interval()).is_zero(), || format!("d({v}, {w}) != 0"))?;
                within("O", &omega_region(), &null_ball(w, e))
            },
        )
        .boxed(),
        Case::new(
            "P5.7",
            "a B(w; eps) = B(w; |a| eps) for a != 0",
            Pass,
            |g| {
                let (w, e) = omega_eps(g);
                (w, e, g.scalar())
            },
            |(w, e, a)| same("scaled ball", &null_ball(w, e).scale(a), &null_ball(w, &(a.abs() * e))),
        )
        .when(|(_, _, a)| !a.is_zero())
        .witnesses(|| vec![(w(1), q(2), Rational::new(-1, 2))])
        .boxed(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    
    #[test]
    fn translated_ball_sits_above_the_shift_radius() {
        let s = BallSpec::new(iv(0, 2), q(2)).unwrap();
        let t = open_ball(&s).translate(&iv(-1, 1));
        assert!(!t.member(&iv(1, 1)));
        assert!(t.member(&iv(0, 2)));
    }
}
