//! Direct decision of interior and closure points from the ball definitions.
//!
//! Both ball conditions are monotone in `ε` and `A` is constant between its
//! `m`-breakpoints, so testing `ε` in `{|m_x − b|} ∪ {|m_x − b|/2} ∪ {1}`
//! decides the quantifier exactly.

use alloc::vec::Vec;

use super::{open_ball, BallSpec, Kind};
use crate::interval::Interval;
use crate::numerics::Rational;
use crate::region::Region;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OracleMode {
    Interior,
    PseudoInterior,
    Closure,
}

/// The finite set of radii that decides every ball quantifier at `x`.
pub fn epsilon_candidates(a: &Region, x: &Interval) -> Vec<Rational> {
    let m = x.midpoint();
    let mut eps = alloc::vec![Rational::one()];
    for b in a.breakpoints() {
        let dist = (&m - &b).abs();
        if dist.is_positive() {
            eps.push(dist.half());
            eps.push(dist);
        }
    }
    eps.sort();
    eps.dedup();
    eps
}

pub fn oracle_point_check(a: &Region, x: &Interval, mode: OracleMode, kind: Kind) -> bool {
    let target = if kind.saturates_set() { a.upward_closure() } else { a.clone() };
    let ball = |eps: &Rational| {
        let b = open_ball(&BallSpec::new(x.clone(), eps.clone()).expect("candidate radii are positive"));
        if kind.saturates_ball() { b.upward_closure() } else { b }
    };
    let eps = epsilon_candidates(a, x);
    match mode {
        OracleMode::Interior => a.member(x) && eps.iter().any(|e| ball(e).is_subset(&target)),
        OracleMode::PseudoInterior => eps.iter().any(|e| ball(e).is_subset(&target)),
        OracleMode::Closure => a.member(x) || eps.iter().all(|e| ball(e).meets(&target)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Piece;
    use crate::region::Rect;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn truncated_box_examples() {
        let a = Region::from_rect(Rect::new(Piece::closed(q(0), q(2)), Piece::closed(q(0), q(1))).unwrap());
        let x = Interval::from_midrad(&q(1), &Rational::new(1, 2)).unwrap();
        assert!(oracle_point_check(&a, &x, OracleMode::Interior, Kind::TypeII));
        assert!(!oracle_point_check(&a, &x, OracleMode::Interior, Kind::Plain));
        for k in Kind::ALL {
            assert!(oracle_point_check(&a, &x, OracleMode::Closure, k));
        }
    }
}
