//! Balls, the four interiors and closures, openness and the candidate topologies.
//!
//! Every open ball `B(x₀;ε) = {x : d(x,x₀) < ε}` is the full vertical strip
//! `|m − m₀| < ε/2`, so `B ⊕ Ω = B`. With `T = A` (plain, type I) or
//! `T = A ⊕ Ω` (types II, III), a point is an interior point iff its
//! column lies in the interior of `full_columns(T)`; closure points are the
//! columns over the closure of `project_m(A)`. [`oracle`] decides the same
//! predicates directly from the ball definitions.

mod family;
pub mod oracle;

pub use family::{family_check, CheckResult, FamilyClass, TopologyReport};
pub use oracle::{oracle_point_check, OracleMode};

use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

use crate::interval::Interval;
use crate::numerics::{MSet, Piece, Rational};
use crate::region::Region;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Plain,
    TypeI,
    TypeII,
    TypeIII,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::Plain, Kind::TypeI, Kind::TypeII, Kind::TypeIII];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Plain => "plain",
            Kind::TypeI => "I",
            Kind::TypeII => "II",
            Kind::TypeIII => "III",
        }
    }

    /// Whether the kind attaches `⊕Ω` to the ball.
    pub fn saturates_ball(self) -> bool {
        matches!(self, Kind::TypeI | Kind::TypeIII)
    }

    /// Whether the kind attaches `⊕Ω` to the set.
    pub fn saturates_set(self) -> bool {
        matches!(self, Kind::TypeII | Kind::TypeIII)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Kind, Error> {
        match s {
            "plain" | "Plain" | "0" => Ok(Kind::Plain),
            "I" | "i" | "1" => Ok(Kind::TypeI),
            "II" | "ii" | "2" => Ok(Kind::TypeII),
            "III" | "iii" | "3" => Ok(Kind::TypeIII),
            _ => Err(Error::Unknown { what: "kind", value: s.to_string() }),
        }
    }
}

/// Centre and radius of a ball, `ε > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BallSpec {
    center: Interval,
    epsilon: Rational,
}

impl BallSpec {
    pub fn new(center: Interval, epsilon: Rational) -> Result<BallSpec, Error> {
        if !epsilon.is_positive() {
            return Err(Error::NonPositiveEpsilon(epsilon.to_string()));
        }
        Ok(BallSpec { center, epsilon })
    }

    pub fn center(&self) -> &Interval {
        &self.center
    }

    pub fn epsilon(&self) -> &Rational {
        &self.epsilon
    }

    fn strip(&self, closed: bool) -> Piece {
        let (m, h) = (self.center.midpoint(), self.epsilon.half());
        let mut p = Piece::closed(&m - &h, &m + &h);
        p.lo_closed = closed;
        p.hi_closed = closed;
        p
    }
}

impl fmt::Display for BallSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({};{})", self.center, self.epsilon)
    }
}

/// `{x : d(x, x₀) < ε}`.
pub fn open_ball(spec: &BallSpec) -> Region {
    Region::columns_over(&MSet::from_piece(spec.strip(false)))
}

/// `{x : d(x, x₀) <= ε}`.
pub fn closed_ball(spec: &BallSpec) -> Region {
    Region::columns_over(&MSet::from_piece(spec.strip(true)))
}

/// `{x : d(x, x₀) = ε}` for `ε >= 0`.
pub fn sphere(center: &Interval, epsilon: &Rational) -> Result<Region, Error> {
    if epsilon.is_negative() {
        return Err(Error::NegativeEpsilon(epsilon.to_string()));
    }
    let (m, h) = (center.midpoint(), epsilon.half());
    let ms = MSet::from_piece(Piece::point(&m - &h)).union(&MSet::from_piece(Piece::point(&m + &h)));
    Ok(Region::columns_over(&ms))
}

/// The null set `Ω` as a region: the column `m = 0`.
pub fn omega_region() -> Region {
    Region::columns_over(&MSet::from_piece(Piece::point(Rational::zero())))
}

/// Interior (`pseudo = false`) or pseudo-interior of the given kind.
pub fn interior_of(a: &Region, kind: Kind, pseudo: bool) -> Region {
    let t = if kind.saturates_set() { a.upward_closure() } else { a.clone() };
    let cols = Region::columns_over(&t.full_columns().interior());
    if pseudo {
        cols
    } else {
        cols.intersect(a)
    }
}

/// Closure of the given kind. All four coincide in this model.
pub fn closure_of(a: &Region, _kind: Kind) -> Region {
    a.union(&Region::columns_over(&a.project_m().closure()))
}

pub fn is_open(a: &Region, kind: Kind) -> bool {
    &interior_of(a, kind, false) == a
}

pub fn is_pseudo_open(a: &Region, kind: Kind) -> bool {
    &interior_of(a, kind, true) == a
}

pub fn is_closed(a: &Region, kind: Kind) -> bool {
    &closure_of(a, kind) == a
}

/// First clause of the membership filter: `A ⊕ Ω ⊆ A`. The second clause
/// (`a⊕ω ∈ A⊕ω ⇒ a ∈ A`) always holds because `x ↦ x⊕ω` is injective.
pub fn absorbs_null(a: &Region) -> bool {
    a.upward_closure().is_subset(a)
}
