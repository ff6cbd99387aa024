//! Sets of intervals as regions of the midpoint–radius half-plane.
//!
//! A region is stored as vertical bands: a partition of the `m`-axis into
//! maximal pieces on which the column `{r : (m,r) ∈ A}` is constant and
//! non-empty. That form is unique, so derived equality is set equality.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::interval::Interval;
use crate::numerics::{ExtReal, MSet, Piece, Rational};
use crate::Error;

/// A point `(m, r)` of the half-plane, `r >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MidRad {
    pub m: Rational,
    pub r: Rational,
}

pub fn to_midrad(x: &Interval) -> MidRad {
    MidRad { m: x.midpoint(), r: x.radius() }
}

pub fn from_midrad(p: &MidRad) -> Result<Interval, Error> {
    Interval::from_midrad(&p.m, &p.r)
}

/// A generalized box `m_range × r_range` with `r_range ⊆ [0, inf)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rect {
    pub m: Piece,
    pub r: Piece,
}

impl Rect {
    pub fn new(m: Piece, r: Piece) -> Result<Rect, Error> {
        let m = Piece::new(m.lo, m.lo_closed, m.hi, m.hi_closed)?;
        let r = Piece::new(r.lo, r.lo_closed, r.hi, r.hi_closed)?;
        if r.lo < ExtReal::Finite(Rational::zero()) {
            return Err(Error::NegativeRadius(format!("{r}")));
        }
        Ok(Rect { m, r })
    }

    /// `m_range × [0, inf)`.
    pub fn column(m: Piece) -> Rect {
        Rect { m, r: Piece::half_line() }
    }

    pub fn contains(&self, p: &MidRad) -> bool {
        self.m.contains(&p.m) && self.r.contains(&p.r)
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{} x r{}", self.m, self.r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Band {
    pub m: Piece,
    pub column: MSet,
}

/// A canonical finite union of boxes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Region {
    bands: Vec<Band>,
}

/// The elementary cells cut out by sorted breakpoints, in order, each with
/// a sample point: `(-inf,b0), [b0], (b0,b1), [b1], ..., (bn,inf)`.
fn cells(bps: &[Rational]) -> Vec<(Piece, Rational)> {
    let one = Rational::one();
    if bps.is_empty() {
        return alloc::vec![(Piece::full(), Rational::zero())];
    }
    let mut out = Vec::with_capacity(2 * bps.len() + 1);
    let first = &bps[0];
    out.push((
        Piece { lo: ExtReal::NegInf, lo_closed: false, hi: first.clone().into(), hi_closed: false },
        first - &one,
    ));
    for (i, b) in bps.iter().enumerate() {
        out.push((Piece::point(b.clone()), b.clone()));
        match bps.get(i + 1) {
            Some(n) => out.push((Piece::open(b.clone(), n.clone()), (b + n).half())),
            None => out.push((
                Piece { lo: b.clone().into(), lo_closed: false, hi: ExtReal::PosInf, hi_closed: false },
                b + &one,
            )),
        }
    }
    out
}

fn merged_breakpoints(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut v: Vec<Rational> = a.iter().chain(b.iter()).cloned().collect();
    v.sort();
    v.dedup();
    v
}

impl Region {
    pub fn empty() -> Region {
        Region { bands: Vec::new() }
    }

    /// The whole space `X`: every `m`, every `r >= 0`.
    pub fn whole() -> Region {
        Region::columns_over(&MSet::full())
    }

    /// `{(m, r) : m ∈ ms, r >= 0}`.
    pub fn columns_over(ms: &MSet) -> Region {
        Region {
            bands: ms.pieces().iter().map(|p| Band { m: p.clone(), column: MSet::half_line() }).collect(),
        }
    }

    pub fn point(p: &MidRad) -> Region {
        Region {
            bands: alloc::vec![Band { m: Piece::point(p.m.clone()), column: MSet::from_piece(Piece::point(p.r.clone())) }],
        }
    }

    pub fn singleton(x: &Interval) -> Region {
        Region::point(&to_midrad(x))
    }

    pub fn from_rect(b: Rect) -> Region {
        Region::from_rects(alloc::vec![b])
    }

    /// Canonical union of already validated boxes.
    pub fn from_rects(rects: Vec<Rect>) -> Region {
        let mut bps = Vec::new();
        for b in &rects {
            for e in [&b.m.lo, &b.m.hi] {
                if let ExtReal::Finite(q) = e {
                    bps.push(q.clone());
                }
            }
        }
        bps.sort();
        bps.dedup();
        Region::tabulate(&bps, |m| {
            let pieces = rects.iter().filter(|b| b.m.contains(m)).map(|b| b.r.clone()).collect();
            MSet::from_raw(pieces)
        })
    }

    /// Builds the canonical form of `m ↦ f(m)`, assuming `f` is constant on
    /// every cell of `bps`.
    fn tabulate(bps: &[Rational], f: impl Fn(&Rational) -> MSet) -> Region {
        let mut bands: Vec<Band> = Vec::new();
        let mut open: Option<Band> = None;
        for (cell, sample) in cells(bps) {
            let col = f(&sample);
            match open.as_mut() {
                Some(b) if b.column == col => {
                    b.m.hi = cell.hi;
                    b.m.hi_closed = cell.hi_closed;
                    continue;
                }
                _ => {}
            }
            bands.extend(open.take());
            if !col.is_empty() {
                open = Some(Band { m: cell, column: col });
            }
        }
        bands.extend(open);
        Region { bands }
    }

    pub fn bands(&self) -> &[Band] {
        &self.bands
    }

    pub fn is_empty(&self) -> bool {
        self.bands.is_empty()
    }

    /// One box per band and column piece; their union is `self`.
    pub fn rects(&self) -> Vec<Rect> {
        self.bands
            .iter()
            .flat_map(|b| b.column.pieces().iter().map(move |r| Rect { m: b.m.clone(), r: r.clone() }))
            .collect()
    }

    /// Finite `m`-endpoints of the bands, sorted.
    pub fn breakpoints(&self) -> Vec<Rational> {
        let mut v = Vec::with_capacity(2 * self.bands.len());
        for b in &self.bands {
            for e in [&b.m.lo, &b.m.hi] {
                if let ExtReal::Finite(q) = e {
                    v.push(q.clone());
                }
            }
        }
        v.dedup();
        v
    }

    /// The column `{r : (m, r) ∈ self}`.
    pub fn column_at(&self, m: &Rational) -> MSet {
        self.bands.iter().find(|b| b.m.contains(m)).map(|b| b.column.clone()).unwrap_or_default()
    }

    pub fn contains(&self, p: &MidRad) -> bool {
        self.bands.iter().any(|b| b.m.contains(&p.m) && b.column.contains(&p.r))
    }

    pub fn member(&self, x: &Interval) -> bool {
        self.contains(&to_midrad(x))
    }

    fn combine(&self, other: &Region, op: impl Fn(&MSet, &MSet) -> MSet) -> Region {
        let bps = merged_breakpoints(&self.breakpoints(), &other.breakpoints());
        Region::tabulate(&bps, |m| op(&self.column_at(m), &other.column_at(m)))
    }

    pub fn union(&self, other: &Region) -> Region {
        self.combine(other, MSet::union)
    }

    pub fn intersect(&self, other: &Region) -> Region {
        self.combine(other, MSet::intersect)
    }

    pub fn difference(&self, other: &Region) -> Region {
        self.combine(other, MSet::difference)
    }

    /// Complement in the half-plane `r >= 0`.
    pub fn complement(&self) -> Region {
        Region::tabulate(&self.breakpoints(), |m| self.column_at(m).complement_in_half_line())
    }

    pub fn is_subset(&self, other: &Region) -> bool {
        self.difference(other).is_empty()
    }

    pub fn meets(&self, other: &Region) -> bool {
        !self.intersect(other).is_empty()
    }

    /// `A ⊕ Ω = {(m, r + k) : (m, r) ∈ A, k >= 0}`.
    pub fn upward_closure(&self) -> Region {
        Region::tabulate(&self.breakpoints(), |m| self.column_at(m).upward())
    }

    /// `A ⊕ x̂`: shifts `m` by `m_x̂` and `r` by `r_x̂`.
    pub fn translate(&self, xhat: &Interval) -> Region {
        let MidRad { m, r } = to_midrad(xhat);
        Region {
            bands: self.bands.iter().map(|b| Band { m: b.m.shift(&m), column: b.column.shift(&r) }).collect(),
        }
    }

    /// `αA = {(αm, |α|r)}`; for `α = 0` a non-empty region collapses to `(0,0)`.
    pub fn scale(&self, alpha: &Rational) -> Region {
        if alpha.is_zero() {
            if self.is_empty() {
                return Region::empty();
            }
            return Region::point(&MidRad { m: Rational::zero(), r: Rational::zero() });
        }
        let abs = alpha.abs();
        let mut bands: Vec<Band> =
            self.bands.iter().map(|b| Band { m: b.m.scale(alpha), column: b.column.scale(&abs) }).collect();
        if alpha.is_negative() {
            bands.reverse();
        }
        Region { bands }
    }

    /// `{m : {m} × [0, inf) ⊆ A}`.
    pub fn full_columns(&self) -> MSet {
        let half = MSet::half_line();
        MSet::from_raw(self.bands.iter().filter(|b| b.column == half).map(|b| b.m.clone()).collect())
    }

    /// `{m : (m, r) ∈ A for some r}`.
    pub fn project_m(&self) -> MSet {
        MSet::from_raw(self.bands.iter().map(|b| b.m.clone()).collect())
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bands.is_empty() {
            return f.write_str("{}");
        }
        for (i, b) in self.bands.iter().enumerate() {
            if i > 0 {
                f.write_str(" ; ")?;
            }
            write!(f, "m{} r{}", b.m, b.column)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn rect(m: Piece, r: Piece) -> Region {
        Region::from_rect(Rect::new(m, r).unwrap())
    }

    #[test]
    fn midrad_round_trip() {
        let p = to_midrad(&Interval::int(1, 5));
        assert_eq!(p, MidRad { m: q(3), r: q(2) });
        assert_eq!(from_midrad(&MidRad { m: q(0), r: q(3) }).unwrap(), Interval::int(-3, 3));
        assert!(from_midrad(&MidRad { m: q(0), r: q(-1) }).is_err());
    }

    #[test]
    fn membership_respects_flags() {
        let a = rect(Piece::closed(q(0), q(2)), Piece::half_line());
        assert!(a.member(&Interval::int(0, 2)));
        assert!(!a.member(&Interval::int(3, 3)));
        let b = rect(Piece::open(q(0), q(2)), Piece::half_line());
        assert!(!b.member(&Interval::zero()));
    }

    #[test]
    fn strip_complement() {
        let a = rect(Piece::open(q(2), q(4)), Piece::half_line());
        let expect = Region::columns_over(&MSet::from_piece(Piece::open(q(2), q(4))).complement());
        assert_eq!(a.complement(), expect);
        assert!(a.intersect(&a.complement()).is_empty());
    }

    #[test]
    fn overlapping_boxes_canonicalize() {
        let a = Region::from_rects(alloc::vec![
            Rect::new(Piece::closed(q(0), q(2)), Piece::closed(q(0), q(1))).unwrap(),
            Rect::new(Piece::closed(q(1), q(3)), Piece::closed(q(0), q(1))).unwrap(),
        ]);
        assert_eq!(a, rect(Piece::closed(q(0), q(3)), Piece::closed(q(0), q(1))));
    }

    #[test]
    fn columns_and_projection() {
        let a = Region::from_rects(alloc::vec![
            Rect::column(Piece::closed(q(0), q(2))),
            Rect::new(Piece::closed(q(2), q(5)), Piece::from(q(1), true)).unwrap(),
        ]);
        assert_eq!(a.full_columns(), MSet::from_piece(Piece::closed(q(0), q(2))));
        assert_eq!(a.project_m(), MSet::from_piece(Piece::closed(q(0), q(5))));
        let b = rect(Piece::closed(q(0), q(1)), Piece::from(q(0), false));
        assert!(b.full_columns().is_empty());
    }

    #[test]
    fn upward_translate_scale() {
        let a = rect(Piece::closed(q(0), q(1)), Piece::closed(q(1), q(2)));
        assert_eq!(a.upward_closure(), rect(Piece::closed(q(0), q(1)), Piece::from(q(1), true)));
        let s = Region::columns_over(&MSet::from_piece(Piece::closed(q(0), q(1))));
        assert_eq!(
            s.translate(&Interval::int(1, 3)),
            rect(Piece::closed(q(2), q(3)), Piece::from(q(1), true))
        );
        let t = rect(Piece::open(q(0), q(1)), Piece::closed(q(0), q(2)));
        assert_eq!(t.scale(&q(-1)), rect(Piece::open(q(-1), q(0)), Piece::closed(q(0), q(2))));
        assert_eq!(t.scale(&q(0)), Region::singleton(&Interval::zero()));
    }
}
