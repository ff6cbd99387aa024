use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::{ExtReal, Rational};
use crate::Error;

/// An interval of the extended real line with independent end flags.
///
/// Infinite ends are always open. A piece built through [`Piece::new`] is
/// never empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Piece {
    pub lo: ExtReal,
    pub lo_closed: bool,
    pub hi: ExtReal,
    pub hi_closed: bool,
}

impl Piece {
    /// Validating constructor. Rejects `lo > hi`, `lo = hi` with an open
    /// end, and closed infinite ends.
    pub fn new(lo: ExtReal, lo_closed: bool, hi: ExtReal, hi_closed: bool) -> Result<Piece, Error> {
        let p = Piece { lo, lo_closed, hi, hi_closed };
        if (p.lo_closed && !p.lo.is_finite()) || (p.hi_closed && !p.hi.is_finite()) {
            return Err(Error::MalformedPiece(format!("{p} has a closed infinite end")));
        }
        match p.lo.cmp(&p.hi) {
            Ordering::Greater => Err(Error::MalformedPiece(format!("{p} has lo > hi"))),
            Ordering::Equal if !(p.lo_closed && p.hi_closed) => {
                Err(Error::MalformedPiece(format!("{p} is degenerate with an open end")))
            }
            _ => Ok(p),
        }
    }

    pub fn closed(a: Rational, b: Rational) -> Piece {
        Piece { lo: a.into(), lo_closed: true, hi: b.into(), hi_closed: true }
    }

    pub fn open(a: Rational, b: Rational) -> Piece {
        Piece { lo: a.into(), lo_closed: false, hi: b.into(), hi_closed: false }
    }

    pub fn point(a: Rational) -> Piece {
        Piece::closed(a.clone(), a)
    }

    pub fn full() -> Piece {
        Piece { lo: ExtReal::NegInf, lo_closed: false, hi: ExtReal::PosInf, hi_closed: false }
    }

    /// `[a, inf)` or `(a, inf)`.
    pub fn from(a: Rational, closed: bool) -> Piece {
        Piece { lo: a.into(), lo_closed: closed, hi: ExtReal::PosInf, hi_closed: false }
    }

    /// `[0, inf)`.
    pub fn half_line() -> Piece {
        Piece::from(Rational::zero(), true)
    }

    pub fn is_empty(&self) -> bool {
        match self.lo.cmp(&self.hi) {
            Ordering::Less => false,
            Ordering::Equal => !(self.lo_closed && self.hi_closed && self.lo.is_finite()),
            Ordering::Greater => true,
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let x = ExtReal::Finite(x.clone());
        let above = match self.lo.cmp(&x) {
            Ordering::Less => true,
            Ordering::Equal => self.lo_closed,
            Ordering::Greater => false,
        };
        let below = match x.cmp(&self.hi) {
            Ordering::Less => true,
            Ordering::Equal => self.hi_closed,
            Ordering::Greater => false,
        };
        above && below
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    fn intersect(&self, other: &Piece) -> Piece {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            Ordering::Less => (other.lo.clone(), other.lo_closed),
            Ordering::Greater => (self.lo.clone(), self.lo_closed),
            Ordering::Equal => (self.lo.clone(), self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            Ordering::Less => (self.hi.clone(), self.hi_closed),
            Ordering::Greater => (other.hi.clone(), other.hi_closed),
            Ordering::Equal => (self.hi.clone(), self.hi_closed && other.hi_closed),
        };
        Piece { lo, lo_closed, hi, hi_closed }
    }

    pub fn shift(&self, by: &Rational) -> Piece {
        Piece { lo: self.lo.shift(by), lo_closed: self.lo_closed, hi: self.hi.shift(by), hi_closed: self.hi_closed }
    }

    /// Image under `t ↦ αt` for `α ≠ 0`.
    pub fn scale(&self, alpha: &Rational) -> Piece {
        let (lo, hi) = (self.lo.scale(alpha), self.hi.scale(alpha));
        if alpha.is_negative() {
            Piece { lo: hi, lo_closed: self.hi_closed, hi: lo, hi_closed: self.lo_closed }
        } else {
            Piece { lo, lo_closed: self.lo_closed, hi, hi_closed: self.hi_closed }
        }
    }

    /// Sort key for lower ends: closed before open at the same value.
    fn lo_key(&self) -> (&ExtReal, bool) {
        (&self.lo, !self.lo_closed)
    }

    /// True when `self ∪ next` is connected, given `self.lo <= next.lo`.
    fn touches(&self, next: &Piece) -> bool {
        match next.lo.cmp(&self.hi) {
            Ordering::Less => true,
            Ordering::Equal => self.hi_closed || next.lo_closed,
            Ordering::Greater => false,
        }
    }

    fn absorb(&mut self, next: Piece) {
        match next.hi.cmp(&self.hi) {
            Ordering::Greater => {
                self.hi = next.hi;
                self.hi_closed = next.hi_closed;
            }
            Ordering::Equal => self.hi_closed |= next.hi_closed,
            Ordering::Less => {}
        }
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.lo_closed { '[' } else { '(' };
        let r = if self.hi_closed { ']' } else { ')' };
        write!(f, "{l}{},{}{r}", self.lo, self.hi)
    }
}

impl fmt::Debug for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite union of pieces in canonical form: sorted, pairwise disjoint
/// and non-adjacent, so equal point sets compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MSet {
    pieces: Vec<Piece>,
}

impl MSet {
    pub fn empty() -> MSet {
        MSet { pieces: Vec::new() }
    }

    pub fn full() -> MSet {
        MSet { pieces: alloc::vec![Piece::full()] }
    }

    pub fn half_line() -> MSet {
        MSet { pieces: alloc::vec![Piece::half_line()] }
    }

    pub fn from_piece(p: Piece) -> MSet {
        MSet::from_raw(alloc::vec![p])
    }

    /// Validates every piece, then sorts and merges into canonical form.
    pub fn normalize(raw: Vec<Piece>) -> Result<MSet, Error> {
        let mut checked = Vec::with_capacity(raw.len());
        for p in raw {
            checked.push(Piece::new(p.lo, p.lo_closed, p.hi, p.hi_closed)?);
        }
        Ok(MSet::from_raw(checked))
    }

    /// Canonicalizes without validation; empty pieces are dropped.
    pub(crate) fn from_raw(raw: Vec<Piece>) -> MSet {
        let mut ps: Vec<Piece> = raw.into_iter().filter(|p| !p.is_empty()).collect();
        ps.sort_by(|a, b| a.lo_key().cmp(&b.lo_key()));
        let mut out: Vec<Piece> = Vec::with_capacity(ps.len());
        for p in ps {
            match out.last_mut() {
                Some(cur) if cur.touches(&p) => cur.absorb(p),
                _ => out.push(p),
            }
        }
        MSet { pieces: out }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.pieces.iter().any(|p| p.contains(x))
    }

    pub fn union(&self, other: &MSet) -> MSet {
        let mut v = self.pieces.clone();
        v.extend(other.pieces.iter().cloned());
        MSet::from_raw(v)
    }

    pub fn intersect(&self, other: &MSet) -> MSet {
        let mut v = Vec::new();
        for a in &self.pieces {
            for b in &other.pieces {
                let c = a.intersect(b);
                if !c.is_empty() {
                    v.push(c);
                }
            }
        }
        MSet::from_raw(v)
    }

    /// Complement in the whole line.
    pub fn complement(&self) -> MSet {
        let mut v = Vec::with_capacity(self.pieces.len() + 1);
        let (mut lo, mut lo_closed) = (ExtReal::NegInf, false);
        for p in &self.pieces {
            v.push(Piece { lo, lo_closed, hi: p.lo.clone(), hi_closed: !p.lo_closed && p.lo.is_finite() });
            lo = p.hi.clone();
            lo_closed = !p.hi_closed && p.hi.is_finite();
        }
        v.push(Piece { lo, lo_closed, hi: ExtReal::PosInf, hi_closed: false });
        MSet::from_raw(v)
    }

    /// Complement relative to `[0, inf)`.
    pub fn complement_in_half_line(&self) -> MSet {
        self.complement().intersect(&MSet::half_line())
    }

    pub fn difference(&self, other: &MSet) -> MSet {
        self.intersect(&other.complement())
    }

    pub fn is_subset(&self, other: &MSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn interior(&self) -> MSet {
        let v = self
            .pieces
            .iter()
            .map(|p| Piece { lo: p.lo.clone(), lo_closed: false, hi: p.hi.clone(), hi_closed: false })
            .collect();
        MSet::from_raw(v)
    }

    pub fn closure(&self) -> MSet {
        let v = self
            .pieces
            .iter()
            .map(|p| Piece {
                lo: p.lo.clone(),
                lo_closed: p.lo.is_finite(),
                hi: p.hi.clone(),
                hi_closed: p.hi.is_finite(),
            })
            .collect();
        MSet::from_raw(v)
    }

    pub fn shift(&self, by: &Rational) -> MSet {
        MSet { pieces: self.pieces.iter().map(|p| p.shift(by)).collect() }
    }

    /// Image under `t ↦ αt` for `α ≠ 0`.
    pub fn scale(&self, alpha: &Rational) -> MSet {
        let mut v: Vec<Piece> = self.pieces.iter().map(|p| p.scale(alpha)).collect();
        if alpha.is_negative() {
            v.reverse();
        }
        MSet { pieces: v }
    }

    /// `{t : t >= s for some s in self}`.
    pub fn upward(&self) -> MSet {
        match self.pieces.first() {
            None => MSet::empty(),
            Some(p) => MSet {
                pieces: alloc::vec![Piece { lo: p.lo.clone(), lo_closed: p.lo_closed, hi: ExtReal::PosInf, hi_closed: false }],
            },
        }
    }

    /// Finite endpoints, sorted and deduplicated.
    pub fn breakpoints(&self) -> Vec<Rational> {
        let mut v = Vec::new();
        for p in &self.pieces {
            for e in [&p.lo, &p.hi] {
                if let ExtReal::Finite(q) = e {
                    v.push(q.clone());
                }
            }
        }
        v.sort();
        v.dedup();
        v
    }
}

impl fmt::Display for MSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pieces.is_empty() {
            return f.write_str("{}");
        }
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str(" u ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn adjacent_pieces_merge_only_when_touching() {
        let a = MSet::normalize(alloc::vec![
            Piece { lo: 0.into(), lo_closed: true, hi: 1.into(), hi_closed: false },
            Piece { lo: 1.into(), lo_closed: true, hi: 2.into(), hi_closed: true },
        ])
        .unwrap();
        assert_eq!(a, MSet::from_piece(Piece::closed(q(0), q(2))));
        let b = MSet::from_raw(alloc::vec![Piece::open(q(0), q(1)), Piece::open(q(1), q(2))]);
        assert_eq!(b.pieces().len(), 2);
        assert!(!b.contains(&q(1)));
    }

    #[test]
    fn malformed_pieces_are_rejected() {
        assert!(Piece::new(2.into(), true, 1.into(), true).is_err());
        assert!(Piece::new(1.into(), true, 1.into(), false).is_err());
        assert!(Piece::new(ExtReal::NegInf, true, 1.into(), true).is_err());
        assert!(Piece::new(1.into(), true, 1.into(), true).is_ok());
    }

    #[test]
    fn complement_flips_flags() {
        let a = MSet::from_piece(Piece { lo: 0.into(), lo_closed: true, hi: 1.into(), hi_closed: false });
        let c = a.complement();
        assert_eq!(c.pieces().len(), 2);
        assert!(!c.contains(&q(0)));
        assert!(c.contains(&q(1)));
        assert_eq!(c.complement(), a);
    }

    #[test]
    fn interior_and_closure_of_point() {
        let p = MSet::from_piece(Piece::point(q(3)));
        assert!(p.interior().is_empty());
        assert_eq!(p.closure(), p);
    }
}
