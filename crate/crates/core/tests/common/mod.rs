//! Shared strategies and a brute-force oracle over raw rectangle lists.
#![allow(dead_code)]

use nullspace_core::numerics::{ExtReal, MSet, Piece, Rational};
use nullspace_core::region::{MidRad, Rect, Region};
use nullspace_core::Interval;
use proptest::prelude::*;

pub fn rat() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=3).prop_map(|(n, d)| Rational::new(n, d))
}

pub fn nonneg() -> impl Strategy<Value = Rational> {
    (0i64..=12, 1i64..=3).prop_map(|(n, d)| Rational::new(n, d))
}

pub fn nonzero() -> impl Strategy<Value = Rational> {
    rat().prop_filter("non-zero", |a| !a.is_zero())
}

pub fn interval() -> impl Strategy<Value = Interval> {
    (rat(), nonneg()).prop_map(|(m, r)| Interval::from_midrad(&m, &r).unwrap())
}

fn end() -> impl Strategy<Value = Option<Rational>> {
    prop_oneof![6 => rat().prop_map(Some), 1 => Just(None)]
}

/// A piece of the line: bounded, half-bounded or a single point.
pub fn m_piece() -> impl Strategy<Value = Piece> {
    (end(), end(), any::<bool>(), any::<bool>(), 0u8..8).prop_filter_map("valid piece", |(a, b, lc, hc, tag)| {
        if tag == 0 {
            return a.map(Piece::point);
        }
        let lo = a.map_or(ExtReal::NegInf, ExtReal::Finite);
        let hi = b.map_or(ExtReal::PosInf, ExtReal::Finite);
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        Piece::new(lo.clone(), lc && lo.is_finite(), hi.clone(), hc && hi.is_finite()).ok()
    })
}

/// A piece of `[0, inf)`.
pub fn r_piece() -> impl Strategy<Value = Piece> {
    (nonneg(), prop::option::of(nonneg()), any::<bool>(), any::<bool>()).prop_filter_map(
        "valid radius piece",
        |(a, b, lc, hc)| match b {
            None => Some(Piece::from(a, lc)),
            Some(b) => {
                let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                Piece::new(lo.into(), lc, hi.into(), hc).ok()
            }
        },
    )
}

pub fn rect() -> impl Strategy<Value = Rect> {
    prop_oneof![
        4 => (m_piece(), r_piece()).prop_map(|(m, r)| Rect::new(m, r).unwrap()),
        1 => m_piece().prop_map(Rect::column),
    ]
}

pub fn rects() -> impl Strategy<Value = Vec<Rect>> {
    prop::collection::vec(rect(), 0..4)
}

pub fn mset_pieces() -> impl Strategy<Value = Vec<Piece>> {
    prop::collection::vec(m_piece(), 0..4)
}

pub fn mset(ps: &[Piece]) -> MSet {
    MSet::normalize(ps.to_vec()).unwrap()
}

pub fn region(rs: &[Rect]) -> Region {
    Region::from_rects(rs.to_vec())
}

pub fn raw_member(rs: &[Rect], p: &MidRad) -> bool {
    rs.iter().any(|r| r.contains(p))
}

fn finite_ends(p: &Piece, out: &mut Vec<Rational>) {
    out.extend(p.lo.finite().cloned());
    out.extend(p.hi.finite().cloned());
}

/// Each breakpoint, the midpoint of each gap and a point beyond either end.
pub fn cell_samples(mut bps: Vec<Rational>) -> Vec<Rational> {
    bps.sort();
    bps.dedup();
    let one = Rational::one();
    let Some(first) = bps.first().cloned() else { return vec![Rational::zero()] };
    let mut out = vec![&first - &one];
    for (i, b) in bps.iter().enumerate() {
        out.push(b.clone());
        match bps.get(i + 1) {
            Some(n) => out.push((b + n).half()),
            None => out.push(b + &one),
        }
    }
    out
}

/// Probe points resolving every cell of the given rectangle lists.
pub fn probes(lists: &[&[Rect]]) -> Vec<MidRad> {
    let (mut ms, mut rs) = (Vec::new(), vec![Rational::zero()]);
    for list in lists {
        for r in *list {
            finite_ends(&r.m, &mut ms);
            finite_ends(&r.r, &mut rs);
        }
    }
    let rs: Vec<Rational> = cell_samples(rs).into_iter().filter(|r| !r.is_negative()).collect();
    let ms = cell_samples(ms);
    ms.iter().flat_map(|m| rs.iter().map(move |r| MidRad { m: m.clone(), r: r.clone() })).collect()
}

pub fn line_probes(lists: &[&[Piece]]) -> Vec<Rational> {
    let mut bps = Vec::new();
    for list in lists {
        for p in *list {
            finite_ends(p, &mut bps);
        }
    }
    cell_samples(bps)
}

pub fn interval_at(p: &MidRad) -> Interval {
    Interval::from_midrad(&p.m, &p.r).unwrap()
}
