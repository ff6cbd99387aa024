//! Deterministic instance generators.
//!
//! Scalars and interval endpoints live in `[-100, 100]` with denominators up
//! to 16. Region coordinates use a coarser grid so that boxes, balls and
//! sampled points actually interact.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::function_space::GridIntervalFunction;
use crate::interval::{Interval, OmegaElement};
use crate::numerics::{ExtReal, Piece, Rational};
use crate::region::{Rect, Region};
use crate::topology::BallSpec;

pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Gen {
        Gen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Uniform in `0..n`.
    pub fn below(&mut self, n: u64) -> u64 {
        self.rng.gen_range(0..n)
    }

    /// True with probability `num/den`.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }

    pub fn coin(&mut self) -> bool {
        self.chance(1, 2)
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len() as u64) as usize]
    }

    fn ratio(&mut self, max_abs: i64, max_den: i64) -> Rational {
        let den = self.rng.gen_range(1..=max_den);
        let num = self.rng.gen_range(-max_abs * den..=max_abs * den);
        Rational::new(num, den)
    }

    /// A rational in `[-100, 100]` with denominator at most 16.
    pub fn rational(&mut self) -> Rational {
        match self.below(8) {
            0 => Rational::zero(),
            1 => Rational::from_integer(self.rng.gen_range(-10..=10)),
            _ => self.ratio(100, 16),
        }
    }

    /// A scalar for vector-space laws: small values are favoured.
    pub fn scalar(&mut self) -> Rational {
        match self.below(6) {
            0 => Rational::zero(),
            1 => Rational::from_integer(*self.pick(&[1, -1, 2, -2])),
            2 | 3 => self.ratio(5, 4),
            _ => self.rational(),
        }
    }

    pub fn positive(&mut self) -> Rational {
        loop {
            let q = self.scalar().abs();
            if q.is_positive() {
                return q;
            }
        }
    }

    pub fn negative(&mut self) -> Rational {
        -self.positive()
    }

    pub fn nonneg(&mut self) -> Rational {
        if self.chance(1, 6) {
            Rational::zero()
        } else {
            self.positive()
        }
    }

    /// Uniform in `[0, 1]` on a grid of sixteenths.
    pub fn fraction(&mut self) -> Rational {
        Rational::new(self.rng.gen_range(0..=16), 16)
    }

    /// A closed interval; one in six is degenerate.
    pub fn interval(&mut self) -> Interval {
        let a = self.rational();
        if self.chance(1, 6) {
            return Interval::point(a);
        }
        let b = self.rational();
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Interval::new(lo, hi).expect("ordered endpoints")
    }

    /// An interval with the same midpoint as `x` and a random radius.
    pub fn same_midpoint(&mut self, x: &Interval) -> Interval {
        let r = if self.chance(1, 4) { Rational::zero() } else { self.coord_r() };
        Interval::from_midrad(&x.midpoint(), &r).expect("radius is nonnegative")
    }

    /// An element of `Ω`; `θ` with probability 1/4.
    pub fn omega(&mut self) -> OmegaElement {
        if self.chance(1, 4) {
            OmegaElement::theta()
        } else {
            OmegaElement::new(self.positive()).expect("positive half-width")
        }
    }

    /// A midpoint coordinate on the region grid: quarters in `[-12, 12]`.
    pub fn coord_m(&mut self) -> Rational {
        Rational::new(self.rng.gen_range(-48..=48), 4)
    }

    /// A radius coordinate on the region grid: quarters in `[0, 10]`.
    pub fn coord_r(&mut self) -> Rational {
        Rational::new(self.rng.gen_range(0..=40), 4)
    }

    /// An interval whose midpoint and radius lie on the region grid.
    pub fn local_interval(&mut self) -> Interval {
        let m = self.coord_m();
        let r = if self.chance(1, 5) { Rational::zero() } else { self.coord_r() };
        Interval::from_midrad(&m, &r).expect("radius is nonnegative")
    }

    fn m_piece(&mut self) -> Piece {
        let a = self.coord_m();
        match self.below(10) {
            0 => Piece::point(a),
            1 => Piece::new(ExtReal::NegInf, false, a.into(), self.coin()).expect("half-line"),
            2 => Piece::new(a.into(), self.coin(), ExtReal::PosInf, false).expect("half-line"),
            _ => {
                let b = &a + &Rational::new(self.rng.gen_range(1..=32), 4);
                Piece::new(a.into(), self.coin(), b.into(), self.coin()).expect("ordered")
            }
        }
    }

    fn r_piece(&mut self) -> Piece {
        let (lo, lo_closed) = if self.coin() { (Rational::zero(), true) } else { (self.coord_r(), self.coin()) };
        if self.chance(1, 12) {
            return Piece::point(lo);
        }
        let lo_closed = lo_closed || !lo.is_positive() && self.chance(3, 4);
        if self.chance(1, 3) {
            return Piece::new(lo.into(), lo_closed, ExtReal::PosInf, false).expect("half-line");
        }
        let hi = &lo + &Rational::new(self.rng.gen_range(1..=24), 4);
        Piece::new(lo.into(), lo_closed, hi.into(), self.coin()).expect("ordered")
    }

    fn open_m_piece(&mut self) -> Piece {
        let a = self.coord_m();
        match self.below(8) {
            0 => Piece::new(ExtReal::NegInf, false, a.into(), false).expect("half-line"),
            1 => Piece::new(a.into(), false, ExtReal::PosInf, false).expect("half-line"),
            _ => Piece::open(a.clone(), &a + &Rational::new(self.rng.gen_range(1..=32), 4)),
        }
    }

    /// A random box.
    pub fn rect(&mut self) -> Rect {
        Rect::new(self.m_piece(), self.r_piece()).expect("radius range is nonnegative")
    }

    /// A region of up to six boxes, occasionally empty, whole or a union of
    /// full columns.
    pub fn region(&mut self) -> Region {
        match self.below(20) {
            0 => Region::empty(),
            1 => Region::whole(),
            2..=4 => {
                let n = self.rng.gen_range(1..=3);
                Region::from_rects((0..n).map(|_| Rect::column(self.m_piece())).collect())
            }
            _ => {
                let n = self.rng.gen_range(1..=6);
                Region::from_rects((0..n).map(|_| self.rect()).collect())
            }
        }
    }

    /// A union of open full columns: an open set of every kind.
    pub fn open_region(&mut self) -> Region {
        match self.below(6) {
            0 => crate::topology::open_ball(&self.ballspec()),
            1 => Region::empty(),
            _ => {
                let n = self.rng.gen_range(1..=3);
                Region::from_rects((0..n).map(|_| Rect::column(self.open_m_piece())).collect())
            }
        }
    }

    /// One member of a random open family: a ball, an open upward-closed
    /// box, or the intersection or union of two such sets.
    pub fn family_member(&mut self) -> Region {
        let base = |g: &mut Gen| {
            if g.coin() {
                crate::topology::open_ball(&g.ballspec())
            } else {
                Region::from_rect(Rect::column(g.open_m_piece()))
            }
        };
        match self.below(6) {
            0 => {
                let (a, b) = (base(self), base(self));
                a.intersect(&b)
            }
            1 => {
                let (a, b) = (base(self), base(self));
                a.union(&b)
            }
            _ => base(self),
        }
    }

    pub fn family(&mut self) -> Vec<Region> {
        let n = self.rng.gen_range(1..=6);
        (0..n).map(|_| self.family_member()).collect()
    }

    pub fn ballspec(&mut self) -> BallSpec {
        let eps = Rational::new(self.rng.gen_range(1..=32), 4);
        BallSpec::new(self.local_interval(), eps).expect("positive radius")
    }

    /// Between one and eight scalars summing to zero; the last balances.
    pub fn alphas_zero_sum(&mut self) -> Vec<Rational> {
        let n = self.rng.gen_range(1..=8);
        let mut v: Vec<Rational> = (1..n).map(|_| self.scalar()).collect();
        let s = v.iter().fold(Rational::zero(), |a, b| a + b);
        v.push(-s);
        v
    }

    /// A grid function on `n` default labels.
    pub fn gridfun(&mut self, n: usize) -> GridIntervalFunction {
        GridIntervalFunction::on_default_grid((0..n).map(|_| self.interval()).collect()).expect("nonempty grid")
    }

    pub fn grid_size(&mut self) -> usize {
        self.rng.gen_range(1..=5)
    }

    fn near(&mut self, base: &Rational) -> Rational {
        match self.below(3) {
            0 => base.clone(),
            1 => base + &Rational::new(1, 8),
            _ => base - &Rational::new(1, 8),
        }
    }

    /// A point biased towards the boundaries of `a`.
    pub fn point_near(&mut self, a: &Region) -> Interval {
        let bps = a.breakpoints();
        let m = if !bps.is_empty() && self.chance(3, 5) {
            let b = self.pick(&bps).clone();
            self.near(&b)
        } else {
            self.coord_m()
        };
        let rbps = a.column_at(&m).breakpoints();
        let r = if !rbps.is_empty() && self.chance(3, 5) {
            let b = self.pick(&rbps).clone();
            let r = self.near(&b);
            if r.is_negative() {
                Rational::zero()
            } else {
                r
            }
        } else if self.chance(1, 5) {
            Rational::zero()
        } else {
            Rational::new(self.rng.gen_range(0..=48), 4)
        };
        Interval::from_midrad(&m, &r).expect("radius is nonnegative")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_streams() {
        let (mut a, mut b) = (Gen::new(7), Gen::new(7));
        for _ in 0..50 {
            assert_eq!(a.region(), b.region());
            assert_eq!(a.interval(), b.interval());
        }
    }

    #[test]
    fn zero_sum_and_ranges() {
        let mut g = Gen::new(1);
        for _ in 0..200 {
            let v = g.alphas_zero_sum();
            assert!(!v.is_empty() && v.len() <= 8);
            assert!(v.iter().fold(Rational::zero(), |a, b| a + b).is_zero());
            let q = g.rational();
            assert!(q.abs() <= Rational::from_integer(100));
            assert!(*q.denom() <= 16.into());
            assert!(g.omega().k() >= &Rational::zero());
        }
    }
}
