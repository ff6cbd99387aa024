//! The space `I` of closed intervals with `⊕`, scalar multiplication, the
//! null set `Ω`, Ω-equality and the pseudo-metric `d`.

mod laws;

pub use laws::{law_check, LawId, LawOutcome, LawSample, LawValue};

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg};

use crate::numerics::Rational;
use crate::Error;

/// A closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Interval, Error> {
        if lo > hi {
            return Err(Error::InvalidInterval { lo: lo.to_string(), hi: hi.to_string() });
        }
        Ok(Interval { lo, hi })
    }

    /// Integer endpoints; panics if `lo > hi`.
    pub fn int(lo: i64, hi: i64) -> Interval {
        Interval::new(lo.into(), hi.into()).expect("lo <= hi")
    }

    pub fn point(a: Rational) -> Interval {
        Interval { lo: a.clone(), hi: a }
    }

    /// The zero element `θ = [0,0]`.
    pub fn zero() -> Interval {
        Interval::point(Rational::zero())
    }

    /// `[m − r, m + r]`; rejects `r < 0`.
    pub fn from_midrad(m: &Rational, r: &Rational) -> Result<Interval, Error> {
        if r.is_negative() {
            return Err(Error::NegativeRadius(r.to_string()));
        }
        Ok(Interval { lo: m - r, hi: m + r })
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi).half()
    }

    pub fn radius(&self) -> Rational {
        (&self.hi - &self.lo).half()
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn add(&self, y: &Interval) -> Interval {
        Interval { lo: &self.lo + &y.lo, hi: &self.hi + &y.hi }
    }

    pub fn scale(&self, alpha: &Rational) -> Interval {
        let (a, b) = (alpha * &self.lo, alpha * &self.hi);
        if alpha.is_negative() {
            Interval { lo: b, hi: a }
        } else {
            Interval { lo: a, hi: b }
        }
    }

    /// `x ⊖ y = x ⊕ (−y)`.
    pub fn sub(&self, y: &Interval) -> Interval {
        self.add(&-y)
    }

    pub fn is_in_omega(&self) -> bool {
        self.lo == -&self.hi
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval::add(self, rhs)
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -&self.hi, hi: -&self.lo }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element `[−k, k]` of the null set, `k >= 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OmegaElement {
    k: Rational,
}

impl OmegaElement {
    pub fn new(k: Rational) -> Result<OmegaElement, Error> {
        if k.is_negative() {
            return Err(Error::NegativeOmega(k.to_string()));
        }
        Ok(OmegaElement { k })
    }

    pub fn theta() -> OmegaElement {
        OmegaElement { k: Rational::zero() }
    }

    /// `x ⊖ x`.
    pub fn of(x: &Interval) -> OmegaElement {
        OmegaElement { k: &x.hi - &x.lo }
    }

    pub fn from_interval(x: &Interval) -> Option<OmegaElement> {
        x.is_in_omega().then(|| OmegaElement { k: x.hi.clone() })
    }

    pub fn k(&self) -> &Rational {
        &self.k
    }

    pub fn is_theta(&self) -> bool {
        self.k.is_zero()
    }

    pub fn to_interval(&self) -> Interval {
        Interval { lo: -&self.k, hi: self.k.clone() }
    }

    pub fn add(&self, other: &OmegaElement) -> OmegaElement {
        OmegaElement { k: &self.k + &other.k }
    }
}

impl fmt::Display for OmegaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_interval(), f)
    }
}

impl fmt::Debug for OmegaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Witnesses for `x ⊕ ω₁ = y ⊕ ω₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaWitness {
    pub omega1: OmegaElement,
    pub omega2: OmegaElement,
}

/// Decides Ω-equality by comparing `a+b` with `c+d`. When equal, returns
/// `ω₁ = (d−c)[−1,1]` and `ω₂ = (b−c)[−1,1]`.
pub fn omega_equal(x: &Interval, y: &Interval) -> Option<OmegaWitness> {
    if &x.lo + &x.hi != &y.lo + &y.hi {
        return None;
    }
    // Equal sums force b >= c, so both parameters are non-negative.
    Some(OmegaWitness {
        omega1: OmegaElement { k: &y.hi - &y.lo },
        omega2: OmegaElement { k: &x.hi - &y.lo },
    })
}

pub fn is_omega_equal(x: &Interval, y: &Interval) -> bool {
    omega_equal(x, y).is_some()
}

/// `d([a,b],[c,d]) = |(a+b) − (c+d)|`.
pub fn metric_d(x: &Interval, y: &Interval) -> Rational {
    ((&x.lo + &x.hi) - (&y.lo + &y.hi)).abs()
}

/// `y` is a generalized inverse of `x` when `x ⊕ y ∈ Ω`.
pub fn is_generalized_inverse(x: &Interval, y: &Interval) -> bool {
    x.add(y).is_in_omega()
}

/// Both evaluations of `α₁x ⊕ ⋯ ⊕ αₙx`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCombination {
    /// Left fold of the terms.
    pub folded: Interval,
    /// `α⁺x ⊕ α⁻x ⊕ 0x ⊕ ⋯ ⊕ 0x`, omitting empty sign classes.
    pub collapsed: Interval,
}

impl LinearCombination {
    pub fn agree(&self) -> bool {
        self.folded == self.collapsed
    }
}

pub fn linear_combination(x: &Interval, alphas: &[Rational]) -> Result<LinearCombination, Error> {
    let (first, rest) = alphas.split_first().ok_or(Error::EmptyScalars)?;
    let folded = rest.iter().fold(x.scale(first), |acc, a| acc.add(&x.scale(a)));

    let mut pos = None::<Rational>;
    let mut neg = None::<Rational>;
    let mut zeros = 0usize;
    for a in alphas {
        let slot = if a.is_positive() {
            &mut pos
        } else if a.is_negative() {
            &mut neg
        } else {
            zeros += 1;
            continue;
        };
        *slot = Some(slot.take().map_or_else(|| a.clone(), |s| s + a));
    }
    let mut terms: Vec<Interval> = Vec::new();
    terms.extend(pos.map(|a| x.scale(&a)));
    terms.extend(neg.map(|a| x.scale(&a)));
    terms.extend((0..zeros).map(|_| x.scale(&Rational::zero())));
    let collapsed = terms.iter().skip(1).fold(terms[0].clone(), |acc, t| acc.add(t));
    Ok(LinearCombination { folded, collapsed })
}

/// `x = [lo+k, hi−k] ⊕ [−k, k]` for `0 <= k <= radius`.
pub fn null_decompose(x: &Interval, k: &Rational) -> Result<(Interval, OmegaElement), Error> {
    let r = x.radius();
    if k.is_negative() || k > &r {
        return Err(Error::DecompositionOutOfRange { k: k.to_string(), radius: r.to_string() });
    }
    Ok((Interval { lo: &x.lo + k, hi: &x.hi - k }, OmegaElement { k: k.clone() }))
}

/// `ω′` with `ω = ω′ ⊕ ω₀`, which exists iff `k >= k₀`.
pub fn self_decompose(omega: &OmegaElement, omega0: &OmegaElement) -> Result<OmegaElement, Error> {
    if omega.k < omega0.k {
        return Err(Error::NoSelfDecomposition { k: omega.k.to_string(), k0: omega0.k.to_string() });
    }
    Ok(OmegaElement { k: &omega.k - &omega0.k })
}

/// Whether every `ω ∈ Ω` splits as `ω′ ⊕ ω₀`. In `I` this holds only for
/// `ω₀ = θ`: any `ω` with `k < k₀` has no such split.
pub fn owns_self_decomposition_wrt(omega0: &OmegaElement) -> bool {
    omega0.is_theta()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: i64, b: i64) -> Interval {
        Interval::int(a, b)
    }

    #[test]
    fn vector_operations() {
        assert_eq!(iv(1, 2).add(&iv(3, 5)), iv(4, 7));
        assert_eq!(iv(2, 5).add(&iv(-5, -2)), iv(-3, 3));
        assert_eq!(iv(1, 3).scale(&(-2).into()), iv(-6, -2));
        assert_eq!(iv(1, 3).scale(&Rational::zero()), Interval::zero());
        assert_eq!(iv(2, 5).sub(&iv(2, 5)), iv(-3, 3));
        assert_eq!(iv(0, 1).sub(&iv(0, 2)), iv(-2, 1));
        assert!(Interval::new(2.into(), 1.into()).is_err());
    }

    #[test]
    fn omega_membership_and_equality() {
        assert!(iv(-3, 3).is_in_omega());
        assert!(Interval::zero().is_in_omega());
        assert!(!iv(-1, 2).is_in_omega());

        let w = omega_equal(&iv(0, 2), &iv(-1, 3)).unwrap();
        assert_eq!(w.omega1.to_interval(), iv(-4, 4));
        assert_eq!(w.omega2.to_interval(), iv(-3, 3));
        assert_eq!(iv(0, 2).add(&w.omega1.to_interval()), iv(-1, 3).add(&w.omega2.to_interval()));
        assert!(omega_equal(&iv(0, 1), &iv(0, 2)).is_none());
    }

    #[test]
    fn no_shifted_equality_for_distinct_sums() {
        // Exhaustive search over small null shifts, independent of the midpoint rule.
        let (x, y) = (iv(0, 1), iv(0, 2));
        for k1 in 0..=10 {
            for k2 in 0..=10 {
                assert_ne!(x.add(&iv(-k1, k1)), y.add(&iv(-k2, k2)));
            }
        }
    }

    #[test]
    fn metric_values() {
        assert_eq!(metric_d(&iv(1, 3), &iv(0, 2)), 2.into());
        assert_eq!(metric_d(&iv(0, 1), &iv(10, 11)), 20.into());
    }

    #[test]
    fn combinations_and_decompositions() {
        let x = iv(1, 3);
        let lc = linear_combination(&x, &[1.into(), (-1).into()]).unwrap();
        assert_eq!(lc.folded, iv(-2, 2));
        assert!(lc.agree());
        let lc = linear_combination(&x, &[2.into(), 3.into()]).unwrap();
        assert_eq!(lc.folded, iv(5, 15));
        assert_eq!(lc.folded, x.scale(&5.into()));
        assert_eq!(linear_combination(&x, &[1.into()]).unwrap().folded, x);
        assert!(linear_combination(&x, &[]).is_err());

        let (xb, w) = null_decompose(&iv(1, 5), &1.into()).unwrap();
        assert_eq!((xb.clone(), w.to_interval()), (iv(2, 4), iv(-1, 1)));
        assert_eq!(xb.add(&w.to_interval()), iv(1, 5));
        assert!(null_decompose(&iv(2, 2), &Rational::new(1, 2)).is_err());

        let o = |k: i64| OmegaElement::new(k.into()).unwrap();
        assert_eq!(self_decompose(&o(3), &o(2)).unwrap(), o(1));
        assert_eq!(self_decompose(&o(3), &o(0)).unwrap(), o(3));
        assert!(self_decompose(&o(1), &o(2)).is_err());
    }

    #[test]
    fn generalized_inverses() {
        assert!(is_generalized_inverse(&iv(1, 3), &iv(-3, -1)));
        assert!(!is_generalized_inverse(&iv(1, 3), &Interval::zero()));
        assert!(is_generalized_inverse(&Interval::zero(), &Interval::zero()));
    }
}
