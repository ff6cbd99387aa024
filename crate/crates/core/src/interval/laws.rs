//! Checkable laws of the vector structure and of the pseudo-metric.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{is_omega_equal, metric_d, Interval, OmegaElement};
use crate::numerics::Rational;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LawId {
    /// `1x = x`.
    Identity,
    /// `x = y ⇒ x⊕z = y⊕z` and `αx = αy`.
    Substitution,
    AddCommutative,
    AddAssociative,
    /// `α(x⊕y) = αx⊕αy`.
    VectorDistributive,
    PositiveVectorDistributive,
    /// `α(βx) = (αβ)x`.
    ScalarAssociative,
    PositiveScalarAssociative,
    /// `(α+β)x = αx⊕βx`.
    ScalarDistributive,
    PositiveScalarDistributive,
    NegativeScalarDistributive,
    /// `d(x,y) = 0 ⇔ x ≐Ω y`.
    MetricNullIdentity,
    /// `d(x,y) = 0 ⇔ x = y`.
    MetricStrictIdentity,
    MetricSymmetry,
    MetricTriangle,
    NullInequalities,
    NullEqualities,
    ZeroSumInequalities,
    ZeroSumEqualities,
    TranslationInvariance,
    AbsoluteHomogeneity,
}

impl LawId {
    pub const ALL: [LawId; 21] = [
        LawId::Identity,
        LawId::Substitution,
        LawId::AddCommutative,
        LawId::AddAssociative,
        LawId::VectorDistributive,
        LawId::PositiveVectorDistributive,
        LawId::ScalarAssociative,
        LawId::PositiveScalarAssociative,
        LawId::ScalarDistributive,
        LawId::PositiveScalarDistributive,
        LawId::NegativeScalarDistributive,
        LawId::MetricNullIdentity,
        LawId::MetricStrictIdentity,
        LawId::MetricSymmetry,
        LawId::MetricTriangle,
        LawId::NullInequalities,
        LawId::NullEqualities,
        LawId::ZeroSumInequalities,
        LawId::ZeroSumEqualities,
        LawId::TranslationInvariance,
        LawId::AbsoluteHomogeneity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawId::Identity => "identity",
            LawId::Substitution => "substitution",
            LawId::AddCommutative => "add-commutative",
            LawId::AddAssociative => "add-associative",
            LawId::VectorDistributive => "vector-distributive",
            LawId::PositiveVectorDistributive => "positive-vector-distributive",
            LawId::ScalarAssociative => "scalar-associative",
            LawId::PositiveScalarAssociative => "positive-scalar-associative",
            LawId::ScalarDistributive => "scalar-distributive",
            LawId::PositiveScalarDistributive => "positive-scalar-distributive",
            LawId::NegativeScalarDistributive => "negative-scalar-distributive",
            LawId::MetricNullIdentity => "metric-null-identity",
            LawId::MetricStrictIdentity => "metric-strict-identity",
            LawId::MetricSymmetry => "metric-symmetry",
            LawId::MetricTriangle => "metric-triangle",
            LawId::NullInequalities => "null-inequalities",
            LawId::NullEqualities => "null-equalities",
            LawId::ZeroSumInequalities => "zero-sum-inequalities",
            LawId::ZeroSumEqualities => "zero-sum-equalities",
            LawId::TranslationInvariance => "translation-invariance",
            LawId::AbsoluteHomogeneity => "absolute-homogeneity",
        }
    }

    /// Number of intervals, scalars and null elements the law consumes.
    /// Zero-sum laws take `x, y, a` plus `b` when `betas` is non-empty.
    pub fn arity(self) -> (usize, usize, usize) {
        use LawId::*;
        match self {
            Identity => (1, 0, 0),
            Substitution => (3, 1, 0),
            AddCommutative => (2, 0, 0),
            AddAssociative | MetricTriangle | TranslationInvariance => (3, 0, 0),
            VectorDistributive | PositiveVectorDistributive | AbsoluteHomogeneity => (2, 1, 0),
            ScalarAssociative | PositiveScalarAssociative => (1, 2, 0),
            ScalarDistributive | PositiveScalarDistributive | NegativeScalarDistributive => (1, 2, 0),
            MetricNullIdentity | MetricStrictIdentity | MetricSymmetry => (2, 0, 0),
            NullInequalities | NullEqualities => (2, 0, 2),
            ZeroSumInequalities | ZeroSumEqualities => (3, 0, 0),
        }
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Operands for one law evaluation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawSample {
    pub intervals: Vec<Interval>,
    pub scalars: Vec<Rational>,
    pub omegas: Vec<OmegaElement>,
    pub alphas: Vec<Rational>,
    pub betas: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LawValue {
    Interval(Interval),
    Scalar(Rational),
    Bool(bool),
}

impl fmt::Display for LawValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawValue::Interval(x) => write!(f, "{x}"),
            LawValue::Scalar(q) => write!(f, "{q}"),
            LawValue::Bool(b) => write!(f, "{b}"),
        }
    }
}

/// Verdict with the evaluated sides, component by component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawOutcome {
    pub holds: bool,
    pub lhs: Vec<LawValue>,
    pub rhs: Vec<LawValue>,
}

fn eq_iv(pairs: Vec<(Interval, Interval)>) -> LawOutcome {
    let holds = pairs.iter().all(|(a, b)| a == b);
    let (lhs, rhs) = pairs.into_iter().map(|(a, b)| (LawValue::Interval(a), LawValue::Interval(b))).unzip();
    LawOutcome { holds, lhs, rhs }
}

/// `lhs[i] >= rhs[i]` (or `=` when `exact`) for every component.
fn cmp_d(pairs: Vec<(Rational, Rational)>, exact: bool) -> LawOutcome {
    let holds = pairs.iter().all(|(a, b)| if exact { a == b } else { a >= b });
    let (lhs, rhs) = pairs.into_iter().map(|(a, b)| (LawValue::Scalar(a), LawValue::Scalar(b))).unzip();
    LawOutcome { holds, lhs, rhs }
}

fn require(law: LawId, ok: bool, reason: &str) -> Result<(), Error> {
    if ok {
        Ok(())
    } else {
        Err(Error::LawPrecondition { law: law.name(), reason: reason.into() })
    }
}

fn combo(base: &Interval, v: &Interval, coeffs: &[Rational]) -> Interval {
    coeffs.iter().fold(base.clone(), |acc, c| acc.add(&v.scale(c)))
}

fn sum(v: &[Rational]) -> Rational {
    v.iter().fold(Rational::zero(), |a, b| a + b)
}

/// Evaluates one law on one sample. Arity and sign preconditions are
/// validated; a law whose hypothesis is an implication (substitution)
/// holds vacuously when the premise fails.
pub fn law_check(law: LawId, s: &LawSample) -> Result<LawOutcome, Error> {
    use LawId::*;
    let (ni, ns, no) = law.arity();
    let zero_sum = matches!(law, ZeroSumInequalities | ZeroSumEqualities);
    let ni = if zero_sum && !s.betas.is_empty() { 4 } else { ni };
    if s.intervals.len() != ni || s.scalars.len() != ns || s.omegas.len() != no {
        return Err(Error::Arity {
            law: law.name(),
            expected: format!("{ni} intervals, {ns} scalars, {no} null elements"),
            got: format!("{}, {}, {}", s.intervals.len(), s.scalars.len(), s.omegas.len()),
        });
    }
    let x = &s.intervals[0];
    let iv = |i: usize| &s.intervals[i];
    let sc = |i: usize| &s.scalars[i];
    Ok(match law {
        Identity => eq_iv(vec![(x.scale(&Rational::one()), x.clone())]),
        Substitution => {
            let (y, z, a) = (iv(1), iv(2), sc(0));
            if x != y {
                LawOutcome { holds: true, lhs: vec![LawValue::Bool(false)], rhs: vec![LawValue::Bool(false)] }
            } else {
                eq_iv(vec![(x.add(z), y.add(z)), (x.scale(a), y.scale(a))])
            }
        }
        AddCommutative => eq_iv(vec![(x.add(iv(1)), iv(1).add(x))]),
        AddAssociative => eq_iv(vec![(x.add(iv(1)).add(iv(2)), x.add(&iv(1).add(iv(2))))]),
        VectorDistributive | PositiveVectorDistributive => {
            let a = sc(0);
            if law == PositiveVectorDistributive {
                require(law, a.is_positive(), "alpha must be positive")?;
            }
            eq_iv(vec![(x.add(iv(1)).scale(a), x.scale(a).add(&iv(1).scale(a)))])
        }
        ScalarAssociative | PositiveScalarAssociative => {
            let (a, b) = (sc(0), sc(1));
            if law == PositiveScalarAssociative {
                require(law, a.is_positive() && b.is_positive(), "alpha and beta must be positive")?;
            }
            eq_iv(vec![(x.scale(b).scale(a), x.scale(&(a * b)))])
        }
        ScalarDistributive | PositiveScalarDistributive | NegativeScalarDistributive => {
            let (a, b) = (sc(0), sc(1));
            if law == PositiveScalarDistributive {
                require(law, a.is_positive() && b.is_positive(), "alpha and beta must be positive")?;
            }
            if law == NegativeScalarDistributive {
                require(law, a.is_negative() && b.is_negative(), "alpha and beta must be negative")?;
            }
            eq_iv(vec![(x.scale(&(a + b)), x.scale(a).add(&x.scale(b)))])
        }
        MetricNullIdentity | MetricStrictIdentity => {
            let y = iv(1);
            let zero = metric_d(x, y).is_zero();
            let other = if law == MetricNullIdentity { is_omega_equal(x, y) } else { x == y };
            LawOutcome { holds: zero == other, lhs: vec![LawValue::Bool(zero)], rhs: vec![LawValue::Bool(other)] }
        }
        MetricSymmetry => cmp_d(vec![(metric_d(x, iv(1)), metric_d(iv(1), x))], true),
        MetricTriangle => {
            let (y, z) = (iv(1), iv(2));
            // d(x,z) + d(z,y) >= d(x,y)
            cmp_d(vec![(metric_d(x, z) + metric_d(z, y), metric_d(x, y))], false)
        }
        NullInequalities | NullEqualities => {
            let y = iv(1);
            let (w1, w2) = (s.omegas[0].to_interval(), s.omegas[1].to_interval());
            let base = metric_d(x, y);
            cmp_d(
                vec![
                    (metric_d(&x.add(&w1), &y.add(&w2)), base.clone()),
                    (metric_d(&x.add(&w1), y), base.clone()),
                    (metric_d(x, &y.add(&w2)), base),
                ],
                law == NullEqualities,
            )
        }
        ZeroSumInequalities | ZeroSumEqualities => {
            require(law, sum(&s.alphas).is_zero() && sum(&s.betas).is_zero(), "coefficients must sum to zero")?;
            let (y, a) = (iv(1), iv(2));
            let lhs_x = combo(x, a, &s.alphas);
            let lhs_y = if s.betas.is_empty() { y.clone() } else { combo(y, iv(3), &s.betas) };
            let base = metric_d(x, y);
            cmp_d(
                vec![
                    (metric_d(&lhs_x, &lhs_y), base.clone()),
                    (metric_d(&lhs_x, y), base.clone()),
                    (metric_d(x, &lhs_y), base),
                ],
                law == ZeroSumEqualities,
            )
        }
        TranslationInvariance => {
            let (y, z) = (iv(1), iv(2));
            cmp_d(vec![(metric_d(&x.add(z), &y.add(z)), metric_d(x, y))], true)
        }
        AbsoluteHomogeneity => {
            let (y, a) = (iv(1), sc(0));
            cmp_d(vec![(metric_d(&x.scale(a), &y.scale(a)), a.abs() * metric_d(x, y))], true)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(ivs: &[(i64, i64)], scalars: &[i64]) -> LawSample {
        LawSample {
            intervals: ivs.iter().map(|&(a, b)| Interval::int(a, b)).collect(),
            scalars: scalars.iter().map(|&a| a.into()).collect(),
            ..Default::default()
        }
    }

    #[test]
    fn general_distributivity_witness() {
        let out = law_check(LawId::ScalarDistributive, &sample(&[(1, 3)], &[1, -1])).unwrap();
        assert!(!out.holds);
        assert_eq!(out.lhs, vec![LawValue::Interval(Interval::zero())]);
        assert_eq!(out.rhs, vec![LawValue::Interval(Interval::int(-2, 2))]);
    }

    #[test]
    fn commutativity_example() {
        assert!(law_check(LawId::AddCommutative, &sample(&[(0, 1), (2, 3)], &[])).unwrap().holds);
    }

    #[test]
    fn zero_sum_example_with_empty_betas() {
        let mut s = sample(&[(1, 2), (5, 9), (0, 4)], &[]);
        s.alphas = vec![1.into(), (-1).into()];
        let out = law_check(LawId::ZeroSumEqualities, &s).unwrap();
        assert!(out.holds);
        assert_eq!(out.rhs[0], LawValue::Scalar(11.into()));
    }

    #[test]
    fn arity_and_sign_errors() {
        assert!(matches!(law_check(LawId::AddAssociative, &sample(&[(0, 1)], &[])), Err(Error::Arity { .. })));
        assert!(matches!(
            law_check(LawId::PositiveScalarDistributive, &sample(&[(0, 1)], &[1, -1])),
            Err(Error::LawPrecondition { .. })
        ));
        let mut s = sample(&[(1, 2), (5, 9), (0, 4)], &[]);
        s.alphas = vec![1.into()];
        assert!(law_check(LawId::ZeroSumEqualities, &s).is_err());
    }

    #[test]
    fn strict_identity_fails_on_null_shift() {
        let out = law_check(LawId::MetricStrictIdentity, &sample(&[(0, 2), (-1, 3)], &[])).unwrap();
        assert!(!out.holds);
        assert!(law_check(LawId::MetricNullIdentity, &sample(&[(0, 2), (-1, 3)], &[])).unwrap().holds);
    }
}
