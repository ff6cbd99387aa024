use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

use super::Rational;
use crate::Error;

/// A rational or one of the two infinities. Ordered `-inf < q < inf`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtReal {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl ExtReal {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtReal::Finite(q) => Some(q),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn shift(&self, by: &Rational) -> ExtReal {
        match self {
            ExtReal::Finite(q) => ExtReal::Finite(q + by),
            other => other.clone(),
        }
    }

    /// Multiplies by a non-zero scalar; a negative factor swaps the infinities.
    pub fn scale(&self, alpha: &Rational) -> ExtReal {
        match self {
            ExtReal::Finite(q) => ExtReal::Finite(q * alpha),
            ExtReal::NegInf if alpha.is_negative() => ExtReal::PosInf,
            ExtReal::PosInf if alpha.is_negative() => ExtReal::NegInf,
            other => other.clone(),
        }
    }
}

impl From<Rational> for ExtReal {
    fn from(q: Rational) -> Self {
        ExtReal::Finite(q)
    }
}

impl From<i64> for ExtReal {
    fn from(n: i64) -> Self {
        ExtReal::Finite(Rational::from_integer(n))
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::NegInf => f.write_str("-inf"),
            ExtReal::PosInf => f.write_str("inf"),
            ExtReal::Finite(q) => fmt::Display::fmt(q, f),
        }
    }
}

impl fmt::Debug for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExtReal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "-inf" => Ok(ExtReal::NegInf),
            "inf" | "+inf" => Ok(ExtReal::PosInf),
            t if t.contains("inf") => Err(Error::ParseExtReal(t.to_string())),
            t => t.parse().map(ExtReal::Finite),
        }
    }
}
