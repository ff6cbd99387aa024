//! Exact scalars and one-dimensional point sets.
//!
//! [`Rational`] wraps an arbitrary-precision rational, [`ExtReal`] adds the
//! two infinities, and [`MSet`] is a canonical finite union of [`Piece`]s
//! (intervals of the real line with independent open/closed end flags).

mod ext;
mod mset;
mod rational;

pub use ext::ExtReal;
pub use mset::{MSet, Piece};
pub use rational::Rational;
