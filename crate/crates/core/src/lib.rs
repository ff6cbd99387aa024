//! Exact arithmetic over the space of closed real intervals.
//!
//! Intervals `[a,b]` are handled in midpoint–radius coordinates `(m,r)`.
//! The null set `Ω = {[-k,k] : k ≥ 0}` is the column `m = 0`, and
//! `d(x,y) = |(a+b) − (c+d)|` is a pseudo-metric that vanishes exactly on
//! Ω-equal pairs. Sets of intervals are [`region::Region`]s: canonical
//! finite unions of generalized boxes in the `(m,r)` half-plane, closed
//! under every operator the topology layer needs.
//!
//! Everything is exact. Scalars are rationals; no floating point is used
//! anywhere in the crate.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod audit;
pub mod error;
pub mod function_space;
pub mod interval;
pub mod numerics;
pub mod region;
pub mod topology;

pub use error::Error;
pub use function_space::GridIntervalFunction;
pub use interval::{Interval, OmegaElement};
pub use numerics::{ExtReal, MSet, Piece, Rational};
pub use region::{Rect, Region};
pub use topology::{BallSpec, Kind};

pub type Result<T> = core::result::Result<T, Error>;
