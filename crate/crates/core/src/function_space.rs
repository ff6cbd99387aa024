//! Interval-valued functions on a finite grid with the sup-metric.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::interval::{metric_d, Interval};
use crate::numerics::Rational;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridIntervalFunction {
    grid: Vec<String>,
    values: Vec<Interval>,
}

impl GridIntervalFunction {
    pub fn new(grid: Vec<String>, values: Vec<Interval>) -> Result<Self, Error> {
        if grid.is_empty() || grid.len() != values.len() {
            return Err(Error::GridMismatch(format!("{} labels for {} values", grid.len(), values.len())));
        }
        Ok(GridIntervalFunction { grid, values })
    }

    /// Labels `t1, t2, ...`.
    pub fn on_default_grid(values: Vec<Interval>) -> Result<Self, Error> {
        let grid = (1..=values.len()).map(|i| format!("t{i}")).collect();
        Self::new(grid, values)
    }

    pub fn grid(&self) -> &[String] {
        &self.grid
    }

    pub fn values(&self) -> &[Interval] {
        &self.values
    }

    fn same_grid(&self, other: &Self) -> Result<(), Error> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch(format!("{:?} vs {:?}", self.grid, other.grid)));
        }
        Ok(())
    }

    pub fn f_add(&self, other: &Self) -> Result<Self, Error> {
        self.same_grid(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a.add(b)).collect();
        Ok(GridIntervalFunction { grid: self.grid.clone(), values })
    }

    pub fn f_scale(&self, alpha: &Rational) -> Self {
        GridIntervalFunction { grid: self.grid.clone(), values: self.values.iter().map(|v| v.scale(alpha)).collect() }
    }

    pub fn is_in_omega(&self) -> bool {
        self.values.iter().all(Interval::is_in_omega)
    }

    /// `max_t d(F(t), G(t))`.
    pub fn d_ic(&self, other: &Self) -> Result<Rational, Error> {
        self.same_grid(other)?;
        Ok(self.values.iter().zip(&other.values).map(|(a, b)| metric_d(a, b)).max().unwrap_or_default())
    }

    pub fn omega_equal(&self, other: &Self) -> Result<bool, Error> {
        self.same_grid(other)?;
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a.midpoint() == b.midpoint()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[(i64, i64)]) -> GridIntervalFunction {
        GridIntervalFunction::on_default_grid(v.iter().map(|&(a, b)| Interval::int(a, b)).collect()).unwrap()
    }

    #[test]
    fn pointwise_operations() {
        let (a, b) = (f(&[(0, 1), (2, 4)]), f(&[(1, 2), (1, 3)]));
        assert_eq!(a.f_add(&b).unwrap(), f(&[(1, 3), (3, 7)]));
        assert_eq!(a.f_scale(&Rational::one()), a);
        assert_eq!(a.f_scale(&Rational::from_integer(-1)), f(&[(-1, 0), (-4, -2)]));
    }

    #[test]
    fn sup_metric() {
        let (a, b) = (f(&[(0, 1), (2, 4)]), f(&[(1, 2), (1, 3)]));
        assert_eq!(a.d_ic(&b).unwrap(), 2.into());
        assert_eq!(a.d_ic(&a).unwrap(), 0.into());
        assert_eq!(f(&[(0, 0), (0, 0)]).d_ic(&f(&[(5, 5), (0, 0)])).unwrap(), 10.into());
    }

    #[test]
    fn null_set_and_equality() {
        assert!(f(&[(-1, 1), (-3, 3)]).is_in_omega());
        let (a, b) = (f(&[(0, 2), (0, 0)]), f(&[(1, 1), (-1, 1)]));
        assert!(a.omega_equal(&b).unwrap());
        assert_eq!(a.d_ic(&b).unwrap(), 0.into());
    }

    #[test]
    fn grid_mismatch_is_rejected() {
        let a = f(&[(0, 1)]);
        let b = f(&[(0, 1), (0, 1)]);
        assert!(matches!(a.f_add(&b), Err(Error::GridMismatch(_))));
        assert!(a.d_ic(&b).is_err());
        assert!(GridIntervalFunction::new(Vec::new(), Vec::new()).is_err());
    }
}
