//! Uniform sampling lattices and the series containers bound to them.
//!
//! A [`TimeGrid`] is half-open: sample `k` sits at `t_min + k * dt` for
//! `k in 0..n`, so `t_max = t_min + n * dt` is never sampled. This keeps the
//! implicit periodization of every DFT-based operation free of a duplicated
//! endpoint.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default wavelet sampling grid: `[-8, 8)` with 2048 samples.
pub const DEFAULT_WAVELET_GRID: (f64, f64, usize) = (-8.0, 8.0, 2048);

/// Default experiment grid: one second at 1 kHz.
pub const DEFAULT_SIGNAL_GRID: (f64, f64, usize) = (0.0, 1.0, 1000);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    t_min: f64,
    dt: f64,
    n: usize,
}

impl TimeGrid {
    pub fn new(t_min: f64, dt: f64, n: usize) -> Result<Self> {
        if !t_min.is_finite() {
            return Err(Error::NonFiniteBounds);
        }
        if !(dt.is_finite() && dt > 0.0) {
            return Err(Error::InvalidStep(dt));
        }
        if n < 2 {
            return Err(Error::TooFewSamples(n));
        }
        if !n.is_multiple_of(2) {
            return Err(Error::OddSampleCount(n));
        }
        Ok(Self { t_min, dt, n })
    }

    pub fn t_min(&self) -> f64 {
        self.t_min
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Exclusive upper bound of the covered interval.
    pub fn t_max(&self) -> f64 {
        self.t_min + self.n as f64 * self.dt
    }

    pub fn span(&self) -> f64 {
        self.n as f64 * self.dt
    }

    pub fn half_width(&self) -> f64 {
        0.5 * self.span()
    }

    pub fn time(&self, k: usize) -> f64 {
        self.t_min + k as f64 * self.dt
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |k| self.time(k))
    }

    /// Angular frequency carried by DFT bin `k`, folded so that bins above
    /// `n/2` are negative.
    pub fn omega(&self, k: usize) -> f64 {
        let n = self.n as f64;
        let signed = if k <= self.n / 2 { k as f64 } else { k as f64 - n };
        2.0 * std::f64::consts::PI * signed / (n * self.dt)
    }

    /// Bin spacing in rad/s.
    pub fn delta_omega(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.span()
    }

    /// True when the grid is centred on `t = 0`, i.e. `t_min = -t_max`.
    pub fn is_symmetric(&self) -> bool {
        (self.t_min + self.t_max()).abs() <= 1e-9 * self.span()
    }

    /// Index of the sample at `-t` on a symmetric grid. Sample 0 (`t_min`)
    /// maps onto itself: it stands in for both `t_min` and `t_max` under
    /// periodic extension.
    pub fn mirror_index(&self, k: usize) -> usize {
        (self.n - k) % self.n
    }

    pub(crate) fn same_as(&self, other: &TimeGrid) -> bool {
        self.n == other.n
            && (self.dt - other.dt).abs() <= 1e-12 * self.dt
            && (self.t_min - other.t_min).abs() <= 1e-12 * self.span().max(self.t_min.abs())
    }
}

/// Build a grid covering the half-open interval `[t_min, t_max)`.
pub fn make_grid(t_min: f64, t_max: f64, n: usize) -> Result<TimeGrid> {
    if !t_min.is_finite() || !t_max.is_finite() {
        return Err(Error::NonFiniteBounds);
    }
    if t_max <= t_min {
        return Err(Error::EmptyInterval { t_min, t_max });
    }
    if n < 2 {
        return Err(Error::TooFewSamples(n));
    }
    if !n.is_multiple_of(2) {
        return Err(Error::OddSampleCount(n));
    }
    TimeGrid::new(t_min, (t_max - t_min) / n as f64, n)
}

/// Scalar type a series can hold.
pub trait Sample: Copy + Send + Sync + std::fmt::Debug + 'static {
    fn to_complex(self) -> Complex64;
    fn from_complex(c: Complex64) -> Self;
    fn from_real(x: f64) -> Self;
    fn is_finite(self) -> bool;
    fn abs_sqr(self) -> f64 {
        self.to_complex().norm_sqr()
    }
    fn scale(self, s: f64) -> Self;
    fn add(self, other: Self) -> Self;
}

impl Sample for f64 {
    fn to_complex(self) -> Complex64 {
        Complex64::new(self, 0.0)
    }
    fn from_complex(c: Complex64) -> Self {
        c.re
    }
    fn from_real(x: f64) -> Self {
        x
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
    fn abs_sqr(self) -> f64 {
        self * self
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
}

impl Sample for Complex64 {
    fn to_complex(self) -> Complex64 {
        self
    }
    fn from_complex(c: Complex64) -> Self {
        c
    }
    fn from_real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
}

/// Sampled function values bound to a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Series<T> {
    grid: TimeGrid,
    values: Vec<T>,
}

pub type RealSeries = Series<f64>;
pub type ComplexSeries = Series<Complex64>;

impl<T: Sample> Series<T> {
    pub fn new(grid: TimeGrid, values: Vec<T>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::LengthMismatch { expected: grid.len(), actual: values.len() });
        }
        if let Some(k) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue(k));
        }
        Ok(Self { grid, values })
    }

    pub fn zeros(grid: TimeGrid) -> Self {
        Self { grid, values: vec![T::from_real(0.0); grid.len()] }
    }

    /// Evaluate `f(t)` at every grid time.
    pub fn from_fn(grid: TimeGrid, f: impl Fn(f64) -> T) -> Result<Self> {
        Self::new(grid, grid.times().map(f).collect())
    }

    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn peak(&self) -> f64 {
        self.values.iter().map(|v| v.abs_sqr().sqrt()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.abs_sqr() == 0.0)
    }

    pub fn to_complex(&self) -> ComplexSeries {
        Series { grid: self.grid, values: self.values.iter().map(|v| v.to_complex()).collect() }
    }

    pub fn scaled(&self, s: f64) -> Self {
        Series { grid: self.grid, values: self.values.iter().map(|v| v.scale(s)).collect() }
    }

    pub(crate) fn check_same_grid<U: Sample>(&self, other: &Series<U>) -> Result<()> {
        if self.grid.same_as(other.grid()) {
            Ok(())
        } else {
            Err(Error::GridMismatch)
        }
    }

    pub(crate) fn from_parts_unchecked(grid: TimeGrid, values: Vec<T>) -> Self {
        debug_assert_eq!(grid.len(), values.len());
        Series { grid, values }
    }
}

impl ComplexSeries {
    pub fn re(&self) -> RealSeries {
        Series::from_parts_unchecked(self.grid, self.values.iter().map(|c| c.re).collect())
    }

    pub fn im(&self) -> RealSeries {
        Series::from_parts_unchecked(self.grid, self.values.iter().map(|c| c.im).collect())
    }

    pub fn modulus(&self) -> RealSeries {
        Series::from_parts_unchecked(self.grid, self.values.iter().map(|c| c.norm()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_wavelet_grid_step() {
        let g = make_grid(-8.0, 8.0, 2048).unwrap();
        assert_eq!(g.dt(), 1.0 / 128.0);
        assert_eq!(g.time(0), -8.0);
        assert_eq!(g.time(1024), 0.0);
        assert!(g.is_symmetric());
    }

    #[test]
    fn thousand_samples_is_even() {
        let g = make_grid(0.0, 1.0, 1000).unwrap();
        assert!((g.dt() - 0.001).abs() < 1e-15);
        assert!(!g.is_symmetric());
    }

    #[test]
    fn rejects_bad_grids() {
        assert_eq!(make_grid(0.0, 1.0, 999), Err(Error::OddSampleCount(999)));
        assert_eq!(make_grid(0.0, f64::NAN, 8), Err(Error::NonFiniteBounds));
        assert!(matches!(make_grid(1.0, 1.0, 8), Err(Error::EmptyInterval { .. })));
        assert!(matches!(make_grid(2.0, 1.0, 8), Err(Error::EmptyInterval { .. })));
        assert_eq!(make_grid(0.0, 1.0, 0), Err(Error::TooFewSamples(0)));
    }

    #[test]
    fn omega_folding() {
        let g = make_grid(0.0, 8.0, 8).unwrap();
        assert_eq!(g.omega(0), 0.0);
        assert!((g.omega(1) - 2.0 * std::f64::consts::PI / 8.0).abs() < 1e-15);
        assert!(g.omega(4) > 0.0);
        assert!((g.omega(7) + 2.0 * std::f64::consts::PI / 8.0).abs() < 1e-15);
    }

    #[test]
    fn mirror_indices() {
        let g = make_grid(-4.0, 4.0, 8).unwrap();
        for k in 1..8 {
            let m = g.mirror_index(k);
            assert!((g.time(k) + g.time(m)).abs() < 1e-12);
        }
        assert_eq!(g.mirror_index(0), 0);
    }

    #[test]
    fn series_validation() {
        let g = make_grid(0.0, 1.0, 4).unwrap();
        assert!(matches!(RealSeries::new(g, vec![0.0; 3]), Err(Error::LengthMismatch { expected: 4, actual: 3 })));
        assert_eq!(RealSeries::new(g, vec![0.0, f64::INFINITY, 0.0, 0.0]), Err(Error::NonFiniteValue(1)));
    }
}
