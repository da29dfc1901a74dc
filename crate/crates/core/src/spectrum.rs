//! Discrete Fourier transform facility.
//!
//! Forward transform is unnormalized, inverse carries `1/n`. Bin `k` carries
//! angular frequency `grid.omega(k)`.

use std::cell::RefCell;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};
use crate::grid::{ComplexSeries, Sample, Series, TimeGrid};

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

fn forward_plan(n: usize) -> Arc<dyn Fft<f64>> {
    PLANNER.with(|p| p.borrow_mut().plan_fft_forward(n))
}

fn inverse_plan(n: usize) -> Arc<dyn Fft<f64>> {
    PLANNER.with(|p| p.borrow_mut().plan_fft_inverse(n))
}

/// In-place unnormalized forward FFT.
pub(crate) fn fft_in_place(buf: &mut [Complex64]) {
    forward_plan(buf.len()).process(buf);
}

/// In-place inverse FFT including the `1/n` factor.
pub(crate) fn ifft_in_place(buf: &mut [Complex64]) {
    inverse_plan(buf.len()).process(buf);
    let inv = 1.0 / buf.len() as f64;
    buf.iter_mut().for_each(|c| *c *= inv);
}

/// DFT bins of a series together with the grid they came from.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    grid: TimeGrid,
    bins: Vec<Complex64>,
}

impl Spectrum {
    pub fn new(grid: TimeGrid, bins: Vec<Complex64>) -> Result<Self> {
        if bins.len() != grid.len() {
            return Err(Error::LengthMismatch { expected: grid.len(), actual: bins.len() });
        }
        Ok(Self { grid, bins })
    }

    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn bins(&self) -> &[Complex64] {
        &self.bins
    }

    pub fn into_bins(self) -> Vec<Complex64> {
        self.bins
    }

    pub fn len(&self) -> usize {
        self.bins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }

    pub fn omega(&self, k: usize) -> f64 {
        self.grid.omega(k)
    }

    /// Continuous-spectrum estimate `X(omega_k) ~ dft_k * dt`.
    pub fn continuous(&self, k: usize) -> Complex64 {
        self.bins[k] * self.grid.dt()
    }

    pub fn peak_magnitude(&self) -> f64 {
        self.bins.iter().map(|b| b.norm()).fold(0.0, f64::max)
    }

    /// `|X_0| / max_k |X_k|`, zero for an all-zero spectrum.
    pub fn dc_ratio(&self) -> f64 {
        let peak = self.peak_magnitude();
        if peak == 0.0 {
            0.0
        } else {
            self.bins[0].norm() / peak
        }
    }
}

pub fn dft<T: Sample>(series: &Series<T>) -> Spectrum {
    let mut buf: Vec<Complex64> = series.values().iter().map(|v| v.to_complex()).collect();
    fft_in_place(&mut buf);
    Spectrum { grid: *series.grid(), bins: buf }
}

pub fn idft(spectrum: &Spectrum) -> ComplexSeries {
    let mut buf = spectrum.bins.clone();
    ifft_in_place(&mut buf);
    Series::from_parts_unchecked(spectrum.grid, buf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{make_grid, RealSeries};
    use std::f64::consts::PI;

    #[test]
    fn constant_series_concentrates_in_dc() {
        let g = make_grid(0.0, 1.0, 8).unwrap();
        let x = RealSeries::new(g, vec![1.0; 8]).unwrap();
        let s = dft(&x);
        assert!((s.bins()[0] - Complex64::new(8.0, 0.0)).norm() < 1e-12);
        for b in &s.bins()[1..] {
            assert!(b.norm() < 1e-12);
        }
    }

    #[test]
    fn exact_bin_cosine_has_two_bins() {
        let n = 64;
        let g = make_grid(0.0, 2.0, n).unwrap();
        let k0 = 5;
        let x = RealSeries::from_fn(g, |t| (2.0 * PI * k0 as f64 * t / g.span()).cos()).unwrap();
        let s = dft(&x);
        for (k, b) in s.bins().iter().enumerate() {
            if k == k0 || k == n - k0 {
                assert!((b.norm() - n as f64 / 2.0).abs() < 1e-10);
            } else {
                assert!(b.norm() < 1e-10, "bin {k}: {b}");
            }
        }
    }

    #[test]
    fn inverse_of_simple_spectra() {
        let g = make_grid(0.0, 1.0, 16).unwrap();
        let zero = Spectrum::new(g, vec![Complex64::new(0.0, 0.0); 16]).unwrap();
        assert!(idft(&zero).is_zero());

        let mut bins = vec![Complex64::new(0.0, 0.0); 16];
        bins[0] = Complex64::new(16.0, 0.0);
        let one = idft(&Spectrum::new(g, bins).unwrap());
        for v in one.values() {
            assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn spectrum_length_checked() {
        let g = make_grid(0.0, 1.0, 4).unwrap();
        assert!(Spectrum::new(g, vec![Complex64::new(0.0, 0.0); 2]).is_err());
    }
}
