//! Hilbert transform via the `-j sgn(w)` spectral multiplier.
//!
//! Sign convention: `H{cos} = sin` and `H{sin} = -cos`, which is what the
//! multiplier `-j sgn(w)` gives with the forward transform
//! `X(w) = int x(t) e^{-jwt} dt`. DC and Nyquist bins are zeroed.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{RealSeries, Series};
use crate::spectrum::{dft, idft, Spectrum};
use crate::tolerances::IMAGINARY_RESIDUE;

/// Per-bin factor of the Hilbert transform on `n` bins.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HilbertMultiplier {
    n: usize,
}

impl HilbertMultiplier {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewSamples(n));
        }
        if !n.is_multiple_of(2) {
            return Err(Error::OddSampleCount(n));
        }
        Ok(Self { n })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `-j` on positive bins, `+j` on negative bins, zero at DC and Nyquist.
    pub fn factor(&self, k: usize) -> Complex64 {
        let half = self.n / 2;
        if k == 0 || k == half {
            Complex64::new(0.0, 0.0)
        } else if k < half {
            Complex64::new(0.0, -1.0)
        } else {
            Complex64::new(0.0, 1.0)
        }
    }
}

pub fn apply_multiplier(spectrum: &Spectrum, multiplier: &HilbertMultiplier) -> Result<Spectrum> {
    if spectrum.len() != multiplier.len() {
        return Err(Error::LengthMismatch { expected: multiplier.len(), actual: spectrum.len() });
    }
    let bins = spectrum.bins().iter().enumerate().map(|(k, b)| b * multiplier.factor(k)).collect();
    Spectrum::new(*spectrum.grid(), bins)
}

/// Hilbert transform of a real series.
pub fn hilbert(x: &RealSeries) -> Result<RealSeries> {
    let m = HilbertMultiplier::new(x.len())?;
    let y = idft(&apply_multiplier(&dft(x), &m)?);
    discard_imaginary(y.grid(), y.values(), IMAGINARY_RESIDUE)
}

/// Keep the real part after checking the imaginary residue against
/// `limit * peak`.
pub(crate) fn discard_imaginary(grid: &crate::grid::TimeGrid, values: &[Complex64], limit: f64) -> Result<RealSeries> {
    let peak = values.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let residue = values.iter().map(|c| c.im.abs()).fold(0.0, f64::max);
    if peak > 0.0 && residue > limit * peak {
        return Err(Error::NonNegligibleImaginaryResidue { ratio: residue / peak, limit });
    }
    Series::new(*grid, values.iter().map(|c| c.re).collect())
}
