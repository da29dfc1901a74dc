//! Continuous wavelet transform by spectral cross-correlation.
//!
//! For scale `a` (in samples) and translation `b`:
//!
//! ```text
//! C[a, b] = dt / sqrt(a) * sum_t f(t) conj(k_a(t - b))
//! ```
//!
//! where `k_a` is the analyzing kernel dilated by `a` samples and periodized
//! over the signal length. The correlation is evaluated as
//! `idft(dft(f) * conj(dft(k_a)))`, so the transform is circular. A ridge at
//! scale `a` maps to `f_c / (a * dt)` Hz where `f_c` is the wavelet's centre
//! frequency.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::catalog::WaveletSpec;
use crate::error::{Error, Result};
use crate::grid::{ComplexSeries, RealSeries, Series, TimeGrid};
use crate::kernels::{build_kernel_ungated, KernelKind};
use crate::spectral::hilbert;
use crate::spectrum::{fft_in_place, ifft_in_place};
use crate::tolerances::IMAGINARY_RESIDUE;

/// Strictly increasing positive scales, in samples.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleRange {
    scales: Vec<f64>,
}

impl ScaleRange {
    pub fn new(scales: Vec<f64>) -> Result<Self> {
        if scales.is_empty() {
            return Err(Error::InvalidScales("no scales".into()));
        }
        if let Some(a) = scales.iter().find(|a| !(a.is_finite() && **a > 0.0)) {
            return Err(Error::InvalidScales(format!("scale {a} is not positive and finite")));
        }
        if scales.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidScales("scales must be strictly increasing".into()));
        }
        Ok(Self { scales })
    }

    /// `first, first + step, ...` up to and including `last` (within 1e-9).
    pub fn linear(first: f64, last: f64, step: f64) -> Result<Self> {
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::InvalidScales(format!("step must be positive, got {step}")));
        }
        if !(first.is_finite() && last.is_finite()) || last < first {
            return Err(Error::InvalidScales(format!("bad bounds {first}..{last}")));
        }
        let count = ((last - first) / step + 1e-9).floor() as usize + 1;
        Self::new((0..count).map(|i| first + i as f64 * step).collect())
    }

    pub fn scales(&self) -> &[f64] {
        &self.scales
    }

    pub fn len(&self) -> usize {
        self.scales.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scales.is_empty()
    }

    pub fn position(&self, scale: f64) -> Option<usize> {
        self.scales.iter().position(|a| (a - scale).abs() <= 1e-9 * a.max(1.0))
    }
}

impl FromStr for ScaleRange {
    type Err = Error;

    /// `a1..a2` or `a1..a2:step` (default step 1).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidScales(format!("expected a1..a2[:step], got `{s}`"));
        let (range, step) = match s.split_once(':') {
            Some((r, st)) => (r, st.trim().parse::<f64>().map_err(|_| bad())?),
            None => (s, 1.0),
        };
        let (a1, a2) = range.split_once("..").ok_or_else(bad)?;
        let a1 = a1.trim().parse::<f64>().map_err(|_| bad())?;
        let a2 = a2.trim().parse::<f64>().map_err(|_| bad())?;
        Self::linear(a1, a2, step)
    }
}

/// Which function of the mother wavelet analyzes the signal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Wavelet,
    Hilbert,
    Kernel(KernelKind),
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::Wavelet => "wavelet",
            Variant::Hilbert => "hilbert",
            Variant::Kernel(k) => k.name(),
        }
    }

    pub fn is_complex(&self) -> bool {
        matches!(self, Variant::Kernel(k) if k.is_complex())
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "wavelet" | "psi" => Ok(Variant::Wavelet),
            "hilbert" => Ok(Variant::Hilbert),
            other => other.parse().map(Variant::Kernel),
        }
    }
}

/// A wavelet family plus the variant used to analyze with it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Recipe {
    pub spec: WaveletSpec,
    pub variant: Variant,
}

impl Recipe {
    pub fn new(spec: WaveletSpec, variant: Variant) -> Self {
        Self { spec, variant }
    }

    /// Kernel dilated by `scale` samples on an `n`-sample circle, offset 0 at
    /// index 0.
    pub fn dilated_kernel(&self, n: usize, scale: f64) -> Result<ComplexSeries> {
        let offsets = TimeGrid::new(0.0, 1.0, n)?;
        let psi = RealSeries::new(offsets, self.spec.dilated_periodic(n, scale))?;
        Ok(match self.variant {
            Variant::Wavelet => psi.to_complex(),
            Variant::Hilbert => hilbert(&psi)?.to_complex(),
            Variant::Kernel(kind) => build_kernel_ungated(&psi, kind)?,
        })
    }
}

/// Matrix of CWT coefficients, `coeffs[scale index][translation index]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Scalogram {
    scales: ScaleRange,
    grid: TimeGrid,
    coeffs: Vec<Vec<Complex64>>,
    support_exceeds_span: Vec<bool>,
    center_frequency: f64,
    is_real: bool,
}

impl Scalogram {
    /// Assemble from raw rows, e.g. after reading a CSV back.
    pub fn from_rows(
        scales: ScaleRange,
        grid: TimeGrid,
        coeffs: Vec<Vec<Complex64>>,
        center_frequency: f64,
    ) -> Result<Self> {
        if coeffs.len() != scales.len() {
            return Err(Error::LengthMismatch { expected: scales.len(), actual: coeffs.len() });
        }
        for row in &coeffs {
            if row.len() != grid.len() {
                return Err(Error::LengthMismatch { expected: grid.len(), actual: row.len() });
            }
            if let Some(k) = row.iter().position(|c| !(c.re.is_finite() && c.im.is_finite())) {
                return Err(Error::NonFiniteValue(k));
            }
        }
        let is_real = coeffs.iter().flatten().all(|c| c.im == 0.0);
        Ok(Self { support_exceeds_span: vec![false; scales.len()], scales, grid, coeffs, center_frequency, is_real })
    }

    pub fn scales(&self) -> &ScaleRange {
        &self.scales
    }

    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn rows(&self) -> &[Vec<Complex64>] {
        &self.coeffs
    }

    pub fn is_real(&self) -> bool {
        self.is_real
    }

    pub fn center_frequency(&self) -> f64 {
        self.center_frequency
    }

    /// Per-row flag: the dilated kernel is wider than the signal.
    pub fn support_warnings(&self) -> &[bool] {
        &self.support_exceeds_span
    }

    /// Mean squared modulus of each row.
    pub fn row_power(&self) -> Vec<f64> {
        self.coeffs.iter().map(|row| row.iter().map(|c| c.norm_sqr()).sum::<f64>() / row.len() as f64).collect()
    }

    /// Apply `f` to every coefficient.
    pub fn map(&self, f: impl Fn(Complex64) -> f64) -> Vec<Vec<f64>> {
        self.coeffs.iter().map(|row| row.iter().map(|&c| f(c)).collect()).collect()
    }

    /// Frequency in Hz associated with a scale.
    pub fn frequency_of(&self, scale: f64) -> f64 {
        self.center_frequency / (scale * self.grid.dt())
    }
}

/// Continuous wavelet transform of `f` over `scales`.
pub fn cwt(f: &RealSeries, recipe: &Recipe, scales: &ScaleRange) -> Result<Scalogram> {
    let grid = *f.grid();
    let n = grid.len();
    let mut signal_bins: Vec<Complex64> = f.values().iter().map(|&v| Complex64::new(v, 0.0)).collect();
    fft_in_place(&mut signal_bins);
    let signal_norm = f.values().iter().map(|v| v * v).sum::<f64>().sqrt();

    let rows: Vec<Vec<Complex64>> = scales
        .scales()
        .par_iter()
        .map(|&a| -> Result<Vec<Complex64>> {
            let mut kernel = recipe.dilated_kernel(n, a)?.into_values();
            let kernel_norm = kernel.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            fft_in_place(&mut kernel);
            let mut row: Vec<Complex64> = signal_bins.iter().zip(&kernel).map(|(s, k)| s * k.conj()).collect();
            ifft_in_place(&mut row);
            let gain = grid.dt() / a.sqrt();
            row.iter_mut().for_each(|c| *c *= gain);
            if !recipe.variant.is_complex() {
                // Measured against the Cauchy-Schwarz bound on any coefficient,
                // not the row peak, which can itself be rounding noise.
                let bound = gain * signal_norm * kernel_norm;
                let residue = row.iter().map(|c| c.im.abs()).fold(0.0, f64::max);
                if bound > 0.0 && residue > IMAGINARY_RESIDUE * bound {
                    return Err(Error::NonNegligibleImaginaryResidue {
                        ratio: residue / bound,
                        limit: IMAGINARY_RESIDUE,
                    });
                }
                row.iter_mut().for_each(|c| c.im = 0.0);
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;

    let radius = recipe.spec.effective_radius();
    let support_exceeds_span = scales.scales().iter().map(|a| 2.0 * radius * a > n as f64).collect();

    Ok(Scalogram {
        scales: scales.clone(),
        grid,
        coeffs: rows,
        support_exceeds_span,
        center_frequency: recipe.spec.center_frequency(),
        is_real: !recipe.variant.is_complex(),
    })
}

/// The row `C[a, .]`.
pub fn level_slice(s: &Scalogram, scale: f64) -> Result<ComplexSeries> {
    let i = s.scales.position(scale).ok_or(Error::UnknownScale(scale))?;
    Series::new(s.grid, s.coeffs[i].clone())
}

/// `|x_k| / max |x|`.
pub fn normalized_modulus(x: &ComplexSeries) -> Result<RealSeries> {
    let peak = x.peak();
    if peak == 0.0 {
        return Err(Error::AllZero);
    }
    Series::new(*x.grid(), x.values().iter().map(|c| c.norm() / peak).collect())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ridge {
    pub scale: f64,
    pub frequency_hz: f64,
    pub mean_power: f64,
}

/// The `top_k` strongest ridges: scales whose row power is a local maximum
/// along the scale axis, ranked by row power. All-zero rows never form a
/// ridge, so a zero signal yields an empty list.
pub fn ridge_frequencies(s: &Scalogram, top_k: usize) -> Result<Vec<Ridge>> {
    let available = s.scales.len();
    if top_k > available {
        return Err(Error::TopKExceedsScales { top_k, available });
    }
    let power = s.row_power();
    let mut peaks: Vec<usize> = (0..available)
        .filter(|&i| power[i] > 0.0)
        .filter(|&i| i == 0 || power[i] >= power[i - 1])
        .filter(|&i| i + 1 == available || power[i] > power[i + 1])
        .collect();
    peaks.sort_by(|&a, &b| power[b].total_cmp(&power[a]));
    Ok(peaks
        .into_iter()
        .take(top_k)
        .map(|i| {
            let scale = s.scales.scales()[i];
            Ridge { scale, frequency_hz: s.frequency_of(scale), mean_power: power[i] }
        })
        .collect())
}

/// Time at which a fine-scale normalized modulus takes over from a
/// coarse-scale one: the first sample where `coarse < level` and
/// `fine > level` hold together after a sample where they did not.
pub fn locate_frequency_break(fine: &RealSeries, coarse: &RealSeries, level: f64) -> Result<Option<f64>> {
    fine.check_same_grid(coarse)?;
    let holds = |k: usize| coarse.values()[k] < level && fine.values()[k] > level;
    Ok((1..fine.len()).find(|&k| holds(k) && !holds(k - 1)).map(|k| fine.grid().time(k)))
}
