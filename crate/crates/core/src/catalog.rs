//! The six catalog mother wavelets.
//!
//! | family      | closed form (before L2 normalization)        | symmetry |
//! |-------------|----------------------------------------------|----------|
//! | Morlet      | `cos(w0 t) exp(-t^2/2)`, `w0 = 5`             | even     |
//! | Meyer       | band-limited, defined by its spectrum        | even     |
//! | Mexican hat | `(1 - t^2) exp(-t^2/2)`                      | even     |
//! | Gaussian-1  | `d/dt exp(-t^2) = -2t exp(-t^2)`             | odd      |
//! | Gaussian-2  | `d2/dt2 exp(-t^2) = (4t^2 - 2) exp(-t^2)`    | even     |
//! | Gaussian-3  | `d3/dt3 exp(-t^2) = (-8t^3 + 12t) exp(-t^2)` | odd      |
//!
//! The cosine-Gaussian Morlet is not exactly zero-mean: its DC bin sits at
//! `2 exp(-w0^2/2)` of the spectral peak (about 7.5e-6 for `w0 = 5`).

use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{RealSeries, Series, TimeGrid};
use crate::spectrum::ifft_in_place;

pub const DEFAULT_OMEGA0: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WaveletFamily {
    Morlet,
    Meyer,
    MexicanHat,
    Gaussian1,
    Gaussian2,
    Gaussian3,
}

impl WaveletFamily {
    pub const ALL: [WaveletFamily; 6] = [
        WaveletFamily::Morlet,
        WaveletFamily::Meyer,
        WaveletFamily::MexicanHat,
        WaveletFamily::Gaussian1,
        WaveletFamily::Gaussian2,
        WaveletFamily::Gaussian3,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            WaveletFamily::Morlet => "morlet",
            WaveletFamily::Meyer => "meyer",
            WaveletFamily::MexicanHat => "mexhat",
            WaveletFamily::Gaussian1 => "gaus1",
            WaveletFamily::Gaussian2 => "gaus2",
            WaveletFamily::Gaussian3 => "gaus3",
        }
    }

    /// Whether the mother wavelet is even (`true`) or odd (`false`) about 0.
    pub fn is_even(&self) -> bool {
        !matches!(self, WaveletFamily::Gaussian1 | WaveletFamily::Gaussian3)
    }
}

impl fmt::Display for WaveletFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WaveletFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase();
        match key.as_str() {
            "morlet" | "morl" => Ok(WaveletFamily::Morlet),
            "meyer" | "meyr" => Ok(WaveletFamily::Meyer),
            "mexhat" | "mexh" | "mexicanhat" | "ricker" => Ok(WaveletFamily::MexicanHat),
            "gaus1" | "gaussian1" => Ok(WaveletFamily::Gaussian1),
            "gaus2" | "gaussian2" => Ok(WaveletFamily::Gaussian2),
            "gaus3" | "gaussian3" => Ok(WaveletFamily::Gaussian3),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// A mother-wavelet recipe that can be sampled onto any grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveletSpec {
    family: WaveletFamily,
    omega0: f64,
}

impl WaveletSpec {
    pub fn new(family: WaveletFamily) -> Self {
        Self { family, omega0: DEFAULT_OMEGA0 }
    }

    /// Morlet with a custom centre frequency (rad per unit time).
    pub fn morlet(omega0: f64) -> Result<Self> {
        Self::new(WaveletFamily::Morlet).with_omega0(omega0)
    }

    /// Set the Morlet centre frequency. Ignored by the other families, but
    /// still validated.
    pub fn with_omega0(mut self, omega0: f64) -> Result<Self> {
        if !(omega0.is_finite() && omega0 > 0.0) {
            return Err(Error::InvalidParameter(format!("omega0 must be positive and finite, got {omega0}")));
        }
        self.omega0 = omega0;
        Ok(self)
    }

    /// Build from a family name and named parameters (`omega0` only).
    pub fn from_params(family: &str, params: &[(&str, f64)]) -> Result<Self> {
        let mut spec = Self::new(family.parse()?);
        for &(name, value) in params {
            match name {
                "omega0" | "w0" => spec = spec.with_omega0(value)?,
                other => return Err(Error::InvalidParameter(format!("unknown parameter `{other}`"))),
            }
        }
        Ok(spec)
    }

    pub fn family(&self) -> WaveletFamily {
        self.family
    }

    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    /// Unnormalized closed form. `None` for Meyer, which has no time-domain
    /// expression.
    pub fn closed_form(&self, t: f64) -> Option<f64> {
        let t2 = t * t;
        let v = match self.family {
            WaveletFamily::Morlet => (self.omega0 * t).cos() * (-0.5 * t2).exp(),
            WaveletFamily::MexicanHat => (1.0 - t2) * (-0.5 * t2).exp(),
            WaveletFamily::Gaussian1 => -2.0 * t * (-t2).exp(),
            WaveletFamily::Gaussian2 => (4.0 * t2 - 2.0) * (-t2).exp(),
            WaveletFamily::Gaussian3 => (-8.0 * t2 * t + 12.0 * t) * (-t2).exp(),
            WaveletFamily::Meyer => return None,
        };
        Some(v)
    }

    /// Exact L2 energy of the unnormalized form over the real line.
    pub fn analytic_energy(&self) -> f64 {
        let sqrt_pi = PI.sqrt();
        let sqrt_half_pi = (0.5 * PI).sqrt();
        match self.family {
            WaveletFamily::Morlet => 0.5 * sqrt_pi * (1.0 + (-self.omega0 * self.omega0).exp()),
            WaveletFamily::MexicanHat => 0.75 * sqrt_pi,
            WaveletFamily::Gaussian1 => sqrt_half_pi,
            WaveletFamily::Gaussian2 => 3.0 * sqrt_half_pi,
            WaveletFamily::Gaussian3 => 15.0 * sqrt_half_pi,
            WaveletFamily::Meyer => 1.0,
        }
    }

    /// Unit-energy wavelet value; `None` for Meyer.
    pub fn normalized(&self, t: f64) -> Option<f64> {
        self.closed_form(t).map(|v| v / self.analytic_energy().sqrt())
    }

    /// Fourier transform of the unit-energy wavelet, `int psi(t) e^{-jwt} dt`.
    pub fn spectrum(&self, omega: f64) -> Complex64 {
        let w2 = omega * omega;
        let norm = 1.0 / self.analytic_energy().sqrt();
        let sqrt_pi = PI.sqrt();
        let j = Complex64::new(0.0, 1.0);
        match self.family {
            WaveletFamily::Meyer => Complex64::new(meyer_spectrum(omega), 0.0),
            WaveletFamily::Morlet => {
                let w0 = self.omega0;
                let g = |w: f64| (-0.5 * w * w).exp();
                Complex64::new(norm * (0.5 * PI).sqrt() * (g(omega - w0) + g(omega + w0)), 0.0)
            }
            WaveletFamily::MexicanHat => Complex64::new(norm * (2.0 * PI).sqrt() * w2 * (-0.5 * w2).exp(), 0.0),
            WaveletFamily::Gaussian1 => j * omega * sqrt_pi * (-0.25 * w2).exp() * norm,
            WaveletFamily::Gaussian2 => -w2 * sqrt_pi * (-0.25 * w2).exp() * norm * Complex64::new(1.0, 0.0),
            WaveletFamily::Gaussian3 => -j * w2 * omega * sqrt_pi * (-0.25 * w2).exp() * norm,
        }
    }

    /// Centre frequency in cycles per unit time: the peak of `|Psi|`.
    pub fn center_frequency(&self) -> f64 {
        let peak_omega = match self.family {
            WaveletFamily::Morlet => self.omega0,
            WaveletFamily::Meyer => 4.0 * PI / 3.0,
            WaveletFamily::MexicanHat => SQRT_2,
            WaveletFamily::Gaussian1 => 2f64.sqrt(),
            WaveletFamily::Gaussian2 => 4f64.sqrt(),
            WaveletFamily::Gaussian3 => 6f64.sqrt(),
        };
        peak_omega / (2.0 * PI)
    }

    /// Half-width (in unit time) beyond which the wavelet is negligible.
    pub fn effective_radius(&self) -> f64 {
        match self.family {
            WaveletFamily::Morlet => 5.3,
            WaveletFamily::MexicanHat => 6.0,
            WaveletFamily::Gaussian1 | WaveletFamily::Gaussian2 | WaveletFamily::Gaussian3 => 4.5,
            WaveletFamily::Meyer => 8.0,
        }
    }

    /// Samples of the unit-energy wavelet dilated by `scale` samples,
    /// `psi(m / scale)`, periodized over `n` samples and stored at circular
    /// offset index (`m = 0` at index 0, negative offsets at the end).
    ///
    /// Closed forms are re-evaluated at every offset; Meyer is built from
    /// its dilated spectrum.
    pub fn dilated_periodic(&self, n: usize, scale: f64) -> Vec<f64> {
        match self.family {
            WaveletFamily::Meyer => {
                let mut bins: Vec<Complex64> = (0..n)
                    .map(|k| {
                        let nu = 2.0 * PI * signed_index(k, n) / n as f64;
                        let mut acc = 0.0;
                        for p in alias_range(nu, 2.0 * PI, 8.0 * PI / (3.0 * scale)) {
                            acc += meyer_spectrum(scale * (nu + 2.0 * PI * p as f64));
                        }
                        Complex64::new(scale * acc, 0.0)
                    })
                    .collect();
                ifft_in_place(&mut bins);
                bins.into_iter().map(|c| c.re).collect()
            }
            _ => {
                // Gaussian envelopes are below 1e-30 beyond 12 units.
                let reach = 12.0 * scale;
                let wraps = (reach / n as f64).ceil() as i64 + 1;
                (0..n)
                    .map(|k| {
                        let m = signed_index(k, n);
                        (-wraps..=wraps)
                            .map(|p| m + (p * n as i64) as f64)
                            .filter(|u| u.abs() <= reach)
                            .map(|u| self.normalized(u / scale).unwrap_or(0.0))
                            .sum()
                    })
                    .collect()
            }
        }
    }
}

impl Default for WaveletSpec {
    fn default() -> Self {
        Self::new(WaveletFamily::MexicanHat)
    }
}

fn signed_index(k: usize, n: usize) -> f64 {
    if k < n / 2 {
        k as f64
    } else {
        k as f64 - n as f64
    }
}

/// Alias indices `p` with `|base + p * period| <= reach`.
fn alias_range(base: f64, period: f64, reach: f64) -> std::ops::RangeInclusive<i64> {
    let lo = ((-reach - base) / period).ceil() as i64;
    let hi = ((reach - base) / period).floor() as i64;
    lo..=hi
}

/// Meyer auxiliary polynomial, clamped to `[0, 1]`.
fn meyer_nu(x: f64) -> f64 {
    let x = x.clamp(0.0, 1.0);
    x.powi(4) * (35.0 - 84.0 * x + 70.0 * x * x - 20.0 * x * x * x)
}

/// Real, even Meyer spectrum with unit time-domain energy.
fn meyer_spectrum(omega: f64) -> f64 {
    let w = omega.abs();
    let lo = 2.0 * PI / 3.0;
    let mid = 4.0 * PI / 3.0;
    let hi = 8.0 * PI / 3.0;
    if w < lo || w > hi {
        0.0
    } else if w <= mid {
        (0.5 * PI * meyer_nu(3.0 * w / (2.0 * PI) - 1.0)).sin()
    } else {
        (0.5 * PI * meyer_nu(3.0 * w / (4.0 * PI) - 1.0)).cos()
    }
}

/// Sample `spec` on `grid`, normalized to unit sampled energy.
pub fn sample_wavelet(spec: &WaveletSpec, grid: &TimeGrid) -> Result<RealSeries> {
    let raw: Vec<f64> = match spec.family {
        WaveletFamily::Meyer => sample_meyer(grid),
        _ => grid.times().map(|t| spec.closed_form(t).unwrap_or(0.0)).collect(),
    };
    let energy: f64 = raw.iter().map(|v| v * v).sum::<f64>() * grid.dt();
    if !(energy.is_finite() && energy > 0.0) {
        return Err(Error::InvalidParameter(format!("{} has no resolvable energy on this grid", spec.family)));
    }
    let inv = 1.0 / energy.sqrt();
    Series::new(*grid, raw.into_iter().map(|v| v * inv).collect())
}

/// Evaluate the Meyer spectrum on the grid's DFT bins (with aliases) and
/// invert. The imaginary residue is discarded.
fn sample_meyer(grid: &TimeGrid) -> Vec<f64> {
    let n = grid.len();
    let dt = grid.dt();
    let t_min = grid.t_min();
    let sample_rate = 2.0 * PI / dt;
    let mut bins: Vec<Complex64> = (0..n)
        .map(|k| {
            let base = grid.omega(k);
            let mut acc = Complex64::new(0.0, 0.0);
            for p in alias_range(base, sample_rate, 8.0 * PI / 3.0) {
                let w = base + p as f64 * sample_rate;
                acc += meyer_spectrum(w) * Complex64::from_polar(1.0, w * t_min);
            }
            acc / dt
        })
        .collect();
    ifft_in_place(&mut bins);
    bins.into_iter().map(|c| c.re).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;
    use crate::spectrum::dft;

    fn default_grid() -> TimeGrid {
        make_grid(-8.0, 8.0, 2048).unwrap()
    }

    fn energy(x: &RealSeries) -> f64 {
        x.values().iter().map(|v| v * v).sum::<f64>() * x.grid().dt()
    }

    #[test]
    fn family_names_round_trip() {
        for f in WaveletFamily::ALL {
            assert_eq!(f.name().parse::<WaveletFamily>().unwrap(), f);
        }
        assert_eq!("Mexican-Hat".parse::<WaveletFamily>().unwrap(), WaveletFamily::MexicanHat);
        assert!(matches!("haar".parse::<WaveletFamily>(), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn invalid_omega0_rejected() {
        assert!(WaveletSpec::morlet(0.0).is_err());
        assert!(WaveletSpec::morlet(f64::NAN).is_err());
        assert!(WaveletSpec::from_params("morlet", &[("sigma", 1.0)]).is_err());
        let s = WaveletSpec::from_params("morlet", &[("omega0", 6.0)]).unwrap();
        assert_eq!(s.omega0(), 6.0);
    }

    #[test]
    fn mexican_hat_raw_energy_matches_gaussian_moment_integral() {
        // int (1 - t^2)^2 exp(-t^2) dt = 3 sqrt(pi) / 4
        let g = default_grid();
        let spec = WaveletSpec::new(WaveletFamily::MexicanHat);
        let raw = RealSeries::from_fn(g, |t| spec.closed_form(t).unwrap()).unwrap();
        let oracle = 3.0 * PI.sqrt() / 4.0;
        assert!((energy(&raw) - oracle).abs() < 1e-12 * oracle);
        let x = sample_wavelet(&spec, &g).unwrap();
        assert!((energy(&x) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn analytic_energies_match_sampled_raw_energies() {
        let g = default_grid();
        for f in WaveletFamily::ALL {
            let spec = WaveletSpec::new(f);
            let e = match f {
                WaveletFamily::Meyer => continue,
                _ => energy(&RealSeries::from_fn(g, |t| spec.closed_form(t).unwrap()).unwrap()),
            };
            assert!((e / spec.analytic_energy() - 1.0).abs() < 1e-12, "{f}");
        }
    }

    #[test]
    fn unit_energy_and_symmetry_for_all_families() {
        let g = default_grid();
        for f in WaveletFamily::ALL {
            let x = sample_wavelet(&WaveletSpec::new(f), &g).unwrap();
            assert!((energy(&x) - 1.0).abs() < 1e-9, "{f}");
            let sign = if f.is_even() { 1.0 } else { -1.0 };
            let peak = x.peak();
            for k in 1..g.len() {
                let m = g.mirror_index(k);
                let d = (x.values()[k] - sign * x.values()[m]).abs();
                assert!(d <= 1e-9 * peak, "{f} k={k} d={d}");
            }
        }
    }

    #[test]
    fn morlet_dc_is_small() {
        // |Psi(0)| / max_k |Psi(w_k)|; the continuous ratio is 2 exp(-12.5)
        // but the sampled peak falls between bins.
        let g = default_grid();
        let spec = WaveletSpec::new(WaveletFamily::Morlet);
        let x = sample_wavelet(&spec, &g).unwrap();
        let r = dft(&x).dc_ratio();
        let peak = (0..g.len()).map(|k| spec.spectrum(g.omega(k)).norm()).fold(0.0, f64::max);
        let oracle = spec.spectrum(0.0).norm() / peak;
        assert!(r < 1e-5);
        assert!((r - oracle).abs() < 1e-3 * oracle, "{r} vs {oracle}");
    }

    #[test]
    fn meyer_sampling_is_real_and_band_limited() {
        let g = default_grid();
        let x = sample_wavelet(&WaveletSpec::new(WaveletFamily::Meyer), &g).unwrap();
        let s = dft(&x);
        let peak = s.peak_magnitude();
        for k in 0..g.len() {
            let w = g.omega(k).abs();
            if !(2.0 * PI / 3.0 - 1e-9..=8.0 * PI / 3.0 + 1e-9).contains(&w) {
                assert!(s.bins()[k].norm() < 1e-12 * peak);
            }
        }
    }

    #[test]
    fn closed_form_spectra_match_dft() {
        let g = default_grid();
        for f in WaveletFamily::ALL {
            let spec = WaveletSpec::new(f);
            let x = RealSeries::from_fn(g, |t| spec.normalized(t).unwrap_or(0.0)).unwrap();
            if f == WaveletFamily::Meyer {
                continue;
            }
            let s = dft(&x);
            for k in [1usize, 7, 30, 64, 2040] {
                // shift to t = 0 reference
                let w = g.omega(k);
                let shifted = s.continuous(k) * Complex64::from_polar(1.0, w * g.t_min());
                let want = spec.spectrum(w);
                assert!((shifted - want).norm() < 1e-9, "{f} k={k}: {shifted} vs {want}");
            }
        }
    }

    #[test]
    fn dilated_periodic_matches_direct_evaluation_for_small_scales() {
        let spec = WaveletSpec::new(WaveletFamily::MexicanHat);
        let n = 1000;
        let h = spec.dilated_periodic(n, 4.0);
        assert!((h[0] - spec.normalized(0.0).unwrap()).abs() < 1e-15);
        assert!((h[3] - spec.normalized(0.75).unwrap()).abs() < 1e-15);
        assert!((h[n - 3] - spec.normalized(-0.75).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn dilated_periodic_spectrum_samples_continuous_spectrum() {
        // DFT of the periodized samples equals scale * Psi(scale * nu).
        for f in WaveletFamily::ALL {
            let spec = WaveletSpec::new(f);
            let n = 512;
            let scale = 9.0;
            let h: Vec<Complex64> =
                spec.dilated_periodic(n, scale).into_iter().map(|v| Complex64::new(v, 0.0)).collect();
            let mut buf = h;
            crate::spectrum::fft_in_place(&mut buf);
            for k in [0usize, 3, 20, 60, 500] {
                let nu = 2.0 * PI * signed_index(k, n) / n as f64;
                let want = spec.spectrum(scale * nu) * scale;
                assert!((buf[k] - want).norm() < 1e-9, "{f} k={k}: {} vs {}", buf[k], want);
            }
        }
    }
}
