//! Numerical checks that a wavelet and everything derived from it share
//! energy, admissibility and vanishing moments, and that the derived
//! kernels have the expected spectral shape.

use std::f64::consts::{FRAC_PI_4, PI};
use std::fmt::Write as _;

use crate::catalog::{sample_wavelet, WaveletSpec};
use crate::error::{Error, Result};
use crate::grid::{ComplexSeries, RealSeries, Sample, Series, TimeGrid};
use crate::kernels::{analytic, fourier_like, hartley_like, HartleySign};
use crate::metrics::{
    admissibility, dc_magnitude_ratio, energy, inner_product, symmetry, vanishing_moments_default, SymmetryClass,
};
use crate::spectral::hilbert;
use crate::spectrum::dft;
use crate::tolerances::*;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub limit: f64,
    pub passed: bool,
}

impl Check {
    /// Passes when `measured <= limit`.
    fn at_most(name: impl Into<String>, measured: f64, limit: f64) -> Self {
        Self { name: name.into(), measured, limit, passed: measured <= limit }
    }

    /// Passes when `measured >= limit`.
    fn at_least(name: impl Into<String>, measured: f64, limit: f64) -> Self {
        Self { name: name.into(), measured, limit, passed: measured >= limit }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub label: String,
    pub checks: Vec<Check>,
    /// Errors that prevented some checks from running.
    pub errors: Vec<Error>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.errors.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn to_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
        let mut out = format!("verify {}\n", self.label);
        let _ = writeln!(out, "{:<width$}  {:>12}  {:>12}  result", "check", "measured", "limit");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<width$}  {:>12.4e}  {:>12.4e}  {}",
                c.name,
                c.measured,
                c.limit,
                if c.passed { "PASS" } else { "FAIL" }
            );
        }
        for e in &self.errors {
            let _ = writeln!(out, "error: {e}");
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count() + self.errors.len();
        let _ =
            writeln!(out, "{}", if failed == 0 { "all checks passed".to_string() } else { format!("{failed} failed") });
        out
    }
}

/// Energy of `x` on the suppressed half of the spectrum, relative to its
/// total energy. `keep_positive` selects which half should carry the energy.
pub fn half_spectrum_leak(x: &ComplexSeries, keep_positive: bool) -> f64 {
    let s = dft(x);
    let n = s.len();
    let total: f64 = s.bins().iter().map(|b| b.norm_sqr()).sum();
    if total == 0.0 {
        return 0.0;
    }
    let suppressed = |k: usize| if keep_positive { k > n / 2 } else { k > 0 && k < n / 2 };
    let leak: f64 = (0..n).filter(|&k| suppressed(k)).map(|k| s.bins()[k].norm_sqr()).sum();
    leak / total
}

/// Largest per-bin magnitude mismatch (relative to the peak of `psi`'s
/// spectrum) and phase error (radians) of a Hartley kernel against the
/// expected offset `-pi/4 sgn(w)` for `Plus` and `+pi/4 sgn(w)` for `Minus`.
/// Bins at or below `floor * peak`, DC and Nyquist are skipped.
pub fn hartley_spectral_errors(psi: &RealSeries, kernel: &RealSeries, sign: HartleySign, floor: f64) -> (f64, f64) {
    let p = dft(psi);
    let h = dft(kernel);
    let n = p.len();
    let peak = p.peak_magnitude();
    let base = match sign {
        HartleySign::Plus => -FRAC_PI_4,
        HartleySign::Minus => FRAC_PI_4,
    };
    let mut mag = 0.0f64;
    let mut phase = 0.0f64;
    for k in (1..n).filter(|&k| k != n / 2) {
        let (pk, hk) = (p.bins()[k], h.bins()[k]);
        mag = mag.max((hk.norm() - pk.norm()).abs() / peak);
        if pk.norm() <= floor * peak {
            continue;
        }
        let expected = base * p.omega(k).signum();
        let mut d = (hk / pk).arg() - expected;
        d = (d + PI).rem_euclid(2.0 * PI) - PI;
        phase = phase.max(d.abs());
    }
    (mag, phase)
}

fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        (a - b).abs()
    } else {
        ((a - b) / b).abs()
    }
}

fn preservation<T: Sample>(
    checks: &mut Vec<Check>,
    errors: &mut Vec<Error>,
    label: &str,
    derived: &Series<T>,
    base_energy: f64,
    base_adm: f64,
    base_moments: u32,
) {
    checks.push(Check::at_most(format!("energy {label}"), rel(energy(derived), base_energy), ENERGY_REL));
    match admissibility(derived) {
        Ok(c) => checks.push(Check::at_most(format!("admissibility {label}"), rel(c, base_adm), ADMISSIBILITY_REL)),
        Err(e) => errors.push(e),
    }
    checks.push(Check::at_least(
        format!("moments {label}"),
        vanishing_moments_default(derived) as f64,
        base_moments as f64,
    ));
}

/// Run every check on an already sampled wavelet.
pub fn verify_series(label: &str, psi: &RealSeries) -> Report {
    let mut checks = Vec::new();
    let mut errors = Vec::new();
    checks.push(Check::at_most("dc ratio psi", dc_magnitude_ratio(psi), ADMISSIBLE_DC_RATIO));
    let base_adm = match admissibility(psi) {
        Ok(c) => c,
        Err(e) => {
            errors.push(e);
            return Report { label: label.to_string(), checks, errors };
        }
    };
    let base_energy = energy(psi);
    let base_moments = vanishing_moments_default(psi);

    let derived = (|| -> Result<_> {
        Ok((
            hilbert(psi)?,
            fourier_like(psi)?,
            analytic(psi)?,
            hartley_like(psi, HartleySign::Plus)?,
            hartley_like(psi, HartleySign::Minus)?,
        ))
    })();
    let (h, f, a, hp, hm) = match derived {
        Ok(d) => d,
        Err(e) => {
            errors.push(e);
            return Report { label: label.to_string(), checks, errors };
        }
    };

    preservation(&mut checks, &mut errors, "H", &h, base_energy, base_adm, base_moments);
    preservation(&mut checks, &mut errors, "fourier", &f, base_energy, base_adm, base_moments);
    preservation(&mut checks, &mut errors, "analytic", &a, base_energy, base_adm, base_moments);
    preservation(&mut checks, &mut errors, "hartley+", &hp, base_energy, base_adm, base_moments);
    preservation(&mut checks, &mut errors, "hartley-", &hm, base_energy, base_adm, base_moments);

    match inner_product(psi, &h) {
        Ok(ip) => checks.push(Check::at_most("orthogonality", ip.norm() / base_energy, ORTHOGONALITY)),
        Err(e) => errors.push(e),
    }

    if let (Ok((pc, _)), Ok((_, hs))) = (symmetry(psi), symmetry(&h)) {
        match pc {
            SymmetryClass::Even => checks.push(Check::at_most("parity H odd", hs, ODD_SCORE_MAX)),
            SymmetryClass::Odd => checks.push(Check::at_least("parity H even", hs, EVEN_SCORE_MIN)),
            SymmetryClass::Asymmetric => {}
        }
    }

    checks.push(Check::at_most("half-spectrum fourier", half_spectrum_leak(&f, false), HALF_SPECTRUM_NULL));
    checks.push(Check::at_most("half-spectrum analytic", half_spectrum_leak(&a, true), HALF_SPECTRUM_NULL));

    for (name, kernel, sign) in [("hartley+", &hp, HartleySign::Plus), ("hartley-", &hm, HartleySign::Minus)] {
        let (mag, phase) = hartley_spectral_errors(psi, kernel, sign, HARTLEY_BIN_FLOOR);
        checks.push(Check::at_most(format!("magnitude {name}"), mag, HARTLEY_MAGNITUDE));
        checks.push(Check::at_most(format!("phase {name}"), phase, HARTLEY_PHASE_RAD));
    }

    Report { label: label.to_string(), checks, errors }
}

/// Sample `spec` on `grid` and run [`verify_series`].
pub fn verify(spec: &WaveletSpec, grid: &TimeGrid) -> Result<Report> {
    let psi = sample_wavelet(spec, grid)?;
    Ok(verify_series(spec.family().name(), &psi))
}
