//! Energy, admissibility coefficient, moments, inner products and symmetry
//! of sampled series.
//!
//! All integrals use the rectangle rule on the uniform grid. Spectral
//! quantities use the continuous-spectrum scaling `X(w_k) = dft_k * dt`.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{Sample, Series};
use crate::spectrum::dft;
use crate::tolerances::{ADMISSIBLE_DC_RATIO, EVEN_SCORE_MIN, MAX_MOMENT_ORDER, MOMENT_TOL, ODD_SCORE_MAX};

/// `sum |x_k|^2 dt`.
pub fn energy<T: Sample>(x: &Series<T>) -> f64 {
    x.values().iter().map(|v| v.abs_sqr()).sum::<f64>() * x.grid().dt()
}

/// `|X_0| / max |X_k|`.
pub fn dc_magnitude_ratio<T: Sample>(x: &Series<T>) -> f64 {
    dft(x).dc_ratio()
}

/// `sum_{k != 0} |X(w_k)|^2 / |w_k| * dw`.
///
/// Fails with [`Error::NotAdmissible`] when the DC bin exceeds
/// [`ADMISSIBLE_DC_RATIO`] of the spectral peak.
pub fn admissibility<T: Sample>(x: &Series<T>) -> Result<f64> {
    let s = dft(x);
    let dc_ratio = s.dc_ratio();
    if dc_ratio > ADMISSIBLE_DC_RATIO {
        return Err(Error::NotAdmissible { dc_ratio, limit: ADMISSIBLE_DC_RATIO });
    }
    let g = s.grid();
    let sum: f64 = (1..s.len()).map(|k| s.continuous(k).norm_sqr() / g.omega(k).abs()).sum();
    Ok(sum * g.delta_omega())
}

fn check_order(order: u32) -> Result<()> {
    if order > MAX_MOMENT_ORDER {
        return Err(Error::MomentOrderOutOfRange { order, max: MAX_MOMENT_ORDER });
    }
    Ok(())
}

/// `sum t_k^n x_k dt`, returned as a complex number (imaginary part zero for
/// real input).
pub fn moment<T: Sample>(x: &Series<T>, order: u32) -> Result<Complex64> {
    check_order(order)?;
    let g = x.grid();
    let sum: Complex64 =
        x.values().iter().enumerate().map(|(k, v)| v.to_complex() * g.time(k).powi(order as i32)).sum();
    Ok(sum * g.dt())
}

/// Largest `N <= max_order` such that `|M_n| <= tol * scale_n` for every
/// `n < N`, with `scale_n = sqrt(energy) * half_width^(n + 1/2)`.
pub fn vanishing_moments<T: Sample>(x: &Series<T>, max_order: u32, tol: f64) -> Result<u32> {
    check_order(max_order)?;
    let root_energy = energy(x).sqrt();
    let half_width = x.grid().half_width();
    for n in 0..max_order {
        let scale = root_energy * half_width.powf(n as f64 + 0.5);
        if moment(x, n)?.norm() > tol * scale {
            return Ok(n);
        }
    }
    Ok(max_order)
}

/// [`vanishing_moments`] with the default order range and tolerance.
pub fn vanishing_moments_default<T: Sample>(x: &Series<T>) -> u32 {
    vanishing_moments(x, MAX_MOMENT_ORDER, MOMENT_TOL).expect("default order is in range")
}

/// `sum a_k conj(b_k) dt`.
pub fn inner_product<A: Sample, B: Sample>(a: &Series<A>, b: &Series<B>) -> Result<Complex64> {
    a.check_same_grid(b)?;
    let sum: Complex64 = a.values().iter().zip(b.values()).map(|(p, q)| p.to_complex() * q.to_complex().conj()).sum();
    Ok(sum * a.grid().dt())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryClass {
    Even,
    Odd,
    Asymmetric,
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryClass::Even => "even",
            SymmetryClass::Odd => "odd",
            SymmetryClass::Asymmetric => "asymmetric",
        })
    }
}

/// Classify by the even-part energy fraction. Returns the class and the
/// even score `||x_even||^2 / ||x||^2` (1 for an all-zero series).
pub fn symmetry<T: Sample>(x: &Series<T>) -> Result<(SymmetryClass, f64)> {
    let g = x.grid();
    if !g.is_symmetric() {
        return Err(Error::AsymmetricGrid);
    }
    let v = x.values();
    let total: f64 = v.iter().map(|s| s.abs_sqr()).sum();
    if total == 0.0 {
        return Ok((SymmetryClass::Even, 1.0));
    }
    let even: f64 = (0..v.len())
        .map(|k| {
            let m = g.mirror_index(k);
            (v[k].to_complex() + v[m].to_complex()).norm_sqr() * 0.25
        })
        .sum();
    let score = (even / total).clamp(0.0, 1.0);
    let class = if score > EVEN_SCORE_MIN {
        SymmetryClass::Even
    } else if score < ODD_SCORE_MAX {
        SymmetryClass::Odd
    } else {
        SymmetryClass::Asymmetric
    };
    Ok((class, score))
}

/// Summary of the quantities above for one series.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricsReport {
    pub energy: f64,
    /// `None` when the series is not admissible.
    pub admissibility: Option<f64>,
    pub dc_magnitude_ratio: f64,
    pub vanishing_moments: u32,
    pub max_moment_checked: u32,
    /// `None` on a grid that is not symmetric about 0.
    pub symmetry: Option<(SymmetryClass, f64)>,
}

impl MetricsReport {
    pub fn measure<T: Sample>(x: &Series<T>) -> Self {
        Self {
            energy: energy(x),
            admissibility: admissibility(x).ok(),
            dc_magnitude_ratio: dc_magnitude_ratio(x),
            vanishing_moments: vanishing_moments_default(x),
            max_moment_checked: MAX_MOMENT_ORDER,
            symmetry: symmetry(x).ok(),
        }
    }

    pub const CSV_HEADER: &'static str =
        "series,energy,admissibility,dc_magnitude_ratio,vanishing_moments,max_moment_checked,symmetry,even_score";

    /// One CSV row; the first column is the caller's label.
    pub fn to_csv_row(&self, label: &str) -> String {
        let (class, score) = self.symmetry_fields();
        format!(
            "{label},{:.16e},{},{:.16e},{},{},{class},{score}",
            self.energy,
            self.admissibility.map(|c| format!("{c:.16e}")).unwrap_or_else(|| "not-admissible".into()),
            self.dc_magnitude_ratio,
            self.vanishing_moments,
            self.max_moment_checked,
        )
    }

    /// Flat `key=value` block, one key per line.
    pub fn to_key_value(&self, label: &str) -> String {
        let (class, score) = self.symmetry_fields();
        let adm = self.admissibility.map(|c| format!("{c:.16e}")).unwrap_or_else(|| "not-admissible".into());
        format!(
            "series={label}\nenergy={:.16e}\nadmissibility={adm}\ndc_magnitude_ratio={:.16e}\nvanishing_moments={}\nmax_moment_checked={}\nsymmetry={class}\neven_score={score}\n",
            self.energy, self.dc_magnitude_ratio, self.vanishing_moments, self.max_moment_checked,
        )
    }

    fn symmetry_fields(&self) -> (String, String) {
        match self.symmetry {
            Some((c, s)) => (c.to_string(), format!("{s:.16e}")),
            None => ("n/a".into(), "n/a".into()),
        }
    }
}
