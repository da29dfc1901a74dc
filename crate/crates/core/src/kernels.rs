//! Fourier-like, analytic and Hartley-like wavelets built from a real
//! wavelet `psi` and its Hilbert transform `H{psi}`:
//!
//! | kind          | definition                 | spectrum             |
//! |---------------|----------------------------|----------------------|
//! | Fourier-like  | `(psi - j H{psi}) / sqrt2` | `w <= 0` only        |
//! | analytic      | `(psi + j H{psi}) / sqrt2` | `w >= 0` only        |
//! | Hartley plus  | `(psi + H{psi}) / sqrt2`   | phase `-pi/4 sgn(w)` |
//! | Hartley minus | `(psi - H{psi}) / sqrt2`   | phase `+pi/4 sgn(w)` |
//!
//! Under the `H{cos} = sin` convention of [`crate::spectral`], the
//! Fourier-like kernel of `cos(wt)` is `e^{-jwt}/sqrt2` and Hartley plus of
//! `cos(wt)` is `cas(wt)/sqrt2`. With the opposite convention
//! (`H{cos} = -sin`) the Fourier-like and analytic spectral sides swap and
//! so do the two Hartley phase signs.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{ComplexSeries, RealSeries, Series};
use crate::spectral::hilbert;
use crate::spectrum::dft;
use crate::tolerances::ADMISSIBLE_DC_RATIO;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelKind {
    FourierLike,
    Analytic,
    HartleyPlus,
    HartleyMinus,
}

impl KernelKind {
    pub const ALL: [KernelKind; 4] =
        [KernelKind::FourierLike, KernelKind::Analytic, KernelKind::HartleyPlus, KernelKind::HartleyMinus];

    pub fn name(&self) -> &'static str {
        match self {
            KernelKind::FourierLike => "fourier",
            KernelKind::Analytic => "analytic",
            KernelKind::HartleyPlus => "hartley+",
            KernelKind::HartleyMinus => "hartley-",
        }
    }

    pub fn is_complex(&self) -> bool {
        matches!(self, KernelKind::FourierLike | KernelKind::Analytic)
    }
}

impl fmt::Display for KernelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KernelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "fourier" | "fourier-like" | "fourierlike" => Ok(KernelKind::FourierLike),
            "analytic" => Ok(KernelKind::Analytic),
            "hartley+" | "hartley" | "hartley-plus" => Ok(KernelKind::HartleyPlus),
            "hartley-" | "hartley-minus" => Ok(KernelKind::HartleyMinus),
            other => Err(Error::InvalidParameter(format!("unknown kernel kind `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HartleySign {
    Plus,
    Minus,
}

impl HartleySign {
    fn factor(self) -> f64 {
        match self {
            HartleySign::Plus => 1.0,
            HartleySign::Minus => -1.0,
        }
    }
}

/// Output of a kernel builder.
#[derive(Debug, Clone, PartialEq)]
pub enum Kernel {
    Real(RealSeries),
    Complex(ComplexSeries),
}

impl Kernel {
    pub fn to_complex(&self) -> ComplexSeries {
        match self {
            Kernel::Real(r) => r.to_complex(),
            Kernel::Complex(c) => c.clone(),
        }
    }
}

fn require_admissible(psi: &RealSeries) -> Result<()> {
    let dc_ratio = dft(psi).dc_ratio();
    if dc_ratio > ADMISSIBLE_DC_RATIO {
        return Err(Error::NotAdmissible { dc_ratio, limit: ADMISSIBLE_DC_RATIO });
    }
    Ok(())
}

fn combine(psi: &RealSeries, h: &RealSeries, j_sign: f64) -> ComplexSeries {
    let values =
        psi.values().iter().zip(h.values()).map(|(&p, &q)| Complex64::new(p, j_sign * q) * FRAC_1_SQRT_2).collect();
    Series::from_parts_unchecked(*psi.grid(), values)
}

/// `(psi - j H{psi}) / sqrt2`.
pub fn fourier_like(psi: &RealSeries) -> Result<ComplexSeries> {
    require_admissible(psi)?;
    Ok(combine(psi, &hilbert(psi)?, -1.0))
}

/// `(psi + j H{psi}) / sqrt2`.
pub fn analytic(psi: &RealSeries) -> Result<ComplexSeries> {
    require_admissible(psi)?;
    Ok(combine(psi, &hilbert(psi)?, 1.0))
}

/// `(psi + H{psi}) / sqrt2` for [`HartleySign::Plus`], `(psi - H{psi}) / sqrt2`
/// for [`HartleySign::Minus`].
pub fn hartley_like(psi: &RealSeries, sign: HartleySign) -> Result<RealSeries> {
    require_admissible(psi)?;
    let h = hilbert(psi)?;
    let s = sign.factor();
    let values = psi.values().iter().zip(h.values()).map(|(p, q)| (p + s * q) * FRAC_1_SQRT_2).collect();
    Series::new(*psi.grid(), values)
}

pub fn build_kernel(psi: &RealSeries, kind: KernelKind) -> Result<Kernel> {
    Ok(match kind {
        KernelKind::FourierLike => Kernel::Complex(fourier_like(psi)?),
        KernelKind::Analytic => Kernel::Complex(analytic(psi)?),
        KernelKind::HartleyPlus => Kernel::Real(hartley_like(psi, HartleySign::Plus)?),
        KernelKind::HartleyMinus => Kernel::Real(hartley_like(psi, HartleySign::Minus)?),
    })
}

/// [`build_kernel`] without the admissibility gate. Dilated copies at a few
/// samples per oscillation alias into DC, yet still belong in a scalogram.
pub(crate) fn build_kernel_ungated(psi: &RealSeries, kind: KernelKind) -> Result<ComplexSeries> {
    let h = hilbert(psi)?;
    Ok(match kind {
        KernelKind::FourierLike => combine(psi, &h, -1.0),
        KernelKind::Analytic => combine(psi, &h, 1.0),
        KernelKind::HartleyPlus | KernelKind::HartleyMinus => {
            let s = if kind == KernelKind::HartleyPlus { 1.0 } else { -1.0 };
            let values = psi
                .values()
                .iter()
                .zip(h.values())
                .map(|(p, q)| Complex64::new((p + s * q) * FRAC_1_SQRT_2, 0.0))
                .collect();
            Series::from_parts_unchecked(*psi.grid(), values)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{sample_wavelet, WaveletFamily, WaveletSpec};
    use crate::grid::{make_grid, TimeGrid};
    use std::f64::consts::{PI, SQRT_2};

    fn grid() -> TimeGrid {
        make_grid(-8.0, 8.0, 2048).unwrap()
    }

    fn phase(g: &TimeGrid, k0: usize, t: f64) -> f64 {
        2.0 * PI * k0 as f64 * t / g.span()
    }

    #[test]
    fn fourier_like_of_cosine_is_negative_exponential() {
        let g = grid();
        let k0 = 9;
        let psi = RealSeries::from_fn(g, |t| phase(&g, k0, t).cos()).unwrap();
        let f = fourier_like(&psi).unwrap();
        for (k, v) in f.values().iter().enumerate() {
            let want = Complex64::from_polar(FRAC_1_SQRT_2, -phase(&g, k0, g.time(k)));
            assert!((v - want).norm() < 1e-10);
        }
        let s = dft(&f);
        let n = g.len();
        for (k, b) in s.bins().iter().enumerate() {
            if k != n - k0 {
                assert!(b.norm() < 1e-9, "bin {k}");
            }
        }
    }

    #[test]
    fn analytic_of_cosine_is_positive_exponential() {
        let g = grid();
        let k0 = 9;
        let psi = RealSeries::from_fn(g, |t| phase(&g, k0, t).cos()).unwrap();
        let a = analytic(&psi).unwrap();
        for (k, v) in a.values().iter().enumerate() {
            let want = Complex64::from_polar(FRAC_1_SQRT_2, phase(&g, k0, g.time(k)));
            assert!((v - want).norm() < 1e-10);
        }
        let s = dft(&a);
        for (k, b) in s.bins().iter().enumerate() {
            if k != k0 {
                assert!(b.norm() < 1e-9, "bin {k}");
            }
        }
    }

    #[test]
    fn hartley_plus_of_cosine_is_cas() {
        let g = grid();
        let k0 = 4;
        let psi = RealSeries::from_fn(g, |t| phase(&g, k0, t).cos()).unwrap();
        let h = hartley_like(&psi, HartleySign::Plus).unwrap();
        for (k, v) in h.values().iter().enumerate() {
            let p = phase(&g, k0, g.time(k));
            assert!((v - (p.cos() + p.sin()) / SQRT_2).abs() < 1e-10);
        }
    }

    #[test]
    fn zero_in_zero_out() {
        let g = grid();
        let z = RealSeries::zeros(g);
        assert!(fourier_like(&z).unwrap().is_zero());
        assert!(analytic(&z).unwrap().is_zero());
        assert!(hartley_like(&z, HartleySign::Minus).unwrap().is_zero());
    }

    #[test]
    fn sums_cancel_the_hilbert_terms() {
        let g = grid();
        let psi = sample_wavelet(&WaveletSpec::new(WaveletFamily::Gaussian2), &g).unwrap();
        let a = analytic(&psi).unwrap();
        let f = fourier_like(&psi).unwrap();
        let p = hartley_like(&psi, HartleySign::Plus).unwrap();
        let m = hartley_like(&psi, HartleySign::Minus).unwrap();
        for k in 0..g.len() {
            let want = SQRT_2 * psi.values()[k];
            let s = a.values()[k] + f.values()[k];
            assert!((s.re - want).abs() < 1e-14 && s.im.abs() < 1e-14);
            assert!((p.values()[k] + m.values()[k] - want).abs() < 1e-14);
        }
    }

    #[test]
    fn rejects_dc_dominated_input() {
        let g = grid();
        let x = RealSeries::new(g, vec![1.0; g.len()]).unwrap();
        for kind in KernelKind::ALL {
            assert!(matches!(build_kernel(&x, kind), Err(Error::NotAdmissible { .. })));
        }
    }

    #[test]
    fn kind_names_parse() {
        for k in KernelKind::ALL {
            assert_eq!(k.name().parse::<KernelKind>().unwrap(), k);
        }
        assert!("cosine".parse::<KernelKind>().is_err());
    }
}
