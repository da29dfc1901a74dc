#![allow(dead_code)]

use std::f64::consts::PI;

use wavepair::{make_grid, sample_wavelet, RealSeries, TimeGrid, WaveletFamily, WaveletSpec};

pub fn wavelet_grid() -> TimeGrid {
    make_grid(-8.0, 8.0, 2048).unwrap()
}

pub fn signal_grid() -> TimeGrid {
    make_grid(0.0, 1.0, 1000).unwrap()
}

pub fn wavelet(family: WaveletFamily) -> RealSeries {
    sample_wavelet(&WaveletSpec::new(family), &wavelet_grid()).unwrap()
}

/// Principal-value quadrature of the periodic Hilbert transform
///
/// ```text
/// H{x}(t) = (1/P) p.v. int_0^P x(tau) cot(pi (t - tau) / P) dtau
/// ```
///
/// folded onto `s = t - tau in [0, P/2]`, where the integrand
/// `(x(t-s) - x(t+s)) cot(pi s / P)` is bounded, and integrated with the
/// trapezoid rule. The `s = 0` end contributes `-dt x'(t) / pi`, with `x'`
/// from a central difference. O(n^2), no FFT.
pub fn hilbert_pv_quadrature(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let at = |i: isize| x[i.rem_euclid(n as isize) as usize];
    let cot: Vec<f64> = (0..n / 2).map(|m| 1.0 / (PI * m as f64 / n as f64).tan()).collect();
    (0..n as isize)
        .map(|i| {
            let body: f64 = (1..n as isize / 2).map(|m| (at(i - m) - at(i + m)) * cot[m as usize]).sum();
            body / n as f64 + (at(i - 1) - at(i + 1)) / (2.0 * PI)
        })
        .collect()
}
