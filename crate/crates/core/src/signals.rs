//! Test signals for the scalogram experiments.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::grid::{RealSeries, TimeGrid};

/// Two-tone defaults in Hz.
pub const TWO_SINE_F1: f64 = 5.0;
pub const TWO_SINE_F2: f64 = 9.0;

/// Frequency-breakdown defaults: 5 Hz, then 50 Hz from 0.5 s on.
pub const BREAKDOWN_F_LOW: f64 = 5.0;
pub const BREAKDOWN_F_HIGH: f64 = 50.0;
pub const BREAKDOWN_T_BREAK: f64 = 0.5;

fn check_frequency(grid: &TimeGrid, freq: f64) -> Result<()> {
    let nyquist = 0.5 / grid.dt();
    if !freq.is_finite() || freq < 0.0 {
        return Err(Error::InvalidParameter(format!("frequency must be finite and >= 0, got {freq}")));
    }
    if freq >= nyquist {
        return Err(Error::Aliasing { freq, nyquist });
    }
    Ok(())
}

/// `sin(2 pi f1 t) + sin(2 pi f2 t)`.
pub fn gen_two_sine(grid: &TimeGrid, f1: f64, f2: f64) -> Result<RealSeries> {
    check_frequency(grid, f1)?;
    check_frequency(grid, f2)?;
    RealSeries::from_fn(*grid, |t| (2.0 * PI * f1 * t).sin() + (2.0 * PI * f2 * t).sin())
}

/// Unit sine at `f_low` before `t_break`, at `f_high` from `t_break` on.
/// The jump at the break is intentional.
pub fn gen_freq_breakdown(grid: &TimeGrid, f_low: f64, f_high: f64, t_break: f64) -> Result<RealSeries> {
    check_frequency(grid, f_low)?;
    check_frequency(grid, f_high)?;
    if !(t_break >= grid.t_min() && t_break < grid.t_max()) {
        return Err(Error::BreakOutsideSpan(t_break));
    }
    RealSeries::from_fn(*grid, |t| {
        let f = if t < t_break { f_low } else { f_high };
        (2.0 * PI * f * t).sin()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::make_grid;
    use crate::spectrum::dft;

    fn grid() -> TimeGrid {
        make_grid(0.0, 1.0, 1000).unwrap()
    }

    fn dominant_bins(x: &RealSeries, count: usize) -> Vec<usize> {
        let s = dft(x);
        let mut idx: Vec<usize> = (0..=x.len() / 2).collect();
        idx.sort_by(|&a, &b| s.bins()[b].norm().total_cmp(&s.bins()[a].norm()));
        let mut top = idx[..count].to_vec();
        top.sort();
        top
    }

    #[test]
    fn two_sine_amplitude_and_bins() {
        let x = gen_two_sine(&grid(), 5.0, 9.0).unwrap();
        assert!(x.peak() <= 2.0);
        assert!(x.peak() > 1.8);
        // 1 s span: bin k is k Hz
        assert_eq!(dominant_bins(&x, 2), vec![5, 9]);
    }

    #[test]
    fn equal_tones_double() {
        let g = grid();
        let x = gen_two_sine(&g, 7.0, 7.0).unwrap();
        for (k, v) in x.values().iter().enumerate() {
            assert!((v - 2.0 * (2.0 * PI * 7.0 * g.time(k)).sin()).abs() < 1e-15);
        }
    }

    #[test]
    fn aliasing_guard() {
        assert!(matches!(gen_two_sine(&grid(), 5.0, 500.0), Err(Error::Aliasing { .. })));
        assert!(matches!(gen_freq_breakdown(&grid(), 600.0, 5.0, 0.5), Err(Error::Aliasing { .. })));
    }

    #[test]
    fn breakdown_first_half_is_low_tone() {
        let g = grid();
        let x = gen_freq_breakdown(&g, 5.0, 50.0, 0.5).unwrap();
        assert!(x.peak() <= 1.0);
        // 0.4 s of the low-tone half holds exactly two cycles: bin k is 2.5k Hz.
        let window = make_grid(0.0, 0.4, 400).unwrap();
        let first = RealSeries::new(window, x.values()[..400].to_vec()).unwrap();
        let s = dft(&first);
        let peak = s.bins()[2].norm();
        for k in (0..=200).filter(|&k| k != 2) {
            assert!(s.bins()[k].norm() < 1e-9 * peak, "bin {k}");
        }
    }

    #[test]
    fn breakdown_at_start_is_pure_high_tone() {
        let g = grid();
        let x = gen_freq_breakdown(&g, 5.0, 50.0, 0.0).unwrap();
        for (k, v) in x.values().iter().enumerate() {
            assert_eq!(*v, (2.0 * PI * 50.0 * g.time(k)).sin());
        }
    }

    #[test]
    fn break_outside_span() {
        assert_eq!(gen_freq_breakdown(&grid(), 5.0, 50.0, 1.0), Err(Error::BreakOutsideSpan(1.0)));
        assert_eq!(gen_freq_breakdown(&grid(), 5.0, 50.0, -0.1), Err(Error::BreakOutsideSpan(-0.1)));
    }
}
