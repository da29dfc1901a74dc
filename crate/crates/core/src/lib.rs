//! Hilbert-transform pairs of continuous wavelets.
//!
//! Starting from a real mother wavelet `psi`, the crate computes its Hilbert
//! transform `H{psi}` spectrally and builds three families of derived
//! wavelets:
//!
//! * Fourier-like `(psi - j H{psi}) / sqrt2`, supported on `w <= 0`;
//! * analytic `(psi + j H{psi}) / sqrt2`, supported on `w >= 0`;
//! * Hartley-like `(psi +/- H{psi}) / sqrt2`, real and asymmetric.
//!
//! [`metrics`] measures energy, admissibility, moments and symmetry of any
//! of them, and [`cwt`] runs a continuous wavelet transform with any of them
//! as the analyzing kernel.

pub mod catalog;
pub mod cli;
pub mod csvio;
pub mod cwt;
pub mod error;
pub mod grid;
pub mod kernels;
pub mod metrics;
pub mod pgm;
pub mod propositions;
pub mod signals;
pub mod spectral;
pub mod spectrum;
pub mod tolerances;

pub use catalog::{sample_wavelet, WaveletFamily, WaveletSpec};
pub use cwt::{cwt, level_slice, normalized_modulus, ridge_frequencies, Recipe, Ridge, ScaleRange, Scalogram, Variant};
pub use error::{Error, Result};
pub use grid::{make_grid, ComplexSeries, RealSeries, Sample, Series, TimeGrid};
pub use kernels::{analytic, build_kernel, fourier_like, hartley_like, HartleySign, Kernel, KernelKind};
pub use metrics::{
    admissibility, energy, inner_product, moment, symmetry, vanishing_moments, MetricsReport, SymmetryClass,
};
pub use signals::{gen_freq_breakdown, gen_two_sine};
pub use spectral::{apply_multiplier, hilbert, HilbertMultiplier};
pub use spectrum::{dft, idft, Spectrum};
