//! Pinned numerical thresholds.
//!
//! The underlying claims are about continuous integrals; every number here
//! is an engineering bound for the sampled surrogate on the default grids.

/// Largest tolerated imaginary residue of an output that must be real,
/// relative to its peak magnitude.
pub const IMAGINARY_RESIDUE: f64 = 1e-10;

/// DC bin magnitude relative to the spectral peak above which a series is
/// treated as not admissible.
pub const ADMISSIBLE_DC_RATIO: f64 = 1e-5;

/// Relative energy deviation allowed between a wavelet and anything built
/// from it.
pub const ENERGY_REL: f64 = 1e-6;

/// Relative admissibility-coefficient deviation. Looser than energy because
/// the `1/|w|` weight amplifies low-frequency discretization error.
pub const ADMISSIBILITY_REL: f64 = 1e-3;

/// `|<psi, H{psi}>|` bound for unit-energy wavelets.
pub const ORTHOGONALITY: f64 = 1e-8;

/// Even-score bounds for symmetry classification.
pub const EVEN_SCORE_MIN: f64 = 0.99;
pub const ODD_SCORE_MAX: f64 = 0.01;

/// Relative energy allowed on the suppressed half of a one-sided spectrum.
pub const HALF_SPECTRUM_NULL: f64 = 1e-10;

/// Hartley kernels: per-bin magnitude match (fraction of peak), phase
/// offset error (radians), and the bin-selection floor (fraction of peak).
pub const HARTLEY_MAGNITUDE: f64 = 1e-9;
pub const HARTLEY_PHASE_RAD: f64 = 1e-6;
pub const HARTLEY_BIN_FLOOR: f64 = 1e-8;

/// Default relative threshold for counting vanishing moments.
pub const MOMENT_TOL: f64 = 1e-5;

/// Highest moment order the metrics accept.
pub const MAX_MOMENT_ORDER: u32 = 8;

/// `H{H{x}} = -x` error bound (absolute).
pub const INVOLUTION_ABS: f64 = 1e-9;

/// FFT route against the principal-value quadrature oracle.
pub const PV_ORACLE_ABS: f64 = 1e-3;

/// FFT route against an exact Fourier pair.
pub const EXACT_PAIR_ABS: f64 = 1e-10;

/// Ridge frequency estimates.
pub const RIDGE_FREQ_REL: f64 = 0.05;

/// Break-time estimate from normalized-modulus crossings (seconds).
pub const BREAK_TIME_ABS: f64 = 0.020;

/// Analytic vs Fourier-like modulus scalograms.
pub const MODULUS_MATCH_ABS: f64 = 1e-10;
