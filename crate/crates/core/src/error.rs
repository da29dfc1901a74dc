use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sample count {0} is odd; the Hilbert multiplier needs an even count")]
    OddSampleCount(usize),
    #[error("sample count {0} is too small (need at least 2)")]
    TooFewSamples(usize),
    #[error("grid bounds must be finite")]
    NonFiniteBounds,
    #[error("empty interval: t_max ({t_max}) must exceed t_min ({t_min})")]
    EmptyInterval { t_min: f64, t_max: f64 },
    #[error("time step must be positive and finite, got {0}")]
    InvalidStep(f64),
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("series live on different grids")]
    GridMismatch,
    #[error("non-finite value at sample {0}")]
    NonFiniteValue(usize),
    #[error("imaginary residue {ratio:e} of peak exceeds {limit:e}")]
    NonNegligibleImaginaryResidue { ratio: f64, limit: f64 },
    #[error("not admissible: DC bin is {dc_ratio:e} of the spectral peak (limit {limit:e})")]
    NotAdmissible { dc_ratio: f64, limit: f64 },
    #[error("moment order {order} out of range (max {max})")]
    MomentOrderOutOfRange { order: u32, max: u32 },
    #[error("grid is not symmetric about t = 0")]
    AsymmetricGrid,
    #[error("unknown wavelet family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid scale range: {0}")]
    InvalidScales(String),
    #[error("scale {0} is not part of the scalogram")]
    UnknownScale(f64),
    #[error("input is identically zero")]
    AllZero,
    #[error("top_k = {top_k} exceeds the {available} available scales")]
    TopKExceedsScales { top_k: usize, available: usize },
    #[error("frequency {freq} Hz is at or above the Nyquist limit {nyquist} Hz")]
    Aliasing { freq: f64, nyquist: f64 },
    #[error("break time {0} lies outside the grid span")]
    BreakOutsideSpan(f64),
    #[error("malformed CSV: {0}")]
    Csv(String),
    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
