//! C ABI for `wavepair`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free` function. Every fallible call
//! returns a [`WpStatus`]; on failure `wp_last_error_message` describes the
//! error for the calling thread. Strings are NUL-terminated UTF-8.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use wavepair::{
    build_kernel, cwt, energy, gen_freq_breakdown, gen_two_sine, hilbert, make_grid, sample_wavelet, vanishing_moments,
    ComplexSeries, Error, Kernel, KernelKind, RealSeries, Recipe, ScaleRange, Scalogram, TimeGrid, Variant,
    WaveletSpec,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidGrid = 3,
    NotAdmissible = 4,
    Numerical = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

/// Which real-valued view of a scalogram to copy.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WpPart {
    Real = 0,
    Imag = 1,
    Modulus = 2,
    Phase = 3,
}

/// A sampled real or complex series.
pub struct WpSeries(SeriesData);

enum SeriesData {
    Real(RealSeries),
    Complex(ComplexSeries),
}

/// A CWT coefficient matrix.
pub struct WpScalogram(Scalogram);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> WpStatus {
    match e {
        Error::OddSampleCount(_)
        | Error::TooFewSamples(_)
        | Error::NonFiniteBounds
        | Error::EmptyInterval { .. }
        | Error::InvalidStep(_)
        | Error::GridMismatch
        | Error::AsymmetricGrid
        | Error::LengthMismatch { .. } => WpStatus::InvalidGrid,
        Error::NotAdmissible { .. } => WpStatus::NotAdmissible,
        Error::NonNegligibleImaginaryResidue { .. } | Error::NonFiniteValue(_) | Error::AllZero => WpStatus::Numerical,
        _ => WpStatus::InvalidArgument,
    }
}

/// Run `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), (WpStatus, String)>) -> WpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => WpStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            WpStatus::Panic
        }
    }
}

fn lib<T>(r: wavepair::Result<T>) -> Result<T, (WpStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (WpStatus, String) {
    (WpStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (WpStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (WpStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, (WpStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), (WpStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

fn real_of<'a>(s: &'a WpSeries, what: &str) -> Result<&'a RealSeries, (WpStatus, String)> {
    match &s.0 {
        SeriesData::Real(r) => Ok(r),
        SeriesData::Complex(_) => Err((WpStatus::InvalidArgument, format!("{what} must be a real series"))),
    }
}

fn spec_of(family: &str, omega0: f64) -> Result<WaveletSpec, (WpStatus, String)> {
    let spec = WaveletSpec::new(lib(family.parse())?);
    if omega0 > 0.0 {
        lib(spec.with_omega0(omega0))
    } else {
        Ok(spec)
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn wp_status_string(status: WpStatus) -> *const c_char {
    let s: &'static CStr = match status {
        WpStatus::Ok => c"ok",
        WpStatus::NullPointer => c"null pointer",
        WpStatus::InvalidArgument => c"invalid argument",
        WpStatus::InvalidGrid => c"invalid grid or length",
        WpStatus::NotAdmissible => c"not admissible",
        WpStatus::Numerical => c"numerical check failed",
        WpStatus::BufferTooSmall => c"buffer too small",
        WpStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Message of the last failed call on this thread. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn wp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Sample a unit-energy wavelet on `n` points over `[t_min, t_max)`.
/// `family` is one of morlet, meyer, mexhat, gaus1, gaus2, gaus3;
/// `omega0 <= 0` keeps the Morlet default.
///
/// # Safety
/// `family` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wp_sample_wavelet(
    family: *const c_char,
    omega0: f64,
    t_min: f64,
    t_max: f64,
    n: usize,
    out: *mut *mut WpSeries,
) -> WpStatus {
    guard(|| {
        let spec = spec_of(str_arg(family, "family")?, omega0)?;
        let grid = lib(make_grid(t_min, t_max, n))?;
        put(out, WpSeries(SeriesData::Real(lib(sample_wavelet(&spec, &grid))?)))
    })
}

/// Wrap `n` caller samples starting at `t_min` with spacing `dt`.
///
/// # Safety
/// `values` must point to `n` readable doubles and `out` be valid.
#[no_mangle]
pub unsafe extern "C" fn wp_series_from_real(
    t_min: f64,
    dt: f64,
    values: *const f64,
    n: usize,
    out: *mut *mut WpSeries,
) -> WpStatus {
    guard(|| {
        if values.is_null() {
            return Err(null("values"));
        }
        let grid = lib(TimeGrid::new(t_min, dt, n))?;
        let v = std::slice::from_raw_parts(values, n).to_vec();
        put(out, WpSeries(SeriesData::Real(lib(RealSeries::new(grid, v))?)))
    })
}

/// `sin(2 pi f1 t) + sin(2 pi f2 t)` on `[t_min, t_max)`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wp_two_sine(
    t_min: f64,
    t_max: f64,
    n: usize,
    f1: f64,
    f2: f64,
    out: *mut *mut WpSeries,
) -> WpStatus {
    guard(|| {
        let grid = lib(make_grid(t_min, t_max, n))?;
        put(out, WpSeries(SeriesData::Real(lib(gen_two_sine(&grid, f1, f2))?)))
    })
}

/// Sine at `f_low` before `t_break`, `f_high` after.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wp_freq_breakdown(
    t_min: f64,
    t_max: f64,
    n: usize,
    f_low: f64,
    f_high: f64,
    t_break: f64,
    out: *mut *mut WpSeries,
) -> WpStatus {
    guard(|| {
        let grid = lib(make_grid(t_min, t_max, n))?;
        put(out, WpSeries(SeriesData::Real(lib(gen_freq_breakdown(&grid, f_low, f_high, t_break))?)))
    })
}

/// Hilbert transform of a real series.
///
/// # Safety
/// `series` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wp_hilbert(series: *const WpSeries, out: *mut *mut WpSeries) -> WpStatus {
    guard(|| {
        let x = real_of(handle(series, "series")?, "series")?;
        put(out, WpSeries(SeriesData::Real(lib(hilbert(x))?)))
    })
}

/// Kernel of a real wavelet: `kind` is fourier, analytic, hartley+ or
/// hartley-. Fourier-like and analytic kernels are complex.
///
/// # Safety
/// `series` must be a live handle, `kind` a valid C string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn wp_kernel(series: *const WpSeries, kind: *const c_char, out: *mut *mut WpSeries) -> WpStatus {
    guard(|| {
        let x = real_of(handle(series, "series")?, "series")?;
        let kind: KernelKind = lib(str_arg(kind, "kind")?.parse())?;
        let data = match lib(build_kernel(x, kind))? {
            Kernel::Real(r) => SeriesData::Real(r),
            Kernel::Complex(c) => SeriesData::Complex(c),
        };
        put(out, WpSeries(data))
    })
}

/// Number of samples; 0 for a null handle.
///
/// # Safety
/// `series` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wp_series_len(series: *const WpSeries) -> usize {
    match series.as_ref().map(|s| &s.0) {
        Some(SeriesData::Real(r)) => r.len(),
        Some(SeriesData::Complex(c)) => c.len(),
        None => 0,
    }
}

/// # Safety
/// `series` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wp_series_is_complex(series: *const WpSeries) -> bool {
    matches!(series.as_ref().map(|s| &s.0), Some(SeriesData::Complex(_)))
}

/// Copy the real parts (`imag == false`) or imaginary parts into `buf`,
/// which must hold at least `wp_series_len` doubles.
///
/// # Safety
/// `series` must be a live handle and `buf` writable for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn wp_series_copy(series: *const WpSeries, imag: bool, buf: *mut f64, len: usize) -> WpStatus {
    guard(|| {
        let s = handle(series, "series")?;
        if buf.is_null() {
            return Err(null("buf"));
        }
        let values: Vec<f64> = match &s.0 {
            SeriesData::Real(r) => r.values().iter().map(|v| if imag { 0.0 } else { *v }).collect(),
            SeriesData::Complex(c) => c.values().iter().map(|v| if imag { v.im } else { v.re }).collect(),
        };
        if len < values.len() {
            return Err((WpStatus::BufferTooSmall, format!("need {} doubles, got {len}", values.len())));
        }
        std::slice::from_raw_parts_mut(buf, values.len()).copy_from_slice(&values);
        Ok(())
    })
}

/// # Safety
/// `series` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wp_series_free(series: *mut WpSeries) {
    if !series.is_null() {
        drop(Box::from_raw(series));
    }
}

/// `sum |x|^2 dt`.
///
/// # Safety
/// `series` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn wp_energy(series: *const WpSeries, out: *mut f64) -> WpStatus {
    guard(|| {
        let e = match &handle(series, "series")?.0 {
            SeriesData::Real(r) => energy(r),
            SeriesData::Complex(c) => energy(c),
        };
        *out.as_mut().ok_or_else(|| null("out"))? = e;
        Ok(())
    })
}

/// Admissibility coefficient; `WpStatus::NotAdmissible` when the DC bin is
/// not negligible.
///
/// # Safety
/// `series` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn wp_admissibility(series: *const WpSeries, out: *mut f64) -> WpStatus {
    guard(|| {
        let c = match &handle(series, "series")?.0 {
            SeriesData::Real(r) => lib(wavepair::admissibility(r))?,
            SeriesData::Complex(c) => lib(wavepair::admissibility(c))?,
        };
        *out.as_mut().ok_or_else(|| null("out"))? = c;
        Ok(())
    })
}

/// Leading vanishing moments up to `max_order` at relative tolerance `tol`.
///
/// # Safety
/// `series` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn wp_vanishing_moments(
    series: *const WpSeries,
    max_order: u32,
    tol: f64,
    out: *mut u32,
) -> WpStatus {
    guard(|| {
        let m = match &handle(series, "series")?.0 {
            SeriesData::Real(r) => lib(vanishing_moments(r, max_order, tol))?,
            SeriesData::Complex(c) => lib(vanishing_moments(c, max_order, tol))?,
        };
        *out.as_mut().ok_or_else(|| null("out"))? = m;
        Ok(())
    })
}

/// CWT of a real signal over scales `first, first + step, ..., last`
/// (samples). `variant` is wavelet, hilbert, fourier, analytic, hartley+
/// or hartley-.
///
/// # Safety
/// `signal` must be a live handle, strings valid, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn wp_cwt(
    signal: *const WpSeries,
    family: *const c_char,
    omega0: f64,
    variant: *const c_char,
    first: f64,
    last: f64,
    step: f64,
    out: *mut *mut WpScalogram,
) -> WpStatus {
    guard(|| {
        let f = real_of(handle(signal, "signal")?, "signal")?;
        let spec = spec_of(str_arg(family, "family")?, omega0)?;
        let variant: Variant = lib(str_arg(variant, "variant")?.parse())?;
        let scales = lib(ScaleRange::linear(first, last, step))?;
        put(out, WpScalogram(lib(cwt(f, &Recipe::new(spec, variant), &scales))?))
    })
}

/// Number of scales and translations.
///
/// # Safety
/// `s` must be a live handle; `rows` and `cols` valid.
#[no_mangle]
pub unsafe extern "C" fn wp_scalogram_shape(s: *const WpScalogram, rows: *mut usize, cols: *mut usize) -> WpStatus {
    guard(|| {
        let s = &handle(s, "scalogram")?.0;
        *rows.as_mut().ok_or_else(|| null("rows"))? = s.rows().len();
        *cols.as_mut().ok_or_else(|| null("cols"))? = s.grid().len();
        Ok(())
    })
}

/// Copy one row (scale index `row`) of the chosen part into `buf`.
///
/// # Safety
/// `s` must be a live handle and `buf` writable for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn wp_scalogram_copy_row(
    s: *const WpScalogram,
    row: usize,
    part: WpPart,
    buf: *mut f64,
    len: usize,
) -> WpStatus {
    guard(|| {
        let s = &handle(s, "scalogram")?.0;
        if buf.is_null() {
            return Err(null("buf"));
        }
        let r = s.rows().get(row).ok_or_else(|| (WpStatus::InvalidArgument, format!("row {row} out of range")))?;
        if len < r.len() {
            return Err((WpStatus::BufferTooSmall, format!("need {} doubles, got {len}", r.len())));
        }
        let dst = std::slice::from_raw_parts_mut(buf, r.len());
        for (d, c) in dst.iter_mut().zip(r) {
            *d = match part {
                WpPart::Real => c.re,
                WpPart::Imag => c.im,
                WpPart::Modulus => c.norm(),
                WpPart::Phase => c.arg(),
            };
        }
        Ok(())
    })
}

/// Frequency in Hz of scale `a` under this scalogram's wavelet and grid.
///
/// # Safety
/// `s` must be null or a live handle. Returns NaN for null.
#[no_mangle]
pub unsafe extern "C" fn wp_scalogram_frequency(s: *const WpScalogram, a: f64) -> f64 {
    s.as_ref().map_or(f64::NAN, |s| s.0.frequency_of(a))
}

/// # Safety
/// `s` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wp_scalogram_free(s: *mut WpScalogram) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}
