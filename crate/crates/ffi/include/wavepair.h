#ifndef WAVEPAIR_H
#define WAVEPAIR_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum WpStatus {
  WP_STATUS_OK = 0,
  WP_STATUS_NULL_POINTER = 1,
  WP_STATUS_INVALID_ARGUMENT = 2,
  WP_STATUS_INVALID_GRID = 3,
  WP_STATUS_NOT_ADMISSIBLE = 4,
  WP_STATUS_NUMERICAL = 5,
  WP_STATUS_BUFFER_TOO_SMALL = 6,
  WP_STATUS_PANIC = 7,
} WpStatus;

// Which real-valued view of a scalogram to copy.
typedef enum WpPart {
  WP_PART_REAL = 0,
  WP_PART_IMAG = 1,
  WP_PART_MODULUS = 2,
  WP_PART_PHASE = 3,
} WpPart;

// A CWT coefficient matrix.
typedef struct WpScalogram WpScalogram;

// A sampled real or complex series.
typedef struct WpSeries WpSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Static description of a status code.
const char *wp_status_string(enum WpStatus status);

// Message of the last failed call on this thread. Valid until the next
// failing call on the same thread.
const char *wp_last_error_message(void);

// Sample a unit-energy wavelet on `n` points over `[t_min, t_max)`.
// `family` is one of morlet, meyer, mexhat, gaus1, gaus2, gaus3;
// `omega0 <= 0` keeps the Morlet default.
//
// # Safety
// `family` must be a valid C string and `out` a valid pointer.
enum WpStatus wp_sample_wavelet(const char *family,
                                double omega0,
                                double t_min,
                                double t_max,
                                size_t n,
                                struct WpSeries **out);

// Wrap `n` caller samples starting at `t_min` with spacing `dt`.
//
// # Safety
// `values` must point to `n` readable doubles and `out` be valid.
enum WpStatus wp_series_from_real(double t_min,
                                  double dt,
                                  const double *values,
                                  size_t n,
                                  struct WpSeries **out);

// `sin(2 pi f1 t) + sin(2 pi f2 t)` on `[t_min, t_max)`.
//
// # Safety
// `out` must be a valid pointer.
enum WpStatus wp_two_sine(double t_min,
                          double t_max,
                          size_t n,
                          double f1,
                          double f2,
                          struct WpSeries **out);

// Sine at `f_low` before `t_break`, `f_high` after.
//
// # Safety
// `out` must be a valid pointer.
enum WpStatus wp_freq_breakdown(double t_min,
                                double t_max,
                                size_t n,
                                double f_low,
                                double f_high,
                                double t_break,
                                struct WpSeries **out);

// Hilbert transform of a real series.
//
// # Safety
// `series` must be a live handle and `out` a valid pointer.
enum WpStatus wp_hilbert(const struct WpSeries *series, struct WpSeries **out);

// Kernel of a real wavelet: `kind` is fourier, analytic, hartley+ or
// hartley-. Fourier-like and analytic kernels are complex.
//
// # Safety
// `series` must be a live handle, `kind` a valid C string, `out` valid.
enum WpStatus wp_kernel(const struct WpSeries *series, const char *kind, struct WpSeries **out);

// Number of samples; 0 for a null handle.
//
// # Safety
// `series` must be null or a live handle.
size_t wp_series_len(const struct WpSeries *series);

// # Safety
// `series` must be null or a live handle.
bool wp_series_is_complex(const struct WpSeries *series);

// Copy the real parts (`imag == false`) or imaginary parts into `buf`,
// which must hold at least `wp_series_len` doubles.
//
// # Safety
// `series` must be a live handle and `buf` writable for `len` doubles.
enum WpStatus wp_series_copy(const struct WpSeries *series, bool imag, double *buf, size_t len);

// # Safety
// `series` must be null or a handle not yet freed.
void wp_series_free(struct WpSeries *series);

// `sum |x|^2 dt`.
//
// # Safety
// `series` must be a live handle and `out` valid.
enum WpStatus wp_energy(const struct WpSeries *series, double *out);

// Admissibility coefficient; `WpStatus::NotAdmissible` when the DC bin is
// not negligible.
//
// # Safety
// `series` must be a live handle and `out` valid.
enum WpStatus wp_admissibility(const struct WpSeries *series, double *out);

// Leading vanishing moments up to `max_order` at relative tolerance `tol`.
//
// # Safety
// `series` must be a live handle and `out` valid.
enum WpStatus wp_vanishing_moments(const struct WpSeries *series,
                                   uint32_t max_order,
                                   double tol,
                                   uint32_t *out);

// CWT of a real signal over scales `first, first + step, ..., last`
// (samples). `variant` is wavelet, hilbert, fourier, analytic, hartley+
// or hartley-.
//
// # Safety
// `signal` must be a live handle, strings valid, `out` valid.
enum WpStatus wp_cwt(const struct WpSeries *signal,
                     const char *family,
                     double omega0,
                     const char *variant,
                     double first,
                     double last,
                     double step,
                     struct WpScalogram **out);

// Number of scales and translations.
//
// # Safety
// `s` must be a live handle; `rows` and `cols` valid.
enum WpStatus wp_scalogram_shape(const struct WpScalogram *s, size_t *rows, size_t *cols);

// Copy one row (scale index `row`) of the chosen part into `buf`.
//
// # Safety
// `s` must be a live handle and `buf` writable for `len` doubles.
enum WpStatus wp_scalogram_copy_row(const struct WpScalogram *s,
                                    size_t row,
                                    enum WpPart part,
                                    double *buf,
                                    size_t len);

// Frequency in Hz of scale `a` under this scalogram's wavelet and grid.
//
// # Safety
// `s` must be null or a live handle. Returns NaN for null.
double wp_scalogram_frequency(const struct WpScalogram *s, double a);

// # Safety
// `s` must be null or a handle not yet freed.
void wp_scalogram_free(struct WpScalogram *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WAVEPAIR_H */
