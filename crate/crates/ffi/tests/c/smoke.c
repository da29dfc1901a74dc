#include <math.h>
#include <stdio.h>
#include <stdlib.h>

#include "wavepair.h"

#define CHECK(call)                                                            \
  do {                                                                         \
    WpStatus s_ = (call);                                                      \
    if (s_ != WP_STATUS_OK) {                                                  \
      fprintf(stderr, "%s: %s (%s)\n", #call, wp_status_string(s_),            \
              wp_last_error_message());                                        \
      return 1;                                                                \
    }                                                                          \
  } while (0)

int main(void) {
  WpSeries *psi = NULL, *kernel = NULL, *signal = NULL;
  WpScalogram *s = NULL;
  double e = 0.0;
  size_t rows = 0, cols = 0;

  CHECK(wp_sample_wavelet("mexhat", 0.0, -8.0, 8.0, 2048, &psi));
  CHECK(wp_kernel(psi, "analytic", &kernel));
  CHECK(wp_energy(kernel, &e));
  if (fabs(e - 1.0) > 1e-9 || !wp_series_is_complex(kernel)) {
    fprintf(stderr, "energy %g\n", e);
    return 1;
  }

  CHECK(wp_freq_breakdown(0.0, 1.0, 1000, 5.0, 50.0, 0.5, &signal));
  CHECK(wp_cwt(signal, "mexhat", 0.0, "analytic", 1.0, 32.0, 1.0, &s));
  CHECK(wp_scalogram_shape(s, &rows, &cols));
  double *row = malloc(cols * sizeof(double));
  CHECK(wp_scalogram_copy_row(s, 24, WP_PART_MODULUS, row, cols));

  if (wp_sample_wavelet("haar", 0.0, -8.0, 8.0, 2048, &psi) != WP_STATUS_INVALID_ARGUMENT) {
    return 1;
  }
  printf("rows=%zu cols=%zu m=%.6f err=%s\n", rows, cols, row[100], wp_last_error_message());

  free(row);
  wp_scalogram_free(s);
  wp_series_free(signal);
  wp_series_free(kernel);
  wp_series_free(psi);
  return 0;
}
