#ifndef ACSM_H
#define ACSM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit by hand. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result code of every fallible call.
typedef enum AcsmStatus {
  ACSM_STATUS_OK = 0,
  ACSM_STATUS_NULL_POINTER = 1,
  ACSM_STATUS_INVALID_ARGUMENT = 2,
  ACSM_STATUS_PARSE_ERROR = 3,
  ACSM_STATUS_NOT_SQUARE = 4,
  ACSM_STATUS_ALPHABET_MISMATCH = 5,
  ACSM_STATUS_IO_ERROR = 6,
  ACSM_STATUS_PANIC = 7,
} AcsmStatus;

typedef enum AcsmMeasure {
  ACSM_MEASURE_ACSM = 0,
  ACSM_MEASURE_APPROX = 1,
  ACSM_MEASURE_EACSM = 2,
} AcsmMeasure;

typedef enum AcsmMetric {
  ACSM_METRIC_HAMMING = 0,
  ACSM_METRIC_MAD = 1,
  ACSM_METRIC_NMAD = 2,
} AcsmMetric;

// Opaque square symbol matrix.
typedef struct AcsmMatrix AcsmMatrix;

// Opaque similarity report.
typedef struct AcsmReport AcsmReport;

// Measure selection. Fields a measure does not use are ignored.
typedef struct AcsmParams {
  enum AcsmMeasure measure;
  uint64_t alpha;
  // approx only
  size_t interval;
  // eacsm only
  size_t epsilon;
  // eacsm only
  enum AcsmMetric metric;
  // eacsm only
  double tau;
  // eacsm only; 0 disables the gate
  double p0;
} AcsmParams;

// Scalar part of a report.
typedef struct AcsmSummary {
  size_t n;
  uint64_t s_numerator;
  uint64_t s_denominator;
  double s_normalized;
  double dissimilarity;
  double p1;
  double p2;
  bool gated;
  double elapsed_ms;
} AcsmSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call into this library on the same thread.
const char *acsm_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *acsm_version(void);

// Builds a matrix from `len` row-major symbols.
//
// # Safety
// `symbols` must point to `len` readable `uint32_t`; `out` must be writable.
enum AcsmStatus acsm_matrix_new(size_t rows,
                                size_t cols,
                                uint32_t alphabet,
                                const uint32_t *symbols,
                                size_t len,
                                struct AcsmMatrix **out);

// Loads a `.pgm`/`.pnm` image or a CSV/whitespace integer grid from `path`.
//
// # Safety
// `path` must be a NUL-terminated string; `out` must be writable.
enum AcsmStatus acsm_matrix_load(const char *path, struct AcsmMatrix **out);

// Parses PGM (`P2`/`P5`) bytes.
//
// # Safety
// `bytes` must point to `len` readable bytes; `out` must be writable.
enum AcsmStatus acsm_matrix_from_pgm(const uint8_t *bytes, size_t len, struct AcsmMatrix **out);

// Parses a CSV/whitespace integer grid; the alphabet is `max + 1`.
//
// # Safety
// `text` must be a NUL-terminated UTF-8 string; `out` must be writable.
enum AcsmStatus acsm_matrix_from_csv(const char *text, struct AcsmMatrix **out);

// Re-declares the alphabet size of a matrix (e.g. to align two CSV inputs).
//
// # Safety
// `matrix` must be a live handle.
enum AcsmStatus acsm_matrix_set_alphabet(struct AcsmMatrix *matrix, uint32_t alphabet);

// New matrix with every symbol `v` mapped to `floor(v * target / L)`.
//
// # Safety
// `matrix` must be a live handle; `out` must be writable.
enum AcsmStatus acsm_matrix_quantize(const struct AcsmMatrix *matrix,
                                     uint32_t target,
                                     struct AcsmMatrix **out);

// Row count, or 0 for a null handle.
//
// # Safety
// `matrix` must be null or a live handle.
size_t acsm_matrix_rows(const struct AcsmMatrix *matrix);

// Column count, or 0 for a null handle.
//
// # Safety
// `matrix` must be null or a live handle.
size_t acsm_matrix_cols(const struct AcsmMatrix *matrix);

// Alphabet size, or 0 for a null handle.
//
// # Safety
// `matrix` must be null or a live handle.
uint32_t acsm_matrix_alphabet(const struct AcsmMatrix *matrix);

// Releases a matrix. Null is a no-op.
//
// # Safety
// `matrix` must be null or a handle not yet freed.
void acsm_matrix_free(struct AcsmMatrix *matrix);

// Parameters with the library defaults for `measure`
// (alpha 1, interval 2, epsilon 5, hamming, tau 0.25, p0 0).
struct AcsmParams acsm_params_default(enum AcsmMeasure measure);

// Compares `a` against `b`; the report's per-position map refers to `a`.
//
// # Safety
// `a`, `b` must be live handles, `params` readable, `out` writable.
enum AcsmStatus acsm_compare(const struct AcsmMatrix *a,
                             const struct AcsmMatrix *b,
                             const struct AcsmParams *params,
                             struct AcsmReport **out);

// Copies the scalar fields of `report` into `out`.
//
// # Safety
// `report` must be a live handle; `out` writable.
enum AcsmStatus acsm_report_summary(const struct AcsmReport *report, struct AcsmSummary *out);

// Match at 1-based position `(i, j)` of A: area `w` and anchor `(k, h, s)`,
// all zero when nothing matched.
//
// # Safety
// `report` must be a live handle; the output pointers must be writable.
enum AcsmStatus acsm_report_cell(const struct AcsmReport *report,
                                 size_t i,
                                 size_t j,
                                 uint64_t *w,
                                 size_t *k,
                                 size_t *h,
                                 size_t *s);

// Releases a report. Null is a no-op.
//
// # Safety
// `report` must be null or a handle not yet freed.
void acsm_report_free(struct AcsmReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ACSM_H */
