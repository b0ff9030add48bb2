#ifndef GKM_H
#define GKM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GkmStatus {
  GKM_STATUS_OK = 0,
  GKM_STATUS_NULL_POINTER = 1,
  GKM_STATUS_INVALID_UTF8 = 2,
  GKM_STATUS_PARSE_ERROR = 3,
  GKM_STATUS_INVALID_SHEAF = 4,
  GKM_STATUS_UNKNOWN_EXAMPLE = 5,
  GKM_STATUS_OUT_OF_RANGE = 6,
  GKM_STATUS_PANIC = 7,
} GkmStatus;

// A computed cohomology report.
typedef struct GkmReport GkmReport;

// A validated sheaf document.
typedef struct GkmSheaf GkmSheaf;

// Parses a sheaf document. On success `*out` receives a new handle.
//
// # Safety
// `json` must be a nul-terminated string and `out` a valid pointer.
enum GkmStatus gkm_sheaf_from_json(const char *json, struct GkmSheaf **out);

// Builds a named example: point, sphere, theta, cp1, cp2, cp3 or identity.
//
// # Safety
// `name` must be a nul-terminated string and `out` a valid pointer.
enum GkmStatus gkm_sheaf_example(const char *name, struct GkmSheaf **out);

// Releases a sheaf handle. Null is ignored.
//
// # Safety
// `sheaf` must come from this library and not be used afterwards.
void gkm_sheaf_free(struct GkmSheaf *sheaf);

// Checks the sheaf axioms. `*passed` tells whether all hold and
// `*nondegenerate` receives the number of non-degenerate edges.
//
// # Safety
// All pointers must be valid.
enum GkmStatus gkm_sheaf_validate(const struct GkmSheaf *sheaf,
                                  bool *passed,
                                  size_t *nondegenerate);

// Canonical JSON document for the sheaf.
//
// # Safety
// All pointers must be valid; release `*out` with `gkm_string_free`.
enum GkmStatus gkm_sheaf_to_json(const struct GkmSheaf *sheaf, char **out);

// Computes Hilbert tables up to `max_degree` (a nonnegative even integer),
// optionally with minimal generators of `H^0` and the full set of checks.
//
// # Safety
// All pointers must be valid.
enum GkmStatus gkm_report_compute(const struct GkmSheaf *sheaf,
                                  int64_t max_degree,
                                  bool generators,
                                  bool checks,
                                  struct GkmReport **out);

// `dim H^0` in one degree up to the report's cutoff.
//
// # Safety
// All pointers must be valid.
enum GkmStatus gkm_report_h0_dim(const struct GkmReport *report, int64_t degree, size_t *out);

// `dim H^1` in one degree up to the report's cutoff.
//
// # Safety
// All pointers must be valid.
enum GkmStatus gkm_report_h1_dim(const struct GkmReport *report, int64_t degree, size_t *out);

// Whether every check passed; `*out` is false when checks were not run.
//
// # Safety
// All pointers must be valid.
enum GkmStatus gkm_report_checks_passed(const struct GkmReport *report, bool *out);

// The report as JSON.
//
// # Safety
// All pointers must be valid; release `*out` with `gkm_string_free`.
enum GkmStatus gkm_report_to_json(const struct GkmReport *report, char **out);

// Releases a report handle. Null is ignored.
//
// # Safety
// `report` must come from this library and not be used afterwards.
void gkm_report_free(struct GkmReport *report);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void gkm_string_free(char *s);

// Message for the last failed call on this thread, or null. Valid until the
// next call into this library on the same thread.
const char *gkm_last_error_message(void);

// Library version as a static string.
const char *gkm_version(void);

#endif  /* GKM_H */
