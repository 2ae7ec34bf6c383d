/* C interface to libmabuchi.
 *
 * Every call returns a mabuchi_status. On failure the message of the most
 * recent error on the calling thread is available from mabuchi_last_error().
 * Strings returned through `char** out` are owned by the caller and must be
 * released with mabuchi_string_free().
 */
#ifndef MABUCHI_MABUCHI_H
#define MABUCHI_MABUCHI_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(MABUCHI_BUILDING_LIBRARY)
#    define MABUCHI_API __declspec(dllexport)
#  else
#    define MABUCHI_API __declspec(dllimport)
#  endif
#else
#  define MABUCHI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mabuchi_status {
  MABUCHI_OK = 0,
  MABUCHI_INVALID_ARGUMENT = 1,
  MABUCHI_PARSE_ERROR = 2,
  MABUCHI_NOT_FANO = 3,
  MABUCHI_NOT_DIVISIBLE = 4,
  MABUCHI_INVARIANT_VIOLATION = 5,
  MABUCHI_UNSUPPORTED_WEIGHT = 6,
  MABUCHI_NOT_POSITIVE = 7,
  MABUCHI_FUTAKI_NONZERO = 8,
  MABUCHI_BRACKET_FAILURE = 9,
  MABUCHI_ORACLE_MISMATCH = 10,
  MABUCHI_VERDICT_MISMATCH = 11,
  MABUCHI_IO_ERROR = 12,
  MABUCHI_INTERNAL = 99
} mabuchi_status;

typedef enum mabuchi_format {
  MABUCHI_FORMAT_TABLE = 0,
  MABUCHI_FORMAT_CSV = 1,
  MABUCHI_FORMAT_JSON = 2
} mabuchi_format;

typedef enum mabuchi_weight_kind {
  /* u = 1 - alpha x - beta built from the Mabuchi constant */
  MABUCHI_WEIGHT_MABUCHI = 0,
  /* u = 1, the Kähler-Einstein case */
  MABUCHI_WEIGHT_KE = 1
} mabuchi_weight_kind;

typedef struct mabuchi_scan_bounds {
  unsigned n_max;
  unsigned k_max;
  unsigned d0_max;
  unsigned d_inf_max;
} mabuchi_scan_bounds;

typedef struct mabuchi_manifold mabuchi_manifold;

MABUCHI_API const char* mabuchi_version(void);
/* "OK", "NotFano", ... */
MABUCHI_API const char* mabuchi_status_name(mabuchi_status status);
/* Nonzero for errors caused by the caller's input. */
MABUCHI_API int mabuchi_status_is_input_error(mabuchi_status status);
/* Thread-local; empty after a successful call. */
MABUCHI_API const char* mabuchi_last_error(void);
MABUCHI_API void mabuchi_string_free(char* s);

MABUCHI_API mabuchi_status mabuchi_parse_format(const char* name, mabuchi_format* out);

MABUCHI_API mabuchi_status mabuchi_manifold_from_pn(unsigned n, unsigned k, unsigned d0, unsigned d_inf,
                                                    mabuchi_manifold** out);
/* "n,k,d0,d_inf" */
MABUCHI_API mabuchi_status mabuchi_manifold_parse_pn(const char* tuple, mabuchi_manifold** out);
MABUCHI_API mabuchi_status mabuchi_manifold_from_json(const char* json, mabuchi_manifold** out);
MABUCHI_API void mabuchi_manifold_free(mabuchi_manifold* m);

MABUCHI_API mabuchi_status mabuchi_manifold_dimension(const mabuchi_manifold* m, unsigned* out);
/* Exact M_X as "p/q" (or "p"). */
MABUCHI_API mabuchi_status mabuchi_manifold_mabuchi_constant(const mabuchi_manifold* m, char** out);

MABUCHI_API mabuchi_status mabuchi_classify(const mabuchi_manifold* m, mabuchi_format format, char** out);
MABUCHI_API mabuchi_status mabuchi_mconst(const mabuchi_manifold* m, mabuchi_format format, char** out);
/* threads = 0 uses the hardware concurrency. */
MABUCHI_API mabuchi_status mabuchi_scan(const mabuchi_scan_bounds* bounds, unsigned threads, int verbose,
                                        mabuchi_format format, char** out);
MABUCHI_API mabuchi_status mabuchi_profile(const mabuchi_manifold* m, mabuchi_weight_kind weight,
                                           mabuchi_format format, unsigned samples, char** out);
/* digits >= 16. */
MABUCHI_API mabuchi_status mabuchi_krs(const mabuchi_manifold* m, unsigned digits, mabuchi_format format,
                                       unsigned samples, char** out);

#ifdef __cplusplus
}
#endif

#endif
