/* ymstrat — exact Morse-stratification series for Yang-Mills theory on
 * surfaces, behind a C ABI.
 *
 * Usage pattern: create a context (optionally pointing at an alternative
 * closed-form table file), call operations, read results as canonical JSON
 * strings, free them with yms_string_free, destroy the context.  Every
 * operation returns YMS_OK or an error code; after a failure
 * yms_last_error holds a one-line diagnostic (valid until the next call on
 * the same context).  All arithmetic behind this interface is exact
 * (arbitrary-precision rationals); no result ever passes through floating
 * point.
 *
 * Strings accepted:
 *   group    "U1" | "U2" | "SU2" | "U3" | "SU3"
 *   surface  "rp2" | "klein" | "crosscaps:M" | "genus:G"  (':' may be '=')
 *   type     "(2,1,-1,-2)"-style tuple, or JSON {"blocks": [[n,k],...],
 *            "n0": int}
 *
 * Thread-safety: distinct contexts may be used concurrently; a single
 * context must not be shared between threads without external locking
 * (the per-context error string is mutable state).
 */

#ifndef YMSTRAT_H
#define YMSTRAT_H

#if defined(_WIN32)
#  if defined(YMSTRAT_BUILD)
#    define YMSTRAT_API __declspec(dllexport)
#  else
#    define YMSTRAT_API __declspec(dllimport)
#  endif
#else
#  define YMSTRAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct yms_context yms_context;

typedef enum yms_status {
  YMS_OK = 0,
  YMS_E_INVALID_ARGUMENT = 1,
  YMS_E_PARSE = 2,
  YMS_E_DIVISION_INEXACT = 3,
  YMS_E_INVALID_PROGRESSION = 4,
  YMS_E_INCOMPARABLE_INPUT = 5,
  YMS_E_UNSUPPORTED_RANK = 6,
  YMS_E_NEGATIVE_DIMENSION = 7,
  YMS_E_UNSUPPORTED_GROUP = 8,
  YMS_E_UNSUPPORTED_STRATUM = 9,
  YMS_E_LEDGER_INCONSISTENT = 10,
  YMS_E_MISSING_TOTAL_SERIES = 11,
  YMS_E_INSUFFICIENT_BOUND = 12,
  YMS_E_INTERNAL = 99
} yms_status;

/* Library version, "major.minor.patch". */
YMSTRAT_API const char* yms_version(void);

/* Stable lowercase name of a status code, e.g. "unsupported_group". */
YMSTRAT_API const char* yms_status_name(yms_status status);

/* Create a context.  tables_path == NULL uses the built-in closed-form
 * table; otherwise the file at tables_path is loaded in its place. */
YMSTRAT_API yms_status yms_context_create(const char* tables_path, yms_context** out);
YMSTRAT_API void yms_context_destroy(yms_context* ctx);

/* One-line message for the most recent failure on this context ("" if none).
 * Owned by the context; valid until the next call on it. */
YMSTRAT_API const char* yms_last_error(const yms_context* ctx);

/* Free a string returned through a char** out-parameter. */
YMSTRAT_API void yms_string_free(char* s);

/* Stratum types of the rank(group)-degree-`degree` stratification over the
 * surface, up to real codimension codim_bound, in the refined total order
 * (codimension ascending).  parity is the mod-2 first Chern class, used for
 * U(n) over nonorientable surfaces only (pass +1 otherwise).  JSON:
 *   {"codim_bound": B, "degree": k, "group": ..., "parity": ...,
 *    "surface": ..., "types": [{"blocks": ..., "n0": ..., "pretty": ...,
 *      plus "lambda","lambda_C","lambda_R" over nonorientable surfaces or
 *      "codim" over orientable ones}, ...]} */
YMSTRAT_API yms_status yms_enumerate_json(yms_context* ctx, const char* group,
                                          const char* surface, int parity, long long degree,
                                          long long codim_bound, char** out);

/* Codimension of one stratum type over the surface.  JSON over a
 * nonorientable surface: {"lambda": ..., "lambda_C": ..., "lambda_R": ...,
 * "pretty": ...}; over an orientable one: {"codim": ..., "pretty": ...}.
 * "pretty" echoes the parsed type. */
YMSTRAT_API yms_status yms_codim_json(yms_context* ctx, const char* type,
                                      const char* surface, char** out);

/* A tabulated closed form expanded to order truncate.  role is "bg" (the
 * ambient classifying-space series) or "stratum" (the r-independent factor
 * shared by the unstable strata of the group's family).  Nonorientable
 * surfaces only.  JSON: {"closed_form": printable string,
 * "rational_function": {...}, "series": {"coeffs": ..., "truncation": N}} */
YMSTRAT_API yms_status yms_series_json(yms_context* ctx, const char* group, const char* role,
                                       const char* surface, int truncate, char** out);

/* The flat-connection series assembled stratum-by-stratum (ambient series
 * plus the geometric sum of shifted stratum series), with its exact factored
 * closed form.  Same JSON shape as yms_series_json. */
YMSTRAT_API yms_status yms_flat_json(yms_context* ctx, const char* group, int parity,
                                     const char* surface, int truncate, char** out);

/* Full verification: the stratum-by-stratum assembly is compared with the
 * tabulated closed form exactly (rational-function identity and
 * coefficientwise to N), and the Morse ledger is checked for
 * (1+t)-divisibility, the Morse inequality, and (anti)perfection through N.
 * *verified is set to 1 when every check passes, 0 otherwise.  JSON:
 *   {"scenario", "N", "morse_inequality": "holds|fails",
 *    "perfect_through_N", "antiperfect_through_N", "R_coeffs",
 *    "first_discrepancy": degree|null} */
YMSTRAT_API yms_status yms_verify_json(yms_context* ctx, const char* group, int parity,
                                       const char* surface, int truncate, int* verified,
                                       char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* YMSTRAT_H */
