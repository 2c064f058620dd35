/* C interface to the segcalc segment calculus. */

#ifndef SEGCALC_H
#define SEGCALC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
enum SegcalcStatus
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : int32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  SegcalcStatus_Ok = 0,
  SegcalcStatus_NullPointer = 1,
  SegcalcStatus_InvalidUtf8 = 2,
  /**
   * Session or oracle text failed to parse or validate.
   */
  SegcalcStatus_ParseError = 3,
  /**
   * A command precondition was violated (no embedding, empty multisegment, ...).
   */
  SegcalcStatus_PreconditionError = 4,
  /**
   * `verify` found a counterexample; the report JSON is still written.
   */
  SegcalcStatus_CounterexampleFound = 5,
  SegcalcStatus_UnknownCommand = 6,
  SegcalcStatus_InternalError = 7,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum SegcalcStatus SegcalcStatus;
#else
typedef int32_t SegcalcStatus;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

/**
 * Opaque parsed session.
 */
typedef struct SegcalcSession SegcalcSession;

/**
 * Optional per-call settings. Zero/null fields mean "unset".
 */
typedef struct SegcalcOptions {
  /**
   * Override for d; 0 leaves the session value in force.
   */
  uint32_t d;
  /**
   * Override for eta(-1): +1 or -1; 0 leaves the session value in force.
   */
  int32_t eta;
  /**
   * Number of random instances for `verify`; 0 disables batch mode.
   */
  uint64_t random;
  /**
   * Seed for `random`.
   */
  uint64_t seed;
  /**
   * Oracle table text (not a path); null for none.
   */
  const char *oracle_text;
} SegcalcOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string; do not free.
 */
const char *segcalc_version(void);

/**
 * Message describing the most recent error on this thread, or null. The
 * caller owns the returned string (free with `segcalc_string_free`).
 */
char *segcalc_last_error_message(void);

/**
 * Parses and validates session text into an opaque handle.
 *
 * # Safety
 * `text` must point at a NUL-terminated string and `out` at writable storage
 * for one pointer. On `Ok` the caller owns the handle and must release it
 * with [`segcalc_session_free`].
 */
SegcalcStatus segcalc_session_parse(const char *text, struct SegcalcSession **out);

/**
 * Releases a session handle; null is permitted.
 *
 * # Safety
 * `session` must be a handle returned by [`segcalc_session_parse`], not yet
 * freed.
 */
void segcalc_session_free(struct SegcalcSession *session);

/**
 * Renders the canonical text of a parsed session (round-trips through
 * `segcalc_session_parse`). The caller frees the string.
 *
 * # Safety
 * `session` must be a live handle and `out` writable.
 */
SegcalcStatus segcalc_session_render(const struct SegcalcSession *session, char **out);

/**
 * Runs a command against a session and writes the JSON report to `out_json`.
 *
 * `command` is one of `order`, `classify`, `mackey`, `verify`, `jl`,
 * `cosets`, `epsilon`. `opts` may be null. The report is written on both
 * `Ok` and `CounterexampleFound`; the caller frees it.
 *
 * # Safety
 * `session` must be a live handle, `command` a NUL-terminated string,
 * `opts` null or valid, `out_json` writable. If `opts->oracle_text` is
 * non-null it must be NUL-terminated.
 */
SegcalcStatus segcalc_run(const struct SegcalcSession *session,
                          const char *command,
                          const struct SegcalcOptions *opts,
                          char **out_json);

/**
 * Releases a string returned by this library; null is permitted.
 *
 * # Safety
 * `s` must originate from this library and not have been freed already.
 */
void segcalc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEGCALC_H */
