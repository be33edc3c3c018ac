#ifndef ESSENCE_H
#define ESSENCE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EssStatus {
  ESS_STATUS_OK = 0,
  /**
   * Typing, well-formedness and other semantic errors.
   */
  ESS_STATUS_FAILED = 1,
  /**
   * Bad input: syntax, unknown names, disabled rules, mismatched stages.
   */
  ESS_STATUS_USAGE = 2,
  /**
   * The step budget ran out.
   */
  ESS_STATUS_FUEL_EXHAUSTED = 3,
  /**
   * A property suite ran and found counterexamples.
   */
  ESS_STATUS_PROPERTY_FAILED = 4,
  ESS_STATUS_NULL_ARGUMENT = 5,
  ESS_STATUS_INVALID_UTF8 = 6,
  ESS_STATUS_PANIC = 7,
} EssStatus;

/**
 * A parsed term together with the calculus it belongs to.
 */
typedef struct EssTerm EssTerm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses `source` as a term of `calculus` (a tag such as `lc`, `vfs`, `cps`).
 *
 * # Safety
 * String arguments must be null or NUL-terminated; `out` must be writable.
 */
enum EssStatus ess_parse(const char *calculus, const char *source, struct EssTerm **out);

/**
 * Renders a term in the concrete syntax `ess_parse` reads.
 *
 * # Safety
 * `term` must come from this library; `out` must be writable.
 */
enum EssStatus ess_print(const struct EssTerm *term, char **out);

/**
 * Tag of the calculus a term belongs to. The string is static; do not free it.
 *
 * # Safety
 * `term` must be null or come from this library.
 */
const char *ess_term_calculus(const struct EssTerm *term);

/**
 * Runs a comma-separated pipeline of stages and returns the final term.
 * An empty pipeline yields a copy of the input.
 *
 * # Safety
 * As for `ess_parse`.
 */
enum EssStatus ess_translate(const struct EssTerm *term,
                             const char *pipeline,
                             struct EssTerm **out);

/**
 * Normalizes in the term's own calculus. `rules` is null for every rule of
 * the calculus, or a comma-separated list; `max_steps` of 0 means the default
 * budget. `steps` may be null.
 *
 * # Safety
 * As for `ess_parse`; `steps` must be null or writable.
 */
enum EssStatus ess_normalize(const struct EssTerm *term,
                             const char *rules,
                             size_t max_steps,
                             struct EssTerm **out,
                             size_t *steps);

/**
 * Synthesizes the type of a term, or checks it against `ascription`.
 * `context` is null or a list like `f : a -> a, x : a`.
 *
 * # Safety
 * As for `ess_parse`.
 */
enum EssStatus ess_typecheck(const struct EssTerm *term,
                             const char *context,
                             const char *ascription,
                             char **out);

/**
 * Runs a property suite (or `all`). `samples` of 0 keeps each property's
 * default count. The rendered report goes to `report` unless it is null.
 * Returns `ESS_STATUS_PROPERTY_FAILED` when a counterexample was found.
 *
 * # Safety
 * As for `ess_parse`; `report` must be null or writable.
 */
enum EssStatus ess_check(const char *suite, uint64_t seed, size_t samples, char **report);

/**
 * # Safety
 * `term` must be null or an unfreed handle from this library.
 */
void ess_term_free(struct EssTerm *term);

/**
 * # Safety
 * `s` must be null or an unfreed string from this library.
 */
void ess_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. Owned by the library.
 */
const char *ess_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ESSENCE_H */
