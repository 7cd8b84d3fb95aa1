#ifndef BRAID3_H
#define BRAID3_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Nielsen-Thurston type, as in the library.
 */
typedef enum {
  BRAID3_NT_CLASS_CENTRAL_POWER = 0,
  BRAID3_NT_CLASS_PERIODIC = 1,
  BRAID3_NT_CLASS_REDUCIBLE = 2,
  BRAID3_NT_CLASS_PSEUDO_ANOSOV = 3,
} Braid3NtClass;

/**
 * Status codes. `BRAID3_STATUS_OK` is zero; the rest mirror the library errors.
 */
typedef enum {
  BRAID3_STATUS_OK = 0,
  BRAID3_STATUS_NULL_POINTER = 1,
  BRAID3_STATUS_INVALID_UTF8 = 2,
  BRAID3_STATUS_SYNTAX = 3,
  BRAID3_STATUS_EMPTY_WORD = 4,
  BRAID3_STATUS_ZERO_INPUT = 5,
  BRAID3_STATUS_NOT_APPLICABLE = 6,
  BRAID3_STATUS_UNSUPPORTED_COMBINATION = 7,
  BRAID3_STATUS_DOMAIN = 8,
  BRAID3_STATUS_QUADRATURE_FAILURE = 9,
  BRAID3_STATUS_NEWTON_DIVERGENCE = 10,
  BRAID3_STATUS_BLOCK_UNAVAILABLE = 11,
  BRAID3_STATUS_GRID_DEGENERATE = 12,
  BRAID3_STATUS_POLE = 13,
  BRAID3_STATUS_NON_FINITE = 14,
  BRAID3_STATUS_INVALID_BOUNDARY = 15,
  BRAID3_STATUS_BUFFER_TOO_SMALL = 16,
  BRAID3_STATUS_PANIC = 99,
} Braid3Status;

/**
 * Opaque handle to a 3-braid word.
 */
typedef struct Braid3Braid Braid3Braid;

/**
 * Opaque handle to a reduced word in the free group on `a1`, `a2`.
 */
typedef struct Braid3Word Braid3Word;

/**
 * Flattened bounds report. Absent values are NaN.
 */
typedef struct {
  double l;
  double lambda_lower;
  double lambda_upper;
  double entropy_lower;
  double entropy_upper;
  double entropy_exact;
  bool exceptional;
  Braid3NtClass nt_class;
} Braid3Bounds;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next call into the library from the same thread.
 */
const char *braid3_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *braid3_version(void);

/**
 * Parses a pure word such as `"a1^2 a2^-1"`.
 *
 * # Safety
 * `word` must be a NUL-terminated string and `out` a valid pointer.
 */
Braid3Status braid3_word_parse(const char *word, Braid3Word **out);

/**
 * # Safety
 * `w` must be null or a handle from [`braid3_word_parse`] not yet freed.
 */
void braid3_word_free(Braid3Word *w);

/**
 * Canonical rendering of the word; release with [`braid3_string_free`].
 *
 * # Safety
 * `w` must be a live handle and `out` a valid pointer.
 */
Braid3Status braid3_word_render(const Braid3Word *w, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void braid3_string_free(char *s);

/**
 * `L(w)` of the linear syllable decomposition.
 *
 * # Safety
 * `w` must be a live handle and `out` a valid pointer.
 */
Braid3Status braid3_word_script_l(const Braid3Word *w, double *out);

/**
 * Writes the syllable degrees into `buf[0..cap]` and their count to `len`.
 * If `cap` is too small, only `len` is written and `BufferTooSmall` returned.
 *
 * # Safety
 * `buf` must point to `cap` writable `u64` (or be null with `cap == 0`).
 */
Braid3Status braid3_word_syllable_degrees(const Braid3Word *w,
                                          uint64_t *buf,
                                          size_t cap,
                                          size_t *len);

/**
 * Bounds for `w` under `boundary` (`tr`, `pb`, `tr_pb`, `pb_tr`, `conjugacy`).
 *
 * # Safety
 * `w` must be a live handle, `boundary` a NUL-terminated string, `out` valid.
 */
Braid3Status braid3_word_bounds(const Braid3Word *w, const char *boundary, Braid3Bounds *out);

/**
 * Exact entropy of the conjugacy class of `w`.
 *
 * # Safety
 * `w` must be a live handle and `out` a valid pointer.
 */
Braid3Status braid3_word_entropy(const Braid3Word *w, double *out);

/**
 * Gluing audit of `w` on a grid of spacing `grid_step`.
 *
 * # Safety
 * `w` must be a live handle; `sup_mu` and `qc` must be valid pointers.
 */
Braid3Status braid3_word_glue(const Braid3Word *w,
                              double grid_step,
                              double *sup_mu,
                              double *qc,
                              bool *passed);

/**
 * Parses a braid word such as `"s1^3 s2^-2 d"`.
 *
 * # Safety
 * `word` must be a NUL-terminated string and `out` a valid pointer.
 */
Braid3Status braid3_braid_parse(const char *word, Braid3Braid **out);

/**
 * # Safety
 * `b` must be null or a handle from [`braid3_braid_parse`] not yet freed.
 */
void braid3_braid_free(Braid3Braid *b);

/**
 * Totally real bounds of a braid through its normal form. Writes a new
 * word handle for the ϑ-image to `theta` (null for Δ-powers); pass null to skip it.
 *
 * # Safety
 * `b` must be a live handle and `out` a valid pointer.
 */
Braid3Status braid3_braid_bounds(const Braid3Braid *b, Braid3Bounds *out, Braid3Word **theta);

/**
 * Entropy of the braid.
 *
 * # Safety
 * `b` must be a live handle and `out` a valid pointer.
 */
Braid3Status braid3_braid_entropy(const Braid3Braid *b, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BRAID3_H */
