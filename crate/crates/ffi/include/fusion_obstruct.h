#ifndef FUSION_OBSTRUCT_H
#define FUSION_OBSTRUCT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FoStatus {
  FO_STATUS_OK = 0,
  FO_STATUS_NULL_POINTER = 1,
  FO_STATUS_INVALID_UTF8 = 2,
  FO_STATUS_PARSE_ERROR = 3,
  FO_STATUS_INVALID_ARGUMENT = 4,
  FO_STATUS_EVAL_ERROR = 5,
  FO_STATUS_BUFFER_TOO_SMALL = 6,
  FO_STATUS_PANIC = 7,
} FoStatus;

typedef enum FoVerdict {
  FO_VERDICT_HOLDS = 0,
  FO_VERDICT_VIOLATED = 1,
  FO_VERDICT_INCONCLUSIVE = 2,
} FoVerdict;

// Opaque ring handle.
typedef struct FoRing FoRing;

// Verdict with its bracket on `λ_min`; `rayleigh` is the witness quotient
// when violated, the bracket midpoint otherwise.
typedef struct FoResult {
  enum FoVerdict verdict;
  double lower;
  double upper;
  double rayleigh;
} FoResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a ring from text (plain or JSON format). On success `*out` owns a
// handle to be released with `fo_ring_free`.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum FoStatus fo_ring_parse(const char *text, struct FoRing **out);

// Loads a built-in ring such as `k7`, `rank8_1` or `cyclic_5`.
//
// # Safety
// `name` must be a NUL-terminated string and `out` a valid pointer.
enum FoStatus fo_ring_fixture(const char *name, struct FoRing **out);

// Releases a handle; null is ignored.
//
// # Safety
// `ring` must come from this library and not be used afterwards.
void fo_ring_free(struct FoRing *ring);

// Rank, or 0 for a null handle.
//
// # Safety
// `ring` must be null or a live handle.
size_t fo_ring_rank(const struct FoRing *ring);

// Copies the Frobenius–Perron dimensions into `out[0..len]`.
//
// # Safety
// `ring` must be a live handle and `out` must hold `len` doubles.
enum FoStatus fo_ring_dims(const struct FoRing *ring, double *out, size_t len);

// Primary criterion at tensor power `n`.
//
// # Safety
// `ring` must be a live handle and `out` a valid pointer.
enum FoStatus fo_check_primary(const struct FoRing *ring, uint32_t n, struct FoResult *out);

// Localized criterion on the 0-based labels `set[0..len]`.
//
// # Safety
// `ring` must be a live handle, `set` must hold `len` labels and `out` must be valid.
enum FoStatus fo_check_localized(const struct FoRing *ring,
                                 const size_t *set,
                                 size_t len,
                                 uint32_t n,
                                 struct FoResult *out);

// Reduced (Hadamard-power) criterion; with a non-null `twists` such as
// `"I,I,swap"` the twisted variant is used and `n` is ignored.
//
// # Safety
// As for `fo_check_localized`; `twists` must be null or NUL-terminated.
enum FoStatus fo_check_reduced(const struct FoRing *ring,
                               const size_t *set,
                               size_t len,
                               uint64_t n,
                               const char *twists,
                               struct FoResult *out);

// Character-table criterion (commutative rings only).
//
// # Safety
// `ring` must be a live handle and `out` a valid pointer.
enum FoStatus fo_check_schur(const struct FoRing *ring, struct FoResult *out);

// Copy of the calling thread's last error message, or null. Free with
// `fo_string_free`.
char *fo_last_error(void);

// Releases a string returned by this library; null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void fo_string_free(char *s);

// Library version; static storage, do not free.
const char *fo_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FUSION_OBSTRUCT_H */
