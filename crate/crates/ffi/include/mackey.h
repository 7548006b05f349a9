#ifndef MACKEY_H
#define MACKEY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Outcome of a call.
typedef enum MackeyStatus {
  MACKEY_STATUS_OK = 0,
  // A required pointer was null.
  MACKEY_STATUS_NULL_ARGUMENT = 1,
  // An argument was not valid UTF-8 or did not parse.
  MACKEY_STATUS_PARSE = 2,
  // The degree cap or a size guard refused the query.
  MACKEY_STATUS_LIMIT = 3,
  // The two indices are not comparable, so there is no defect.
  MACKEY_STATUS_INCOMPARABLE = 4,
  // The argument parsed but the operation does not apply to it.
  MACKEY_STATUS_INVALID = 5,
  // An index past the end of a decomposition.
  MACKEY_STATUS_OUT_OF_RANGE = 6,
  // A multiplicity does not fit the output type.
  MACKEY_STATUS_OVERFLOW = 7,
  // An internal error; this is a bug.
  MACKEY_STATUS_PANIC = 8,
} MackeyStatus;

// An owned decomposition into simple objects, in canonical order.
typedef struct MackeyDecomposition MackeyDecomposition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message of the last failed call on this thread, or null. The caller
// owns the returned string.
char *mackey_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a pointer previously returned by this library and not
// yet freed.
void mackey_string_free(char *s);

// Sets the largest number of boxes any intermediate object may have.
void mackey_set_degree_cap(size_t cap);

size_t mackey_degree_cap(void);

// The Littlewood–Richardson coefficient `c^lam_{mu,nu}`.
//
// # Safety
// String arguments must be nul-terminated; `out` must be writable.
enum MackeyStatus mackey_lr_coefficient(const char *lam,
                                        const char *mu,
                                        const char *nu,
                                        uint64_t *out);

// The defect from quadruple `a` to quadruple `b` in the default order.
// Returns [`MackeyStatus::Incomparable`] when `a` is not below `b`.
//
// # Safety
// String arguments must be nul-terminated; `out` must be writable.
enum MackeyStatus mackey_defect(const char *a, const char *b, size_t *out);

// `dim Ext^j(L_x, ℂ)`.
//
// # Safety
// `x` must be nul-terminated; `out` must be writable.
enum MackeyStatus mackey_ext_to_trivial(const char *x, size_t j, uint64_t *out);

// Composition factors of `J_q`. On success `*out` owns a new decomposition.
//
// # Safety
// `q` must be nul-terminated; `out` must be writable.
enum MackeyStatus mackey_decompose_j(const char *q, struct MackeyDecomposition **out);

// Number of distinct simple factors. Null counts as empty.
//
// # Safety
// `d` must be null or a live decomposition.
size_t mackey_decomposition_len(const struct MackeyDecomposition *d);

// The `i`-th factor: its index as text, e.g. `[1],[],[],[1]`, and its multiplicity.
// `index_out` receives an owned string.
//
// # Safety
// `d` must be a live decomposition; out-pointers must be writable.
enum MackeyStatus mackey_decomposition_term(const struct MackeyDecomposition *d,
                                            size_t i,
                                            char **index_out,
                                            uint64_t *mult_out);

// The decomposition as a JSON array of `{"index", "mult"}` objects, owned by
// the caller. Null on a null argument.
//
// # Safety
// `d` must be null or a live decomposition.
char *mackey_decomposition_to_json(const struct MackeyDecomposition *d);

// Releases a decomposition. Null is ignored.
//
// # Safety
// `d` must be null or a decomposition not yet freed.
void mackey_decomposition_free(struct MackeyDecomposition *d);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MACKEY_H */
