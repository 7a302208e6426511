#ifndef HALLFROB_H
#define HALLFROB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HfStatus {
  HF_STATUS_OK = 0,
  HF_STATUS_NULL_POINTER = 1,
  HF_STATUS_INVALID_INPUT = 2,
  HF_STATUS_NOT_PRIME = 3,
  HF_STATUS_CAP_EXCEEDED = 4,
  HF_STATUS_HYPOTHESIS = 5,
  HF_STATUS_MISMATCH = 6,
  HF_STATUS_INVALID_QUIVER = 7,
  HF_STATUS_INVALID_CARTAN = 8,
  HF_STATUS_INTERPOLATION = 9,
  HF_STATUS_IO = 10,
  HF_STATUS_JSON = 11,
  HF_STATUS_PANIC = 12,
} HfStatus;

/**
 * Representation spaces of a quiver over one finite field.
 */
typedef struct HfModel HfModel;

/**
 * A quiver with automorphism.
 */
typedef struct HfQuiver HfQuiver;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into the library from the same thread.
 */
const char *hf_last_error_message(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void hf_string_free(char *s);

/**
 * Built-in quiver by name.
 *
 * # Safety
 * `name` is a nul-terminated string and `out` is writable.
 */
enum HfStatus hf_quiver_preset(const char *name, struct HfQuiver **out);

/**
 * Quiver from its JSON description.
 *
 * # Safety
 * `json` is a nul-terminated string and `out` is writable.
 */
enum HfStatus hf_quiver_from_json(const char *json, struct HfQuiver **out);

/**
 * # Safety
 * `q` is null or a live handle from this library.
 */
void hf_quiver_free(struct HfQuiver *q);

/**
 * Number of vertex orbits.
 *
 * # Safety
 * `q` is a live handle and `out` is writable.
 */
enum HfStatus hf_quiver_rank(const struct HfQuiver *q, size_t *out);

/**
 * Representation spaces over `F_q`.
 *
 * # Safety
 * `quiver` is a live handle and `out` is writable.
 */
enum HfStatus hf_model_new(const struct HfQuiver *quiver, uint64_t q, struct HfModel **out);

/**
 * # Safety
 * `m` is null or a live handle from this library.
 */
void hf_model_free(struct HfModel *m);

/**
 * Number of rational points of the representation space of dimension
 * `nu`, as a decimal string to be released with [`hf_string_free`].
 *
 * # Safety
 * `m` is a live handle, `nu` holds `len` entries and `out` is writable.
 */
enum HfStatus hf_model_point_count(const struct HfModel *m,
                                   const size_t *nu,
                                   size_t len,
                                   char **out);

/**
 * Number of classes the model stores for dimension `nu`.
 *
 * # Safety
 * `m` is a live handle, `nu` holds `len` entries and `out` is writable.
 */
enum HfStatus hf_model_class_count(const struct HfModel *m,
                                   const size_t *nu,
                                   size_t len,
                                   size_t *out);

/**
 * Whether the quantum Serre relation between orbits `i` and `j` holds.
 *
 * # Safety
 * `m` is a live handle and `passed` is writable.
 */
enum HfStatus hf_serre_check(const struct HfModel *m, size_t i, size_t j, bool *passed);

/**
 * Dimension of the graded piece `nu` of the quotient of the free algebra
 * by the radical of its form.
 *
 * # Safety
 * `quiver` is a live handle, `nu` holds `len` entries and `out` is
 * writable.
 */
enum HfStatus hf_f_dimension(const struct HfQuiver *quiver,
                             const size_t *nu,
                             size_t len,
                             size_t *out);

/**
 * Norm of `zeta^2 - q` for a primitive `2 l`-th root of unity, as a
 * decimal string.
 *
 * # Safety
 * `out` is writable.
 */
enum HfStatus hf_cyclo_norm(uint64_t ell, uint64_t q, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HALLFROB_H */
