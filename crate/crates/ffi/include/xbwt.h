#ifndef XBWT_H
#define XBWT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum XbwtStatus {
  XBWT_STATUS_OK = 0,
  XBWT_STATUS_NULL_POINTER = 1,
  XBWT_STATUS_INVALID_ARGUMENT = 2,
  XBWT_STATUS_BUFFER_TOO_SMALL = 3,
  /**
   * The input is not in the image of the transform, or is empty where a
   * nonempty word is required.
   */
  XBWT_STATUS_INVALID_INPUT = 4,
  /**
   * The container is malformed or corrupt.
   */
  XBWT_STATUS_CONTAINER_ERROR = 5,
  XBWT_STATUS_PANIC = 6,
} XbwtStatus;

/**
 * Transform identifiers, equal to the container's transform ids.
 */
typedef enum XbwtTransform {
  XBWT_TRANSFORM_BWT = 0,
  XBWT_TRANSFORM_BWTS = 1,
  XBWT_TRANSFORM_ST = 2,
  XBWT_TRANSFORM_LST = 3,
} XbwtTransform;

/**
 * Opaque alphabet order.
 */
typedef struct XbwtAlphabet XbwtAlphabet;

/**
 * Opaque byte buffer owned by the library.
 */
typedef struct XbwtBuffer XbwtBuffer;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *xbwt_version(void);

/**
 * Description of the last failure on this thread, empty after a success.
 * The pointer stays valid until the next call into the library on this
 * thread.
 */
const char *xbwt_last_error_message(void);

/**
 * The identity order on byte values.
 */
struct XbwtAlphabet *xbwt_alphabet_identity(void);

/**
 * Builds an order from the 256 byte values listed smallest first.
 *
 * # Safety
 * `sequence` must point to `len` readable bytes; `out` must be writable.
 */
enum XbwtStatus xbwt_alphabet_from_sequence(const uint8_t *sequence,
                                            size_t len,
                                            struct XbwtAlphabet **out);

/**
 * # Safety
 * `ord` must be null or a handle from this library not yet freed.
 */
void xbwt_alphabet_free(struct XbwtAlphabet *ord);

/**
 * Applies a transform to `data`, writing `len` bytes to `out`.
 *
 * `k` is the context order for ST and LST and must be 0 otherwise. For BWT
 * and ST the 1-based row index is stored in `*index_out`, which must then be
 * non-null; for BWTS and LST `index_out` may be null and receives 0. BWT and
 * ST reject empty input. A null `ord` means the identity order.
 *
 * # Safety
 * `data` must point to `len` readable bytes, `out` to `out_cap` writable
 * bytes, and `ord` must be null or a live handle.
 */
enum XbwtStatus xbwt_forward(uint32_t transform_id,
                             size_t k,
                             const struct XbwtAlphabet *ord,
                             const uint8_t *data,
                             size_t len,
                             uint8_t *out,
                             size_t out_cap,
                             size_t *index_out);

/**
 * Inverts a transform, writing `len` bytes to `out`. `index` is the 1-based
 * row index for BWT and ST and is ignored otherwise.
 *
 * # Safety
 * As for [`xbwt_forward`].
 */
enum XbwtStatus xbwt_inverse(uint32_t transform_id,
                             size_t k,
                             const struct XbwtAlphabet *ord,
                             const uint8_t *data,
                             size_t len,
                             size_t index,
                             uint8_t *out,
                             size_t out_cap);

/**
 * Encodes `data` into a container. `block_size` 0 selects the default.
 *
 * # Safety
 * `data` must point to `len` readable bytes, `ord` must be null or a live
 * handle and `out` must be writable.
 */
enum XbwtStatus xbwt_encode(uint32_t transform_id,
                            size_t k,
                            size_t block_size,
                            const struct XbwtAlphabet *ord,
                            const uint8_t *data,
                            size_t len,
                            struct XbwtBuffer **out);

/**
 * Decodes a container.
 *
 * # Safety
 * `data` must point to `len` readable bytes and `out` must be writable.
 */
enum XbwtStatus xbwt_decode(const uint8_t *data, size_t len, struct XbwtBuffer **out);

/**
 * # Safety
 * `buf` must be a live buffer handle.
 */
const uint8_t *xbwt_buffer_data(const struct XbwtBuffer *buf);

/**
 * # Safety
 * `buf` must be null or a live buffer handle.
 */
size_t xbwt_buffer_len(const struct XbwtBuffer *buf);

/**
 * # Safety
 * `buf` must be null or a buffer handle not yet freed.
 */
void xbwt_buffer_free(struct XbwtBuffer *buf);

/**
 * Runs the built-in fixtures; stores the number of failures in `*failed`.
 *
 * # Safety
 * `failed` must be writable.
 */
enum XbwtStatus xbwt_selftest(size_t *failed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* XBWT_H */
