#ifndef NOMA_SECRECY_H
#define NOMA_SECRECY_H

/* Generated by cbindgen from the noma-secrecy-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every FFI call.
 */
typedef enum NsStatus {
  /**
   * The call succeeded.
   */
  NS_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  NS_STATUS_NULL_POINTER = 1,
  /**
   * An argument violated a documented precondition.
   */
  NS_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The request exceeded an enumeration capacity limit.
   */
  NS_STATUS_CAPACITY_EXCEEDED = 3,
  /**
   * An output buffer was missing or too small; the required size has
   * been written to the size output.
   */
  NS_STATUS_BUFFER_TOO_SMALL = 4,
  /**
   * A string argument was not valid UTF-8.
   */
  NS_STATUS_UTF8_ERROR = 5,
} NsStatus;

/**
 * Opaque channel state handle.
 */
typedef struct NsChannelState NsChannelState;

/**
 * Opaque decoding order handle.
 */
typedef struct NsDecodingOrder NsDecodingOrder;

/**
 * Opaque system configuration handle.
 */
typedef struct NsSystemConfig NsSystemConfig;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Retrieves the message of the most recent failure on this thread.
 *
 * # Safety
 * `buffer` must point to `capacity` writable bytes (or be null to query
 * the required size through `needed`).
 */
enum NsStatus ns_last_error_message(char *buffer, size_t capacity, size_t *needed);

/**
 * Creates a system configuration with default noise power, path loss, and
 * residual SIC factor.
 *
 * # Safety
 * `out` must be a valid pointer; on success it receives a handle that must
 * be released with [`ns_system_config_free`].
 */
enum NsStatus ns_system_config_new(size_t user_count,
                                   double transmit_power_dbm,
                                   struct NsSystemConfig **out);

/**
 * Creates a fully specified system configuration.
 *
 * # Safety
 * `out` must be a valid pointer; on success it receives a handle that must
 * be released with [`ns_system_config_free`].
 */
enum NsStatus ns_system_config_with(size_t user_count,
                                    double transmit_power_dbm,
                                    double noise_power_dbm,
                                    double path_loss_constant,
                                    double path_loss_exponent,
                                    double residual_sic_factor,
                                    struct NsSystemConfig **out);

/**
 * Releases a configuration handle. Null is ignored.
 *
 * # Safety
 * `config` must be null or a handle from a `ns_system_config_*` constructor
 * that has not been freed yet.
 */
void ns_system_config_free(struct NsSystemConfig *config);

/**
 * Creates a channel state from `user_count` strictly descending positive
 * gains.
 *
 * # Safety
 * `gains` must point to `user_count` readable doubles; `out` must be a
 * valid pointer and on success receives a handle to release with
 * [`ns_channel_state_free`].
 */
enum NsStatus ns_channel_state_new(const double *gains,
                                   size_t user_count,
                                   struct NsChannelState **out);

/**
 * Releases a channel handle. Null is ignored.
 *
 * # Safety
 * `channel` must be null or an unfreed handle from
 * [`ns_channel_state_new`].
 */
void ns_channel_state_free(struct NsChannelState *channel);

/**
 * Creates a decoding order from its canonical index (1-based, up to
 * `(K!)^K`).
 *
 * # Safety
 * `out` must be a valid pointer; on success it receives a handle to
 * release with [`ns_order_free`].
 */
enum NsStatus ns_order_from_index(size_t user_count, uint64_t index, struct NsDecodingOrder **out);

/**
 * Parses a decoding order from its textual form, e.g.
 * `"2,3,1;1,3,2;1,2,3"` (columns separated by `;`, stages by `,`,
 * users numbered from 1).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be a valid pointer
 * and on success receives a handle to release with [`ns_order_free`].
 */
enum NsStatus ns_order_parse(const char *text, struct NsDecodingOrder **out);

/**
 * Releases an order handle. Null is ignored.
 *
 * # Safety
 * `order` must be null or an unfreed handle from an `ns_order_*`
 * constructor.
 */
void ns_order_free(struct NsDecodingOrder *order);

/**
 * Reads an order's canonical index.
 *
 * # Safety
 * `order` must be a live order handle and `out` a valid pointer.
 */
enum NsStatus ns_order_index(const struct NsDecodingOrder *order, uint64_t *out);

/**
 * Reads the number of users an order covers.
 *
 * # Safety
 * `order` must be a live order handle and `out` a valid pointer.
 */
enum NsStatus ns_order_user_count(const struct NsDecodingOrder *order, size_t *out);

/**
 * Tells whether an order can keep every user's message secret.
 *
 * # Safety
 * `order` must be a live order handle and `out` a valid pointer.
 */
enum NsStatus ns_order_is_secure(const struct NsDecodingOrder *order, bool *out);

/**
 * Renders an order's textual form into `buffer`.
 *
 * # Safety
 * `order` must be a live order handle; `buffer` must point to `capacity`
 * writable bytes (or be null to query the required size through `needed`).
 */
enum NsStatus ns_order_format(const struct NsDecodingOrder *order,
                              char *buffer,
                              size_t capacity,
                              size_t *needed);

/**
 * Writes the canonical indices of every secure decoding order, in
 * ascending order, into `buffer`. `count` always receives the total; call
 * with a null buffer first to size the allocation.
 *
 * # Safety
 * `buffer` must be null or point to `capacity` writable u64 slots;
 * `count` must be a valid pointer.
 */
enum NsStatus ns_secure_order_indices(size_t user_count,
                                      uint64_t *buffer,
                                      size_t capacity,
                                      size_t *count);

/**
 * Evaluates per-user secrecy rates. Each non-null output array receives
 * one entry per user; `sum_secrecy_rate` receives the clamped total.
 *
 * # Safety
 * `order`, `channel`, and `config` must be live handles; `alphas` must
 * point to `alpha_count` readable doubles; each non-null output array must
 * have room for the configured number of users.
 */
enum NsStatus ns_secrecy_report(const struct NsDecodingOrder *order,
                                const struct NsChannelState *channel,
                                const struct NsSystemConfig *config,
                                const double *alphas,
                                size_t alpha_count,
                                double *self_rates,
                                double *eavesdropper_rates,
                                double *secrecy_rates,
                                double *sum_secrecy_rate);

/**
 * Maximizes one order's sum secrecy rate over the power allocation.
 * Non-positive `grid_step`, `boundary_margin`, or `refinement_tolerance`
 * and a negative `refinement_iterations` select the defaults. `alphas_out`,
 * when non-null, receives one fraction per user.
 *
 * # Safety
 * `order`, `channel`, and `config` must be live handles; `alphas_out` must
 * be null or have room for the configured number of users; `sum_out` must
 * be null or a valid pointer.
 */
enum NsStatus ns_optimize_pa(const struct NsDecodingOrder *order,
                             const struct NsChannelState *channel,
                             const struct NsSystemConfig *config,
                             double grid_step,
                             double boundary_margin,
                             int64_t refinement_iterations,
                             double refinement_tolerance,
                             double *alphas_out,
                             double *sum_out);

/**
 * Optimizes order and allocation jointly. `order_indices` selects the
 * candidate orders; pass null (or zero count) to search every secure
 * order. Settings scalars follow the [`ns_optimize_pa`] conventions.
 *
 * # Safety
 * `channel` and `config` must be live handles; `order_indices` must be
 * null or point to `order_count` readable u64 values; `best_index_out` and
 * `sum_out` must be null or valid pointers; `alphas_out` must be null or
 * have room for the configured number of users.
 */
enum NsStatus ns_joint_optimize(const struct NsChannelState *channel,
                                const struct NsSystemConfig *config,
                                const uint64_t *order_indices,
                                size_t order_count,
                                double grid_step,
                                double boundary_margin,
                                int64_t refinement_iterations,
                                double refinement_tolerance,
                                uint64_t *best_index_out,
                                double *alphas_out,
                                double *sum_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NOMA_SECRECY_H */
