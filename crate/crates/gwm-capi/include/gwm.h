#ifndef GWM_H
#define GWM_H

/* Generated by cbindgen from the gwm-capi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of a C API call.
 */
typedef enum GwmStatus {
  /**
   * Success.
   */
  GWM_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  GWM_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  GWM_STATUS_INVALID_UTF8 = 2,
  /**
   * The input does not describe a valid game, query or index.
   */
  GWM_STATUS_INVALID_ARGUMENT = 3,
  /**
   * The operation is not defined for this input (no closed formula, or a
   * game outside the bipartite single-row family).
   */
  GWM_STATUS_UNSUPPORTED = 4,
  /**
   * The input exceeds a size cap (oracle player limit, grid sweep limit).
   */
  GWM_STATUS_TOO_LARGE = 5,
} GwmStatus;

/**
 * A complete game held behind the ABI; contents are not visible to C.
 */
typedef struct GwmGame GwmGame;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null if the last
 * call succeeded. The pointer is valid until the next failing call on the
 * same thread; do not free it.
 */
const char *gwm_last_error(void);

/**
 * Parses characteristic invariants from JSON
 * (`{"n": [n1, ...], "M": [[m11, ...], ...]}`), validating them.
 *
 * # Safety
 *
 * `json` must be a valid NUL-terminated string and `out_game` a valid
 * pointer. On success the caller owns the handle and must free it with
 * `gwm_game_free`.
 */
enum GwmStatus gwm_game_from_json(const char *json, struct GwmGame **out_game);

/**
 * Builds the bipartite game with hierarchy `(n1, n2)` and shift-minimal
 * winning vector `(a, b)`.
 *
 * # Safety
 *
 * `out_game` must be a valid pointer; the caller owns the returned handle.
 */
enum GwmStatus gwm_game_bipartite(uint32_t n1,
                                  uint32_t n2,
                                  uint32_t a,
                                  uint32_t b,
                                  struct GwmGame **out_game);

/**
 * Frees a game handle; null is a no-op.
 *
 * # Safety
 *
 * `game` must be null or a handle returned by this library that has not
 * been freed already.
 */
void gwm_game_free(struct GwmGame *game);

/**
 * Frees a string returned by this library; null is a no-op.
 *
 * # Safety
 *
 * `s` must be null or a string returned by this library that has not been
 * freed already.
 */
void gwm_string_free(char *s);

/**
 * Serializes a game back to the invariants wire format.
 *
 * # Safety
 *
 * `game` must be a live handle and `out_json` a valid pointer; the caller
 * frees the string with `gwm_string_free`.
 */
enum GwmStatus gwm_game_to_json(const struct GwmGame *game, char **out_json);

/**
 * Computes the dual game.
 *
 * # Safety
 *
 * `game` must be a live handle and `out_dual` a valid pointer; the caller
 * owns the returned handle.
 */
enum GwmStatus gwm_game_dual(const struct GwmGame *game, struct GwmGame **out_dual);

/**
 * Weightedness verdict as JSON, with the exact representation when the
 * game is weighted. Requires a game with a single shift-minimal winning
 * vector.
 *
 * # Safety
 *
 * `game` must be a live handle and `out_json` a valid pointer; the caller
 * frees the string.
 */
enum GwmStatus gwm_classify_json(const struct GwmGame *game, char **out_json);

/**
 * Swing counts and power indices as JSON. The game must be bipartite with a
 * single shift-minimal winning vector.
 *
 * # Safety
 *
 * `game` must be a live handle and `out_json` a valid pointer; the caller
 * frees the string.
 */
enum GwmStatus gwm_power_json(const struct GwmGame *game, char **out_json);

/**
 * Ranks all games on hierarchy `(n1, n2)` by class-1 index value and
 * returns the tie-grouped chain, e.g. `(3,0)=(2,0)=(1,0)>(3,1)>...`.
 * `index` is one of `ss`, `bz-rel`, `bz-abs`.
 *
 * # Safety
 *
 * `index` must be a valid NUL-terminated string and `out_chain` a valid
 * pointer; the caller frees the string.
 */
enum GwmStatus gwm_rank_chain(uint32_t n1, uint32_t n2, const char *index, char **out_chain);

/**
 * Closed-form count of games, written as a decimal string. `family` is one
 * of `weighted`, `complete`, `weighted-dual`, `complete-dual`,
 * `nontrivial-weighted`, `symmetric`; pass `-1` for a `t` or `r` wildcard.
 * Returns `Unsupported` when no closed formula exists for the combination.
 *
 * # Safety
 *
 * `family` must be a valid NUL-terminated string and `out_count` a valid
 * pointer; the caller frees the string.
 */
enum GwmStatus gwm_count(const char *family, uint32_t n, int32_t t, int32_t r, char **out_count);

/**
 * Runs the exhaustive relative-Banzhaf conjecture sweep up to `n_max`
 * players and returns the full JSON report (violations and ties).
 *
 * # Safety
 *
 * `out_json` must be a valid pointer; the caller frees the string.
 */
enum GwmStatus gwm_verify_conjecture_json(uint32_t n_max, char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GWM_H */
