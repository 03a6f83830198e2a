/*
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
 * WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
 * License for the specific language governing permissions and limitations
 * under the License.
 */

#ifndef STARFREE_H
#define STARFREE_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum StarfreeStatus {
  STARFREE_STATUS_OK = 0,
  STARFREE_STATUS_NULL_POINTER = 1,
  STARFREE_STATUS_INVALID_ARGUMENT = 2,
  STARFREE_STATUS_UNKNOWN_NAME = 3,
  STARFREE_STATUS_INVALID_GROUP = 4,
  STARFREE_STATUS_ABELIAN_GROUP = 5,
  STARFREE_STATUS_CATALOG_ERROR = 6,
  STARFREE_STATUS_PANIC = 7,
} StarfreeStatus;

/**
 * An owned finite group.
 */
typedef struct StarfreeGroup StarfreeGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failed call on this thread, or null after a
 * successful call. Valid until the next call on the same thread.
 */
const char *starfree_last_error(void);

/**
 * Builds a catalog group by name. `stretch` selects the larger catalog tier.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` valid for writes.
 */
enum StarfreeStatus starfree_group_from_catalog(const char *name,
                                                bool stretch,
                                                struct StarfreeGroup **out);

/**
 * Builds a group from a JSON group file document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` valid for writes.
 */
enum StarfreeStatus starfree_group_from_json(const char *json, struct StarfreeGroup **out);

/**
 * Builds a group from a row-major `order × order` multiplication table.
 *
 * # Safety
 * `table` must point to `order * order` readable values and `out` must be
 * valid for writes.
 */
enum StarfreeStatus starfree_group_from_cayley(const size_t *table,
                                               size_t order,
                                               struct StarfreeGroup **out);

/**
 * Releases a group handle. Null is ignored.
 *
 * # Safety
 * `group` must be null or a handle not yet freed.
 */
void starfree_group_free(struct StarfreeGroup *group);

/**
 * # Safety
 * `group` must be a live handle and `out` valid for writes.
 */
enum StarfreeStatus starfree_group_order(const struct StarfreeGroup *group, size_t *out);

/**
 * # Safety
 * `group` must be a live handle and `out` valid for writes.
 */
enum StarfreeStatus starfree_group_center_size(const struct StarfreeGroup *group, size_t *out);

/**
 * Smallest `k` for which the commuting graph has no `k`-star subgraph.
 *
 * # Safety
 * `group` must be a live handle and `out` valid for writes.
 */
enum StarfreeStatus starfree_strong_star_number(const struct StarfreeGroup *group, size_t *out);

/**
 * Smallest `k` for which the commuting graph has no induced `k`-star.
 *
 * # Safety
 * `group` must be a live handle and `out` valid for writes.
 */
enum StarfreeStatus starfree_induced_star_number(const struct StarfreeGroup *group, size_t *out);

/**
 * # Safety
 * `group` must be a live handle and `out` valid for writes.
 */
enum StarfreeStatus starfree_is_strong_k_star_free(const struct StarfreeGroup *group,
                                                   size_t k,
                                                   bool *out);

/**
 * # Safety
 * `group` must be a live handle and `out` valid for writes.
 */
enum StarfreeStatus starfree_is_induced_k_star_free(const struct StarfreeGroup *group,
                                                    size_t k,
                                                    bool *out);

/**
 * Full analysis as JSON: profile, class equation, star numbers and graph
 * components. Free the result with [`starfree_string_free`].
 *
 * # Safety
 * `group` must be a live handle and `out` valid for writes.
 */
enum StarfreeStatus starfree_analyze_json(const struct StarfreeGroup *group, char **out);

/**
 * The commuting graph in DOT format. Free the result with
 * [`starfree_string_free`].
 *
 * # Safety
 * `group` must be a live handle and `out` valid for writes.
 */
enum StarfreeStatus starfree_export_dot(const struct StarfreeGroup *group, char **out);

/**
 * Classification report for `k` in 1..=6 as JSON. Free the result with
 * [`starfree_string_free`].
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum StarfreeStatus starfree_classify_json(uint32_t k, bool stretch, char **out);

/**
 * Class-equation solutions for strictly increasing centralizer `sizes` and
 * center size `center`, as a JSON array. Free the result with
 * [`starfree_string_free`].
 *
 * # Safety
 * `sizes` must point to `len` readable values and `out` must be valid for
 * writes.
 */
enum StarfreeStatus starfree_solve_json(const uint64_t *sizes,
                                        size_t len,
                                        uint64_t center,
                                        char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `text` must be null or a string from this library not yet freed.
 */
void starfree_string_free(char *text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STARFREE_H */
