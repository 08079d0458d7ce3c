#ifndef GREENBISET_H
#define GREENBISET_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GbStatus {
  GB_STATUS_OK = 0,
  GB_STATUS_NULL_ARGUMENT = 1,
  GB_STATUS_INVALID_UTF8 = 2,
  GB_STATUS_INVALID_ARGUMENT = 3,
  GB_STATUS_UNKNOWN_GROUP = 4,
  GB_STATUS_PARSE = 5,
  GB_STATUS_IO = 6,
  /**
   * Any other library error, e.g. a search that is too large.
   */
  GB_STATUS_COMPUTATION = 7,
  /**
   * `gb_verify_json` ran, and at least one check failed.
   */
  GB_STATUS_VERIFICATION_FAILED = 8,
  GB_STATUS_PANIC = 9,
} GbStatus;

/**
 * Opaque group catalog.
 */
typedef struct GbCatalog GbCatalog;

/**
 * Opaque finite group.
 */
typedef struct GbGroup GbGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or null. Valid until the
 * next failing call on the same thread; do not free.
 */
const char *gb_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void gb_string_free(char *s);

/**
 * A copy of the builtin catalog. Never null.
 */
struct GbCatalog *gb_catalog_builtin(void);

/**
 * Loads a JSON catalog file merged over the builtin groups.
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be writable.
 */
enum GbStatus gb_catalog_load(const char *path, struct GbCatalog **out);

/**
 * # Safety
 * `c` must come from this library and not have been freed. Null is ignored.
 */
void gb_catalog_free(struct GbCatalog *c);

/**
 * Number of groups in the catalog; 0 for null.
 *
 * # Safety
 * `c` must be null or a live catalog.
 */
uintptr_t gb_catalog_len(const struct GbCatalog *c);

/**
 * Looks a group up by name.
 *
 * # Safety
 * `c` must be a live catalog, `name` NUL-terminated, `out` writable.
 */
enum GbStatus gb_group_get(const struct GbCatalog *c, const char *name, struct GbGroup **out);

/**
 * # Safety
 * `g` must come from this library and not have been freed. Null is ignored.
 */
void gb_group_free(struct GbGroup *g);

/**
 * Group order; 0 for null.
 *
 * # Safety
 * `g` must be null or a live group.
 */
uintptr_t gb_group_order(const struct GbGroup *g);

/**
 * Number of conjugacy classes of subgroups; 0 for null.
 *
 * # Safety
 * `g` must be null or a live group.
 */
uintptr_t gb_group_class_count(const struct GbGroup *g);

/**
 * Table of marks as a JSON array of rows.
 *
 * # Safety
 * `g` must be a live group and `out` writable.
 */
enum GbStatus gb_marks_json(const struct GbGroup *g, char **out);

/**
 * Units of the Burnside ring as a JSON array.
 *
 * # Safety
 * `g` must be a live group and `out` writable.
 */
enum GbStatus gb_units_json(const struct GbGroup *g, char **out);

/**
 * Composition table of `End(G)` for `B` (`matrix_n == 0`) or `Mn(B)`.
 *
 * # Safety
 * `g` must be a live group and `out` writable.
 */
enum GbStatus gb_ring_table_json(const struct GbGroup *g,
                                 uint32_t matrix_n,
                                 bool rational,
                                 char **out);

/**
 * Bounded search for orthogonal units (`automorphisms == false`) or
 * orthogonal automorphisms, for `B` (`matrix_n == 0`) or `Mn(B)`.
 *
 * # Safety
 * `g` must be a live group and `out` writable.
 */
enum GbStatus gb_orthogonal_json(const struct GbGroup *g,
                                 uint32_t matrix_n,
                                 bool automorphisms,
                                 uint32_t bound,
                                 bool rational,
                                 char **out);

/**
 * Runs a verification suite (or `all`) over a comma-separated window of
 * catalog groups; null `window` means the default window. The JSON report
 * is written to `out` whether or not the checks pass.
 *
 * # Safety
 * `c` must be a live catalog, strings NUL-terminated, `out` writable.
 */
enum GbStatus gb_verify_json(const struct GbCatalog *c,
                             const char *window,
                             const char *suite,
                             uint64_t seed,
                             uintptr_t samples,
                             char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* GREENBISET_H */
