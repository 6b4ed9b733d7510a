#ifndef QUILLEN_FFI_H
#define QUILLEN_FFI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of an FFI call.
 */
typedef enum QgStatus {
  QG_STATUS_OK = 0,
  QG_STATUS_NULL_ARGUMENT = 1,
  QG_STATUS_INVALID_UTF8 = 2,
  QG_STATUS_MALFORMED_SPEC = 3,
  QG_STATUS_UNKNOWN_GROUP = 4,
  QG_STATUS_CAP_EXCEEDED = 5,
  QG_STATUS_NOT_PRIME = 6,
  QG_STATUS_COMPUTATION_FAILED = 7,
  QG_STATUS_PANIC = 8,
} QgStatus;

/**
 * A built permutation group.
 */
typedef struct QgGroup QgGroup;

/**
 * A JSON report.
 */
typedef struct QgReport QgReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a group from the JSON text of a group file. `order_cap` 0 means
 * the library default.
 *
 * # Safety
 * `spec` must be a valid C string and `out` a writable pointer.
 */
enum QgStatus qg_group_from_spec(const char *spec, size_t order_cap, struct QgGroup **out);

/**
 * Loads one of the bundled groups by name.
 *
 * # Safety
 * `name` must be a valid C string and `out` a writable pointer.
 */
enum QgStatus qg_group_bundled(const char *name, struct QgGroup **out);

/**
 * Group order, or 0 for a null handle.
 *
 * # Safety
 * `group` must be null or a live handle.
 */
uint64_t qg_group_order(const struct QgGroup *group);

/**
 * Number of permuted points, or 0 for a null handle.
 *
 * # Safety
 * `group` must be null or a live handle.
 */
uint64_t qg_group_degree(const struct QgGroup *group);

/**
 * # Safety
 * `group` must be null or a handle not yet freed.
 */
void qg_group_free(struct QgGroup *group);

/**
 * Reduced Betti numbers of the elementary abelian p-subgroup poset.
 *
 * # Safety
 * `group` must be a live handle and `out` a writable pointer.
 */
enum QgStatus qg_betti(const struct QgGroup *group, uint64_t p, struct QgReport **out);

/**
 * Nonvanishing-homology witness certificate.
 *
 * # Safety
 * `group` must be a live handle and `out` a writable pointer.
 */
enum QgStatus qg_hqc(const struct QgGroup *group, uint64_t p, struct QgReport **out);

/**
 * Euler characteristic by the rank-count formula against the radical
 * subgroup complex.
 *
 * # Safety
 * `group` must be a live handle and `out` a writable pointer.
 */
enum QgStatus qg_euler_formula(const struct QgGroup *group, uint64_t p, struct QgReport **out);

/**
 * Runs one reproduction criterion (1 to 14).
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum QgStatus qg_criterion(uint32_t id, struct QgReport **out);

/**
 * Borrowed JSON text of a report, valid until the report is freed.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
const char *qg_report_json(const struct QgReport *report);

/**
 * # Safety
 * `report` must be null or a handle not yet freed.
 */
void qg_report_free(struct QgReport *report);

/**
 * Message of the last failure on this thread, or null. Owned by the
 * caller; release with [`qg_string_free`].
 */
char *qg_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void qg_string_free(char *s);

/**
 * Library version, static storage.
 */
const char *qg_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUILLEN_FFI_H */
