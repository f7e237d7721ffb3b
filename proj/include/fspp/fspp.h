/* Copyright 2026 The FSPP Authors. All rights reserved.
 * Use of this source code is governed by the Apache License 2.0
 * that can be found in the LICENSE file.
 *
 * C interface to the FSPP library. Objects are opaque handles created and
 * destroyed by the library. Every fallible call returns an fspp_status;
 * fspp_last_error() describes the most recent failure on the calling
 * thread. Strings returned through char** are owned by the caller and must
 * be released with fspp_string_free().
 */
#ifndef FSPP_FSPP_H_
#define FSPP_FSPP_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(FSPP_BUILDING_LIBRARY)
#define FSPP_API __attribute__((visibility("default")))
#else
#define FSPP_API
#endif

typedef enum fspp_status {
  FSPP_OK = 0,
  FSPP_ERR_CONFIG = 1,
  FSPP_ERR_INDEX = 2,
  FSPP_ERR_GRANULARITY_MISMATCH = 3,
  FSPP_ERR_DEGENERATE = 4,
  FSPP_ERR_UNDEFINED_DIRECTION = 5,
  FSPP_ERR_INVALID_START = 6,
  FSPP_ERR_EMPTY_COMPONENT = 7,
  FSPP_ERR_MISSING_CONSTRAINT = 8,
  FSPP_ERR_PARSE = 9,
  FSPP_ERR_NULL_ARGUMENT = 100,
  FSPP_ERR_INTERNAL = 101
} fspp_status;

/* Special relations, combinable as bit flags. */
enum {
  FSPP_FLAG_DOU = 1, /* origin and relatum coincide */
  FSPP_FLAG_TRI = 2, /* all three points coincide */
  FSPP_FLAG_SAM = 4  /* referent and relatum coincide */
};

typedef enum fspp_unary_op {
  FSPP_OP_ID = 0,
  FSPP_OP_INV = 1,
  FSPP_OP_SC = 2,
  FSPP_OP_SCI = 3,
  FSPP_OP_HM = 4,
  FSPP_OP_HMI = 5
} fspp_unary_op;

typedef enum fspp_connectivity {
  FSPP_CONN_FOUR = 4,
  FSPP_CONN_EIGHT = 8
} fspp_connectivity;

typedef struct fspp_granularity {
  int orientations;   /* even, >= 4 */
  int distances;      /* >= 2 */
  double base_length; /* meters, > 0 */
  double ratio;       /* > 1 */
} fspp_granularity;

typedef struct fspp_options {
  double r_cap;               /* <= 0 selects the default */
  int promote_on_any_overlap; /* boolean */
  int raster_inverse;         /* boolean */
} fspp_options;

/* Annulus sector; r_max may be +infinity. */
typedef struct fspp_doi {
  double r_min;
  double r_max;
  double phi_min;
  double phi_max;
  int is_full;
} fspp_doi;

typedef struct fspp_context fspp_context;
typedef struct fspp_relation fspp_relation;
typedef struct fspp_network fspp_network;

FSPP_API const char* fspp_version(void);
FSPP_API const char* fspp_status_name(fspp_status status);
FSPP_API const char* fspp_last_error(void);
FSPP_API void fspp_string_free(char* s);

/* 18 orientations, 20 distances, 0.10 m, ratio 1.25. */
FSPP_API void fspp_granularity_default(fspp_granularity* out);
FSPP_API void fspp_options_default(fspp_options* out);

/* Distance table: outer radius of each band, last entry infinite. `outer`
 * must hold `distances` values. The nominal values are what the geometric
 * law gives for the unbounded band. */
FSPP_API fspp_status fspp_distance_table(const fspp_granularity* g,
                                         double* outer, double* nominal_width,
                                         double* nominal_outer);

/* Context: granularity, options and the composition cache. Safe to share
 * between threads. `options` may be NULL. */
FSPP_API fspp_status fspp_context_create(const fspp_granularity* g,
                                         const fspp_options* options,
                                         fspp_context** out);
FSPP_API void fspp_context_destroy(fspp_context* ctx);
FSPP_API fspp_status fspp_context_granularity(const fspp_context* ctx,
                                              fspp_granularity* out);

/* Relations. */
FSPP_API fspp_status fspp_relation_create(const fspp_context* ctx,
                                          fspp_relation** out);
FSPP_API fspp_status fspp_relation_universal(const fspp_context* ctx,
                                             fspp_relation** out);
FSPP_API fspp_status fspp_relation_clone(const fspp_relation* r,
                                         fspp_relation** out);
FSPP_API void fspp_relation_destroy(fspp_relation* r);
FSPP_API fspp_status fspp_relation_set(fspp_relation* r, int dist, int orient,
                                       int value);
FSPP_API fspp_status fspp_relation_get(const fspp_relation* r, int dist,
                                       int orient, int* out);
/* bit = orient + dist * orientations */
FSPP_API fspp_status fspp_relation_set_bit(fspp_relation* r, int bit,
                                           int value);
FSPP_API fspp_status fspp_relation_set_flags(fspp_relation* r,
                                             unsigned flags);
FSPP_API fspp_status fspp_relation_flags(const fspp_relation* r,
                                         unsigned* out);
FSPP_API fspp_status fspp_relation_count(const fspp_relation* r, int* out);
/* Writes up to `capacity` (dist, orient) pairs into `cells` (2 ints each)
 * in ascending bit order and stores the total count in `count`. */
FSPP_API fspp_status fspp_relation_cells(const fspp_relation* r, int* cells,
                                         size_t capacity, size_t* count);
FSPP_API fspp_status fspp_relation_equal(const fspp_relation* a,
                                         const fspp_relation* b, int* out);
FSPP_API fspp_status fspp_relation_is_subset(const fspp_relation* a,
                                             const fspp_relation* b, int* out);
FSPP_API fspp_status fspp_relation_union(const fspp_relation* a,
                                         const fspp_relation* b,
                                         fspp_relation** out);
FSPP_API fspp_status fspp_relation_intersect(const fspp_relation* a,
                                             const fspp_relation* b,
                                             fspp_relation** out);
FSPP_API fspp_status fspp_relation_difference(const fspp_relation* a,
                                              const fspp_relation* b,
                                              fspp_relation** out);
FSPP_API fspp_status fspp_relation_complement(const fspp_relation* a,
                                              fspp_relation** out);

/* Codecs. */
FSPP_API fspp_status fspp_relation_to_json(const fspp_relation* r,
                                           char** out);
FSPP_API fspp_status fspp_relation_to_hex(const fspp_relation* r, char** out);
/* Accepts the JSON object form, a bare cell list or {"hex": ...}. */
FSPP_API fspp_status fspp_relation_parse(const fspp_context* ctx,
                                         const char* text,
                                         fspp_relation** out);
FSPP_API fspp_status fspp_relation_render(const fspp_relation* r,
                                          const char* title, char** out);

/* Calculus and reasoning. Points are (x, y) pairs in meters. */
FSPP_API fspp_status fspp_classify(const fspp_context* ctx, const double a[2],
                                   const double b[2], const double c[2],
                                   fspp_relation** out);
FSPP_API fspp_status fspp_compose(const fspp_context* ctx,
                                  const fspp_relation* r1,
                                  const fspp_relation* r2,
                                  fspp_relation** out);
FSPP_API fspp_status fspp_compose_bordered(const fspp_context* ctx,
                                           const fspp_relation* r1,
                                           const fspp_relation* r2,
                                           fspp_relation** out);
FSPP_API fspp_status fspp_unary(const fspp_context* ctx, fspp_unary_op op,
                                const fspp_relation* r, fspp_relation** out);
FSPP_API fspp_status fspp_neighbors(const fspp_context* ctx, int dist,
                                    int orient, fspp_relation** out);
FSPP_API fspp_status fspp_expand(const fspp_context* ctx,
                                 const fspp_relation* r, fspp_relation** out);
FSPP_API fspp_status fspp_cell_to_doi(const fspp_context* ctx, int dist,
                                      int orient, fspp_doi* out);
FSPP_API fspp_status fspp_doi_compose(const fspp_context* ctx,
                                      const fspp_doi* d1, const fspp_doi* d2,
                                      fspp_doi* out);
FSPP_API fspp_status fspp_doi_to_relation(const fspp_context* ctx,
                                          const fspp_doi* d,
                                          fspp_relation** out);

/* Grid operations on the cells of a relation; flags are dropped. */
FSPP_API fspp_status fspp_contour(const fspp_relation* r,
                                  fspp_connectivity conn, fspp_relation** out);
FSPP_API fspp_status fspp_border_cells(const fspp_relation* r,
                                       fspp_connectivity conn,
                                       fspp_relation** out);
FSPP_API fspp_status fspp_fill(const fspp_relation* r, fspp_relation** out);
FSPP_API fspp_status fspp_component_count(const fspp_relation* r,
                                          fspp_connectivity conn, int* out);

/* Constraint networks over string point ids. */
FSPP_API fspp_status fspp_network_create(const fspp_context* ctx,
                                         fspp_network** out);
FSPP_API void fspp_network_destroy(fspp_network* net);
FSPP_API fspp_status fspp_network_add(fspp_network* net, const char* origin,
                                      const char* relatum,
                                      const char* referent,
                                      const fspp_relation* r);
/* Stored relation or the universal relation when absent. */
FSPP_API fspp_status fspp_network_get(const fspp_network* net,
                                      const char* origin, const char* relatum,
                                      const char* referent,
                                      fspp_relation** out);
FSPP_API fspp_status fspp_network_size(const fspp_network* net, size_t* out);
FSPP_API fspp_status fspp_network_unary_closure(fspp_network* net,
                                                int* sweeps);
FSPP_API fspp_status fspp_network_refine(fspp_network* net, int* sweeps);
FSPP_API fspp_status fspp_network_propagate_path(const fspp_network* net,
                                                 const char* const* ids,
                                                 size_t count,
                                                 fspp_relation** out);
FSPP_API fspp_status fspp_network_consistent(const fspp_network* net,
                                             int* out);

/* Runs a JSON scenario; `ok` is 1 when the network stays consistent and
 * keeps every ground-truth classification. */
FSPP_API fspp_status fspp_scenario_run(const char* json,
                                       const fspp_options* options, int* ok,
                                       char** report);

/* Sampling soundness suites; `violations` is the total over all suites. */
FSPP_API fspp_status fspp_oracle_run(const fspp_context* ctx, int samples,
                                     uint64_t seed, long* violations,
                                     char** report);

#ifdef __cplusplus
}
#endif

#endif /* FSPP_FSPP_H_ */
