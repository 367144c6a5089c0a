/* hypmet C API.
 *
 * Every function returns an hm_status. On failure, hm_last_error() holds a
 * message for the calling thread until its next failing call. Strings handed
 * out through char** parameters are owned by the caller and released with
 * hm_string_free. Handles are released with their *_free function; passing
 * NULL to a free function is a no-op.
 */
#ifndef HYPMET_H
#define HYPMET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HM_API __declspec(dllexport)
#else
#define HM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  HM_OK = 0,
  HM_INVALID_ARGUMENT = 1,
  HM_DIMENSION = 2,
  HM_OUTSIDE_DOMAIN = 3,
  HM_UNSUPPORTED = 4,
  HM_PARSE = 5,
  HM_IO = 6,
  HM_INTERNAL = 99
} hm_status;

typedef enum { HM_RHO = 0, HM_J = 1, HM_TTAU = 2, HM_TAU = 3, HM_RHO_ABSRATIO = 4 } hm_metric;

typedef enum { HM_AUTO = 0, HM_CLOSED = 1, HM_NUMERIC = 2, HM_ORACLE = 3 } hm_method;

typedef struct hm_domain hm_domain;
typedef struct hm_map hm_map;

#define HM_WITNESS_MAX_DIM 8

typedef struct {
  double value;
  hm_method method; /* HM_CLOSED, HM_NUMERIC or HM_ORACLE */
  size_t dim;
  size_t n_witnesses; /* 0..2; witnesses of dimension > HM_WITNESS_MAX_DIM are not reported */
  int witness_infinite[2];
  double witness[2][HM_WITNESS_MAX_DIM];
} hm_result;

typedef struct {
  size_t budget;         /* pair grid for tau and rho via absolute ratios; 0 = default */
  size_t samples;        /* image boundary samples with a map, oracle samples; 0 = default */
} hm_eval_options;

HM_API const char* hm_version(void);
HM_API const char* hm_last_error(void);
HM_API void hm_string_free(char* s);

/* Domains */
HM_API hm_status hm_domain_ball(size_t n, hm_domain** out);
HM_API hm_status hm_domain_halfspace(size_t n, hm_domain** out);
/* xy holds n_vertices (x, y) pairs. */
HM_API hm_status hm_domain_polygon(const double* xy, size_t n_vertices, hm_domain** out);
/* pts holds n_points points of dimension dim, row after row. */
HM_API hm_status hm_domain_cloud(const double* pts, size_t n_points, size_t dim, hm_domain** out);
/* "ball:N", "halfspace:N", "polygon:FILE" (JSON {"vertices": ...}) or
 * "cloud:FILE" (JSON {"points": ...}). */
HM_API hm_status hm_domain_from_spec(const char* spec, hm_domain** out);
HM_API void hm_domain_free(hm_domain* d);
HM_API hm_status hm_domain_dim(const hm_domain* d, size_t* out);
HM_API hm_status hm_domain_describe(const hm_domain* d, char** out);
HM_API hm_status hm_domain_signed_distance(const hm_domain* d, const double* x, size_t n, double* out);

/* Moebius maps */
HM_API hm_status hm_map_from_json(const char* text, size_t dim, hm_map** out);
HM_API hm_status hm_map_from_file(const char* path, size_t dim, hm_map** out);
HM_API hm_status hm_map_canonical_h2b(size_t n, hm_map** out);
HM_API void hm_map_free(hm_map* f);
HM_API hm_status hm_map_to_json(const hm_map* f, char** out);
/* Image of x (or of ∞ when x_infinite). y receives n coordinates unless the
 * image is ∞, flagged in *y_infinite. */
HM_API hm_status hm_map_apply(const hm_map* f, const double* x, int x_infinite, size_t n, double* y,
                              int* y_infinite);

/* Metrics. options may be NULL. With a non-NULL map the metric is that of
 * f(D) at f(x), f(y), where x and y are given in D. */
HM_API hm_status hm_eval(const hm_domain* d, const hm_map* f, hm_metric metric, hm_method method,
                         const double* x, const double* y, size_t n, const hm_eval_options* options,
                         hm_result* out);

/* Two-sided bounds for ttau in the unit disk (halfplane = 0) or the upper
 * half-plane (halfplane = 1). */
HM_API hm_status hm_bounds(int halfplane, const double* x, const double* y, double* lower, double* upper,
                           int* has_upper);

/* Cassinian ovals. shape receives a static string. */
typedef struct {
  double a, b, e, max_radius;
  const char* shape;
} hm_oval_info;

HM_API hm_status hm_oval_info_get(const double* f1, const double* f2, double b, hm_oval_info* out);
/* Writes up to cap rows (theta, branch, x, y) into rows; *count receives the
 * number of rows in the full trace. rows may be NULL to query the count. */
HM_API hm_status hm_oval_trace(const double* f1, const double* f2, double b, size_t m, double* rows,
                               size_t cap, size_t* count);
/* Level b and tangent point (n coordinates) of the maximal oval. */
HM_API hm_status hm_maximal_oval(const hm_domain* d, const double* x, const double* y, size_t n, double* b,
                                 double* tangent);

/* Verification */
HM_API hm_status hm_suite_names(char** json);
/* dim = 0 and tau_budget = 0 select the defaults. */
HM_API hm_status hm_run_suite(const char* name, size_t trials, uint64_t seed, size_t dim, size_t tau_budget,
                              char** report_json, int* passed);
/* use_default != 0 ignores t and uses the sequence's default parameter. */
HM_API hm_status hm_sharpness_probe(const char* sequence, double t, int use_default, char** json, int* within);
/* JSON list of probes along the sequence's ladder; *ok is 1 when every probe
 * is no farther from its target than the one before it. */
HM_API hm_status hm_sharpness_ladder(const char* sequence, char** json, int* ok);
HM_API hm_status hm_sequence_names(char** json);

#ifdef __cplusplus
}
#endif

#endif
