#ifndef HILBERT_HILBERT_H
#define HILBERT_HILBERT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HB_API __declspec(dllexport)
#else
#define HB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call returns a status; on failure hb_last_error() holds the message
   for the calling thread. Output parameters are untouched on failure. */
typedef enum hb_status {
  HB_OK = 0,
  HB_INVALID_ARGUMENT,
  HB_POINT_OUTSIDE_DOMAIN,
  HB_ZERO_DIRECTION,
  HB_DEGENERATE_INPUT,
  HB_SINGULAR_MATRIX,
  HB_NOT_POLYGONAL,
  HB_BUDGET_EXCEEDED,
  HB_INVALID_SEQUENCE,
  HB_BAD_ARITY,
  HB_EMPTY_PROFILE,
  HB_PARSE_ERROR,
  HB_IO_ERROR,
  HB_INTERNAL
} hb_status;

HB_API const char* hb_status_name(hb_status status);
HB_API const char* hb_last_error(void);

/* Strings returned through char** are owned by the caller. */
HB_API void hb_string_free(char* s);

/* ---- domains ---------------------------------------------------------- */

typedef struct hb_domain hb_domain;

typedef enum hb_domain_kind { HB_KIND_POLYGON = 0, HB_KIND_RING_POLYGON, HB_KIND_DISK } hb_domain_kind;

typedef struct hb_domain_info {
  hb_domain_kind kind;
  int64_t vertex_count; /* 0 for the disk */
  int centrally_symmetric;
  int inscribed; /* vertices on the unit circle, or the disk */
  double bbox[4]; /* xmin, ymin, xmax, ymax */
} hb_domain_info;

typedef enum hb_sequence_rule { HB_RULE_TOWER = 0, HB_RULE_SQUARING, HB_RULE_EXPLICIT } hb_sequence_rule;

typedef struct hb_tower_spec {
  int64_t n0;
  hb_sequence_rule rule;
  const double* explicit_list;
  size_t explicit_count;
  int max_rings;
} hb_tower_spec;

HB_API void hb_tower_spec_default(hb_tower_spec* spec);

HB_API hb_status hb_domain_disk(hb_domain** out);
HB_API hb_status hb_domain_square(hb_domain** out);
HB_API hb_status hb_domain_regular_polygon(int64_t n, hb_domain** out);
/* Counterclockwise vertices as x0, y0, x1, y1, ... */
HB_API hb_status hb_domain_polygon(const double* xy, size_t count, hb_domain** out);
/* Strictly increasing polar angles of vertices on the unit circle. */
HB_API hb_status hb_domain_circle_polygon(const double* angles, size_t count, hb_domain** out);
HB_API hb_status hb_domain_no_limit(const hb_tower_spec* spec, hb_domain** out);
HB_API hb_status hb_domain_zero_entropy(int N, hb_domain** out);
HB_API hb_status hb_domain_from_json(const char* text, hb_domain** out);
/* Domain JSON; domains built by hb_domain_no_limit also carry their
   construction report. */
HB_API hb_status hb_domain_to_json(const hb_domain* d, char** out);
HB_API hb_status hb_domain_info_get(const hb_domain* d, hb_domain_info* out);
HB_API void hb_domain_free(hb_domain* d);

/* ---- metric ----------------------------------------------------------- */

HB_API hb_status hb_distance(const hb_domain* d, const double p[2], const double q[2], double* out);
HB_API hb_status hb_finsler_norm(const hb_domain* d, const double p[2], const double v[2], double* out);
HB_API hb_status hb_unit_ball_area(const hb_domain* d, const double p[2], double* out);
/* Vertices of the tangent unit ball at p; *xy holds 2·count doubles and is
   released with hb_doubles_free. Polygons only. */
HB_API hb_status hb_unit_ball(const hb_domain* d, const double p[2], double** xy, size_t* count,
                              double* area);
HB_API void hb_doubles_free(double* xy);
/* Points of S(center, R) in the directions angles[i]; xy_out holds 2·count. */
HB_API hb_status hb_sphere_points(const hb_domain* d, const double center[2], double R,
                                  const double* angles, size_t count, double* xy_out);

/* ---- volumes ---------------------------------------------------------- */

typedef struct hb_quadrature {
  int radial_order;
  int angular_refinement;
  int64_t mc_samples;
  uint64_t seed;
  int threads;
  int64_t max_evaluations;
} hb_quadrature;

HB_API void hb_quadrature_default(hb_quadrature* q);

typedef struct hb_measure {
  double value;
  double error_estimate;
  int monte_carlo;
  int64_t evaluations;
} hb_measure;

HB_API hb_status hb_ball_volume(const hb_domain* d, double R, const hb_quadrature* q, hb_measure* out);
HB_API hb_status hb_ball_volume_mc(const hb_domain* d, double R, const hb_quadrature* q, hb_measure* out);
HB_API hb_status hb_lebesgue_ball_area(const hb_domain* d, double R, const hb_quadrature* q, hb_measure* out);
/* cap = {normal_x, normal_y, offset} keeps normal·x < offset, or NULL. */
HB_API hb_status hb_sector_ball_volume(const hb_domain* d, double R, double theta_a, double theta_b,
                                       const double* cap, const hb_quadrature* q, hb_measure* out);

/* ---- entropy ---------------------------------------------------------- */

typedef struct hb_profile_sample {
  double R;
  double mu;
  double ratio;
  double error_estimate;
  int computed; /* 0 when the radius exceeded the evaluation budget */
} hb_profile_sample;

/* Radii lo·10^(j/per_decade) below hi, then hi; *radii is released with
   hb_doubles_free. */
HB_API hb_status hb_log_grid(double lo, double hi, int per_decade, double** radii, size_t* count);

/* samples_out holds count entries in the order of radii; csv_out may be NULL. */
HB_API hb_status hb_profile(const hb_domain* d, const double* radii, size_t count, const hb_quadrature* q,
                            hb_profile_sample* samples_out, char** csv_out);

typedef struct hb_oscillation_summary {
  double peak_radius;
  double peak_ratio;
  double last_radius;
  double last_ratio;
  double theta_infinity;
  size_t sample_count;
  size_t failed_count;
} hb_oscillation_summary;

/* Profile of the no-limit domain on its log grid; csv_out may be NULL. */
HB_API hb_status hb_oscillation(const hb_tower_spec* spec, const hb_quadrature* q, hb_oscillation_summary* out,
                                char** csv_out);

typedef struct hb_cubic_sample {
  double R;
  double mu;
  double bound;
  int holds;
} hb_cubic_sample;

/* μ(B(0, R)) ≤ (144π + τ)R³ on the zero-entropy domain with N points;
   samples_out holds count entries, failed radii have mu = NaN. */
HB_API hb_status hb_cubic(int N, const double* radii, size_t count, const hb_quadrature* q, double* tau_out,
                          hb_cubic_sample* samples_out);

/* ---- verification and pictures ---------------------------------------- */

/* One PASS/FAIL line per property; *failures counts the FAIL lines. */
HB_API hb_status hb_verify(const hb_domain* d, uint64_t seed, int threads, char** report, int* failures);

typedef struct hb_svg_options {
  double radius;
  double center[2];
  int sphere_samples;
  double ball_point[2];
  double ball_scale;
  int size_px;
} hb_svg_options;

HB_API void hb_svg_options_default(hb_svg_options* o);
HB_API hb_status hb_render_svg(const hb_domain* d, const hb_svg_options* o, char** out);

#ifdef __cplusplus
}
#endif

#endif
