#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "hilbert/hilbert.h"

namespace {

// Owning wrapper so failed checks do not leak handles.
struct Domain {
  hb_domain* d{nullptr};
  ~Domain() { hb_domain_free(d); }
};

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::string(hb_status_name(HB_OK)) == "Ok");
  CHECK(std::string(hb_status_name(HB_BUDGET_EXCEEDED)) == "BudgetExceeded");
  Domain disk;
  REQUIRE(hb_domain_disk(&disk.d) == HB_OK);
  const double p[2] = {2.0, 0.0}, q[2] = {0.0, 0.0};
  double out = -1.0;
  CHECK(hb_distance(disk.d, p, q, &out) == HB_POINT_OUTSIDE_DOMAIN);
  CHECK(out == -1.0);
  CHECK(std::strlen(hb_last_error()) > 0);
  CHECK(hb_distance(nullptr, p, q, &out) == HB_INVALID_ARGUMENT);
  CHECK(hb_distance(disk.d, p, q, nullptr) == HB_INVALID_ARGUMENT);
  Domain bad;
  CHECK(hb_domain_regular_polygon(2, &bad.d) == HB_BAD_ARITY);
  CHECK(bad.d == nullptr);
  CHECK(hb_domain_from_json("{\"type\": 3}", &bad.d) == HB_PARSE_ERROR);
  hb_measure m;
  CHECK(hb_ball_volume(disk.d, -1.0, nullptr, &m) == HB_INVALID_ARGUMENT);
}

TEST_CASE("metric through the C API") {
  Domain disk, sq;
  REQUIRE(hb_domain_disk(&disk.d) == HB_OK);
  REQUIRE(hb_domain_square(&sq.d) == HB_OK);
  const double o[2] = {0.0, 0.0}, p[2] = {0.5, 0.0}, v[2] = {1.0, 0.0};
  double d = 0.0;
  REQUIRE(hb_distance(disk.d, o, p, &d) == HB_OK);
  CHECK(d == doctest::Approx(std::atanh(0.5)).epsilon(1e-14));
  REQUIRE(hb_finsler_norm(sq.d, o, v, &d) == HB_OK);
  CHECK(d == doctest::Approx(1.0));
  double* xy = nullptr;
  size_t n = 0;
  double area = 0.0;
  REQUIRE(hb_unit_ball(sq.d, o, &xy, &n, &area) == HB_OK);
  CHECK(n == 4);
  CHECK(area == doctest::Approx(4.0).epsilon(1e-12));
  hb_doubles_free(xy);
  CHECK(hb_unit_ball(disk.d, o, &xy, &n, &area) == HB_NOT_POLYGONAL);
  const double angles[3] = {0.0, 1.0, 2.0};
  double pts[6];
  REQUIRE(hb_sphere_points(disk.d, o, 1.0, angles, 3, pts) == HB_OK);
  CHECK(std::hypot(pts[2], pts[3]) == doctest::Approx(std::tanh(1.0)).epsilon(1e-14));
}

TEST_CASE("domains, info and JSON") {
  Domain tower, back;
  hb_tower_spec spec;
  hb_tower_spec_default(&spec);
  CHECK(spec.n0 == 3);
  REQUIRE(hb_domain_no_limit(&spec, &tower.d) == HB_OK);
  hb_domain_info info;
  REQUIRE(hb_domain_info_get(tower.d, &info) == HB_OK);
  CHECK(info.kind == HB_KIND_RING_POLYGON);
  CHECK(info.vertex_count == 39374);
  CHECK(info.centrally_symmetric == 1);
  CHECK(info.inscribed == 1);
  char* json = nullptr;
  REQUIRE(hb_domain_to_json(tower.d, &json) == HB_OK);
  CHECK(std::string(json).find("theta_infinity") != std::string::npos);
  REQUIRE(hb_domain_from_json(json, &back.d) == HB_OK);
  hb_string_free(json);
  const double p[2] = {0.3, -0.2}, q[2] = {-0.6, 0.55};
  double d1 = 0.0, d2 = 0.0;
  REQUIRE(hb_distance(tower.d, p, q, &d1) == HB_OK);
  REQUIRE(hb_distance(back.d, p, q, &d2) == HB_OK);
  CHECK(d1 == d2);

  Domain poly, circ, zero;
  const double xy[8] = {-1, -0.5, 1, -1, 1, 1, -0.5, 1};
  CHECK(hb_domain_polygon(xy, 4, &poly.d) == HB_OK);
  const double ang[3] = {0.0, 2.0, 4.0};
  CHECK(hb_domain_circle_polygon(ang, 3, &circ.d) == HB_OK);
  CHECK(hb_domain_zero_entropy(30, &zero.d) == HB_OK);
  REQUIRE(hb_domain_info_get(zero.d, &info) == HB_OK);
  CHECK(info.vertex_count == 64);
}

TEST_CASE("volumes and profiles") {
  Domain disk, sq;
  REQUIRE(hb_domain_disk(&disk.d) == HB_OK);
  REQUIRE(hb_domain_square(&sq.d) == HB_OK);
  hb_quadrature q;
  hb_quadrature_default(&q);
  hb_measure m;
  REQUIRE(hb_ball_volume(disk.d, 1.0, &q, &m) == HB_OK);
  CHECK(m.value == doctest::Approx(2.0 * M_PI * (std::cosh(1.0) - 1.0)).epsilon(1e-10));
  CHECK(m.monte_carlo == 0);
  q.mc_samples = 20000;
  REQUIRE(hb_ball_volume_mc(disk.d, 1.0, &q, &m) == HB_OK);
  CHECK(m.monte_carlo == 1);
  REQUIRE(hb_lebesgue_ball_area(sq.d, 1.0, &q, &m) == HB_OK);
  CHECK(m.value == doctest::Approx(4.0 * std::pow(std::tanh(1.0), 2)).epsilon(1e-10));
  const double cap[3] = {1.0, 0.0, 1.0};
  REQUIRE(hb_sector_ball_volume(sq.d, 1.0, -M_PI / 4, M_PI / 4, cap, &q, &m) == HB_OK);
  hb_measure full;
  REQUIRE(hb_ball_volume(sq.d, 1.0, &q, &full) == HB_OK);
  CHECK(m.value == doctest::Approx(full.value / 4.0).epsilon(1e-9));

  hb_quadrature_default(&q);
  REQUIRE(hb_ball_volume(sq.d, 0.5, &q, &m) == HB_OK);
  q.max_evaluations = m.evaluations;
  const double radii[2] = {0.5, 20.0};
  hb_profile_sample s[2];
  char* csv = nullptr;
  REQUIRE(hb_profile(sq.d, radii, 2, &q, s, &csv) == HB_OK);
  CHECK(s[0].computed == 1);
  CHECK(s[0].ratio == doctest::Approx(std::log(s[0].mu) / 0.5));
  CHECK(s[1].computed == 0);
  CHECK(std::isnan(s[1].mu));
  CHECK(std::string(csv).starts_with("R,mu,ratio,err\n"));
  hb_string_free(csv);

  hb_quadrature_default(&q);
  const double cr[2] = {1.0, 2.0};
  hb_cubic_sample c[2];
  double tau = 0.0;
  REQUIRE(hb_cubic(5, cr, 2, &q, &tau, c) == HB_OK);
  CHECK(tau > 0.0);
  CHECK(c[0].holds == 1);
  CHECK(c[1].bound == doctest::Approx((144.0 * M_PI + tau) * 8.0));
}

TEST_CASE("verify and svg") {
  Domain sq;
  REQUIRE(hb_domain_square(&sq.d) == HB_OK);
  char* report = nullptr;
  int failures = -1;
  REQUIRE(hb_verify(sq.d, 0, 1, &report, &failures) == HB_OK);
  CHECK(failures == 0);
  CHECK(std::string(report).find("PASS square 2(1-x^2)") != std::string::npos);
  hb_string_free(report);
  hb_svg_options o;
  hb_svg_options_default(&o);
  CHECK(o.sphere_samples == 512);
  char* svg = nullptr;
  REQUIRE(hb_render_svg(sq.d, &o, &svg) == HB_OK);
  CHECK(std::string(svg).find("<svg") != std::string::npos);
  hb_string_free(svg);
}

TEST_CASE("log grid ends at hi") {
  double* r = nullptr;
  size_t n = 0;
  REQUIRE(hb_log_grid(0.5, 30.0, 24, &r, &n) == HB_OK);
  CHECK(n == 44);
  CHECK(r[0] == 0.5);
  CHECK(r[n - 1] == 30.0);
  for (size_t i = 1; i < n; ++i) CHECK(r[i] > r[i - 1]);
  hb_doubles_free(r);
  CHECK(hb_log_grid(0.0, 1.0, 24, &r, &n) == HB_INVALID_ARGUMENT);
}
