#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "anchor.hpp"
#include "constructions.hpp"
#include "metric.hpp"
#include "unit_ball.hpp"

using namespace hilbert;

namespace {

// Area of the tangent unit ball at the point `rho` along the ray through the
// exit point at distance `lam` from the anchor's base.
double anchored_area(const detail::AnchorData& A, double lam, double w, double g) {
  const std::size_t m = A.offset.size();
  std::vector<double> h(m);
  std::size_t arg = 0;
  for (std::size_t i = 0; i < m; ++i) {
    h[i] = w * (A.height_base[i] - lam * A.normal_dir[i]) + g * A.offset[i];
    if (h[i] < h[arg]) arg = i;
  }
  const bool side = arg == A.side_index;
  const ScaledBall sb = scaled_unit_ball(side ? A.a_side : A.a_exit, side ? A.b_side : A.b_exit, h);
  return sb.area / (sb.sx * sb.sy);
}

// Largest relative error of the thinned area over a spread of anchors and radii.
double thinned_error(const ConvexDomain& d) {
  const Boundary& b = d.boundary();
  REQUIRE(detail::thins(b));
  const auto plan = detail::thinning_plan(b);
  const int64_t n = b.vertex_count();
  double worst = 0.0;
  for (int64_t e : {int64_t{0}, int64_t{2}, n / 7, n / 2 + 3, n - 1}) {
    for (bool from_start : {true, false}) {
      const auto fine = detail::make_anchor(b, e, from_start, detail::kept_vertices(b, e, plan.rate));
      const auto coarse = detail::make_anchor(b, e, from_start, detail::kept_vertices(b, e, plan.rate / 2));
      for (double f : {0.05, 0.4}) {
        const double lam = f * fine.edge_length;
        const Point2 pw = fine.base_world + lam * fine.dir_world;
        const double tp = pw.norm();
        for (double rho : {0.2, 1.0, 3.0}) {
          const RadialSolve r = radial_from_chord(tp, tp, rho);
          const double w = r.s / tp, g = r.gap / tp;
          double area = anchored_area(fine, lam, w, g);
          if (plan.extrapolate) area = (4.0 * area - anchored_area(coarse, lam, w, g)) / 3.0;
          const double exact = unit_ball_area(d, (r.s / tp) * pw);
          worst = std::max(worst, std::abs(area - exact) / exact);
        }
      }
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("sampled run weights sum polynomials exactly") {
  for (int64_t M : {65, 1000, 19683}) {
    const auto d = ConvexDomain::angle_runs({{0.0, 1e-5, M + 1, false}, {2.0, 0.1, 1, false}, {4.0, 0.1, 1, false}});
    double s0 = 0.0, s3 = 0.0, e3 = 0.0;
    for (const auto& s : detail::edge_plan(d.boundary(), false)) {
      if (s.edge >= M) continue;
      const double l = static_cast<double>(s.edge);
      s0 += s.weight;
      s3 += s.weight * l * l * l;
    }
    for (int64_t l = 0; l < M; ++l) e3 += static_cast<double>(l) * l * l;
    CHECK(s0 == doctest::Approx(static_cast<double>(M)).epsilon(1e-14));
    CHECK(s3 == doctest::Approx(e3).epsilon(1e-12));
  }
}

TEST_CASE("edge plan splits sampled runs at cut edges") {
  const auto d = regular_polygon(1000);
  const std::vector<int64_t> cuts{100, 733};
  double total = 0.0;
  bool has[2] = {false, false};
  for (const auto& s : detail::edge_plan(d.boundary(), false, cuts)) {
    total += s.weight;
    if (s.edge == 100) has[0] = s.weight == 1.0;
    if (s.edge == 733) has[1] = s.weight == 1.0;
  }
  CHECK(total == doctest::Approx(1000.0).epsilon(1e-13));
  CHECK(has[0]);
  CHECK(has[1]);
}

TEST_CASE("thinned unit balls match the full boundary") {
  CHECK(thinned_error(regular_polygon(8192)) < 1e-5);
  CHECK(thinned_error(no_limit_domain({}).first) < 1e-9);
  CHECK(thinned_error(no_limit_domain({}).first) < 1e-9);
  // Long runs separated by wide gaps, where skipping across a gap would be fatal.
  const double pi = std::numbers::pi;
  std::vector<AngleRun> runs{{0.0, 0.4, 3, false}, {1.0, 0.9 / 3000.0, 3001, false}, {2.2, 0.3, 2, false}};
  for (std::size_t i = 0, k = runs.size(); i < k; ++i) runs.push_back({runs[i].start + pi, runs[i].step, runs[i].count, false});
  const double err = thinned_error(ConvexDomain::angle_runs(runs));
  CHECK(err < 1e-5);
}
