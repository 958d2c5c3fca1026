#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "metric.hpp"
#include "unit_ball.hpp"

using namespace hilbert;

namespace {

ConvexDomain square() { return ConvexDomain::polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}); }

ConvexDomain regular(int n) {
  std::vector<double> angles;
  for (int j = 0; j < n; ++j) angles.push_back(j * kTwoPi / n);
  return ConvexDomain::circle_polygon(angles);
}

Point2 random_interior(const ConvexDomain& d, std::mt19937_64& rng) {
  const auto box = d.bounding_box();
  std::uniform_real_distribution<double> ux(box[0], box[2]), uy(box[1], box[3]);
  for (;;) {
    Point2 p{ux(rng), uy(rng)};
    if (contains(d, p)) return p;
  }
}

double shoelace(const std::vector<Vec2>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * s;
}

}  // namespace

TEST_CASE("square at the center") {
  const UnitBallPolygon ball = unit_ball(square(), {0, 0});
  CHECK(ball.area == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(ball.vertices.size() == 4);
  CHECK(busemann_density(square(), {0, 0}) == doctest::Approx(kPi / 4));
}

TEST_CASE("disk closed form") {
  CHECK(unit_ball_area(ConvexDomain::disk(), {0, 0}) == doctest::Approx(kPi));
  CHECK(unit_ball_area(ConvexDomain::disk(), {0.5, 0}) ==
        doctest::Approx(kPi * std::pow(0.75, 1.5)).epsilon(1e-14));
  CHECK(busemann_density(ConvexDomain::disk(), {0, 0.6}) ==
        doctest::Approx(std::pow(1 - 0.36, -1.5)).epsilon(1e-14));
  // The ellipse formula against direct integration of F⁻².
  for (double r : {0.0, 0.3, 0.9, 0.99}) {
    CHECK(unit_ball_area_quadrature(ConvexDomain::disk(), {0, r}) ==
          doctest::Approx(unit_ball_area(ConvexDomain::disk(), {0, r})).epsilon(1e-10));
  }
  CHECK_THROWS_AS(unit_ball(ConvexDomain::disk(), {0, 0}), Error);
}

TEST_CASE("square bounds at random points") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int violations = 0;
  for (int k = 0; k < 10000; ++k) {
    const double x = u(rng), y = u(rng);
    if (std::abs(x) >= 1 || std::abs(y) >= 1) continue;
    const double area = unit_ball_area(square(), {x, y});
    const double w = (1 - x * x) * (1 - y * y);
    if (area < 2 * w * (1 - 1e-12) || area > 4 * w * (1 + 1e-12)) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("exact ball against the angular quadrature oracle") {
  std::mt19937_64 rng(23);
  const std::vector<ConvexDomain> domains{
      square(), regular(6), regular(7),
      ConvexDomain::polygon({{2, -1}, {3, 2}, {-1, 2}, {-2, -0.5}, {0, -1.5}}),
      ConvexDomain::rings({{0.0, 0.3, 4}, {1.2, 0.02, 40}}, {2.9})};
  CHECK(unit_ball_area(regular(6), {0, 0}) ==
        doctest::Approx(unit_ball_area_quadrature(regular(6), {0, 0})).epsilon(1e-9));
  for (const auto& d : domains) {
    const auto n = d.boundary().vertex_count();
    for (int k = 0; k < 40; ++k) {
      const Point2 p = random_interior(d, rng);
      const UnitBallPolygon ball = unit_ball(d, p);
      CHECK(ball.area == doctest::Approx(unit_ball_area_quadrature(d, p)).epsilon(1e-9));
      CHECK(ball.area == doctest::Approx(shoelace(ball.vertices)).epsilon(1e-12));
      CHECK(static_cast<int64_t>(ball.vertices.size()) <= 2 * n);
      for (const Vec2& v : ball.vertices) {
        CHECK(finsler_norm(d, p, v) == doctest::Approx(1.0).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("points very close to an edge") {
  for (double eps : {1e-3, 1e-8, 1e-13}) {
    const Point2 p{1 - eps, 0.3};
    const double area = unit_ball_area(square(), p);
    CHECK(area == doctest::Approx(unit_ball_area_quadrature(square(), p)).epsilon(1e-10));
  }
  // Ring domain: a point pushed towards the midpoint of a tiny edge.
  const auto d = ConvexDomain::rings({{0.0, 0.5, 2}, {1.0, 1e-6, 1000}}, {2.5});
  const auto& b = d.boundary();
  const int64_t e = 500;
  const EdgeLine line = b.edge_line(e);
  for (double eps : {1e-6, 1e-9}) {
    const Point2 p = (line.offset - eps) * line.normal;
    const double exact = unit_ball_area(d, p);
    const double oracle = unit_ball_area_quadrature(d, p, 1e-12);
    CHECK(exact == doctest::Approx(oracle).epsilon(1e-7));
  }
}

TEST_CASE("tangent balls grow with the domain") {
  std::mt19937_64 rng(29);
  const auto inner = regular(9);
  const auto outer = ConvexDomain::disk();
  const auto big_square = ConvexDomain::polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
  for (int k = 0; k < 1000; ++k) {
    const Point2 p = random_interior(inner, rng);
    CHECK(unit_ball_area(inner, p) <= unit_ball_area(outer, p) * (1 + 1e-12));
    CHECK(unit_ball_area(outer, p) <= unit_ball_area(big_square, p) * (1 + 1e-12));
  }
}

TEST_CASE("normals clustered below rounding noise") {
  // Edges of angular width 2^-40 near (1, 0): the dual points are convex only
  // in exact arithmetic.
  std::vector<double> angles{0.0};
  for (int n = 40; n >= 1; --n) angles.push_back(std::ldexp(1.0, -n));
  for (double a : std::vector<double>(angles)) angles.push_back(a + kPi);
  const auto d = ConvexDomain::circle_polygon(angles);
  for (const Point2 p : {Point2{0.0, 0.0}, Point2{0.9, 0.05}, Point2{0.999, 1e-4}, Point2{-0.5, -0.3}}) {
    CHECK(unit_ball_area(d, p) == doctest::Approx(unit_ball_area_quadrature(d, p)).epsilon(1e-9));
    const UnitBallPolygon ball = unit_ball(d, p);
    for (const Vec2& v : ball.vertices) CHECK(finsler_norm(d, p, v) == doctest::Approx(1.0).epsilon(1e-9));
  }
}
