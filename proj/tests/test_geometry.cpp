#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "geometry.hpp"

using namespace hilbert;

namespace {

ConvexDomain square() { return ConvexDomain::polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}); }

std::vector<ConvexDomain> sample_domains() {
  std::vector<double> hexagon;
  for (int j = 0; j < 6; ++j) hexagon.push_back(j * kTwoPi / 6);
  return {ConvexDomain::disk(), square(), ConvexDomain::circle_polygon(hexagon),
          ConvexDomain::polygon({{2, -1}, {3, 2}, {-1, 2}, {-2, -0.5}, {0, -1.5}}),
          ConvexDomain::rings({{0.0, 0.1, 20}, {2.0, 0.01, 50}}, {2.9})};
}

Point2 random_interior(const ConvexDomain& d, std::mt19937_64& rng) {
  const auto box = d.bounding_box();
  std::uniform_real_distribution<double> ux(box[0], box[2]), uy(box[1], box[3]);
  for (;;) {
    Point2 p{ux(rng), uy(rng)};
    if (contains(d, p)) return p;
  }
}

Vec2 random_direction(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ua(0.0, kTwoPi);
  std::uniform_real_distribution<double> ul(0.1, 3.0);
  return ul(rng) * unit_from_angle(ua(rng));
}

// Independent reference: bisection on membership along the ray.
double bisect_hit(const ConvexDomain& d, Point2 p, Vec2 v) {
  double lo = 0.0, hi = 1.0;
  while (contains(d, p + hi * v)) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (contains(d, p + mid * v) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("membership") {
  CHECK(contains(ConvexDomain::disk(), {0, 0}));
  CHECK_FALSE(contains(ConvexDomain::disk(), {1, 0}));
  CHECK(contains(square(), {0.5, 0.99}));
  CHECK_FALSE(contains(square(), {1, 0.5}));
  CHECK_FALSE(contains(square(), {1.2, 0}));
}

TEST_CASE("chord on the disk and the square") {
  const Chord c = chord(ConvexDomain::disk(), {0.5, 0}, {1, 0});
  CHECK(c.t_plus == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(c.t_minus == doctest::Approx(1.5).epsilon(1e-15));
  const Chord s = chord(square(), {0, 0}, {1, 0});
  CHECK(s.t_plus == 1.0);
  CHECK(s.t_minus == 1.0);
  CHECK_THROWS_AS(chord(square(), {2, 0}, {1, 0}), Error);
  CHECK_THROWS_AS(chord(square(), {0, 0}, {0, 0}), Error);
}

TEST_CASE("chord consistency, homogeneity and agreement with bisection") {
  std::mt19937_64 rng(7);
  for (const auto& d : sample_domains()) {
    for (int k = 0; k < 10000; ++k) {
      const Point2 p = random_interior(d, rng);
      const Vec2 v = random_direction(rng);
      const Chord c = chord(d, p, v);
      REQUIRE(c.t_plus > 0);
      REQUIRE(c.t_minus > 0);
      CHECK((p + c.t_plus * v - c.p_plus).norm() <= 1e-9 * (1 + c.p_plus.norm()));
      CHECK((p - c.t_minus * v - c.p_minus).norm() <= 1e-9 * (1 + c.p_minus.norm()));
      const double t2 = chord(d, p, 2.0 * v).t_plus;
      CHECK(std::abs(t2 - c.t_plus / 2) <= 1e-12 * c.t_plus);
      if (k < 500) {
        CHECK(std::abs(bisect_hit(d, p, v) - c.t_plus) <= 1e-12 * (1 + c.t_plus));
      }
    }
  }
}

TEST_CASE("ring and explicit forms agree") {
  // Truncated ring construction, materialised as an explicit angle list.
  const auto rings = ConvexDomain::rings({{0.0, 2 * kPi / 9, 3}, {2 * kPi / 3, 0.01, 100}}, {});
  const auto& b = rings.boundary();
  std::vector<double> angles;
  for (int64_t i = 0; i < b.vertex_count(); ++i) angles.push_back(b.vertex_angle(i));
  CHECK(b.vertex_count() == 2 * (4 + 101 - 1));
  CHECK(b.centrally_symmetric());
  const auto explicit_form = ConvexDomain::circle_polygon(angles);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 10000; ++k) {
    const Point2 p = random_interior(rings, rng);
    const Vec2 v = random_direction(rng);
    const double a = chord(rings, p, v).t_plus;
    const double e = chord(explicit_form, p, v).t_plus;
    CHECK(std::abs(a - e) <= 1e-12 * (1 + a));
  }
}

TEST_CASE("heights vanish on adjacent vertices and match the supporting line") {
  const auto d = ConvexDomain::rings({{0.0, 0.05, 30}, {1.6, 0.1, 10}}, {3.0});
  const auto& b = d.boundary();
  for (int64_t e = 0; e < b.vertex_count(); e += 3) {
    const EdgeLine line = b.edge_line(e);
    CHECK(b.height_at_vertex(e, e) == 0.0);
    CHECK(b.height_at_vertex(e, b.next(e)) == 0.0);
    for (int64_t v = 0; v < b.vertex_count(); v += 5) {
      if (v == e || v == b.next(e)) continue;
      const double direct = line.offset - dot(line.normal, b.vertex(v));
      CHECK(b.height_at_vertex(e, v) == doctest::Approx(direct).epsilon(1e-9));
      CHECK(b.height_at_vertex(e, v) > 0.0);
    }
  }
}

TEST_CASE("collapsed rings become arcs") {
  const auto d = ConvexDomain::rings({{0.0, 0.3, 5}, {1.5, 1e-17, 1e16}}, {});
  const auto& b = d.boundary();
  const int64_t e = b.locate_angle(1.55);
  CHECK(b.edge_is_arc(e));
  const Vec2 dir = unit_from_angle(1.55);
  CHECK(chord(d, {0, 0}, dir).t_plus == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("convex hull") {
  std::vector<Point2> corners{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  auto h = convex_hull(corners);
  CHECK(h.boundary().vertex_count() == 4);
  corners.push_back({0, 0});
  corners.push_back({1, 0});  // collinear point on an edge
  h = convex_hull(corners);
  CHECK(h.boundary().vertex_count() == 4);
  const auto again = convex_hull(polygon_vertices(h));
  CHECK(polygon_vertices(again) == polygon_vertices(h));

  std::vector<Point2> line{{0, 0}, {1, 1}, {2, 2}};
  CHECK_THROWS_AS(convex_hull(line), Error);

  // Dyadic angles and their antipodes.
  std::vector<Point2> pts{{1, 0}, {-1, 0}};
  for (int n = 0; n <= 30; ++n) {
    const Point2 p = unit_from_angle(std::ldexp(1.0, -n));
    pts.push_back(p);
    pts.push_back(-p);
  }
  const auto z = convex_hull(pts);
  CHECK(z.boundary().vertex_count() == 64);
  CHECK(z.centrally_symmetric());
}

TEST_CASE("linear images") {
  const Matrix2 id{{{1, 0}, {0, 1}}};
  CHECK(polygon_vertices(linear_image(square(), id)).size() == 4);
  const Matrix2 rot{{{0, -1}, {1, 0}}};
  auto rv = polygon_vertices(linear_image(square(), rot));
  auto sv = polygon_vertices(square());
  auto less = [](const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); };
  std::sort(rv.begin(), rv.end(), less);
  std::sort(sv.begin(), sv.end(), less);
  CHECK(rv == sv);

  // Quadrilateral with vertices ±P, ±Q sent to the square by f(P)=(1,−1), f(Q)=(1,1).
  const Point2 P{2, -0.5}, Q{0.5, 1.5};
  const auto quad = ConvexDomain::polygon({P, Q, -P, -Q});
  // f = [[1,1],[-1,1]] · [P Q]^{-1}
  const double det = P.x * Q.y - Q.x * P.y;
  const double inv[2][2] = {{Q.y / det, -Q.x / det}, {-P.y / det, P.x / det}};
  Matrix2 f{};
  const double target[2][2] = {{1, 1}, {-1, 1}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) f[i][j] = target[i][0] * inv[0][j] + target[i][1] * inv[1][j];
  const auto img = polygon_vertices(linear_image(quad, f));
  REQUIRE(img.size() == 4);
  for (const auto& v : img) {
    CHECK(std::abs(std::abs(v.x) - 1) < 1e-14);
    CHECK(std::abs(std::abs(v.y) - 1) < 1e-14);
  }
  const Matrix2 singular{{{1, 2}, {2, 4}}};
  CHECK_THROWS_AS(linear_image(square(), singular), Error);
}
