#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "metric.hpp"

using namespace hilbert;

namespace {

ConvexDomain square() { return ConvexDomain::polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}); }

std::vector<ConvexDomain> sample_domains() {
  return {ConvexDomain::disk(), square(),
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

// Cross ratio from the two boundary points a, b of line pq, written directly
// from the affine coordinates p=(1−s)a+sb, q=(1−t)a+tb.
double cross_ratio_distance(const ConvexDomain& d, Point2 p, Point2 q) {
  const Vec2 u = (q - p) / (q - p).norm();
  const Chord c = chord(d, p, u);
  const Point2 a = c.p_minus, b = c.p_plus;
  const double L = (b - a).norm();
  const double s = (p - a).norm() / L;
  const double t = (q - a).norm() / L;
  return 0.5 * std::log((1 - s) / s * t / (1 - t));
}

}  // namespace

TEST_CASE("distance examples") {
  CHECK(hilbert_distance(ConvexDomain::disk(), {0, 0}, {0.5, 0}) ==
        doctest::Approx(std::atanh(0.5)).epsilon(1e-15));
  CHECK(hilbert_distance(square(), {0, 0}, {0.5, 0}) ==
        doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-15));
  CHECK(hilbert_distance(square(), {0.3, 0.2}, {0.3, 0.2}) == 0.0);
  CHECK_THROWS_AS(hilbert_distance(square(), {0, 0}, {1, 0}), Error);
}

TEST_CASE("finsler examples") {
  CHECK(finsler_norm(square(), {0, 0}, {1, 0}) == 1.0);
  CHECK(finsler_norm(ConvexDomain::disk(), {0.5, 0}, {1, 0}) == doctest::Approx(4.0 / 3.0));
  CHECK(finsler_norm(square(), {0.1, 0.2}, {0, 0}) == 0.0);
}

TEST_CASE("radial inversion") {
  CHECK(ball_radial_point(square(), {0, 0}, {1, 0}, 0.0).s == 0.0);
  for (double R : {0.1, 1.0, 5.0, 17.0}) {
    CHECK(ball_radial_point(ConvexDomain::disk(), {0, 0}, {0, 1}, R).s ==
          doctest::Approx(std::tanh(R)).epsilon(1e-15));
    CHECK(ball_radial_point(square(), {0, 0}, {1, 0}, R).s ==
          doctest::Approx(std::tanh(R)).epsilon(1e-15));
  }
  // Huge radii keep the gap to the boundary instead of overflowing.
  const RadialSolve far = radial_from_chord(1.0, 1.0, 1e5);
  CHECK(far.s == 1.0);
  CHECK(std::isfinite(far.ds_drho));
  const RadialSolve mid = radial_from_chord(0.7, 1.3, 200.0);
  CHECK(mid.gap > 0.0);
  CHECK(mid.gap == doctest::Approx(1.3 * 2.0 * std::exp(-400.0) / 0.7).epsilon(1e-12));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ur(0.0, 30.0), ua(0.0, kTwoPi);
  for (const auto& d : sample_domains()) {
    for (int k = 0; k < 300; ++k) {
      const Point2 c = random_interior(d, rng);
      Vec2 u = unit_from_angle(ua(rng));
      u = u / u.norm();  // same normalisation as the library, so the chords agree
      const double R = ur(rng);
      const RadialSolve r = ball_radial_point(d, c, u, R);
      const Chord ch = chord(d, c, u);
      CHECK(r.s <= ch.t_plus);
      CHECK(r.gap > 0.0);
      CHECK(r.ds_drho > 0.0);
      // Inversion check in chord coordinates, where the gap to the boundary is
      // kept exactly; a rounded Cartesian point cannot carry radius 30.
      const double back = 0.5 * (std::log1p(r.s / ch.t_minus) - std::log(r.gap / ch.t_plus));
      CHECK(back == doctest::Approx(R).epsilon(1e-9));
      if (R <= 6) {
        CHECK(hilbert_distance(d, c, c + r.s * u) == doctest::Approx(R).epsilon(1e-9));
      }
      // Finite-difference derivative.
      if (R > 1e-3 && R < 10) {
        const double h = 1e-5;
        const double fd = (radial_from_chord(ch.t_minus, ch.t_plus, R + h).s -
                           radial_from_chord(ch.t_minus, ch.t_plus, R - h).s) / (2 * h);
        CHECK(fd == doctest::Approx(r.ds_drho).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("sphere polylines") {
  const double axes[] = {0, kPi / 2, kPi, 3 * kPi / 2};
  for (const auto& d : {ConvexDomain::disk(), square()}) {
    const auto pts = metric_sphere_polyline(d, {0, 0}, 1.0, axes);
    REQUIRE(pts.size() == 4);
    for (const auto& p : pts) CHECK(p.norm() == doctest::Approx(std::tanh(1.0)));
    for (const auto& p : metric_sphere_polyline(d, {0, 0}, 0.0, axes)) CHECK(p.norm() == 0.0);
  }
}

TEST_CASE("metric axioms") {
  std::mt19937_64 rng(5);
  for (const auto& d : sample_domains()) {
    for (int k = 0; k < 1000; ++k) {
      const Point2 p = random_interior(d, rng), q = random_interior(d, rng),
                   r = random_interior(d, rng);
      const double pq = hilbert_distance(d, p, q);
      CHECK(std::abs(pq - hilbert_distance(d, q, p)) <= 1e-12 * (1 + pq));
      CHECK(hilbert_distance(d, p, r) <= pq + hilbert_distance(d, q, r) + 1e-12);
      if (k < 200) {
        CHECK(pq == doctest::Approx(cross_ratio_distance(d, p, q)).epsilon(1e-9));
        std::uniform_real_distribution<double> ul(0.05, 0.95);
        const Point2 mid = p + ul(rng) * (q - p);
        CHECK(hilbert_distance(d, p, mid) + hilbert_distance(d, mid, q) ==
              doctest::Approx(pq).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("linear invariance") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> um(-2.0, 2.0);
  const auto d = ConvexDomain::polygon({{2, -1}, {3, 2}, {-1, 2}, {-2, -0.5}, {0, -1.5}});
  for (int k = 0; k < 100; ++k) {
    Matrix2 m{{{um(rng), um(rng)}, {um(rng), um(rng)}}};
    const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (std::abs(det) < 0.2) continue;
    const auto img = linear_image(d, m);
    auto apply = [&](Point2 p) {
      return Point2{m[0][0] * p.x + m[0][1] * p.y, m[1][0] * p.x + m[1][1] * p.y};
    };
    const Point2 p = random_interior(d, rng), q = random_interior(d, rng);
    CHECK(hilbert_distance(img, apply(p), apply(q)) ==
          doctest::Approx(hilbert_distance(d, p, q)).epsilon(1e-10));
  }
}

TEST_CASE("domain monotonicity and the equality case") {
  std::mt19937_64 rng(13);
  const auto inner = ConvexDomain::rings({{0.0, 2 * kPi / 9, 3}, {2 * kPi / 3, 0.01, 100}}, {});
  const auto disk = ConvexDomain::disk();
  for (int k = 0; k < 1000; ++k) {
    const Point2 p = random_interior(inner, rng), q = random_interior(inner, rng);
    CHECK(hilbert_distance(inner, p, q) >= hilbert_distance(disk, p, q) - 1e-12);
  }
  // Along the diameter through an antipodal vertex pair both chords coincide.
  const Vec2 u = inner.boundary().vertex(5);
  for (double s : {0.1, 0.5, 0.9, 0.999}) {
    CHECK(hilbert_distance(inner, {0, 0}, s * u) ==
          doctest::Approx(hilbert_distance(disk, {0, 0}, s * u)).epsilon(1e-12));
  }
}

TEST_CASE("distance and norm agree to first order") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ua(0.0, kTwoPi);
  for (const auto& d : sample_domains()) {
    for (int k = 0; k < 200; ++k) {
      const Point2 p = random_interior(d, rng);
      const Vec2 v = unit_from_angle(ua(rng));
      const double eps = 1e-6;
      // The second-order term is about ε/(2·min t±); stay 10⁻² away from ∂C.
      const Chord c = chord(d, p, v);
      if (std::min(c.t_minus, c.t_plus) < 1e-2) continue;
      const double ratio = hilbert_distance(d, p, p + eps * v) / (eps * finsler_norm(d, p, v));
      CHECK(ratio == doctest::Approx(1.0).epsilon(1e-4));
    }
  }
}

TEST_CASE("symmetry is exact next to the boundary") {
  std::mt19937_64 g(11);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI), depth(-14.0, -2.0);
  for (const ConvexDomain& d : sample_domains()) {
    for (int i = 0; i < 500; ++i) {
      // Points a distance 10^depth inside the boundary along random rays.
      auto near_edge = [&] {
        const double a = ang(g);
        const Vec2 u{std::cos(a), std::sin(a)};
        const Point2 c{0.0, 0.0};
        const double t = forward_hit(d, c, u);
        return c + (t * (1.0 - std::pow(10.0, depth(g)))) * u;
      };
      const Point2 p = near_edge(), q = near_edge();
      if (!contains(d, p) || !contains(d, q)) continue;
      CHECK(hilbert_distance(d, p, q) == hilbert_distance(d, q, p));
    }
  }
}
