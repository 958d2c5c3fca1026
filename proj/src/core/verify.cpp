#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "metric.hpp"
#include "unit_ball.hpp"

namespace hilbert {

namespace {

// Uniform doubles from the 53 high bits, identical on every platform.
struct Rng {
  std::mt19937_64 g;
  explicit Rng(uint64_t seed) : g(seed) {}
  double uniform() { return static_cast<double>(g() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

struct Tally {
  CheckResult r;
  explicit Tally(std::string name) {
    r.name = std::move(name);
    r.margin = INFINITY;
  }
  void add(double slack) {
    ++r.cases;
    if (!(slack >= 0.0)) ++r.violations;
    r.margin = std::min(r.margin, std::isnan(slack) ? -INFINITY : slack);
  }
  CheckResult done() {
    if (r.cases == 0) r.margin = 0.0;
    return r;
  }
};

Point2 random_interior(const ConvexDomain& d, Rng& rng) {
  const auto box = d.bounding_box();
  for (;;) {
    const Point2 p{rng.uniform(box[0], box[2]), rng.uniform(box[1], box[3])};
    if (contains(d, p)) return p;
  }
}

// Points of C that also lie in D, so that a wrong inclusion shows up as a
// violation rather than an exception.
Point2 random_common(const ConvexDomain& C, const ConvexDomain& D, Rng& rng) {
  for (;;) {
    const Point2 p = random_interior(C, rng);
    if (contains(D, p)) return p;
  }
}

Vec2 random_direction(Rng& rng) { return unit_from_angle(rng.uniform(0.0, kTwoPi)); }

// Slack of |a − b| against tol·(1 + |b|), as a fraction of the allowance.
double agreement(double a, double b, double tol) {
  const double allowed = tol * (1.0 + std::abs(b));
  return (allowed - std::abs(a - b)) / allowed;
}

constexpr double kMcEdgeBudget = 2e8;
constexpr int64_t kMinMcSamples = 2000;

CheckResult labelled(CheckResult r, const char* outer) {
  r.name += std::string(", D = ") + outer;
  return r;
}

ConvexDomain bounding_square(const ConvexDomain& d) {
  const auto b = d.bounding_box();
  return ConvexDomain::polygon({{b[0], b[1]}, {b[2], b[1]}, {b[2], b[3]}, {b[0], b[3]}});
}

}  // namespace

std::string format_check(const CheckResult& c) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s %s  cases=%lld violations=%lld margin=%.3e", c.pass() ? "PASS" : "FAIL",
                c.name.c_str(), static_cast<long long>(c.cases), static_cast<long long>(c.violations), c.margin);
  return buf;
}

bool inscribed_in_unit_disk(const ConvexDomain& d) { return !d.is_polygonal() || d.angle_form(); }

bool is_standard_square(const ConvexDomain& d) {
  if (!d.is_polygonal() || d.angle_form()) return false;
  const auto& v = d.boundary().cartesian_vertices();
  if (v.size() != 4) return false;
  for (const Point2& p : v)
    if (std::abs(p.x) != 1.0 || std::abs(p.y) != 1.0) return false;
  return true;
}

CheckResult check_symmetry(const ConvexDomain& d, int n, uint64_t seed) {
  Rng rng(seed);
  Tally t("metric symmetry d(p,q) = d(q,p) to 1e-12");
  for (int i = 0; i < n; ++i) {
    const Point2 p = random_interior(d, rng), q = random_interior(d, rng);
    t.add(agreement(hilbert_distance(d, p, q), hilbert_distance(d, q, p), 1e-12));
  }
  return t.done();
}

CheckResult check_triangle_inequality(const ConvexDomain& d, int n, uint64_t seed) {
  Rng rng(seed);
  Tally t("triangle inequality d(p,r) <= d(p,q) + d(q,r) + 1e-12");
  for (int i = 0; i < n; ++i) {
    const Point2 p = random_interior(d, rng), q = random_interior(d, rng), r = random_interior(d, rng);
    t.add(hilbert_distance(d, p, q) + hilbert_distance(d, q, r) + 1e-12 - hilbert_distance(d, p, r));
  }
  return t.done();
}

CheckResult check_collinear_additivity(const ConvexDomain& d, int n, uint64_t seed) {
  Rng rng(seed);
  Tally t("collinear additivity d(p,r) = d(p,q) + d(q,r) to 1e-10");
  for (int i = 0; i < n; ++i) {
    const Point2 p = random_interior(d, rng), r = random_interior(d, rng);
    const Point2 q = p + rng.uniform() * (r - p);
    t.add(agreement(hilbert_distance(d, p, q) + hilbert_distance(d, q, r), hilbert_distance(d, p, r), 1e-10));
  }
  return t.done();
}

CheckResult check_linear_invariance(const ConvexDomain& d, int matrices, uint64_t seed) {
  Rng rng(seed);
  Tally t("linear invariance d_MC(Mp,Mq) = d_C(p,q) to 1e-10");
  for (int i = 0; i < matrices; ++i) {
    Matrix2 m{};
    do {
      for (auto& row : m)
        for (double& x : row) x = rng.uniform(-2.0, 2.0);
    } while (std::abs(m[0][0] * m[1][1] - m[0][1] * m[1][0]) < 0.1);
    const ConvexDomain md = linear_image(d, m);
    auto apply = [&m](const Point2& p) {
      return Point2{m[0][0] * p.x + m[0][1] * p.y, m[1][0] * p.x + m[1][1] * p.y};
    };
    for (int k = 0; k < 10; ++k) {
      const Point2 p = random_interior(d, rng), q = random_interior(d, rng);
      t.add(agreement(hilbert_distance(md, apply(p), apply(q)), hilbert_distance(d, p, q), 1e-10));
    }
  }
  return t.done();
}

CheckResult check_klein_distance(int n, uint64_t seed) {
  Rng rng(seed);
  const ConvexDomain disk = ConvexDomain::disk();
  Tally t("Klein disk d(0,p) = atanh|p| to 1e-12");
  for (int i = 0; i < n; ++i) {
    const Point2 p = random_interior(disk, rng);
    const double err = std::abs(hilbert_distance(disk, {0.0, 0.0}, p) - std::atanh(p.norm()));
    t.add((1e-12 - err) / 1e-12);
  }
  return t.done();
}

CheckResult check_distance_monotonicity(const ConvexDomain& C, const ConvexDomain& D, int n, uint64_t seed) {
  Rng rng(seed);
  Tally t("comparison d_C(p,q) >= d_D(p,q) for C in D");
  for (int i = 0; i < n; ++i) {
    const Point2 p = random_common(C, D, rng), q = random_common(C, D, rng);
    const double dc = hilbert_distance(C, p, q);
    t.add(dc - hilbert_distance(D, p, q) + 1e-12 * (1.0 + dc));
  }
  return t.done();
}

CheckResult check_tangent_ball_monotonicity(const ConvexDomain& C, const ConvexDomain& D, int n,
                                            uint64_t seed) {
  Rng rng(seed);
  Tally t("comparison vol B_C(p) <= vol B_D(p) for C in D");
  for (int i = 0; i < n; ++i) {
    const Point2 p = random_common(C, D, rng);
    const double ad = unit_ball_area(D, p);
    t.add((ad * (1.0 + 1e-12) - unit_ball_area(C, p)) / ad);
  }
  return t.done();
}

CheckResult check_equality_case(const ConvexDomain& d, int n, uint64_t seed) {
  Rng rng(seed);
  const ConvexDomain disk = ConvexDomain::disk();
  const Boundary& b = d.boundary();
  Tally t("equality case on antipodal vertex chords, d_C = d_disk to 1e-10");
  for (int i = 0; i < n; ++i) {
    const auto v = static_cast<int64_t>(rng.uniform() * static_cast<double>(b.vertex_count()));
    const Point2 dir = b.vertex(std::min(v, b.vertex_count() - 1));
    const Point2 p = rng.uniform(-0.99, 0.99) * dir, q = rng.uniform(-0.99, 0.99) * dir;
    t.add(agreement(hilbert_distance(d, p, q), hilbert_distance(disk, p, q), 1e-10));
  }
  return t.done();
}

CheckResult check_square_unit_ball(int n, uint64_t seed) {
  Rng rng(seed);
  const ConvexDomain sq = ConvexDomain::polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
  Tally t("square 2(1-x^2)(1-y^2) <= vol B(p) <= 4(1-x^2)(1-y^2), center 4 to 1e-9");
  t.add((1e-9 - std::abs(unit_ball_area(sq, {0.0, 0.0}) - 4.0)) / 1e-9);
  for (int i = 0; i < n; ++i) {
    const Point2 p{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    if (!contains(sq, p)) continue;
    const double w = (1.0 - p.x * p.x) * (1.0 - p.y * p.y);
    const double a = unit_ball_area(sq, p);
    t.add(std::min(a - 2.0 * w, 4.0 * w - a) / (4.0 * w) + 1e-12);
  }
  return t.done();
}

CheckResult check_klein_volume(const std::vector<double>& radii, const QuadratureSpec& q) {
  const ConvexDomain disk = ConvexDomain::disk();
  Tally t("Klein disk volume = 2 pi (cosh R - 1) to 0.1%");
  for (double R : radii) {
    const double exact = kTwoPi * (std::cosh(R) - 1.0);
    t.add((1e-3 * exact - std::abs(ball_volume(disk, R, q).value - exact)) / (1e-3 * exact));
  }
  return t.done();
}

CheckResult check_small_ball(const ConvexDomain& d, const QuadratureSpec& q) {
  constexpr double R = 1e-3;
  Tally t("small ball mu(B(0,1e-3)) / (pi R^2) in [0.99, 1.01]");
  const double ratio = ball_volume(d, R, q).value / (kPi * R * R);
  t.add((0.01 - std::abs(ratio - 1.0)) / 0.01);
  return t.done();
}

CheckResult check_quadrature_vs_mc(const ConvexDomain& d, const std::vector<double>& radii,
                                   const QuadratureSpec& q) {
  Tally t("quadrature vs Monte Carlo within 3 sigma");
  for (double R : radii) {
    const MeasureResult quad = ball_volume(d, R, q);
    const MeasureResult mc = ball_volume_mc(d, R, q);
    const double allowed = 3.0 * mc.error_estimate + quad.error_estimate;
    t.add((allowed - std::abs(quad.value - mc.value)) / allowed);
  }
  return t.done();
}

CheckResult check_sector_additivity(const ConvexDomain& d, double R, int pieces, uint64_t seed,
                                    const QuadratureSpec& q) {
  Rng rng(seed);
  std::vector<double> cuts;
  const double start = rng.uniform(0.0, kTwoPi);
  for (int i = 1; i < pieces; ++i) cuts.push_back(start + rng.uniform(0.0, kTwoPi));
  std::sort(cuts.begin(), cuts.end());
  cuts.insert(cuts.begin(), start);
  cuts.push_back(start + kTwoPi);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    sum += sector_ball_volume(d, R, cuts[i], cuts[i + 1], std::nullopt, q).value;
  const double full = ball_volume(d, R, q).value;
  Tally t("sector decomposition sums to the ball volume to 1e-8");
  t.add((1e-8 * full - std::abs(sum - full)) / (1e-8 * full));
  return t.done();
}

CheckResult check_volume_inequality(const ConvexDomain& d, const std::vector<double>& radii,
                                    int points_per_radius, uint64_t seed, const QuadratureSpec& q) {
  Rng rng(seed);
  Tally t("vol B(0,R) <= e^{8R} vol B(p) for p in B(0,R)");
  for (double R : radii) {
    const double vol = lebesgue_ball_area(d, R, q).value;
    for (int i = 0; i < points_per_radius; ++i) {
      const Vec2 u = random_direction(rng);
      const Point2 p = ball_radial_point(d, {0.0, 0.0}, u, rng.uniform() * R).s * u;
      const double bound = std::exp(8.0 * R) * unit_ball_area(d, p);
      t.add((bound - vol) / bound);
    }
  }
  return t.done();
}

CheckResult check_sector_lemma(const ConvexDomain& d, const std::vector<double>& radii, int angles,
                               uint64_t seed, const QuadratureSpec& q) {
  Rng rng(seed);
  std::vector<double> a(static_cast<std::size_t>(angles));
  for (double& x : a) x = rng.uniform(0.0, kTwoPi);
  std::sort(a.begin(), a.end());
  const std::size_t k = a.size();
  const double unit_vol = lebesgue_ball_area(d, 1.0, q).value;
  Tally t("sector lemma mu(B(0,R) in A0B) <= pi e^{8R} / vol B(0,1) * angle / 2");
  for (double R : radii) {
    // piece[i] covers [a_i, a_{i+1}], the last one wrapping around.
    std::vector<double> piece(k);
    for (std::size_t i = 0; i < k; ++i) {
      const double hi = i + 1 < k ? a[i + 1] : a[0] + kTwoPi;
      piece[i] = sector_ball_volume(d, R, a[i], hi, std::nullopt, q).value;
    }
    for (std::size_t i = 0; i < k; ++i) {
      double mu = 0.0, angle = 0.0;
      for (std::size_t step = 1; step < k; ++step) {
        const std::size_t j = (i + step - 1) % k;
        mu += piece[j];
        angle += (j + 1 < k ? a[j + 1] : a[0] + kTwoPi) - a[j];
        if (angle > kPi) break;
        const double bound = kPi * std::exp(8.0 * R) / unit_vol * angle / 2.0;
        t.add((bound - mu) / bound);
      }
    }
  }
  return t.done();
}

namespace {

struct Quadrant {
  Point2 P, Q;
  ConvexDomain T;
};

Quadrant quadrant(const ConvexDomain& d, int64_t edge) {
  const Boundary& b = d.boundary();
  if (!b.centrally_symmetric())
    throw Error(ErrorCode::kInvalidArgument, "the triangle lemma needs a centrally symmetric polygon");
  const Point2 P = b.vertex(edge), Q = b.vertex(b.next(edge));
  return {P, Q, ConvexDomain::polygon({P, Q, -1.0 * P, -1.0 * Q})};
}

}  // namespace

CheckResult check_triangle_distances(const ConvexDomain& d, int64_t edge, int n, uint64_t seed) {
  Rng rng(seed);
  const Quadrant qd = quadrant(d, edge);
  Tally t("triangle lemma d_C(0,p) = d_T(0,p) on P0Q to 1e-10");
  for (int i = 0; i < n; ++i) {
    double u = rng.uniform(), v = rng.uniform();
    if (u + v > 1.0) u = 1.0 - u, v = 1.0 - v;
    const Point2 p = u * qd.P + v * qd.Q;
    if (!contains(qd.T, p)) continue;
    const Point2 o{0.0, 0.0};
    t.add(agreement(hilbert_distance(d, o, p), hilbert_distance(qd.T, o, p), 1e-10));
  }
  return t.done();
}

CheckResult check_triangle_volume(const ConvexDomain& d, int64_t edge, const std::vector<double>& radii,
                                  const QuadratureSpec& q) {
  const Quadrant qd = quadrant(d, edge);
  const EdgeLine line = d.boundary().edge_line(edge);
  const double a = std::atan2(qd.P.y, qd.P.x);
  double b = std::atan2(qd.Q.y, qd.Q.x);
  while (b <= a) b += kTwoPi;
  Tally t("triangle lemma mu(B(0,R) in P0Q) <= 2 pi R^2");
  for (double R : radii) {
    const double mu = sector_ball_volume(d, R, a, b, CapLine{line.normal, line.offset}, q).value;
    const double bound = kTwoPi * R * R;
    t.add((bound - mu) / bound);
  }
  return t.done();
}

CheckResult check_square_volume(const std::vector<double>& radii, const QuadratureSpec& q) {
  const ConvexDomain sq = ConvexDomain::polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
  Tally t("square mu(B(0,R)) <= 2 pi R^2");
  for (double R : radii) {
    const double bound = kTwoPi * R * R;
    t.add((bound - ball_volume(sq, R, q).value) / bound);
  }
  return t.done();
}

std::vector<CheckResult> verify_domain(const ConvexDomain& d, const VerifyOptions& o) {
  QuadratureSpec q;
  q.threads = o.threads;
  q.seed = o.seed;
  q.mc_samples = o.mc_samples;
  if (d.is_polygonal()) {
    // Each sample costs one exact tangent ball, linear in the vertex count.
    const double n = static_cast<double>(d.boundary().vertex_count());
    q.mc_samples = std::clamp<int64_t>(static_cast<int64_t>(kMcEdgeBudget / n), kMinMcSamples, o.mc_samples);
  }
  // One independent stream per check.
  auto seed = [&o](uint64_t k) { return o.seed * 0x9E3779B97F4A7C15ull + k; };
  std::vector<CheckResult> out;
  out.push_back(check_symmetry(d, 1000, seed(1)));
  out.push_back(check_triangle_inequality(d, 1000, seed(2)));
  out.push_back(check_collinear_additivity(d, 1000, seed(3)));
  if (d.is_polygonal()) {
    out.push_back(check_linear_invariance(d, 100, seed(4)));
    out.push_back(labelled(check_distance_monotonicity(d, bounding_square(d), 1000, seed(5)), "bounding box"));
    out.push_back(labelled(check_tangent_ball_monotonicity(d, bounding_square(d), 200, seed(6)), "bounding box"));
  } else {
    out.push_back(check_klein_distance(10000, seed(7)));
    out.push_back(check_klein_volume({0.5, 1.0, 2.0}, q));
  }
  if (inscribed_in_unit_disk(d) && d.is_polygonal()) {
    const ConvexDomain disk = ConvexDomain::disk();
    out.push_back(labelled(check_distance_monotonicity(d, disk, 1000, seed(8)), "unit disk"));
    out.push_back(labelled(check_tangent_ball_monotonicity(d, disk, 200, seed(9)), "unit disk"));
    if (d.centrally_symmetric()) out.push_back(check_equality_case(d, 1000, seed(10)));
  }
  if (is_standard_square(d)) {
    out.push_back(check_square_unit_ball(10000, seed(11)));
    out.push_back(check_square_volume({0.5, 1.0, 2.0, 4.0}, q));
  }
  if (d.is_polygonal() && d.centrally_symmetric()) {
    Rng rng(seed(12));
    const int64_t n = d.boundary().vertex_count();
    const auto edge = std::min<int64_t>(n - 1, static_cast<int64_t>(rng.uniform() * static_cast<double>(n)));
    out.push_back(check_triangle_distances(d, edge, 1000, seed(13)));
    out.push_back(check_triangle_volume(d, edge, {0.5, 1.0, 2.0, 4.0}, q));
  }
  out.push_back(check_small_ball(d, q));
  out.push_back(check_quadrature_vs_mc(d, {0.5, 1.5}, q));
  out.push_back(check_sector_additivity(d, 1.0, 5, seed(14), q));
  out.push_back(check_volume_inequality(d, {0.5, 1.0, 2.0}, 100, seed(15), q));
  if (inscribed_in_unit_disk(d)) out.push_back(check_sector_lemma(d, {0.5, 1.0, 2.0}, 8, seed(16), q));
  return out;
}

}  // namespace hilbert
