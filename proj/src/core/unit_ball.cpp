#include "unit_ball.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "metric.hpp"
#include "quadrature.hpp"

namespace hilbert {

namespace {

// Area of the polar of ½(K − K) for the counterclockwise points k[0..m),
// with k sized 2m + 1. False when a support value comes out non-positive.
bool minkowski_polar(Vec2* k, std::size_t m, double& area, std::vector<Vec2>* vertices) {
  std::size_t lo = 0;
  std::size_t hi = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (k[i].y < k[lo].y || (k[i].y == k[lo].y && k[i].x < k[lo].x)) lo = i;
    if (k[i].y > k[hi].y || (k[i].y == k[hi].y && k[i].x > k[hi].x)) hi = i;
  }
  // Second copy so that cyclic walks need no index wrapping.
  std::copy(k, k + m, k + m);
  k[2 * m] = k[0];

  // Minkowski sum of K and −K, both walked from their lowest vertex so that
  // edge directions come in increasing polar angle.
  const Vec2* P = k + lo;
  const Vec2* Q = k + hi;
  auto lower_half = [](const Vec2& d) { return d.y < 0.0 || (d.y == 0.0 && d.x < 0.0); };

  double area2 = 0.0;
  Vec2 first{};
  Vec2 prev{};
  bool have_prev = false;
  if (vertices) vertices->clear();
  std::size_t ip = 0;
  std::size_t iq = 0;
  while (ip < m || iq < m) {
    const Vec2 corner = 0.5 * (P[ip] - Q[iq]);
    const Vec2 dp = ip < m ? P[ip + 1] - P[ip] : Vec2{};
    const Vec2 dq = iq < m ? Q[iq] - Q[iq + 1] : Vec2{};
    bool take_p = false;
    bool take_q = false;
    if (ip == m) {
      take_q = true;
    } else if (iq == m) {
      take_p = true;
    } else if (lower_half(dp) != lower_half(dq)) {
      take_p = !lower_half(dp);
      take_q = !take_p;
    } else {
      const double c = cross(dp, dq);
      take_p = c >= 0.0;
      take_q = c <= 0.0;
    }
    Vec2 d{};
    if (take_p) d += dp, ++ip;
    if (take_q) d += dq, ++iq;
    if (d.x == 0.0 && d.y == 0.0) continue;
    // Supporting line of this edge of L, turned into a vertex of its polar.
    const double offset = cross(corner, d);
    if (!(offset > 0.0)) return false;
    const double io = 1.0 / offset;
    const Vec2 y{d.y * io, -d.x * io};
    if (vertices) vertices->push_back(y);
    if (have_prev) {
      area2 += cross(prev, y);
    } else {
      first = y;
      have_prev = true;
    }
    prev = y;
  }
  area2 += cross(prev, first);
  area = 0.5 * area2;
  return true;
}

// Graham pass over points already in angular order around an interior point:
// keeps the strictly convex ones in place and returns their count.
std::size_t convex_subsequence(Vec2* k, std::size_t m) {
  std::size_t lo = 0;
  for (std::size_t i = 1; i < m; ++i)
    if (k[i].y < k[lo].y || (k[i].y == k[lo].y && k[i].x < k[lo].x)) lo = i;
  std::rotate(k, k + lo, k + m);
  std::size_t top = 0;
  for (std::size_t i = 0; i <= m; ++i) {
    const Vec2 v = k[i % m];
    while (top >= 2 && cross(k[top - 1] - k[top - 2], v - k[top - 1]) <= 0.0) --top;
    if (i < m) k[top++] = v;
  }
  return top;
}

}  // namespace

ScaledBall scaled_unit_ball(std::span<const double> a, std::span<const double> b,
                            std::span<const double> h, std::vector<Vec2>* vertices) {
  const std::size_t m = h.size();
  if (m < 3) throw Error(ErrorCode::kDegenerateInput, "unit ball needs at least 3 edges");
  thread_local std::vector<Vec2> kbuf;
  thread_local std::vector<double> inv_h;
  kbuf.resize(2 * m + 1);
  inv_h.resize(m);
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    inv_h[i] = 1.0 / h[i];
    sx = std::max(sx, std::abs(a[i]) * inv_h[i]);
    sy = std::max(sy, std::abs(b[i]) * inv_h[i]);
  }
  const double isx = 1.0 / sx, isy = 1.0 / sy;
  Vec2* k = kbuf.data();
  for (std::size_t i = 0; i < m; ++i) k[i] = {a[i] * inv_h[i] * isx, b[i] * inv_h[i] * isy};

  double area = 0.0;
  if (!minkowski_polar(k, m, area, vertices)) {
    // Normals closer than the rounding noise of their differences leave K
    // numerically non-convex; dropping the reflex points costs only noise.
    const std::size_t mk = convex_subsequence(k, m);
    if (mk < 3 || !minkowski_polar(k, mk, area, vertices))
      throw Error(ErrorCode::kDegenerateInput, "degenerate tangent unit ball");
  }
  return {area, sx, sy};
}

namespace {

void require_interior(const ConvexDomain& domain, const Point2& p) {
  if (!contains(domain, p)) throw Error(ErrorCode::kPointOutsideDomain, "point is not inside the domain");
}

// Edge data at p in the frame of the nearest edge line.
struct PointFrame {
  std::vector<double> a, b, h;
  Vec2 tangent, inward;
};

PointFrame frame_at(const Boundary& bd, const Point2& p) {
  const auto n = static_cast<std::size_t>(bd.vertex_count());
  PointFrame f;
  f.a.resize(n);
  f.b.resize(n);
  f.h.resize(n);
  std::vector<EdgeLine> lines(n);
  std::size_t anchor = 0;
  for (std::size_t i = 0; i < n; ++i) {
    lines[i] = bd.edge_line(static_cast<int64_t>(i));
    f.h[i] = lines[i].offset - dot(lines[i].normal, p);
    if (!(f.h[i] > 0.0)) throw Error(ErrorCode::kPointOutsideDomain, "point is not inside the domain");
    if (f.h[i] < f.h[anchor]) anchor = i;
  }
  const Vec2 na = lines[anchor].normal;
  f.tangent = {-na.y, na.x};
  f.inward = -na;
  if (bd.on_circle()) {
    // Normal directions relative to the anchor's, from vertex angle
    // differences that are exact inside a run.
    const auto ia = static_cast<int64_t>(anchor);
    const double half_a = 0.5 * bd.edge_span(ia);
    for (std::size_t i = 0; i < n; ++i) {
      const auto ii = static_cast<int64_t>(i);
      const double delta = bd.vertex_angle_diff(ii, ia) + 0.5 * bd.edge_span(ii) - half_a;
      f.a[i] = std::sin(delta);
      f.b[i] = -std::cos(delta);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      f.a[i] = dot(lines[i].normal, f.tangent);
      f.b[i] = dot(lines[i].normal, f.inward);
    }
  }
  f.a[anchor] = 0.0;
  f.b[anchor] = -1.0;
  return f;
}

}  // namespace

UnitBallPolygon unit_ball(const ConvexDomain& domain, const Point2& p) {
  const Boundary& bd = domain.boundary();
  require_interior(domain, p);
  const PointFrame f = frame_at(bd, p);
  std::vector<Vec2> scaled;
  const ScaledBall sb = scaled_unit_ball(f.a, f.b, f.h, &scaled);
  UnitBallPolygon out;
  out.vertices.reserve(scaled.size());
  for (const Vec2& y : scaled) {
    // The kernel's vertices can stray where edge normals are closer than
    // rounding noise; the chord norm puts each back on the sphere.
    const Vec2 v = (y.x / sb.sx) * f.tangent + (y.y / sb.sy) * f.inward;
    out.vertices.push_back(v / finsler_norm(domain, p, v));
  }
  out.area = (sb.area / sb.sx) / sb.sy;
  return out;
}

double unit_ball_area(const ConvexDomain& domain, const Point2& p) {
  require_interior(domain, p);
  if (!domain.is_polygonal()) {
    const double r = p.norm();
    const double w = (1.0 - r) * (1.0 + r);
    return kPi * w * std::sqrt(w);
  }
  const PointFrame f = frame_at(domain.boundary(), p);
  const ScaledBall sb = scaled_unit_ball(f.a, f.b, f.h);
  return (sb.area / sb.sx) / sb.sy;
}

double busemann_density(const ConvexDomain& domain, const Point2& p) {
  return kPi / unit_ball_area(domain, p);
}

double unit_ball_area_quadrature(const ConvexDomain& domain, const Point2& p, double rel_tol) {
  require_interior(domain, p);
  // F is smooth between directions pointing at vertices (forward or backward).
  std::vector<double> breaks{0.0, kTwoPi};
  if (domain.is_polygonal()) {
    const Boundary& bd = domain.boundary();
    for (int64_t i = 0; i < bd.vertex_count(); ++i) {
      const Vec2 d = bd.vertex(i) - p;
      const double t = std::atan2(d.y, d.x);
      breaks.push_back(wrap_angle(t));
      breaks.push_back(wrap_angle(t + kPi));
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const KronrodRule& rule = gauss_kronrod15();
  auto integrand = [&](double theta) {
    const double F = finsler_norm(domain, p, unit_from_angle(theta));
    return 0.5 / (F * F);
  };
  auto panel = [&](double lo, double hi, double& err) {
    const double c = 0.5 * (lo + hi), r = 0.5 * (hi - lo);
    double k = 0.0, g = 0.0;
    for (std::size_t j = 0; j < 15; ++j) {
      const double v = integrand(c + r * rule.nodes[j]);
      k += rule.kronrod_weights[j] * v;
      g += rule.gauss_weights[j] * v;
    }
    err = std::abs(k - g) * r;
    return k * r;
  };
  double coarse = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    double e = 0.0;
    coarse += panel(breaks[i], breaks[i + 1], e);
  }
  const double tol = rel_tol * std::abs(coarse) / static_cast<double>(breaks.size());
  std::function<double(double, double, int)> adapt = [&](double lo, double hi, int depth) {
    double e = 0.0;
    const double v = panel(lo, hi, e);
    if (e <= tol || depth >= 40) return v;
    const double mid = 0.5 * (lo + hi);
    return adapt(lo, mid, depth + 1) + adapt(mid, hi, depth + 1);
  };
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1] > breaks[i]) total += adapt(breaks[i], breaks[i + 1], 0);
  }
  return total;
}

}  // namespace hilbert
