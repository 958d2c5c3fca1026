#include "metric.hpp"

#include <cmath>

namespace hilbert {

namespace {

void require_interior(const ConvexDomain& domain, const Point2& p) {
  if (!contains(domain, p)) throw Error(ErrorCode::kPointOutsideDomain, "point is not inside the domain");
}

}  // namespace

double hilbert_distance(const ConvexDomain& domain, const Point2& p_in, const Point2& q_in) {
  require_interior(domain, p_in);
  require_interior(domain, q_in);
  // One fixed evaluation order makes d(p, q) and d(q, p) the same number.
  const bool swap = q_in.x < p_in.x || (q_in.x == p_in.x && q_in.y < p_in.y);
  const Point2& p = swap ? q_in : p_in;
  const Point2& q = swap ? p_in : q_in;
  const Vec2 d = q - p;
  const double len = d.norm();
  if (len == 0.0) return 0.0;
  const Vec2 u = d / len;
  const Chord c = chord(domain, p, u);
  if (len < 1e-15) return 0.5 * (1.0 / c.t_minus + 1.0 / c.t_plus) * len;
  // ½ ln( (t⁻+ℓ)/t⁻ · t⁺/(t⁺−ℓ) ). When q is close to the boundary t⁺ − ℓ
  // cancels, so the gap is measured from q itself; the clamp keeps rounding
  // from ever putting q on the boundary.
  double tail = c.t_plus - len;
  double t_plus = c.t_plus;
  if (tail < 0.5 * len) {
    tail = forward_hit(domain, q, u);
    t_plus = len + tail;
  }
  tail = std::max(tail, t_plus * 1e-300);
  return 0.5 * (std::log1p(len / c.t_minus) - std::log(tail / t_plus));
}

double finsler_norm(const ConvexDomain& domain, const Point2& p, const Vec2& v) {
  require_interior(domain, p);
  if (v.x == 0.0 && v.y == 0.0) return 0.0;
  const Chord c = chord(domain, p, v);
  return 0.5 * (1.0 / c.t_minus + 1.0 / c.t_plus);
}

RadialSolve radial_from_chord(double t_minus, double t_plus, double rho) {
  const double e = std::exp(-2.0 * rho);
  const double denom = t_plus * e + t_minus;
  RadialSolve r;
  r.gap = t_plus * (t_plus + t_minus) * e / denom;
  // Near the boundary t⁺ − gap is the better rounded form and never exceeds t⁺.
  r.s = r.gap < 0.5 * t_plus ? t_plus - r.gap
                             : -t_minus * t_plus * std::expm1(-2.0 * rho) / denom;
  r.ds_drho = 2.0 * t_minus * r.gap / denom;
  return r;
}

RadialSolve ball_radial_point(const ConvexDomain& domain, const Point2& center, const Vec2& u,
                              double R) {
  if (!(R >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "radius must be nonnegative");
  if (u.x == 0.0 && u.y == 0.0) throw Error(ErrorCode::kZeroDirection, "zero direction");
  const Vec2 unit = u / u.norm();
  const Chord c = chord(domain, center, unit);
  return radial_from_chord(c.t_minus, c.t_plus, R);
}

std::vector<Point2> metric_sphere_polyline(const ConvexDomain& domain, const Point2& center,
                                           double R, std::span<const double> angles) {
  std::vector<Point2> out;
  out.reserve(angles.size());
  for (double a : angles) {
    const Vec2 u = unit_from_angle(a);
    out.push_back(center + ball_radial_point(domain, center, u, R).s * u);
  }
  return out;
}

}  // namespace hilbert
