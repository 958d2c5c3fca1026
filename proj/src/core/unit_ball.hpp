#pragma once

#include <span>
#include <vector>

#include "geometry.hpp"

namespace hilbert {

/// Tangent unit ball {v : F(p, v) < 1} of a polygonal domain at p.
struct UnitBallPolygon {
  std::vector<Vec2> vertices;  // counterclockwise
  double area{0.0};
};

/// Unit ball in a frame aligned with one edge and rescaled per axis.
///
/// Edge i has outward normal a_i·ê + b_i·n̂ (ê, n̂ orthonormal) and distance
/// h_i > 0 from the base point. With k_i = (a_i, b_i)/h_i the norm is the
/// support function of L = ½(K − K), K = conv{k_i}, and the ball is the polar
/// of L. Coordinates are divided by sx = max|a_i|/h_i and sy = max|b_i|/h_i
/// before anything is combined, so the true area is area / (sx·sy) even when
/// that product is outside double range.
struct ScaledBall {
  double area{0.0};
  double sx{1.0};
  double sy{1.0};
};

/// Edges must be given in counterclockwise order. When `vertices` is not null
/// it receives the scaled ball vertices (multiply x by 1/sx, y by 1/sy).
ScaledBall scaled_unit_ball(std::span<const double> a, std::span<const double> b,
                            std::span<const double> h, std::vector<Vec2>* vertices = nullptr);

/// Throws PointOutsideDomain / NotPolygonal.
UnitBallPolygon unit_ball(const ConvexDomain& domain, const Point2& p);

/// Exact for polygons; π(1 − ‖p‖²)^{3/2} on the disk.
double unit_ball_area(const ConvexDomain& domain, const Point2& p);

/// ½∮ F(p, u_θ)⁻² dθ by adaptive Gauss–Kronrod, split at vertex directions.
/// Independent of the exact construction; used to cross-check it.
double unit_ball_area_quadrature(const ConvexDomain& domain, const Point2& p,
                                 double rel_tol = 1e-12);

/// π / area of the tangent unit ball.
double busemann_density(const ConvexDomain& domain, const Point2& p);

}  // namespace hilbert
