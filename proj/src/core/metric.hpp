#pragma once

#include <span>
#include <vector>

#include "geometry.hpp"

namespace hilbert {

double hilbert_distance(const ConvexDomain& domain, const Point2& p, const Point2& q);

/// ½(1/t⁻ + 1/t⁺) for the chord through p along v; zero for v = 0.
double finsler_norm(const ConvexDomain& domain, const Point2& p, const Vec2& v);

struct RadialSolve {
  double s{0.0};        // Euclidean distance from the center
  double ds_drho{0.0};  // derivative with respect to the Hilbert radius
  double gap{0.0};      // t⁺ − s, computed without cancellation
};

/// Point at Hilbert distance `rho` from the center along a chord with backward
/// and forward hit parameters t_minus, t_plus (direction of unit length).
/// Only e^{−2ρ} appears, so any finite ρ is safe.
RadialSolve radial_from_chord(double t_minus, double t_plus, double rho);

/// Throws PointOutsideDomain / ZeroDirection.
RadialSolve ball_radial_point(const ConvexDomain& domain, const Point2& center, const Vec2& u,
                              double R);

std::vector<Point2> metric_sphere_polyline(const ConvexDomain& domain, const Point2& center,
                                           double R, std::span<const double> angles);

}  // namespace hilbert
