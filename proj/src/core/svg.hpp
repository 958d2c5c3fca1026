#pragma once

#include <string>

#include "geometry.hpp"

namespace hilbert {

struct SvgOptions {
  double radius{1.0};            // metric sphere S(center, radius)
  Point2 center{0.0, 0.0};
  int sphere_samples{512};
  Point2 ball_point{0.0, 0.0};   // where the tangent unit ball is drawn
  double ball_scale{0.25};       // drawn as ball_point + ball_scale·v
  int size_px{640};
};

/// Static SVG 1.1 picture: domain boundary, metric sphere polyline and the
/// tangent unit ball at `ball_point`.
std::string render_svg(const ConvexDomain& domain, const SvgOptions& o);

}  // namespace hilbert
