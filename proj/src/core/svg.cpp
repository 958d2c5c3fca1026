#include "svg.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "metric.hpp"
#include "unit_ball.hpp"

namespace hilbert {

namespace {

constexpr int kArcSamples = 32;

std::vector<Point2> outline(const ConvexDomain& d) {
  std::vector<Point2> out;
  if (!d.is_polygonal()) {
    for (int i = 0; i < 720; ++i) out.push_back(unit_from_angle(kTwoPi * i / 720.0));
    return out;
  }
  const Boundary& b = d.boundary();
  for (int64_t i = 0; i < b.vertex_count(); ++i) {
    out.push_back(b.vertex(i));
    if (b.on_circle() && b.edge_is_arc(i)) {
      const double a = b.vertex_angle(i), span = b.edge_span(i);
      for (int k = 1; k < kArcSamples; ++k) out.push_back(unit_from_angle(a + span * k / kArcSamples));
    }
  }
  return out;
}

std::vector<Point2> tangent_ball(const ConvexDomain& d, const Point2& p, int samples) {
  if (d.is_polygonal()) return unit_ball(d, p).vertices;
  std::vector<Point2> out;
  for (int i = 0; i < samples; ++i) {
    const Vec2 u = unit_from_angle(kTwoPi * i / samples);
    out.push_back(u / finsler_norm(d, p, u));
  }
  return out;
}

std::string points_attr(const std::vector<Point2>& pts) {
  std::string s;
  char buf[64];
  for (const Point2& p : pts) {
    std::snprintf(buf, sizeof buf, "%s%.6g,%.6g", s.empty() ? "" : " ", p.x, p.y);
    s += buf;
  }
  return s;
}

}  // namespace

std::string render_svg(const ConvexDomain& domain, const SvgOptions& o) {
  if (o.sphere_samples < 3) throw Error(ErrorCode::kInvalidArgument, "need at least 3 sphere samples");
  if (!(o.radius > 0.0)) throw Error(ErrorCode::kInvalidArgument, "sphere radius must be positive");
  if (!contains(domain, o.center) || !contains(domain, o.ball_point))
    throw Error(ErrorCode::kPointOutsideDomain, "sphere center and ball point must lie inside the domain");

  std::vector<double> angles(static_cast<std::size_t>(o.sphere_samples));
  for (std::size_t i = 0; i < angles.size(); ++i) angles[i] = kTwoPi * static_cast<double>(i) / angles.size();
  const auto sphere = metric_sphere_polyline(domain, o.center, o.radius, angles);
  auto ball = tangent_ball(domain, o.ball_point, o.sphere_samples);
  for (Point2& v : ball) v = o.ball_point + o.ball_scale * v;

  const auto box = domain.bounding_box();
  const double pad = 0.05 * std::max(box[2] - box[0], box[3] - box[1]);
  const double x0 = box[0] - pad, y0 = box[1] - pad;
  const double w = box[2] - box[0] + 2 * pad, h = box[3] - box[1] + 2 * pad;
  const double stroke = 0.004 * std::max(w, h);

  std::string s;
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%d\" height=\"%d\" "
                "viewBox=\"%.6g %.6g %.6g %.6g\">\n"
                "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"%.4g\">\n",
                o.size_px, static_cast<int>(std::lround(o.size_px * h / w)), x0, -(y0 + h), w, h, stroke);
  s += buf;
  s += "<polygon id=\"boundary\" stroke=\"black\" points=\"" + points_attr(outline(domain)) + "\"/>\n";
  s += "<polygon id=\"sphere\" stroke=\"#1f77b4\" points=\"" + points_attr(sphere) + "\"/>\n";
  s += "<polygon id=\"unit-ball\" stroke=\"#d62728\" points=\"" + points_attr(ball) + "\"/>\n";
  std::snprintf(buf, sizeof buf, "<circle cx=\"%.6g\" cy=\"%.6g\" r=\"%.4g\" fill=\"black\"/>\n", o.center.x,
                o.center.y, 1.5 * stroke);
  s += buf;
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace hilbert
