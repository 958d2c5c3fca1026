#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hilbert {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kPointOutsideDomain: return "PointOutsideDomain";
    case ErrorCode::kZeroDirection: return "ZeroDirection";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kNotPolygonal: return "NotPolygonal";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInvalidSequence: return "InvalidSequence";
    case ErrorCode::kBadArity: return "BadArity";
    case ErrorCode::kEmptyProfile: return "EmptyProfile";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

namespace {

double wrap_pm(double a) {
  a = std::remainder(a, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  return a;
}

// Angle in [0, 2π) measured counterclockwise from `from` to `to` (both wrapped).
double ccw_gap(double from, double to) {
  double d = to - from;
  if (d <= 0.0) d += kTwoPi;
  return d;
}

[[noreturn]] void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace

// ---------------------------------------------------------------------------
// Boundary

Boundary Boundary::from_vertices(std::vector<Point2> ccw) {
  const auto n = static_cast<int64_t>(ccw.size());
  if (n < 3) fail(ErrorCode::kDegenerateInput, "polygon needs at least 3 vertices");
  for (const auto& v : ccw) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y))
      fail(ErrorCode::kInvalidArgument, "non-finite vertex");
  }
  Boundary b;
  b.on_circle_ = false;
  b.vertices_ = std::move(ccw);
  b.vertex_count_ = n;
  b.lines_.resize(static_cast<std::size_t>(n));
  for (int64_t i = 0; i < n; ++i) {
    const Vec2& a = b.vertices_[static_cast<std::size_t>(i)];
    const Vec2& c = b.vertices_[static_cast<std::size_t>(b.next(i))];
    const Vec2& d = b.vertices_[static_cast<std::size_t>(b.next(b.next(i)))];
    const Vec2 e = c - a;
    const double len = e.norm();
    if (len == 0.0) fail(ErrorCode::kDegenerateInput, "repeated polygon vertex");
    if (cross(e, d - c) <= 0.0)
      fail(ErrorCode::kDegenerateInput, "polygon is not strictly convex and counterclockwise");
    const Vec2 normal{e.y / len, -e.x / len};
    b.lines_[static_cast<std::size_t>(i)] = {normal, dot(normal, a)};
    if (!(b.lines_[static_cast<std::size_t>(i)].offset > 0.0))
      fail(ErrorCode::kDegenerateInput, "origin is not strictly inside the polygon");
  }
  b.finish();
  return b;
}

Boundary Boundary::from_runs(std::vector<AngleRun> runs) {
  if (runs.empty()) fail(ErrorCode::kDegenerateInput, "empty angle list");
  Boundary b;
  b.on_circle_ = true;
  b.runs_ = std::move(runs);
  int64_t total = 0;
  double last = -1.0;
  for (std::size_t r = 0; r < b.runs_.size(); ++r) {
    const AngleRun& run = b.runs_[r];
    if (run.count < 1) fail(ErrorCode::kInvalidArgument, "run with no vertices");
    if (!std::isfinite(run.start) || !std::isfinite(run.step))
      fail(ErrorCode::kInvalidArgument, "non-finite angle");
    if (run.count > 1 && !(run.step > 0.0 && run.step < kPi))
      fail(ErrorCode::kInvalidArgument, "run step must lie in (0, π)");
    if (!(run.start > last) || run.start < 0.0)
      fail(ErrorCode::kInvalidArgument, "angles must be strictly increasing in [0, 2π)");
    last = run.start + static_cast<double>(run.count - 1) * run.step;
    if (last >= kTwoPi) fail(ErrorCode::kInvalidArgument, "angles must lie in [0, 2π)");
    b.run_offsets_.push_back(total);
    total += run.count;
  }
  b.vertex_count_ = total;
  if (total < 3) fail(ErrorCode::kDegenerateInput, "polygon needs at least 3 vertices");
  // Consecutive gaps must stay below π so that the origin is strictly inside.
  for (std::size_t r = 0; r < b.runs_.size(); ++r) {
    const AngleRun& run = b.runs_[r];
    const double end = run.start + static_cast<double>(run.count - 1) * run.step;
    const double next_start = b.runs_[(r + 1) % b.runs_.size()].start;
    if (!(ccw_gap(end, next_start) < kPi))
      fail(ErrorCode::kDegenerateInput, "origin is not strictly inside the polygon");
  }
  b.finish();
  return b;
}

void Boundary::finish() {
  symmetric_ = false;
  if (vertex_count_ % 2 != 0) return;
  const int64_t half = vertex_count_ / 2;
  if (on_circle_) {
    if (runs_.size() % 2 != 0) return;
    const std::size_t hr = runs_.size() / 2;
    for (std::size_t r = 0; r < hr; ++r) {
      const AngleRun& a = runs_[r];
      const AngleRun& c = runs_[r + hr];
      if (a.count != c.count || a.arc_after != c.arc_after) return;
      if (std::abs(c.start - a.start - kPi) > kAngleDedupTolerance) return;
      if (a.count > 1 && std::abs(c.step - a.step) > 1e-15 * a.step) return;
    }
    symmetric_ = true;
  } else {
    double scale = 0.0;
    for (const auto& v : vertices_) scale = std::max(scale, v.norm());
    for (int64_t i = 0; i < half; ++i) {
      const Vec2 s = vertices_[static_cast<std::size_t>(i)] +
                     vertices_[static_cast<std::size_t>(i + half)];
      if (s.norm() > 1e-14 * scale) return;
    }
    symmetric_ = true;
  }
}

std::pair<std::size_t, int64_t> Boundary::run_of(int64_t v) const {
  auto it = std::upper_bound(run_offsets_.begin(), run_offsets_.end(), v);
  const auto r = static_cast<std::size_t>(std::distance(run_offsets_.begin(), it) - 1);
  return {r, v - run_offsets_[r]};
}

double Boundary::vertex_angle(int64_t i) const {
  const auto [r, l] = run_of(i);
  const AngleRun& run = runs_[r];
  return run.start + static_cast<double>(l) * run.step;
}

double Boundary::vertex_angle_diff(int64_t a, int64_t b) const {
  const auto [ra, la] = run_of(a);
  const auto [rb, lb] = run_of(b);
  if (ra == rb) return static_cast<double>(la - lb) * runs_[ra].step;
  return wrap_pm(vertex_angle(a) - vertex_angle(b));
}

Point2 Boundary::vertex(int64_t i) const {
  if (!on_circle_) return vertices_[static_cast<std::size_t>(i)];
  return unit_from_angle(vertex_angle(i));
}

bool Boundary::edge_is_arc(int64_t edge) const {
  if (!on_circle_) return false;
  const auto [r, l] = run_of(edge);
  return runs_[r].arc_after && l == runs_[r].count - 1;
}

double Boundary::edge_span(int64_t edge) const {
  const auto [r, l] = run_of(edge);
  if (l + 1 < runs_[r].count) return runs_[r].step;
  return ccw_gap(vertex_angle(edge), vertex_angle(next(edge)));
}

EdgeLine Boundary::edge_line(int64_t edge) const {
  if (!on_circle_) return lines_[static_cast<std::size_t>(edge)];
  const auto [r, l] = run_of(edge);
  const AngleRun& run = runs_[r];
  double mid = 0.0;
  double half = 0.0;
  if (l + 1 < run.count) {
    half = 0.5 * run.step;
    mid = run.start + (static_cast<double>(l) + 0.5) * run.step;
  } else {
    const double a = vertex_angle(edge);
    const double gap = ccw_gap(a, vertex_angle(next(edge)));
    half = 0.5 * gap;
    mid = a + half;
  }
  return {unit_from_angle(mid), std::cos(half)};
}

Vec2 Boundary::edge_vector(int64_t edge) const {
  if (!on_circle_) return vertex(next(edge)) - vertex(edge);
  const EdgeLine line = edge_line(edge);
  const double gap = ccw_gap(vertex_angle(edge), vertex_angle(next(edge)));
  const double chord = 2.0 * std::sin(0.5 * gap);
  return {-line.normal.y * chord, line.normal.x * chord};
}

double Boundary::height_at_vertex(int64_t edge, int64_t v) const {
  if (v == edge || v == next(edge)) return 0.0;
  if (!on_circle_) {
    const EdgeLine& line = lines_[static_cast<std::size_t>(edge)];
    return line.offset - dot(line.normal, vertices_[static_cast<std::size_t>(v)]);
  }
  const double a1 = vertex_angle_diff(edge, v);
  double a2 = vertex_angle_diff(next(edge), v);
  double span = a2 - a1;
  if (span <= 0.0) span += kTwoPi;
  a2 = a1 + span;
  return 2.0 * std::sin(0.5 * a1) * std::sin(0.5 * a2);
}

int64_t Boundary::locate_angle(double phi) const {
  phi = wrap_angle(phi);
  auto it = std::upper_bound(runs_.begin(), runs_.end(), phi,
                             [](double value, const AngleRun& run) { return value < run.start; });
  if (it == runs_.begin()) return vertex_count_ - 1;
  const auto r = static_cast<std::size_t>(std::distance(runs_.begin(), it) - 1);
  const AngleRun& run = runs_[r];
  int64_t l = 0;
  if (run.count > 1) {
    const double k = std::floor((phi - run.start) / run.step);
    l = std::clamp<int64_t>(static_cast<int64_t>(std::max(0.0, k)), 0, run.count - 1);
    while (l + 1 < run.count && run.start + static_cast<double>(l + 1) * run.step <= phi) ++l;
    while (l > 0 && run.start + static_cast<double>(l) * run.step > phi) --l;
  }
  return run_offsets_[r] + l;
}

Boundary::RayHit Boundary::ray_hit(const Point2& p, const Vec2& v) const {
  if (!on_circle_) {
    RayHit best{-1, std::numeric_limits<double>::infinity()};
    for (int64_t i = 0; i < vertex_count_; ++i) {
      const EdgeLine& line = lines_[static_cast<std::size_t>(i)];
      const double nv = dot(line.normal, v);
      if (nv <= 0.0) continue;
      const double t = (line.offset - dot(line.normal, p)) / nv;
      // Ties at a vertex go to the edge that starts there (counterclockwise side).
      if (t < best.t || (t == best.t && best.edge == prev(i))) best = {i, t};
    }
    if (best.edge < 0) fail(ErrorCode::kPointOutsideDomain, "ray does not leave the polygon");
    return best;
  }
  // A ray leaving the inscribed polygon through an edge then crosses that
  // edge's circular segment, so the circle hit angle identifies the edge.
  const double a = dot(v, v);
  const double b = 2.0 * dot(p, v);
  const double c = dot(p, p) - 1.0;
  const double disc = std::sqrt(std::max(0.0, b * b - 4.0 * a * c));
  const double tc = b > 0.0 ? -2.0 * c / (b + disc) : (-b + disc) / (2.0 * a);
  const Point2 hit = p + tc * v;
  const int64_t edge = locate_angle(std::atan2(hit.y, hit.x));
  if (edge_is_arc(edge)) return {edge, tc};
  const EdgeLine line = edge_line(edge);
  const double nv = dot(line.normal, v);
  const double t = nv > 0.0 ? (line.offset - dot(line.normal, p)) / nv : tc;
  return {edge, std::min(t, tc)};
}

double Boundary::circumradius() const {
  if (on_circle_) return 1.0;
  double r = 0.0;
  for (const auto& v : vertices_) r = std::max(r, v.norm());
  return r;
}

std::array<double, 4> Boundary::bounding_box() const {
  if (on_circle_) return {-1.0, -1.0, 1.0, 1.0};
  std::array<double, 4> box{vertices_[0].x, vertices_[0].y, vertices_[0].x, vertices_[0].y};
  for (const auto& v : vertices_) {
    box[0] = std::min(box[0], v.x);
    box[1] = std::min(box[1], v.y);
    box[2] = std::max(box[2], v.x);
    box[3] = std::max(box[3], v.y);
  }
  return box;
}

// ---------------------------------------------------------------------------
// ConvexDomain

ConvexDomain ConvexDomain::disk() { return ConvexDomain{}; }

ConvexDomain ConvexDomain::polygon(std::vector<Point2> ccw_vertices) {
  ConvexDomain d;
  d.kind_ = Kind::kExplicitPolygon;
  d.boundary_ = Boundary::from_vertices(std::move(ccw_vertices));
  return d;
}

ConvexDomain ConvexDomain::circle_polygon(std::vector<double> angles) {
  if (angles.size() < 3) fail(ErrorCode::kDegenerateInput, "polygon needs at least 3 vertices");
  std::vector<AngleRun> runs;
  runs.reserve(angles.size());
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (i > 0 && !(angles[i] - angles[i - 1] >= kAngleDedupTolerance))
      fail(ErrorCode::kInvalidArgument,
           "angles must be strictly increasing with separation >= 1e-13");
    runs.push_back({angles[i], 0.0, 1, false});
  }
  ConvexDomain d;
  d.kind_ = Kind::kExplicitPolygon;
  d.boundary_ = Boundary::from_runs(std::move(runs));
  d.angles_ = std::move(angles);
  return d;
}

ConvexDomain ConvexDomain::angle_runs(std::vector<AngleRun> runs) {
  ConvexDomain d;
  d.kind_ = Kind::kExplicitPolygon;
  d.boundary_ = Boundary::from_runs(std::move(runs));
  const Boundary& b = *d.boundary_;
  if (b.vertex_count() > 10'000'000)
    fail(ErrorCode::kInvalidArgument, "too many vertices for an explicit polygon");
  d.angles_.reserve(static_cast<std::size_t>(b.vertex_count()));
  for (int64_t i = 0; i < b.vertex_count(); ++i) d.angles_.push_back(b.vertex_angle(i));
  return d;
}

ConvexDomain ConvexDomain::rings(std::vector<RingSpec> rings, std::vector<double> closures,
                                 std::vector<std::pair<double, double>> arcs) {
  struct Piece {
    AngleRun run;
    double end;
  };
  std::vector<Piece> half;
  std::vector<std::pair<double, double>> all_arcs = arcs;
  std::vector<RingSpec> explicit_rings;
  for (const RingSpec& ring : rings) {
    if (!(ring.count >= 1.0) || !(ring.step > 0.0) || !(ring.start >= 0.0))
      fail(ErrorCode::kInvalidArgument, "ring needs start >= 0, step > 0, count >= 1");
    const double end = ring.start + ring.count * ring.step;
    if (!(end < kPi)) fail(ErrorCode::kInvalidArgument, "rings must lie in [0, π)");
    if (ring.step < kRingCollapseStep) {
      all_arcs.emplace_back(ring.start, end);
      continue;
    }
    if (ring.count > 1e12) fail(ErrorCode::kInvalidArgument, "ring too large to represent");
    explicit_rings.push_back(ring);
    half.push_back({{ring.start, ring.step, static_cast<int64_t>(ring.count) + 1, false}, end});
  }
  for (double c : closures) {
    if (!(c >= 0.0 && c < kPi)) fail(ErrorCode::kInvalidArgument, "closure angles must lie in [0, π)");
    half.push_back({{c, 0.0, 1, false}, c});
  }
  for (const auto& [a, b] : all_arcs) {
    if (!(a >= 0.0 && b >= a && b < kPi)) fail(ErrorCode::kInvalidArgument, "arcs must lie in [0, π)");
    if (b - a < kAngleDedupTolerance) {
      half.push_back({{a, 0.0, 1, false}, a});
    } else {
      half.push_back({{a, 0.0, 1, true}, a});
      half.push_back({{b, 0.0, 1, false}, b});
    }
  }
  std::sort(half.begin(), half.end(),
            [](const Piece& x, const Piece& y) { return x.run.start < y.run.start; });
  // Merge coincident angles: a piece starting where the previous one ends
  // loses its duplicate vertex.
  std::vector<AngleRun> merged;
  double last_end = -1.0;
  for (Piece p : half) {
    if (!merged.empty()) {
      if (p.run.start < last_end - kAngleDedupTolerance)
        fail(ErrorCode::kInvalidArgument, "ring angle spans overlap");
      if (p.run.start - last_end < kAngleDedupTolerance) {
        if (p.run.count == 1) {
          merged.back().arc_after = merged.back().arc_after || p.run.arc_after;
          continue;
        }
        // Drop the previous piece's final vertex instead.
        AngleRun& prev = merged.back();
        if (prev.count == 1) {
          merged.pop_back();
        } else {
          prev.count -= 1;
        }
      }
    }
    last_end = std::max(last_end, p.end);
    merged.push_back(p.run);
  }
  std::vector<AngleRun> full = merged;
  for (const AngleRun& r : merged) {
    AngleRun a = r;
    a.start = r.start + kPi;
    full.push_back(a);
  }
  ConvexDomain d;
  d.kind_ = Kind::kImplicitRingPolygon;
  d.boundary_ = Boundary::from_runs(std::move(full));
  d.rings_ = std::move(explicit_rings);
  d.closures_ = std::move(closures);
  d.arcs_ = std::move(all_arcs);
  return d;
}

const Boundary& ConvexDomain::boundary() const {
  if (!boundary_) fail(ErrorCode::kNotPolygonal, "the unit disk has no polygonal boundary");
  return *boundary_;
}

std::array<double, 4> ConvexDomain::bounding_box() const {
  if (!boundary_) return {-1.0, -1.0, 1.0, 1.0};
  return boundary_->bounding_box();
}

bool ConvexDomain::centrally_symmetric() const {
  return !boundary_ || boundary_->centrally_symmetric();
}

// ---------------------------------------------------------------------------
// Queries

double forward_hit(const ConvexDomain& domain, const Point2& p, const Vec2& v) {
  if (domain.is_polygonal()) return domain.boundary().ray_hit(p, v).t;
  const double a = dot(v, v);
  const double b = 2.0 * dot(p, v);
  const double c = dot(p, p) - 1.0;
  const double disc = std::sqrt(std::max(0.0, b * b - 4.0 * a * c));
  return b > 0.0 ? -2.0 * c / (b + disc) : (-b + disc) / (2.0 * a);
}

bool contains(const ConvexDomain& domain, const Point2& p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
  if (!domain.is_polygonal()) return p.x * p.x + p.y * p.y < 1.0;
  const Boundary& b = domain.boundary();
  if (!b.on_circle()) {
    for (int64_t i = 0; i < b.vertex_count(); ++i) {
      const EdgeLine line = b.edge_line(i);
      if (!(dot(line.normal, p) < line.offset)) return false;
    }
    return true;
  }
  const double r = p.norm();
  if (r == 0.0) return true;
  if (r >= 1.0) return false;
  const Vec2 u = p / r;
  return r < b.ray_hit({0.0, 0.0}, u).t;
}

Chord chord(const ConvexDomain& domain, const Point2& p, const Vec2& v) {
  if (!contains(domain, p)) fail(ErrorCode::kPointOutsideDomain, "point is not inside the domain");
  if (v.x == 0.0 && v.y == 0.0) fail(ErrorCode::kZeroDirection, "zero direction");
  Chord c;
  if (domain.is_polygonal()) {
    const Boundary& b = domain.boundary();
    const auto fwd = b.ray_hit(p, v);
    const auto bwd = b.ray_hit(p, -v);
    c.t_plus = fwd.t;
    c.t_minus = bwd.t;
    c.edge_plus = fwd.edge;
    c.edge_minus = bwd.edge;
  } else {
    c.t_plus = forward_hit(domain, p, v);
    c.t_minus = forward_hit(domain, p, -v);
  }
  c.p_plus = p + c.t_plus * v;
  c.p_minus = p - c.t_minus * v;
  return c;
}

std::vector<Point2> polygon_vertices(const ConvexDomain& domain) {
  const Boundary& b = domain.boundary();
  std::vector<Point2> out;
  out.reserve(static_cast<std::size_t>(b.vertex_count()));
  for (int64_t i = 0; i < b.vertex_count(); ++i) out.push_back(b.vertex(i));
  return out;
}

namespace {

std::vector<Point2> cartesian_hull(std::vector<Point2> pts) {
  double scale = 0.0;
  for (const auto& p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      fail(ErrorCode::kInvalidArgument, "non-finite point");
    scale = std::max(scale, p.norm());
  }
  std::sort(pts.begin(), pts.end(),
            [](const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  const double merge = 1e-13 * std::max(scale, 1e-300);
  std::vector<Point2> uniq;
  for (const auto& p : pts) {
    if (uniq.empty() || (p - uniq.back()).norm() > merge) uniq.push_back(p);
  }
  if (uniq.size() < 3) fail(ErrorCode::kDegenerateInput, "fewer than 3 distinct points");
  std::vector<Point2> hull(2 * uniq.size());
  std::size_t k = 0;
  for (const auto& p : uniq) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = uniq.size() - 1, lower = k + 1; i-- > 0;) {
    const Point2& p = uniq[i];
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  if (hull.size() < 3) fail(ErrorCode::kDegenerateInput, "points are collinear");
  return hull;
}

}  // namespace

ConvexDomain convex_hull(std::span<const Point2> points) {
  if (points.size() < 3) fail(ErrorCode::kDegenerateInput, "fewer than 3 points");
  const bool on_circle = std::all_of(points.begin(), points.end(), [](const Point2& p) {
    return std::abs(p.norm() - 1.0) <= 1e-12;
  });
  if (on_circle) {
    std::vector<double> angles;
    angles.reserve(points.size());
    for (const auto& p : points) angles.push_back(wrap_angle(std::atan2(p.y, p.x)));
    std::sort(angles.begin(), angles.end());
    std::vector<double> uniq;
    for (double a : angles) {
      if (uniq.empty() || a - uniq.back() >= kAngleDedupTolerance) uniq.push_back(a);
    }
    if (uniq.size() > 1 && uniq.front() + kTwoPi - uniq.back() < kAngleDedupTolerance) uniq.pop_back();
    if (uniq.size() < 3) fail(ErrorCode::kDegenerateInput, "fewer than 3 distinct points");
    for (std::size_t i = 0; i < uniq.size(); ++i) {
      const double gap = ccw_gap(uniq[i], uniq[(i + 1) % uniq.size()]);
      if (!(gap < kPi))
        fail(ErrorCode::kDegenerateInput, "hull does not contain the origin in its interior");
    }
    return ConvexDomain::circle_polygon(std::move(uniq));
  }
  std::vector<Point2> hull = cartesian_hull({points.begin(), points.end()});
  return ConvexDomain::polygon(std::move(hull));
}

ConvexDomain linear_image(const ConvexDomain& domain, const Matrix2& m) {
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const double norm = std::abs(m[0][0]) + std::abs(m[0][1]) + std::abs(m[1][0]) + std::abs(m[1][1]);
  if (!std::isfinite(det) || std::abs(det) <= 1e-14 * norm * norm)
    fail(ErrorCode::kSingularMatrix, "linear map is singular");
  const Boundary& b = domain.boundary();
  if (b.vertex_count() > 1'000'000)
    fail(ErrorCode::kInvalidArgument, "too many vertices for a Cartesian image");
  std::vector<Point2> out;
  out.reserve(static_cast<std::size_t>(b.vertex_count()));
  for (int64_t i = 0; i < b.vertex_count(); ++i) {
    const Point2 v = b.vertex(i);
    out.push_back({m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y});
  }
  return ConvexDomain::polygon(cartesian_hull(std::move(out)));
}

}  // namespace hilbert
