#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"
#include "vec2.hpp"

namespace hilbert {

/// Vertices on the unit circle at angles start + j·step for 0 <= j < count.
/// When `arc_after` is set, the boundary piece from the last vertex of this run
/// to the first vertex of the next run is a circular arc instead of a segment.
struct AngleRun {
  double start{0.0};
  double step{0.0};
  int64_t count{1};
  bool arc_after{false};
};

/// Supporting line of an edge: outward unit normal and offset, so that the
/// edge lies on {y : normal·y = offset} and the interior on normal·y < offset.
struct EdgeLine {
  Vec2 normal;
  double offset{0.0};
};

/// Boundary of a bounded convex polygon containing the origin.
///
/// Two storage forms share one interface. Cartesian vertex lists cover
/// arbitrary polygons. Circle-inscribed polygons are stored as polar angles
/// grouped into arithmetic runs; nothing is materialised, so runs with tens of
/// millions of vertices cost O(1) memory and chord lookups stay O(log runs).
class Boundary {
 public:
  static Boundary from_vertices(std::vector<Point2> ccw_vertices);
  static Boundary from_runs(std::vector<AngleRun> runs);

  bool on_circle() const { return on_circle_; }
  int64_t vertex_count() const { return vertex_count_; }
  int64_t next(int64_t i) const { return i + 1 == vertex_count_ ? 0 : i + 1; }
  int64_t prev(int64_t i) const { return i == 0 ? vertex_count_ - 1 : i - 1; }

  Point2 vertex(int64_t i) const;
  /// Circle form only.
  double vertex_angle(int64_t i) const;
  /// Signed angle φ(a) − φ(b) in (−π, π]; exact index arithmetic when both
  /// vertices belong to the same run. Circle form only.
  double vertex_angle_diff(int64_t a, int64_t b) const;

  bool edge_is_arc(int64_t edge) const;
  /// Angle subtended by the edge at the origin; exact step inside a run.
  /// Circle form only.
  double edge_span(int64_t edge) const;
  EdgeLine edge_line(int64_t edge) const;
  Vec2 edge_vector(int64_t edge) const;
  /// Distance from vertex `v` to the supporting line of `edge`; exactly zero
  /// for the edge's own endpoints.
  double height_at_vertex(int64_t edge, int64_t v) const;

  struct RayHit {
    int64_t edge{0};
    double t{0.0};
  };
  /// Forward boundary hit of p + t·v, t > 0. `p` must be interior.
  RayHit ray_hit(const Point2& p, const Vec2& v) const;

  /// Circle form: index of the vertex whose outgoing edge spans polar angle
  /// `phi` (half-open [start, end) in angle).
  int64_t locate_angle(double phi) const;

  /// Largest distance of a vertex from the origin (1 for circle form).
  double circumradius() const;
  std::array<double, 4> bounding_box() const;  // xmin, ymin, xmax, ymax
  bool centrally_symmetric() const { return symmetric_; }

  const std::vector<AngleRun>& runs() const { return runs_; }
  const std::vector<Point2>& cartesian_vertices() const { return vertices_; }
  /// Run containing a vertex, and the vertex's index within that run.
  std::pair<std::size_t, int64_t> run_of(int64_t v) const;
  int64_t run_offset(std::size_t r) const { return run_offsets_[r]; }

 private:
  void finish();

  bool on_circle_{false};
  bool symmetric_{false};
  int64_t vertex_count_{0};
  std::vector<Point2> vertices_;
  std::vector<EdgeLine> lines_;
  std::vector<AngleRun> runs_;
  std::vector<int64_t> run_offsets_;
};

/// Minimum angular separation below which vertices of a construction merge.
inline constexpr double kAngleDedupTolerance = 1e-13;
/// Rings whose step falls below this are treated as circular arcs.
inline constexpr double kRingCollapseStep = 1e-15;

/// A ring of the implicit construction: vertices at start + j·step, 0 <= j <= count.
struct RingSpec {
  double start{0.0};
  double step{0.0};
  double count{0.0};  // may exceed 2^63 for collapsed rings
};

class ConvexDomain {
 public:
  enum class Kind { kExplicitPolygon, kImplicitRingPolygon, kUnitDisk };

  static ConvexDomain disk();
  /// General polygon from counterclockwise Cartesian vertices.
  static ConvexDomain polygon(std::vector<Point2> ccw_vertices);
  /// Circle-inscribed polygon from strictly increasing angles in [0, 2π).
  static ConvexDomain circle_polygon(std::vector<double> angles);
  /// Circle-inscribed polygon given directly as arithmetic runs.
  static ConvexDomain angle_runs(std::vector<AngleRun> runs);
  /// Antipodally symmetric ring construction; rings must lie in [0, π).
  static ConvexDomain rings(std::vector<RingSpec> rings, std::vector<double> closures,
                            std::vector<std::pair<double, double>> arcs = {});

  Kind kind() const { return kind_; }
  bool is_polygonal() const { return kind_ != Kind::kUnitDisk; }
  /// Throws NotPolygonal for the disk.
  const Boundary& boundary() const;
  bool angle_form() const { return boundary_ && boundary_->on_circle(); }

  /// Source data kept for serialisation.
  const std::vector<double>& angles() const { return angles_; }
  const std::vector<RingSpec>& ring_specs() const { return rings_; }
  const std::vector<double>& closures() const { return closures_; }
  const std::vector<std::pair<double, double>>& arcs() const { return arcs_; }

  std::array<double, 4> bounding_box() const;
  bool centrally_symmetric() const;

 private:
  Kind kind_{Kind::kUnitDisk};
  std::optional<Boundary> boundary_;
  std::vector<double> angles_;
  std::vector<RingSpec> rings_;
  std::vector<double> closures_;
  std::vector<std::pair<double, double>> arcs_;
};

struct Chord {
  double t_minus{0.0};
  double t_plus{0.0};
  Point2 p_minus;
  Point2 p_plus;
  int64_t edge_minus{-1};  // -1 on the disk
  int64_t edge_plus{-1};
};

bool contains(const ConvexDomain& domain, const Point2& p);

/// Forward hit parameter only; no interior check.
double forward_hit(const ConvexDomain& domain, const Point2& p, const Vec2& v);

/// Throws PointOutsideDomain / ZeroDirection.
Chord chord(const ConvexDomain& domain, const Point2& p, const Vec2& v);

/// Counterclockwise hull; points on the unit circle are hulled by polar angle
/// with angular deduplication, anything else in Cartesian form.
ConvexDomain convex_hull(std::span<const Point2> points);

using Matrix2 = std::array<std::array<double, 2>, 2>;
/// Polygon with vertices M·v; orientation restored when det M < 0.
ConvexDomain linear_image(const ConvexDomain& domain, const Matrix2& m);

/// Boundary vertices as Cartesian points (materialises rings; use with care).
std::vector<Point2> polygon_vertices(const ConvexDomain& domain);

}  // namespace hilbert
