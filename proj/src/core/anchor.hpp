#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "geometry.hpp"

namespace hilbert::detail {

/// Everything needed to evaluate the density along rays that leave the domain
/// through one edge E, with the exit point written as base + λ'·dir where
/// `base` is the endpoint of E nearer to it.
///
/// Per-edge arrays run over the kept edges in counterclockwise order. For the
/// circle form every angle is taken relative to the base vertex, so
/// neighbouring edges keep full relative precision however small the steps.
struct AnchorData {
  std::vector<double> offset;        // distance of each edge line from the origin
  std::vector<double> height_base;   // height of the base vertex over each line
  std::vector<double> normal_dir;    // n_i · dir
  std::vector<double> a_exit, b_exit;  // normals in the frame of E
  std::vector<double> a_side, b_side;  // normals in the frame of the other edge at the base
  std::size_t exit_index{0};
  std::size_t side_index{0};
  double edge_length{0.0};
  double exit_offset{0.0};
  double base_norm2{1.0};
  double base_dot_dir{0.0};
  double exterior_angle{0.0};  // turn between E and the side edge
  Point2 base_world;
  Vec2 dir_world;
};

struct EdgeSample {
  int64_t edge{0};
  double weight{1.0};
};

/// Vertex count above which far vertices are thinned out per anchor edge.
inline constexpr int64_t kWindowThreshold = 4096;
/// Runs with more interior edges than this are integrated on a sample of them.
inline constexpr int64_t kSampledRunThreshold = 64;
inline constexpr int64_t kThinning = 64;

struct ThinningPlan {
  int64_t rate{kThinning};
  /// False when the chord error at `rate` is already below 1e−10, so that
  /// extrapolating against rate / 2 would gain nothing.
  bool extrapolate{true};
};

/// Thinning rate that keeps the extrapolated chord error near 1e−8: it grows
/// with the angular span of the longest run, between 4 and kThinning.
ThinningPlan thinning_plan(const Boundary& b);

/// Whether kept_vertices drops anything for this boundary.
inline bool thins(const Boundary& b) { return b.on_circle() && b.vertex_count() > kWindowThreshold; }

/// Edges to integrate and their weights. With `half` only the first half of a
/// centrally symmetric boundary is listed, each edge weighted twice. Sampled
/// runs are split at the `cuts` edges, which are always listed exactly.
std::vector<EdgeSample> edge_plan(const Boundary& boundary, bool half,
                                  std::span<const int64_t> cuts = {});

/// Kept vertices for an anchor edge: all of them for small polygons,
/// otherwise a window around the edge that thins out geometrically, plus the
/// endpoints of every run. Past the exact neighbours the index step grows as
/// distance / thinning, so the chord error falls like thinning⁻². Sorted.
std::vector<int64_t> kept_vertices(const Boundary& boundary, int64_t edge,
                                   int64_t thinning = kThinning);

AnchorData make_anchor(const Boundary& boundary, int64_t edge, bool from_start,
                       const std::vector<int64_t>& kept);

}  // namespace hilbert::detail
