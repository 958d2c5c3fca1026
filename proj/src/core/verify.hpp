#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "measure.hpp"

namespace hilbert {

/// Outcome of one property check over many sampled cases. `margin` is the
/// smallest slack seen: how far the worst case stayed inside its bound or
/// tolerance, relative where the check says so. Negative means violated.
struct CheckResult {
  std::string name;
  int64_t cases{0};
  int64_t violations{0};
  double margin{0.0};
  bool pass() const { return cases > 0 && violations == 0; }
};

/// `PASS name  cases=… violations=… margin=…`
std::string format_check(const CheckResult& c);

// Distance properties; `n` sampled cases each.
CheckResult check_symmetry(const ConvexDomain& d, int n, uint64_t seed);
CheckResult check_triangle_inequality(const ConvexDomain& d, int n, uint64_t seed);
CheckResult check_collinear_additivity(const ConvexDomain& d, int n, uint64_t seed);
/// Polygons only: d_{MC}(Mp, Mq) = d_C(p, q) for random invertible M.
CheckResult check_linear_invariance(const ConvexDomain& d, int matrices, uint64_t seed);
/// Unit disk: d(0, p) = atanh |p|.
CheckResult check_klein_distance(int n, uint64_t seed);
/// C ⊂ D: d_C ≥ d_D and area B_C(p) ≤ area B_D(p) at random points of C.
CheckResult check_distance_monotonicity(const ConvexDomain& C, const ConvexDomain& D, int n, uint64_t seed);
CheckResult check_tangent_ball_monotonicity(const ConvexDomain& C, const ConvexDomain& D, int n,
                                            uint64_t seed);
/// Symmetric domain inscribed in the unit circle: on the chord through an
/// antipodal vertex pair the distance equals the Klein distance.
CheckResult check_equality_case(const ConvexDomain& d, int n, uint64_t seed);

// Unit ball and volume properties.
/// The square (−1, 1)²: 2(1−x²)(1−y²) ≤ area ≤ 4(1−x²)(1−y²), and area 4 at 0.
CheckResult check_square_unit_ball(int n, uint64_t seed);
/// Disk volumes against 2π(cosh R − 1) to 0.1%.
CheckResult check_klein_volume(const std::vector<double>& radii, const QuadratureSpec& q);
/// μ(B(0, R)) / (πR²) within 1% at R = 1e−3.
CheckResult check_small_ball(const ConvexDomain& d, const QuadratureSpec& q);
/// |quadrature − Monte Carlo| ≤ 3σ + the quadrature's own error estimate.
CheckResult check_quadrature_vs_mc(const ConvexDomain& d, const std::vector<double>& radii,
                                   const QuadratureSpec& q);
/// Sector volumes over a random partition of the circle sum to the ball
/// volume within 1e−8 relative.
CheckResult check_sector_additivity(const ConvexDomain& d, double R, int pieces, uint64_t seed,
                                    const QuadratureSpec& q);
/// Lebesgue area of B(0, R) ≤ e^{8R}·area of the tangent unit ball at p, for
/// random p in B(0, R).
CheckResult check_volume_inequality(const ConvexDomain& d, const std::vector<double>& radii,
                                    int points_per_radius, uint64_t seed, const QuadratureSpec& q);
/// Domain inside the unit disk: μ(B(0, R) ∩ sector) ≤ π e^{8R} / vol B(0, 1) × angle / 2
/// over every sector of angle ≤ π between `angles` random directions. Piece
/// volumes are computed once per radius and summed.
CheckResult check_sector_lemma(const ConvexDomain& d, const std::vector<double>& radii, int angles,
                               uint64_t seed, const QuadratureSpec& q);
/// For the boundary edge [P, Q] of a symmetric polygon and T = hull(±P, ±Q):
/// d_C(0, p) = d_T(0, p) on the triangle P0Q, and μ(B(0, R) ∩ P0Q) ≤ 2πR².
CheckResult check_triangle_distances(const ConvexDomain& d, int64_t edge, int n, uint64_t seed);
CheckResult check_triangle_volume(const ConvexDomain& d, int64_t edge, const std::vector<double>& radii,
                                  const QuadratureSpec& q);
/// The square's whole ball: μ(B(0, R)) ≤ 2πR².
CheckResult check_square_volume(const std::vector<double>& radii, const QuadratureSpec& q);

struct VerifyOptions {
  uint64_t seed{0};
  int threads{1};
  /// Upper bound; large polygons get fewer samples, at least 2000.
  int64_t mc_samples{200'000};
};

/// Every property that applies to the domain, with sample counts sized for
/// an interactive run.
std::vector<CheckResult> verify_domain(const ConvexDomain& d, const VerifyOptions& o);

/// True for the disk and for polygons whose vertices lie on the unit circle.
bool inscribed_in_unit_disk(const ConvexDomain& d);
/// The square (−1, 1)² given by its four corners.
bool is_standard_square(const ConvexDomain& d);

}  // namespace hilbert
