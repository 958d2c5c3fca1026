#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "geometry.hpp"
#include "unit_ball.hpp"

namespace hilbert {

struct QuadratureSpec {
  int radial_order{8};          // Gauss points per radial panel, at least 4
  int angular_refinement{0};    // each level halves the angular panel width
  int64_t mc_samples{1'000'000};
  uint64_t seed{0};
  int threads{1};
  int64_t max_evaluations{10'000'000};
};

enum class Method { kQuadrature, kMonteCarlo };

struct MeasureResult {
  double value{0.0};
  double error_estimate{0.0};
  Method method{Method::kQuadrature};
  int64_t evaluations{0};
};

/// Half-plane {x : normal·x < offset} used to cap a sector; the origin must
/// lie on the kept side.
struct CapLine {
  Vec2 normal;
  double offset{0.0};
};

/// μ(B(0, R)) by polar quadrature in the Hilbert radius. Throws BudgetExceeded
/// when the planned number of density evaluations exceeds the cap.
MeasureResult ball_volume(const ConvexDomain& domain, double R, const QuadratureSpec& q);

/// μ(B(0, R)) for several increasing radii from one sweep: every ray is
/// integrated once up to the largest radius with all radii as breakpoints.
/// The evaluation cap is scaled by the number of radii.
std::vector<MeasureResult> ball_volumes(const ConvexDomain& domain, std::span<const double> radii,
                                        const QuadratureSpec& q);

/// μ(B(0, R) ∩ {polar angle in [theta_a, theta_b]} ∩ cap).
MeasureResult sector_ball_volume(const ConvexDomain& domain, double R, double theta_a,
                                 double theta_b, const std::optional<CapLine>& cap,
                                 const QuadratureSpec& q);

/// Lebesgue area of B(0, R), same quadrature with unit density.
MeasureResult lebesgue_ball_area(const ConvexDomain& domain, double R, const QuadratureSpec& q);

/// Rejection sampling in the bounding box; independent of the quadrature.
MeasureResult ball_volume_mc(const ConvexDomain& domain, double R, const QuadratureSpec& q);

}  // namespace hilbert
