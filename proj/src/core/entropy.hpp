#pragma once

#include <string>
#include <vector>

#include "constructions.hpp"
#include "measure.hpp"

namespace hilbert {

struct ProfileSample {
  double R{0.0};
  double mu{0.0};
  double ratio{0.0};  // ln(mu) / R
  double error_estimate{0.0};
};

struct EntropyProfile {
  std::vector<ProfileSample> samples;
  std::string schedule_label;
  /// Radii whose volume could not be computed within the evaluation budget.
  std::vector<double> failed_radii;
};

struct EntropyEstimate {
  double upper_window{0.0};
  double lower_window{0.0};
  int window{0};
};

/// ln μ(B(0, R)) / R for each radius. All radii are integrated in one sweep;
/// if that exceeds the budget each radius is retried alone and the ones that
/// still exceed it are listed in failed_radii.
EntropyProfile entropy_profile(const ConvexDomain& domain, const std::vector<double>& radii,
                               const QuadratureSpec& q, std::string label = "custom");

/// Max and min ratio over the last `window` samples. Throws EmptyProfile.
EntropyEstimate entropy_estimate(const EntropyProfile& profile, int window);

/// `R,mu,ratio,err` rows with 17 significant digits.
std::string profile_csv(const EntropyProfile& profile);

/// Radii lo·10^{j/per_decade} below `hi`, with `hi` itself appended.
std::vector<double> log_grid(double lo, double hi, int per_decade);

struct OscillationReport {
  ConstructionReport construction;
  EntropyProfile profile;
  double peak_radius{0.0};
  double peak_ratio{0.0};
  double last_radius{0.0};
  double last_ratio{0.0};
  std::vector<double> schedule_radii;  // the ln n_k that fell inside the grid
};

/// Profile of the oscillating domain on a log grid over [0.5, min(30, n_1)]
/// merged with the circle-like radii ln n_k.
OscillationReport oscillation_experiment(const TowerSequenceSpec& spec, const QuadratureSpec& q);

struct CubicSample {
  double R{0.0};
  double mu{0.0};
  double bound{0.0};
  bool holds{false};
};

struct CubicReport {
  int N{0};
  double tau{0.0};  // π / (4·Lebesgue area of B(0, 1))
  std::vector<CubicSample> samples;
  EntropyProfile profile;
};

CubicReport cubic_growth_check(int N, const std::vector<double>& radii, const QuadratureSpec& q);

/// True when the ratio strictly decreases over the samples with R in [lo, hi].
bool ratio_strictly_decreasing(const EntropyProfile& profile, double lo, double hi);

}  // namespace hilbert
