#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace hilbert {

enum class SequenceRule { kTower, kSquaring, kExplicitList };

/// Ring sizes n_0 < n_1 < ... for the oscillating construction.
/// kTower: n_{k+1} = 3^{n_k²}. kSquaring: n_{k+1} = n_k².
struct TowerSequenceSpec {
  int64_t n0{3};
  SequenceRule rule{SequenceRule::kTower};
  std::vector<double> explicit_list;
  int max_rings{8};
};

/// Ring sizes too large for a double are stored as +inf.
struct ConstructionReport {
  std::vector<double> n;           // ring sizes
  std::vector<double> theta_k;     // start angle of each ring, plus θ after the last
  std::vector<double> alpha_k;     // angular width 2π/n_k of each ring
  double theta_infinity{0.0};
  std::vector<double> ring_vertex_counts;  // n_k + 1
  std::vector<int> collapsed_rings;        // rings kept as circular arcs
};

ConvexDomain square();
/// n vertices on the unit circle at angles 2πj/n. Throws BadArity for n < 3.
ConvexDomain regular_polygon(int64_t n);
ConvexDomain disk();

/// Validates the spec and evaluates the ring sizes. Throws InvalidSequence.
std::vector<double> tower_sequence(const TowerSequenceSpec& spec);

std::pair<ConvexDomain, ConstructionReport> no_limit_domain(const TowerSequenceSpec& spec);

/// Hull of (cos 2^{-n}, sin 2^{-n}) for 0 <= n <= N, the point (1, 0), and
/// their antipodes. Throws BadArity outside 1 <= N <= 40.
ConvexDomain zero_entropy_domain(int N);

struct RadiiSchedules {
  std::vector<double> r;  // ln n_k
  std::vector<double> R;  // n_k, finite ones only
};
RadiiSchedules radii_schedules(const TowerSequenceSpec& spec);

}  // namespace hilbert
