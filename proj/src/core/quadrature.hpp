#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace hilbert {

/// Gauss–Legendre rule on [−1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached per order; nodes found by Newton iteration on P_n.
const GaussRule& gauss_legendre(int order);

/// 15-point Kronrod extension of the 7-point Gauss rule on [−1, 1]. Index 7 is
/// the midpoint; the Gauss nodes are the odd indices of the positive half.
struct KronrodRule {
  std::array<double, 15> nodes;
  std::array<double, 15> kronrod_weights;
  std::array<double, 15> gauss_weights;  // zero where the node is not a Gauss node
};

const KronrodRule& gauss_kronrod15();

/// Runs task(i) for i in [0, count) on up to `threads` workers. Results must be
/// written to per-index slots; reduction is the caller's job so that the order
/// never depends on scheduling.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& task);

}  // namespace hilbert
