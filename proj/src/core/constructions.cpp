#include "constructions.hpp"

#include <cmath>
#include <numbers>

namespace hilbert {

namespace {

constexpr int kTailTerms = 1000;

double next_term(const TowerSequenceSpec& spec, double n) {
  switch (spec.rule) {
    case SequenceRule::kTower: return std::pow(3.0, n * n);
    case SequenceRule::kSquaring: return n * n;
    case SequenceRule::kExplicitList: break;
  }
  return INFINITY;
}

// Terms past the listed rings, used only for the closure angle.
double tail_sum(const TowerSequenceSpec& spec, const std::vector<double>& n) {
  if (spec.rule == SequenceRule::kExplicitList || n.empty()) return 0.0;
  double sum = 0.0, x = n.back();
  for (int i = 0; i < kTailTerms && std::isfinite(x); ++i) {
    x = next_term(spec, x);
    const double t = 1.0 / x;
    if (t == 0.0) break;
    sum += t;
  }
  return sum;
}

}  // namespace

ConvexDomain square() { return ConvexDomain::polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}); }

ConvexDomain regular_polygon(int64_t n) {
  if (n < 3) throw Error(ErrorCode::kBadArity, "a regular polygon needs n >= 3");
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  // Two mirrored runs let even polygons be recognised as symmetric.
  if (n % 2 == 0) return ConvexDomain::angle_runs({{0.0, step, n / 2, false}, {kPi, step, n / 2, false}});
  return ConvexDomain::angle_runs({{0.0, step, n, false}});
}

ConvexDomain disk() { return ConvexDomain::disk(); }

std::vector<double> tower_sequence(const TowerSequenceSpec& spec) {
  if (spec.max_rings < 1) throw Error(ErrorCode::kInvalidArgument, "max_rings must be at least 1");
  std::vector<double> n;
  if (spec.rule == SequenceRule::kExplicitList) {
    n = spec.explicit_list;
    if (n.empty()) throw Error(ErrorCode::kInvalidSequence, "explicit sequence is empty");
    if (n.size() > static_cast<std::size_t>(spec.max_rings)) n.resize(static_cast<std::size_t>(spec.max_rings));
  } else {
    if (spec.n0 < 3) throw Error(ErrorCode::kInvalidSequence, "n0 must be at least 3");
    n.push_back(static_cast<double>(spec.n0));
    while (static_cast<int>(n.size()) < spec.max_rings && std::isfinite(n.back()))
      n.push_back(next_term(spec, n.back()));
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (!(n[k] >= 3.0) || (std::isfinite(n[k]) && n[k] != std::floor(n[k])))
      throw Error(ErrorCode::kInvalidSequence, "ring sizes must be integers >= 3");
    if (k > 0 && !(n[k] > n[k - 1]))
      throw Error(ErrorCode::kInvalidSequence, "ring sizes must be strictly increasing");
    sum += 1.0 / n[k];
  }
  if (!(sum + tail_sum(spec, n) < 0.5))
    throw Error(ErrorCode::kInvalidSequence, "the sum of 1/n_k must stay below 1/2");
  return n;
}

std::pair<ConvexDomain, ConstructionReport> no_limit_domain(const TowerSequenceSpec& spec) {
  ConstructionReport rep;
  rep.n = tower_sequence(spec);
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<RingSpec> rings;
  std::vector<std::pair<double, double>> arcs;
  double inv_sum = 0.0;
  for (std::size_t k = 0; k < rep.n.size(); ++k) {
    const double nk = rep.n[k];
    const double theta = two_pi * inv_sum;
    const double alpha = two_pi / nk;
    const double step = alpha / nk;
    rep.theta_k.push_back(theta);
    rep.alpha_k.push_back(alpha);
    rep.ring_vertex_counts.push_back(nk + 1.0);
    inv_sum += 1.0 / nk;
    if (step < kRingCollapseStep) {
      rep.collapsed_rings.push_back(static_cast<int>(k));
      arcs.emplace_back(theta, two_pi * inv_sum);
    } else {
      rings.push_back({theta, step, nk});
    }
  }
  rep.theta_k.push_back(two_pi * inv_sum);
  rep.theta_infinity = two_pi * (inv_sum + tail_sum(spec, rep.n));
  if (rep.theta_infinity > rep.theta_k.back()) arcs.emplace_back(rep.theta_k.back(), rep.theta_infinity);
  ConvexDomain d = ConvexDomain::rings(std::move(rings), {rep.theta_infinity}, std::move(arcs));
  return {std::move(d), std::move(rep)};
}

ConvexDomain zero_entropy_domain(int N) {
  if (N < 1 || N > 40) throw Error(ErrorCode::kBadArity, "N must lie in [1, 40]");
  std::vector<double> half{0.0};
  for (int n = N; n >= 0; --n) half.push_back(std::ldexp(1.0, -n));
  std::vector<double> angles = half;
  for (double a : half) angles.push_back(a + kPi);
  return ConvexDomain::circle_polygon(std::move(angles));
}

RadiiSchedules radii_schedules(const TowerSequenceSpec& spec) {
  const std::vector<double> n = tower_sequence(spec);
  RadiiSchedules s;
  double log_n = std::log(n.front());
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (k > 0) {
      switch (spec.rule) {
        // ln 3^{n²} stays representable one step past n itself.
        case SequenceRule::kTower: log_n = n[k - 1] * n[k - 1] * std::log(3.0); break;
        case SequenceRule::kSquaring: log_n = 2.0 * log_n; break;
        case SequenceRule::kExplicitList: log_n = std::log(n[k]); break;
      }
    }
    s.r.push_back(log_n);
    if (std::isfinite(n[k])) s.R.push_back(n[k]);
  }
  return s;
}

}  // namespace hilbert
