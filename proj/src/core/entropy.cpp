#include "entropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace hilbert {

namespace {

constexpr double kMaxGridRadius = 30.0;
constexpr int kPerDecade = 24;

ProfileSample sample(double R, const MeasureResult& m) {
  return {R, m.value, std::log(m.value) / R, m.error_estimate};
}

}  // namespace

EntropyProfile entropy_profile(const ConvexDomain& domain, const std::vector<double>& radii,
                               const QuadratureSpec& q, std::string label) {
  EntropyProfile p;
  p.schedule_label = std::move(label);
  try {
    const auto res = ball_volumes(domain, radii, q);
    for (std::size_t k = 0; k < radii.size(); ++k) p.samples.push_back(sample(radii[k], res[k]));
    return p;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
  }
  for (double R : radii) {
    try {
      p.samples.push_back(sample(R, ball_volume(domain, R, q)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExceeded) throw;
      p.failed_radii.push_back(R);
    }
  }
  return p;
}

EntropyEstimate entropy_estimate(const EntropyProfile& profile, int window) {
  if (profile.samples.empty()) throw Error(ErrorCode::kEmptyProfile, "profile has no samples");
  if (window < 1 || static_cast<std::size_t>(window) > profile.samples.size())
    throw Error(ErrorCode::kInvalidArgument, "window must lie in [1, sample count]");
  EntropyEstimate e{-INFINITY, INFINITY, window};
  for (auto it = profile.samples.end() - window; it != profile.samples.end(); ++it) {
    e.upper_window = std::max(e.upper_window, it->ratio);
    e.lower_window = std::min(e.lower_window, it->ratio);
  }
  return e;
}

std::string profile_csv(const EntropyProfile& profile) {
  std::string out = "R,mu,ratio,err\n";
  char line[128];
  for (const auto& s : profile.samples) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", s.R, s.mu, s.ratio, s.error_estimate);
    out += line;
  }
  return out;
}

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  if (!(lo > 0.0) || !(hi >= lo) || per_decade < 1)
    throw Error(ErrorCode::kInvalidArgument, "log grid needs 0 < lo <= hi and per_decade >= 1");
  std::vector<double> g;
  for (int j = 0;; ++j) {
    const double r = lo * std::pow(10.0, static_cast<double>(j) / per_decade);
    if (r >= hi * (1.0 - 1e-12)) break;
    g.push_back(r);
  }
  g.push_back(hi);
  return g;
}

OscillationReport oscillation_experiment(const TowerSequenceSpec& spec, const QuadratureSpec& q) {
  OscillationReport rep;
  auto built = no_limit_domain(spec);
  rep.construction = std::move(built.second);
  const RadiiSchedules sched = radii_schedules(spec);
  double hi = kMaxGridRadius;
  if (sched.R.size() > 1) hi = std::min(hi, sched.R[1]);
  std::vector<double> radii = log_grid(0.5, hi, kPerDecade);
  for (double r : sched.r) {
    if (r > 0.5 && r < hi) {
      rep.schedule_radii.push_back(r);
      radii.push_back(r);
    }
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  rep.profile = entropy_profile(built.first, radii, q, "oscillation");
  if (rep.profile.samples.empty()) throw Error(ErrorCode::kBudgetExceeded, "no radius fitted the budget");
  const auto peak = std::max_element(rep.profile.samples.begin(), rep.profile.samples.end(),
                                     [](const auto& a, const auto& b) { return a.ratio < b.ratio; });
  rep.peak_radius = peak->R;
  rep.peak_ratio = peak->ratio;
  rep.last_radius = rep.profile.samples.back().R;
  rep.last_ratio = rep.profile.samples.back().ratio;
  return rep;
}

CubicReport cubic_growth_check(int N, const std::vector<double>& radii, const QuadratureSpec& q) {
  CubicReport rep;
  rep.N = N;
  const ConvexDomain d = zero_entropy_domain(N);
  rep.tau = kPi / (4.0 * lebesgue_ball_area(d, 1.0, q).value);
  rep.profile = entropy_profile(d, radii, q, "cubic");
  for (const auto& s : rep.profile.samples) {
    const double bound = (144.0 * kPi + rep.tau) * s.R * s.R * s.R;
    rep.samples.push_back({s.R, s.mu, bound, s.mu <= bound});
  }
  return rep;
}

bool ratio_strictly_decreasing(const EntropyProfile& profile, double lo, double hi) {
  const ProfileSample* prev = nullptr;
  for (const auto& s : profile.samples) {
    if (s.R < lo || s.R > hi) continue;
    if (prev && !(s.ratio < prev->ratio)) return false;
    prev = &s;
  }
  return true;
}

}  // namespace hilbert
