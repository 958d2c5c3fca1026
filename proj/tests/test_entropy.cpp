#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "entropy.hpp"

using namespace hilbert;

namespace {

EntropyProfile synthetic(std::initializer_list<double> ratios) {
  EntropyProfile p;
  double R = 1.0;
  for (double r : ratios) {
    p.samples.push_back({R, std::exp(r * R), r, 0.0});
    R += 1.0;
  }
  return p;
}

}  // namespace

TEST_CASE("disk profile follows the closed form") {
  const std::vector<double> radii{0.5, 1.0, 2.0, 5.0, 10.0};
  const EntropyProfile p = entropy_profile(ConvexDomain::disk(), radii, {});
  REQUIRE(p.samples.size() == radii.size());
  CHECK(p.failed_radii.empty());
  for (const auto& s : p.samples) {
    const double mu = 2.0 * std::numbers::pi * (std::cosh(s.R) - 1.0);
    CHECK(s.mu == doctest::Approx(mu).epsilon(1e-10));
    CHECK(s.ratio == doctest::Approx(std::log(mu) / s.R).epsilon(1e-10));
  }
}

TEST_CASE("window estimate") {
  const auto p = synthetic({0.9, 0.7, 0.8, 0.6});
  const auto e = entropy_estimate(p, 3);
  CHECK(e.upper_window == 0.8);
  CHECK(e.lower_window == 0.6);
  CHECK(entropy_estimate(p, 4).upper_window == 0.9);
  CHECK_THROWS_AS(entropy_estimate(p, 0), Error);
  CHECK_THROWS_AS(entropy_estimate(p, 5), Error);
  try {
    entropy_estimate(EntropyProfile{}, 1);
    FAIL("expected EmptyProfile");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyProfile);
  }
}

TEST_CASE("strict decrease on a window") {
  const auto p = synthetic({0.5, 0.9, 0.8, 0.7, 0.7});
  CHECK(ratio_strictly_decreasing(p, 2.0, 4.0));
  CHECK_FALSE(ratio_strictly_decreasing(p, 1.0, 4.0));
  CHECK_FALSE(ratio_strictly_decreasing(p, 2.0, 5.0));
}

TEST_CASE("csv rows round-trip") {
  const EntropyProfile p = entropy_profile(regular_polygon(5), {0.3, 1.7}, {});
  const std::string csv = profile_csv(p);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "R,mu,ratio,err");
  for (const auto& s : p.samples) {
    REQUIRE(std::getline(in, line));
    double v[4];
    char c;
    std::istringstream row(line);
    row >> v[0] >> c >> v[1] >> c >> v[2] >> c >> v[3];
    CHECK(v[0] == s.R);
    CHECK(v[1] == s.mu);
    CHECK(v[2] == s.ratio);
    CHECK(v[3] == s.error_estimate);
  }
  CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("log grid") {
  const auto g = log_grid(0.5, 30.0, 24);
  CHECK(g.front() == 0.5);
  CHECK(g.back() == 30.0);
  for (std::size_t i = 1; i + 1 < g.size(); ++i)
    CHECK(g[i] / g[i - 1] == doctest::Approx(std::pow(10.0, 1.0 / 24.0)).epsilon(1e-13));
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
  CHECK(log_grid(2.0, 2.0, 4) == std::vector<double>{2.0});
  CHECK_THROWS_AS(log_grid(0.0, 1.0, 4), Error);
  CHECK_THROWS_AS(log_grid(2.0, 1.0, 4), Error);
}

TEST_CASE("radii over budget are reported, the rest still computed") {
  const ConvexDomain sq = square();
  QuadratureSpec q;
  const int64_t small = ball_volume(sq, 0.5, q).evaluations;
  const int64_t large = ball_volume(sq, 20.0, q).evaluations;
  REQUIRE(large > 2 * small);
  q.max_evaluations = small;
  const EntropyProfile p = entropy_profile(sq, {0.5, 20.0}, q);
  REQUIRE(p.samples.size() == 1);
  CHECK(p.samples[0].R == 0.5);
  CHECK(p.failed_radii == std::vector<double>{20.0});
}

TEST_CASE("cubic bound on the zero-entropy domain") {
  const CubicReport rep = cubic_growth_check(3, {1.0, 2.0, 3.0}, {});
  CHECK(rep.N == 3);
  const double area = lebesgue_ball_area(zero_entropy_domain(3), 1.0, {}).value;
  CHECK(rep.tau == doctest::Approx(std::numbers::pi / (4.0 * area)).epsilon(1e-14));
  REQUIRE(rep.samples.size() == 3);
  for (const auto& s : rep.samples) {
    CHECK(s.holds);
    CHECK(s.bound == doctest::Approx((144.0 * std::numbers::pi + rep.tau) * s.R * s.R * s.R));
  }
}

TEST_CASE("oscillation experiment on a short explicit sequence") {
  TowerSequenceSpec spec;
  spec.rule = SequenceRule::kExplicitList;
  spec.explicit_list = {4, 9};
  const OscillationReport rep = oscillation_experiment(spec, {});
  CHECK(rep.last_radius == 9.0);  // the grid stops at min(30, n_1)
  REQUIRE(rep.schedule_radii.size() == 2);
  CHECK(rep.schedule_radii[0] == doctest::Approx(std::log(4.0)));
  CHECK(rep.schedule_radii[1] == doctest::Approx(std::log(9.0)));
  CHECK(rep.peak_ratio >= rep.last_ratio);
  CHECK(rep.profile.schedule_label == "oscillation");
}

TEST_CASE("inscribed domains stay below the disk profile") {
  const std::vector<double> radii{0.5, 1.0, 2.0, 4.0, 8.0};
  const EntropyProfile disk = entropy_profile(ConvexDomain::disk(), radii, {});
  for (const ConvexDomain& d : {regular_polygon(12), zero_entropy_domain(10), regular_polygon(5)}) {
    const EntropyProfile p = entropy_profile(d, radii, {});
    REQUIRE(p.samples.size() == radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) CHECK(p.samples[i].ratio <= disk.samples[i].ratio + 0.05);
    CHECK(p.samples.back().ratio <= 1.1);
  }
  // The disk ratio is 1 + ln(π)/R + o(1/R), above 1.1 until R ≈ 11.5.
  CHECK(entropy_profile(ConvexDomain::disk(), {30.0}, {}).samples[0].ratio <= 1.1);
}
