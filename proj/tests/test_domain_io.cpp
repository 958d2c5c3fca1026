#include <doctest.h>

#include <cmath>
#include <random>

#include "constructions.hpp"
#include "domain_io.hpp"

using namespace hilbert;

namespace {

void check_round_trip(const ConvexDomain& d) {
  const std::string text = domain_to_json(d);
  const ConvexDomain back = domain_from_json(text);
  CHECK(back.kind() == d.kind());
  CHECK(domain_to_json(back) == text);
  if (d.angle_form()) {
    const auto& a = d.boundary().runs();
    const auto& b = back.boundary().runs();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].start == b[i].start);
      CHECK(a[i].step == b[i].step);
      CHECK(a[i].count == b[i].count);
    }
  }
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int checked = 0;
  while (checked < 1000) {
    const Point2 p{0.7 * u(rng), 0.7 * u(rng)};
    const Vec2 v{u(rng), u(rng)};
    if (!contains(d, p) || v.norm() < 1e-3) continue;
    const Chord c1 = chord(d, p, v), c2 = chord(back, p, v);
    CHECK(std::abs(c1.t_plus - c2.t_plus) <= 1e-15 * (1.0 + std::abs(c1.t_plus)));
    CHECK(std::abs(c1.t_minus - c2.t_minus) <= 1e-15 * (1.0 + std::abs(c1.t_minus)));
    ++checked;
  }
}

int parse_code(const std::string& text) {
  try {
    domain_from_json(text);
  } catch (const Error& e) {
    return static_cast<int>(e.code());
  }
  return -1;
}

}  // namespace

TEST_CASE("domains survive a JSON round trip") {
  check_round_trip(ConvexDomain::disk());
  check_round_trip(square());
  check_round_trip(ConvexDomain::polygon({{-0.9, -0.4}, {0.8, -0.7}, {0.6, 0.9}, {-0.5, 0.6}}));
  check_round_trip(regular_polygon(10000));
  check_round_trip(zero_entropy_domain(30));
  check_round_trip(no_limit_domain({}).first);
}

TEST_CASE("angle lists keep their exact bits") {
  const std::vector<double> angles{0.0, 0.1 + 1e-17, 1.0 / 3.0, std::nextafter(2.0, 3.0), 4.5};
  const ConvexDomain back = domain_from_json(domain_to_json(ConvexDomain::circle_polygon(angles)));
  CHECK(back.angles() == angles);
}

TEST_CASE("the construction report rides along and is ignored on input") {
  const auto [d, rep] = no_limit_domain({});
  const std::string text = domain_to_json(d, &rep);
  CHECK(text.find("\"construction\"") != std::string::npos);
  CHECK(text.find("\"theta_infinity\"") != std::string::npos);
  CHECK(domain_to_json(domain_from_json(text)) == domain_to_json(d));
}

TEST_CASE("malformed input is rejected") {
  const int parse = static_cast<int>(ErrorCode::kParseError);
  CHECK(parse_code("{") == parse);
  CHECK(parse_code("[]") == parse);
  CHECK(parse_code(R"({"type": "blob"})") == parse);
  CHECK(parse_code(R"({"type": "polygon"})") == parse);
  CHECK(parse_code(R"({"type": "polygon", "angles": [0, "x", 2]})") == parse);
  CHECK(parse_code(R"({"type": "polygon", "angles": [0, 1], "vertices": []})") == parse);
  CHECK(parse_code(R"({"type": "polygon", "vertices": [[0, 1], [2]]})") == parse);
  CHECK(parse_code(R"({"type": "rings", "rings": [{"start": 0}]})") == parse);
  // Well-formed but geometrically invalid shapes keep the geometry error.
  CHECK(parse_code(R"({"type": "polygon", "angles": [0, 1]})") == static_cast<int>(ErrorCode::kDegenerateInput));
  CHECK(parse_code(R"({"type": "polygon", "angles": [2, 1, 3]})") == static_cast<int>(ErrorCode::kInvalidArgument));
}
