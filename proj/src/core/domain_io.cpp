#include "domain_io.hpp"

#include <json.hpp>

namespace hilbert {

using nlohmann::json;

namespace {

json report_json(const ConstructionReport& r) {
  return {{"n", r.n},
          {"theta_k", r.theta_k},
          {"alpha_k", r.alpha_k},
          {"theta_infinity", r.theta_infinity},
          {"ring_vertex_counts", r.ring_vertex_counts},
          {"collapsed_rings", r.collapsed_rings}};
}

bool single_vertex_runs(const Boundary& b) {
  for (const AngleRun& r : b.runs())
    if (r.count != 1 || r.arc_after) return false;
  return true;
}

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

double number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) parse_fail(std::string("expected a number at \"") + key + "\"");
  return j[key].get<double>();
}

std::vector<double> numbers(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j[key].is_array()) parse_fail(std::string("\"") + key + "\" must be an array");
  std::vector<double> out;
  for (const json& v : j[key]) {
    if (!v.is_number()) parse_fail(std::string("\"") + key + "\" must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

std::string report_to_json(const ConstructionReport& report) { return report_json(report).dump(2); }

std::string domain_to_json(const ConvexDomain& domain, const ConstructionReport* report) {
  json j;
  switch (domain.kind()) {
    case ConvexDomain::Kind::kUnitDisk: j["type"] = "disk"; break;
    case ConvexDomain::Kind::kImplicitRingPolygon: {
      j["type"] = "rings";
      json rings = json::array();
      for (const RingSpec& r : domain.ring_specs())
        rings.push_back({{"start", r.start}, {"step", r.step}, {"count", r.count}});
      j["rings"] = rings;
      j["closures"] = domain.closures();
      json arcs = json::array();
      for (const auto& [a, b] : domain.arcs()) arcs.push_back({a, b});
      j["arcs"] = arcs;
      break;
    }
    case ConvexDomain::Kind::kExplicitPolygon: {
      j["type"] = "polygon";
      const Boundary& b = domain.boundary();
      if (!b.on_circle()) {
        json v = json::array();
        for (const Point2& p : b.cartesian_vertices()) v.push_back({p.x, p.y});
        j["vertices"] = v;
      } else if (single_vertex_runs(b)) {
        j["angles"] = domain.angles();
      } else {
        json runs = json::array();
        for (const AngleRun& r : b.runs())
          runs.push_back({{"start", r.start}, {"step", r.step}, {"count", r.count}, {"arc_after", r.arc_after}});
        j["runs"] = runs;
      }
      break;
    }
  }
  if (report) j["construction"] = report_json(*report);
  return j.dump(2) + "\n";
}

ConvexDomain domain_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) parse_fail("domain needs a \"type\" string");
  const std::string type = j["type"].get<std::string>();
  try {
    if (type == "disk") return ConvexDomain::disk();
    if (type == "rings") {
      std::vector<RingSpec> rings;
      if (j.contains("rings")) {
        if (!j["rings"].is_array()) parse_fail("\"rings\" must be an array");
        for (const json& r : j["rings"]) rings.push_back({number(r, "start"), number(r, "step"), number(r, "count")});
      }
      std::vector<std::pair<double, double>> arcs;
      if (j.contains("arcs")) {
        if (!j["arcs"].is_array()) parse_fail("\"arcs\" must be an array");
        for (const json& a : j["arcs"]) {
          if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number())
            parse_fail("each arc is a pair of angles");
          arcs.emplace_back(a[0].get<double>(), a[1].get<double>());
        }
      }
      return ConvexDomain::rings(std::move(rings), numbers(j, "closures"), std::move(arcs));
    }
    if (type == "polygon") {
      const int forms = int(j.contains("angles")) + int(j.contains("vertices")) + int(j.contains("runs"));
      if (forms != 1) parse_fail("polygon needs exactly one of \"angles\", \"vertices\", \"runs\"");
      if (j.contains("angles")) return ConvexDomain::circle_polygon(numbers(j, "angles"));
      if (j.contains("vertices")) {
        std::vector<Point2> v;
        if (!j["vertices"].is_array()) parse_fail("\"vertices\" must be an array");
        for (const json& p : j["vertices"]) {
          if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
            parse_fail("each vertex is an [x, y] pair");
          v.push_back({p[0].get<double>(), p[1].get<double>()});
        }
        return ConvexDomain::polygon(std::move(v));
      }
      std::vector<AngleRun> runs;
      if (!j["runs"].is_array()) parse_fail("\"runs\" must be an array");
      for (const json& r : j["runs"]) {
        if (!r.contains("count") || !r["count"].is_number_integer()) parse_fail("run count must be an integer");
        const bool arc = r.contains("arc_after") && r["arc_after"].is_boolean() && r["arc_after"].get<bool>();
        runs.push_back({number(r, "start"), number(r, "step"), r["count"].get<int64_t>(), arc});
      }
      return ConvexDomain::angle_runs(std::move(runs));
    }
  } catch (const json::exception& e) {
    parse_fail(std::string("malformed domain: ") + e.what());
  }
  parse_fail("unknown domain type \"" + type + "\"");
}

}  // namespace hilbert
