// hilbert: command-line front end over the shared library's C interface.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hilbert/hilbert.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitBudget = 2;

struct Failure {
  int code;
  std::string message;
};

void check(hb_status s) {
  if (s == HB_OK) return;
  throw Failure{s == HB_BUDGET_EXCEEDED ? kExitBudget : kExitValidation,
                std::string(hb_status_name(s)) + ": " + hb_last_error()};
}

[[noreturn]] void invalid(const std::string& msg) { throw Failure{kExitValidation, msg}; }

struct DomainDeleter {
  void operator()(hb_domain* d) const { hb_domain_free(d); }
};
using Domain = std::unique_ptr<hb_domain, DomainDeleter>;

struct StringDeleter {
  void operator()(char* s) const { hb_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    invalid("not a number: '" + s + "'");
  }
  if (used != s.size()) invalid("not a number: '" + s + "'");
  return v;
}

int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    invalid("not an integer: '" + s + "'");
  }
  if (used != s.size()) invalid("not an integer: '" + s + "'");
  return v;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  for (const std::string& x : split(s, ',')) v.push_back(parse_double(x));
  return v;
}

std::vector<double> parse_tuple(const std::string& s, std::size_t n, const char* what) {
  std::vector<double> v = parse_list(s);
  if (v.size() != n) invalid(std::string(what) + " needs " + std::to_string(n) + " comma-separated numbers");
  return v;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) invalid("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TowerFlags {
  std::string rule{"tower"};
  int64_t n0{0};  // 0 keeps the library default
  std::string list;
  int max_rings{0};
};

hb_tower_spec tower_spec(const TowerFlags& f, std::vector<double>& list_storage) {
  hb_tower_spec s;
  hb_tower_spec_default(&s);
  if (f.rule == "tower") {
    s.rule = HB_RULE_TOWER;
  } else if (f.rule == "squaring") {
    s.rule = HB_RULE_SQUARING;
  } else if (f.rule == "list") {
    s.rule = HB_RULE_EXPLICIT;
  } else {
    invalid("unknown sequence rule '" + f.rule + "'");
  }
  if (f.n0 != 0) s.n0 = f.n0;
  if (f.max_rings != 0) s.max_rings = f.max_rings;
  if (!f.list.empty()) {
    if (s.rule != HB_RULE_EXPLICIT) invalid("--list needs --rule list");
    list_storage = parse_list(f.list);
  }
  if (s.rule == HB_RULE_EXPLICIT && list_storage.empty()) invalid("--rule list needs --list");
  s.explicit_list = list_storage.data();
  s.explicit_count = list_storage.size();
  return s;
}

// builtin names: disk, square, ngon:<n>, zero-entropy:<N>,
// no-limit[:tower[:n0] | :squaring:<n0> | :list:<a,b,...>]
Domain builtin_domain(const std::string& name) {
  const std::vector<std::string> parts = split(name, ':');
  hb_domain* d = nullptr;
  const std::string& head = parts.empty() ? name : parts[0];
  if (head == "disk" && parts.size() == 1) {
    check(hb_domain_disk(&d));
  } else if (head == "square" && parts.size() == 1) {
    check(hb_domain_square(&d));
  } else if (head == "ngon" && parts.size() == 2) {
    check(hb_domain_regular_polygon(parse_int(parts[1]), &d));
  } else if (head == "zero-entropy" && parts.size() == 2) {
    check(hb_domain_zero_entropy(static_cast<int>(parse_int(parts[1])), &d));
  } else if (head == "no-limit" && parts.size() <= 3) {
    TowerFlags f;
    if (parts.size() >= 2) f.rule = parts[1];
    if (parts.size() == 3) {
      if (f.rule == "list") {
        f.list = parts[2];
      } else {
        f.n0 = parse_int(parts[2]);
      }
    }
    std::vector<double> storage;
    const hb_tower_spec s = tower_spec(f, storage);
    check(hb_domain_no_limit(&s, &d));
  } else {
    invalid("unknown builtin domain '" + name + "'");
  }
  return Domain(d);
}

Domain load_domain(const std::string& source) {
  if (source.empty()) invalid("--domain is required");
  static const std::string kPrefix = "builtin:";
  if (source.rfind(kPrefix, 0) == 0) return builtin_domain(source.substr(kPrefix.size()));
  const std::string text = read_file(source);
  hb_domain* d = nullptr;
  check(hb_domain_from_json(text.c_str(), &d));
  return Domain(d);
}

struct Common {
  std::string domain;
  uint64_t seed{0};
  std::string out;
  std::string format{"csv"};
  int threads{1};
};

void add_common(CLI::App* app, Common& c, bool with_domain) {
  if (with_domain) app->add_option("--domain", c.domain, "Domain JSON file or builtin:NAME");
  app->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  app->add_option("--out", c.out, "Write results here instead of stdout");
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1, 1024))->capture_default_str();
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f || !(f << text) || !(f.flush())) invalid("cannot write '" + c.out + "'");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct QuadFlags {
  int radial_order{0};
  int angular_refinement{-1};
  int64_t mc_samples{0};
  int64_t max_evaluations{0};
};

void add_quad(CLI::App* app, QuadFlags& q) {
  app->add_option("--radial-order", q.radial_order, "Gauss points per radial panel");
  app->add_option("--angular-refinement", q.angular_refinement, "Angular panel halvings");
  app->add_option("--mc-samples", q.mc_samples, "Monte Carlo samples");
  app->add_option("--max-evals", q.max_evaluations, "Density evaluation budget");
}

hb_quadrature quadrature(const Common& c, const QuadFlags& f) {
  hb_quadrature q;
  hb_quadrature_default(&q);
  if (f.radial_order != 0) q.radial_order = f.radial_order;
  if (f.angular_refinement >= 0) q.angular_refinement = f.angular_refinement;
  if (f.mc_samples != 0) q.mc_samples = f.mc_samples;
  if (f.max_evaluations != 0) q.max_evaluations = f.max_evaluations;
  q.seed = c.seed;
  q.threads = c.threads;
  return q;
}

// ---- subcommands ----

struct GenFlags {
  std::string kind;
  int64_t n{0};
  int N{30};
  TowerFlags tower;
};

int run_gen(const Common& c, const GenFlags& g) {
  if (c.format != "json" && c.format != "csv") invalid("unknown format");
  Domain d;
  if (!c.domain.empty()) {
    d = load_domain(c.domain);
  } else if (g.kind == "disk") {
    d = builtin_domain("disk");
  } else if (g.kind == "square") {
    d = builtin_domain("square");
  } else if (g.kind == "ngon") {
    if (g.n < 3) invalid("ngon needs --n >= 3");
    hb_domain* p = nullptr;
    check(hb_domain_regular_polygon(g.n, &p));
    d.reset(p);
  } else if (g.kind == "zero-entropy") {
    hb_domain* p = nullptr;
    check(hb_domain_zero_entropy(g.N, &p));
    d.reset(p);
  } else if (g.kind == "no-limit") {
    std::vector<double> storage;
    const hb_tower_spec s = tower_spec(g.tower, storage);
    hb_domain* p = nullptr;
    check(hb_domain_no_limit(&s, &p));
    d.reset(p);
  } else {
    invalid("gen needs a domain kind or --domain");
  }
  char* text = nullptr;
  check(hb_domain_to_json(d.get(), &text));
  OwnedString owned(text);
  emit(c, std::string(text) + "\n");
  return 0;
}

int run_dist(const Common& c, const std::string& p, const std::string& q) {
  const Domain d = load_domain(c.domain);
  const auto pp = parse_tuple(p, 2, "--p");
  const auto qq = parse_tuple(q, 2, "--q");
  double v = 0.0;
  check(hb_distance(d.get(), pp.data(), qq.data(), &v));
  if (c.format == "json")
    emit(c, dump({{"p", pp}, {"q", qq}, {"distance", v}}));
  else
    emit(c, fmt17(v) + "\n");
  return 0;
}

int run_finsler(const Common& c, const std::string& p, const std::string& v) {
  const Domain d = load_domain(c.domain);
  const auto pp = parse_tuple(p, 2, "--p");
  const auto vv = parse_tuple(v, 2, "--v");
  double f = 0.0;
  check(hb_finsler_norm(d.get(), pp.data(), vv.data(), &f));
  if (c.format == "json")
    emit(c, dump({{"p", pp}, {"v", vv}, {"norm", f}}));
  else
    emit(c, fmt17(f) + "\n");
  return 0;
}

int run_unit_ball(const Common& c, const std::string& p, int samples) {
  const Domain d = load_domain(c.domain);
  const auto pp = parse_tuple(p, 2, "--p");
  hb_domain_info info;
  check(hb_domain_info_get(d.get(), &info));
  std::vector<double> xy;
  double area = 0.0;
  if (info.kind == HB_KIND_DISK) {
    // An ellipse: sample its boundary through the norm.
    if (samples < 3) invalid("--samples must be at least 3");
    check(hb_unit_ball_area(d.get(), pp.data(), &area));
    for (int i = 0; i < samples; ++i) {
      const double t = 2.0 * M_PI * i / samples;
      const double v[2] = {std::cos(t), std::sin(t)};
      double f = 0.0;
      check(hb_finsler_norm(d.get(), pp.data(), v, &f));
      xy.push_back(v[0] / f);
      xy.push_back(v[1] / f);
    }
  } else {
    double* buf = nullptr;
    size_t count = 0;
    check(hb_unit_ball(d.get(), pp.data(), &buf, &count, &area));
    xy.assign(buf, buf + 2 * count);
    hb_doubles_free(buf);
  }
  if (c.format == "json") {
    json verts = json::array();
    for (std::size_t i = 0; i + 1 < xy.size(); i += 2) verts.push_back({xy[i], xy[i + 1]});
    emit(c, dump({{"p", pp}, {"area", area}, {"exact", info.kind != HB_KIND_DISK}, {"vertices", verts}}));
  } else {
    std::string s = "x,y\n";
    for (std::size_t i = 0; i + 1 < xy.size(); i += 2) s += fmt17(xy[i]) + "," + fmt17(xy[i + 1]) + "\n";
    emit(c, s);
    std::cerr << "area " << fmt17(area) << "\n";
  }
  return 0;
}

struct BallVolFlags {
  double R{0.0};
  std::string method{"quad"};
  std::string sector;
  std::string cap;
};

int run_ball_vol(const Common& c, const QuadFlags& qf, const BallVolFlags& b) {
  const Domain d = load_domain(c.domain);
  const hb_quadrature q = quadrature(c, qf);
  hb_measure m;
  const bool sector = !b.sector.empty() || !b.cap.empty();
  if (b.method == "mc") {
    if (sector) invalid("--sector and --cap need --method quad");
    check(hb_ball_volume_mc(d.get(), b.R, &q, &m));
  } else if (sector) {
    std::vector<double> ab{0.0, 2.0 * M_PI};
    if (!b.sector.empty()) ab = parse_tuple(b.sector, 2, "--sector");
    std::vector<double> cap;
    if (!b.cap.empty()) cap = parse_tuple(b.cap, 3, "--cap");
    check(hb_sector_ball_volume(d.get(), b.R, ab[0], ab[1], cap.empty() ? nullptr : cap.data(), &q, &m));
  } else {
    check(hb_ball_volume(d.get(), b.R, &q, &m));
  }
  const char* method = m.monte_carlo ? "mc" : "quad";
  if (c.format == "json") {
    emit(c, dump({{"R", b.R},
                  {"mu", m.value},
                  {"err", m.error_estimate},
                  {"method", method},
                  {"evaluations", m.evaluations}}));
  } else {
    emit(c, "R,mu,err,method,evaluations\n" + fmt17(b.R) + "," + fmt17(m.value) + "," +
                fmt17(m.error_estimate) + "," + method + "," + std::to_string(m.evaluations) + "\n");
  }
  return 0;
}

struct ProfileFlags {
  std::string radii;
  double lo{0.5};
  double hi{30.0};
  int per_decade{24};
};

std::vector<double> profile_radii(const ProfileFlags& f) {
  if (!f.radii.empty()) return parse_list(f.radii);
  double* buf = nullptr;
  size_t n = 0;
  check(hb_log_grid(f.lo, f.hi, f.per_decade, &buf, &n));
  std::vector<double> r(buf, buf + n);
  hb_doubles_free(buf);
  return r;
}

json csv_rows(const std::string& csv) {
  json rows = json::array();
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 4) continue;
    rows.push_back({{"R", parse_double(f[0])},
                    {"mu", parse_double(f[1])},
                    {"ratio", parse_double(f[2])},
                    {"err", parse_double(f[3])}});
  }
  return rows;
}

int run_profile(const Common& c, const QuadFlags& qf, const ProfileFlags& pf) {
  const Domain d = load_domain(c.domain);
  const hb_quadrature q = quadrature(c, qf);
  const std::vector<double> radii = profile_radii(pf);
  std::vector<hb_profile_sample> samples(radii.size());
  char* csv = nullptr;
  check(hb_profile(d.get(), radii.data(), radii.size(), &q, samples.data(), &csv));
  OwnedString owned(csv);
  std::vector<double> failed;
  for (const hb_profile_sample& s : samples)
    if (!s.computed) failed.push_back(s.R);
  if (c.format == "json") {
    emit(c, dump({{"samples", csv_rows(csv)}, {"failed_radii", failed}}));
  } else {
    emit(c, csv);
  }
  if (!failed.empty()) {
    std::cerr << "evaluation budget exceeded at " << failed.size() << " radii, first R = " << fmt17(failed[0])
              << "\n";
    return kExitBudget;
  }
  return 0;
}

int run_oscillation(const Common& c, const QuadFlags& qf, const TowerFlags& tf) {
  std::vector<double> storage;
  const hb_tower_spec s = tower_spec(tf, storage);
  const hb_quadrature q = quadrature(c, qf);
  hb_oscillation_summary sum;
  char* csv = nullptr;
  check(hb_oscillation(&s, &q, &sum, &csv));
  OwnedString owned(csv);
  const json summary = {{"peak_radius", sum.peak_radius}, {"peak_ratio", sum.peak_ratio},
                        {"last_radius", sum.last_radius}, {"last_ratio", sum.last_ratio},
                        {"theta_infinity", sum.theta_infinity}, {"samples", sum.sample_count},
                        {"failed", sum.failed_count}};
  if (c.format == "json") {
    json j = summary;
    j["profile"] = csv_rows(csv);
    emit(c, dump(j));
  } else {
    emit(c, csv);
    std::cerr << "peak ratio " << fmt17(sum.peak_ratio) << " at R = " << fmt17(sum.peak_radius) << "; ratio "
              << fmt17(sum.last_ratio) << " at R = " << fmt17(sum.last_radius) << "\n";
  }
  if (sum.failed_count > 0) {
    std::cerr << sum.failed_count << " radii exceeded the evaluation budget\n";
    return kExitBudget;
  }
  return 0;
}

int run_cubic(const Common& c, const QuadFlags& qf, int N, const std::string& radii_flag) {
  std::vector<double> radii;
  if (radii_flag.empty()) {
    for (int r = 1; r <= 15; ++r) radii.push_back(r);
  } else {
    radii = parse_list(radii_flag);
  }
  const hb_quadrature q = quadrature(c, qf);
  std::vector<hb_cubic_sample> samples(radii.size());
  double tau = 0.0;
  check(hb_cubic(N, radii.data(), radii.size(), &q, &tau, samples.data()));
  int failed = 0;
  for (const hb_cubic_sample& s : samples) failed += std::isnan(s.mu) ? 1 : 0;
  if (c.format == "json") {
    json rows = json::array();
    for (const hb_cubic_sample& s : samples) {
      json row = {{"R", s.R}, {"bound", s.bound}, {"holds", s.holds != 0}};
      row["mu"] = std::isnan(s.mu) ? json(nullptr) : json(s.mu);
      rows.push_back(row);
    }
    emit(c, dump({{"N", N}, {"tau", tau}, {"samples", rows}}));
  } else {
    std::string out = "R,mu,bound,holds\n";
    for (const hb_cubic_sample& s : samples)
      out += fmt17(s.R) + "," + fmt17(s.mu) + "," + fmt17(s.bound) + "," + (s.holds ? "1" : "0") + "\n";
    emit(c, out);
    std::cerr << "tau " << fmt17(tau) << "\n";
  }
  if (failed > 0) {
    std::cerr << failed << " radii exceeded the evaluation budget\n";
    return kExitBudget;
  }
  return 0;
}

int run_verify(const Common& c) {
  const Domain d = load_domain(c.domain);
  char* report = nullptr;
  int failures = 0;
  check(hb_verify(d.get(), c.seed, c.threads, &report, &failures));
  OwnedString owned(report);
  if (c.format == "json") {
    json lines = json::array();
    for (const std::string& l : split(report, '\n'))
      if (!l.empty()) lines.push_back(l);
    emit(c, dump({{"checks", lines}, {"failures", failures}}));
  } else {
    emit(c, report);
  }
  return failures == 0 ? 0 : kExitValidation;
}

struct SvgFlags {
  double R{1.0};
  std::string center{"0,0"};
  int samples{0};
  std::string ball_point{"0,0"};
  double ball_scale{0.0};
  int size{0};
};

int run_svg(const Common& c, const SvgFlags& f) {
  const Domain d = load_domain(c.domain);
  hb_svg_options o;
  hb_svg_options_default(&o);
  o.radius = f.R;
  const auto ce = parse_tuple(f.center, 2, "--center");
  const auto bp = parse_tuple(f.ball_point, 2, "--ball-point");
  o.center[0] = ce[0];
  o.center[1] = ce[1];
  o.ball_point[0] = bp[0];
  o.ball_point[1] = bp[1];
  if (f.samples != 0) o.sphere_samples = f.samples;
  if (f.ball_scale != 0.0) o.ball_scale = f.ball_scale;
  if (f.size != 0) o.size_px = f.size;
  char* svg = nullptr;
  check(hb_render_svg(d.get(), &o, &svg));
  OwnedString owned(svg);
  emit(c, svg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert metric geometry on planar convex domains"};
  app.require_subcommand(1);

  Common common;
  QuadFlags quad;

  auto* gen = app.add_subcommand("gen", "Write a domain as JSON");
  GenFlags g;
  auto* kind = gen->add_option("kind", g.kind, "disk, square, ngon, no-limit or zero-entropy")
                   ->check(CLI::IsMember({"disk", "square", "ngon", "no-limit", "zero-entropy"}));
  gen->add_option("--n", g.n, "ngon vertex count");
  gen->add_option("--N", g.N, "zero-entropy point count")->capture_default_str();
  gen->add_option("--rule", g.tower.rule, "no-limit ring sequence: tower, squaring or list")->capture_default_str();
  gen->add_option("--n0", g.tower.n0, "first ring size");
  gen->add_option("--list", g.tower.list, "explicit ring sizes a,b,...");
  gen->add_option("--max-rings", g.tower.max_rings, "ring cap");
  add_common(gen, common, true);
  gen->get_option("--domain")->excludes(kind);

  std::string p, q, v;
  auto* dist = app.add_subcommand("dist", "Hilbert distance d(p, q)");
  dist->add_option("--p", p, "x,y")->required();
  dist->add_option("--q", q, "x,y")->required();
  add_common(dist, common, true);

  auto* finsler = app.add_subcommand("finsler", "Finsler norm F(p, v)");
  finsler->add_option("--p", p, "x,y")->required();
  finsler->add_option("--v", v, "x,y")->required();
  add_common(finsler, common, true);

  int ball_samples = 256;
  auto* unit_ball = app.add_subcommand("unit-ball", "Tangent unit ball at p");
  unit_ball->add_option("--p", p, "x,y")->required();
  unit_ball->add_option("--samples", ball_samples, "boundary samples for the disk's ellipse")->capture_default_str();
  add_common(unit_ball, common, true);

  BallVolFlags bv;
  auto* ball_vol = app.add_subcommand("ball-vol", "Busemann volume of B(0, R)");
  ball_vol->add_option("--R", bv.R, "radius")->required();
  ball_vol->add_option("--method", bv.method, "quad or mc")->check(CLI::IsMember({"quad", "mc"}))->capture_default_str();
  ball_vol->add_option("--sector", bv.sector, "polar angle range a,b");
  ball_vol->add_option("--cap", bv.cap, "half-plane nx,ny,c keeping nx·x + ny·y < c");
  add_quad(ball_vol, quad);
  add_common(ball_vol, common, true);

  ProfileFlags pf;
  auto* profile = app.add_subcommand("profile", "Entropy profile ln μ(B(0, R)) / R");
  auto* radii_opt = profile->add_option("--radii", pf.radii, "explicit radii r1,r2,...");
  profile->add_option("--lo", pf.lo, "log grid start")->capture_default_str()->excludes(radii_opt);
  profile->add_option("--hi", pf.hi, "log grid end")->capture_default_str()->excludes(radii_opt);
  profile->add_option("--per-decade", pf.per_decade, "log grid density")->capture_default_str()->excludes(radii_opt);
  add_quad(profile, quad);
  add_common(profile, common, true);

  TowerFlags tf;
  auto* osc = app.add_subcommand("oscillation", "Profile of the no-limit domain");
  osc->add_option("--rule", tf.rule, "tower, squaring or list")->capture_default_str();
  osc->add_option("--n0", tf.n0, "first ring size");
  osc->add_option("--list", tf.list, "explicit ring sizes a,b,...");
  osc->add_option("--max-rings", tf.max_rings, "ring cap");
  add_quad(osc, quad);
  add_common(osc, common, false);

  int cubic_n = 30;
  std::string cubic_radii;
  auto* cubic = app.add_subcommand("cubic", "Cubic volume bound on the zero-entropy domain");
  cubic->add_option("--N", cubic_n, "point count")->capture_default_str();
  cubic->add_option("--radii", cubic_radii, "radii r1,r2,... (default 1..15)");
  add_quad(cubic, quad);
  add_common(cubic, common, false);

  auto* verify = app.add_subcommand("verify", "Check the metric and volume properties");
  add_common(verify, common, true);

  SvgFlags sf;
  auto* svg = app.add_subcommand("svg", "Boundary, metric sphere and tangent unit ball as SVG");
  svg->add_option("--R", sf.R, "sphere radius")->capture_default_str();
  svg->add_option("--center", sf.center, "sphere center x,y")->capture_default_str();
  svg->add_option("--samples", sf.samples, "sphere samples");
  svg->add_option("--ball-point", sf.ball_point, "unit ball base point x,y")->capture_default_str();
  svg->add_option("--ball-scale", sf.ball_scale, "unit ball drawing scale");
  svg->add_option("--size", sf.size, "picture size in pixels");
  add_common(svg, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*gen) return run_gen(common, g);
    if (*dist) return run_dist(common, p, q);
    if (*finsler) return run_finsler(common, p, v);
    if (*unit_ball) return run_unit_ball(common, p, ball_samples);
    if (*ball_vol) return run_ball_vol(common, quad, bv);
    if (*profile) return run_profile(common, quad, pf);
    if (*osc) return run_oscillation(common, quad, tf);
    if (*cubic) return run_cubic(common, quad, cubic_n, cubic_radii);
    if (*verify) return run_verify(common);
    if (*svg) return run_svg(common, sf);
  } catch (const Failure& f) {
    std::cerr << "hilbert: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "hilbert: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
