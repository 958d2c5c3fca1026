#include "hilbert/hilbert.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "constructions.hpp"
#include "domain_io.hpp"
#include "entropy.hpp"
#include "measure.hpp"
#include "metric.hpp"
#include "svg.hpp"
#include "unit_ball.hpp"
#include "verify.hpp"

struct hb_domain {
  hilbert::ConvexDomain domain;
  std::optional<hilbert::ConstructionReport> report;
};

namespace {

using namespace hilbert;

thread_local std::string last_error;

hb_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::kInvalidArgument: return HB_INVALID_ARGUMENT;
    case ErrorCode::kPointOutsideDomain: return HB_POINT_OUTSIDE_DOMAIN;
    case ErrorCode::kZeroDirection: return HB_ZERO_DIRECTION;
    case ErrorCode::kDegenerateInput: return HB_DEGENERATE_INPUT;
    case ErrorCode::kSingularMatrix: return HB_SINGULAR_MATRIX;
    case ErrorCode::kNotPolygonal: return HB_NOT_POLYGONAL;
    case ErrorCode::kBudgetExceeded: return HB_BUDGET_EXCEEDED;
    case ErrorCode::kInvalidSequence: return HB_INVALID_SEQUENCE;
    case ErrorCode::kBadArity: return HB_BAD_ARITY;
    case ErrorCode::kEmptyProfile: return HB_EMPTY_PROFILE;
    case ErrorCode::kParseError: return HB_PARSE_ERROR;
    case ErrorCode::kIoError: return HB_IO_ERROR;
  }
  return HB_INTERNAL;
}

template <class F>
hb_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return HB_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return HB_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hb_status make(hb_domain** out, auto&& build) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = new hb_domain{build(), std::nullopt};
  });
}

QuadratureSpec spec_of(const hb_quadrature* q) {
  QuadratureSpec s;
  if (!q) return s;
  s.radial_order = q->radial_order;
  s.angular_refinement = q->angular_refinement;
  s.mc_samples = q->mc_samples;
  s.seed = q->seed;
  s.threads = q->threads;
  s.max_evaluations = q->max_evaluations;
  return s;
}

TowerSequenceSpec tower_of(const hb_tower_spec* t) {
  TowerSequenceSpec s;
  if (!t) return s;
  s.n0 = t->n0;
  switch (t->rule) {
    case HB_RULE_TOWER: s.rule = SequenceRule::kTower; break;
    case HB_RULE_SQUARING: s.rule = SequenceRule::kSquaring; break;
    case HB_RULE_EXPLICIT: s.rule = SequenceRule::kExplicitList; break;
    default: throw Error(ErrorCode::kInvalidArgument, "unknown sequence rule");
  }
  require(t->explicit_count == 0 || t->explicit_list != nullptr, "null explicit list");
  s.explicit_list.assign(t->explicit_list, t->explicit_list + t->explicit_count);
  s.max_rings = t->max_rings;
  return s;
}

void fill(hb_measure* out, const MeasureResult& m) {
  *out = {m.value, m.error_estimate, m.method == Method::kMonteCarlo ? 1 : 0, m.evaluations};
}

const ConvexDomain& dom(const hb_domain* d) {
  require(d != nullptr, "null domain");
  return d->domain;
}

}  // namespace

extern "C" {

const char* hb_status_name(hb_status status) {
  switch (status) {
    case HB_OK: return "Ok";
    case HB_INVALID_ARGUMENT: return "InvalidArgument";
    case HB_POINT_OUTSIDE_DOMAIN: return "PointOutsideDomain";
    case HB_ZERO_DIRECTION: return "ZeroDirection";
    case HB_DEGENERATE_INPUT: return "DegenerateInput";
    case HB_SINGULAR_MATRIX: return "SingularMatrix";
    case HB_NOT_POLYGONAL: return "NotPolygonal";
    case HB_BUDGET_EXCEEDED: return "BudgetExceeded";
    case HB_INVALID_SEQUENCE: return "InvalidSequence";
    case HB_BAD_ARITY: return "BadArity";
    case HB_EMPTY_PROFILE: return "EmptyProfile";
    case HB_PARSE_ERROR: return "ParseError";
    case HB_IO_ERROR: return "IoError";
    case HB_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* hb_last_error(void) { return last_error.c_str(); }

void hb_string_free(char* s) { std::free(s); }

void hb_tower_spec_default(hb_tower_spec* spec) {
  if (!spec) return;
  const TowerSequenceSpec s;
  *spec = {s.n0, HB_RULE_TOWER, nullptr, 0, s.max_rings};
}

hb_status hb_domain_disk(hb_domain** out) {
  return make(out, [] { return ConvexDomain::disk(); });
}

hb_status hb_domain_square(hb_domain** out) {
  return make(out, [] { return square(); });
}

hb_status hb_domain_regular_polygon(int64_t n, hb_domain** out) {
  return make(out, [n] { return regular_polygon(n); });
}

hb_status hb_domain_polygon(const double* xy, size_t count, hb_domain** out) {
  return make(out, [&] {
    require(xy != nullptr || count == 0, "null vertex array");
    std::vector<Point2> v(count);
    for (size_t i = 0; i < count; ++i) v[i] = {xy[2 * i], xy[2 * i + 1]};
    return ConvexDomain::polygon(std::move(v));
  });
}

hb_status hb_domain_circle_polygon(const double* angles, size_t count, hb_domain** out) {
  return make(out, [&] {
    require(angles != nullptr || count == 0, "null angle array");
    return ConvexDomain::circle_polygon(std::vector<double>(angles, angles + count));
  });
}

hb_status hb_domain_no_limit(const hb_tower_spec* spec, hb_domain** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    auto built = no_limit_domain(tower_of(spec));
    *out = new hb_domain{std::move(built.first), std::move(built.second)};
  });
}

hb_status hb_domain_zero_entropy(int N, hb_domain** out) {
  return make(out, [N] { return zero_entropy_domain(N); });
}

hb_status hb_domain_from_json(const char* text, hb_domain** out) {
  return make(out, [text] {
    require(text != nullptr, "null text");
    return domain_from_json(text);
  });
}

hb_status hb_domain_to_json(const hb_domain* d, char** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = copy_string(domain_to_json(dom(d), d->report ? &*d->report : nullptr));
  });
}

hb_status hb_domain_info_get(const hb_domain* d, hb_domain_info* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    const ConvexDomain& c = dom(d);
    hb_domain_info info{};
    switch (c.kind()) {
      case ConvexDomain::Kind::kExplicitPolygon: info.kind = HB_KIND_POLYGON; break;
      case ConvexDomain::Kind::kImplicitRingPolygon: info.kind = HB_KIND_RING_POLYGON; break;
      case ConvexDomain::Kind::kUnitDisk: info.kind = HB_KIND_DISK; break;
    }
    info.vertex_count = c.is_polygonal() ? c.boundary().vertex_count() : 0;
    info.centrally_symmetric = c.centrally_symmetric() ? 1 : 0;
    info.inscribed = inscribed_in_unit_disk(c) ? 1 : 0;
    const auto box = c.bounding_box();
    for (int i = 0; i < 4; ++i) info.bbox[i] = box[static_cast<size_t>(i)];
    *out = info;
  });
}

void hb_domain_free(hb_domain* d) { delete d; }

hb_status hb_distance(const hb_domain* d, const double p[2], const double q[2], double* out) {
  return guard([&] {
    require(p && q && out, "null argument");
    *out = hilbert_distance(dom(d), {p[0], p[1]}, {q[0], q[1]});
  });
}

hb_status hb_finsler_norm(const hb_domain* d, const double p[2], const double v[2], double* out) {
  return guard([&] {
    require(p && v && out, "null argument");
    const ConvexDomain& c = dom(d);
    if (!contains(c, {p[0], p[1]})) throw Error(ErrorCode::kPointOutsideDomain, "point is not inside the domain");
    *out = finsler_norm(c, {p[0], p[1]}, {v[0], v[1]});
  });
}

hb_status hb_unit_ball_area(const hb_domain* d, const double p[2], double* out) {
  return guard([&] {
    require(p && out, "null argument");
    *out = unit_ball_area(dom(d), {p[0], p[1]});
  });
}

hb_status hb_unit_ball(const hb_domain* d, const double p[2], double** xy, size_t* count, double* area) {
  return guard([&] {
    require(p && xy && count, "null argument");
    const UnitBallPolygon ball = unit_ball(dom(d), {p[0], p[1]});
    auto* buf = static_cast<double*>(std::malloc(2 * ball.vertices.size() * sizeof(double) + 1));
    if (!buf) throw std::bad_alloc();
    for (size_t i = 0; i < ball.vertices.size(); ++i) {
      buf[2 * i] = ball.vertices[i].x;
      buf[2 * i + 1] = ball.vertices[i].y;
    }
    *xy = buf;
    *count = ball.vertices.size();
    if (area) *area = ball.area;
  });
}

void hb_doubles_free(double* xy) { std::free(xy); }

hb_status hb_sphere_points(const hb_domain* d, const double center[2], double R, const double* angles,
                           size_t count, double* xy_out) {
  return guard([&] {
    require(center && (count == 0 || (angles && xy_out)), "null argument");
    const auto pts = metric_sphere_polyline(dom(d), {center[0], center[1]}, R, {angles, count});
    for (size_t i = 0; i < count; ++i) {
      xy_out[2 * i] = pts[i].x;
      xy_out[2 * i + 1] = pts[i].y;
    }
  });
}

void hb_quadrature_default(hb_quadrature* q) {
  if (!q) return;
  const QuadratureSpec s;
  *q = {s.radial_order, s.angular_refinement, s.mc_samples, s.seed, s.threads, s.max_evaluations};
}

hb_status hb_ball_volume(const hb_domain* d, double R, const hb_quadrature* q, hb_measure* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    fill(out, ball_volume(dom(d), R, spec_of(q)));
  });
}

hb_status hb_ball_volume_mc(const hb_domain* d, double R, const hb_quadrature* q, hb_measure* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    fill(out, ball_volume_mc(dom(d), R, spec_of(q)));
  });
}

hb_status hb_lebesgue_ball_area(const hb_domain* d, double R, const hb_quadrature* q, hb_measure* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    fill(out, lebesgue_ball_area(dom(d), R, spec_of(q)));
  });
}

hb_status hb_sector_ball_volume(const hb_domain* d, double R, double theta_a, double theta_b, const double* cap,
                                const hb_quadrature* q, hb_measure* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    std::optional<CapLine> c;
    if (cap) c = CapLine{{cap[0], cap[1]}, cap[2]};
    fill(out, sector_ball_volume(dom(d), R, theta_a, theta_b, c, spec_of(q)));
  });
}

hb_status hb_log_grid(double lo, double hi, int per_decade, double** radii, size_t* count) {
  return guard([&] {
    require(radii && count, "null output pointer");
    const std::vector<double> g = log_grid(lo, hi, per_decade);
    auto* buf = static_cast<double*>(std::malloc(g.size() * sizeof(double)));
    if (!buf) throw std::bad_alloc();
    std::copy(g.begin(), g.end(), buf);
    *radii = buf;
    *count = g.size();
  });
}

hb_status hb_profile(const hb_domain* d, const double* radii, size_t count, const hb_quadrature* q,
                     hb_profile_sample* samples_out, char** csv_out) {
  return guard([&] {
    require(count == 0 || (radii && samples_out), "null argument");
    const EntropyProfile p = entropy_profile(dom(d), std::vector<double>(radii, radii + count), spec_of(q));
    std::size_t k = 0;
    for (size_t i = 0; i < count; ++i) {
      if (k < p.samples.size() && p.samples[k].R == radii[i]) {
        const ProfileSample& s = p.samples[k++];
        samples_out[i] = {s.R, s.mu, s.ratio, s.error_estimate, 1};
      } else {
        samples_out[i] = {radii[i], NAN, NAN, NAN, 0};
      }
    }
    if (csv_out) *csv_out = copy_string(profile_csv(p));
  });
}

hb_status hb_oscillation(const hb_tower_spec* spec, const hb_quadrature* q, hb_oscillation_summary* out,
                         char** csv_out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    const OscillationReport r = oscillation_experiment(tower_of(spec), spec_of(q));
    *out = {r.peak_radius, r.peak_ratio,
            r.last_radius, r.last_ratio,
            r.construction.theta_infinity, r.profile.samples.size(),
            r.profile.failed_radii.size()};
    if (csv_out) *csv_out = copy_string(profile_csv(r.profile));
  });
}

hb_status hb_cubic(int N, const double* radii, size_t count, const hb_quadrature* q, double* tau_out,
                   hb_cubic_sample* samples_out) {
  return guard([&] {
    require(count == 0 || (radii && samples_out), "null argument");
    const CubicReport r = cubic_growth_check(N, std::vector<double>(radii, radii + count), spec_of(q));
    std::size_t k = 0;
    for (size_t i = 0; i < count; ++i) {
      if (k < r.samples.size() && r.samples[k].R == radii[i]) {
        const CubicSample& s = r.samples[k++];
        samples_out[i] = {s.R, s.mu, s.bound, s.holds ? 1 : 0};
      } else {
        samples_out[i] = {radii[i], NAN, NAN, 0};
      }
    }
    if (tau_out) *tau_out = r.tau;
  });
}

hb_status hb_verify(const hb_domain* d, uint64_t seed, int threads, char** report, int* failures) {
  return guard([&] {
    require(report != nullptr, "null output pointer");
    VerifyOptions o;
    o.seed = seed;
    o.threads = threads;
    std::string text;
    int fails = 0;
    for (const CheckResult& c : verify_domain(dom(d), o)) {
      text += format_check(c) + "\n";
      if (!c.pass()) ++fails;
    }
    *report = copy_string(text);
    if (failures) *failures = fails;
  });
}

void hb_svg_options_default(hb_svg_options* o) {
  if (!o) return;
  const SvgOptions s;
  *o = {s.radius, {s.center.x, s.center.y}, s.sphere_samples, {s.ball_point.x, s.ball_point.y}, s.ball_scale,
        s.size_px};
}

hb_status hb_render_svg(const hb_domain* d, const hb_svg_options* o, char** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    SvgOptions s;
    if (o) {
      s.radius = o->radius;
      s.center = {o->center[0], o->center[1]};
      s.sphere_samples = o->sphere_samples;
      s.ball_point = {o->ball_point[0], o->ball_point[1]};
      s.ball_scale = o->ball_scale;
      s.size_px = o->size_px;
    }
    *out = copy_string(render_svg(dom(d), s));
  });
}

}  // extern "C"
