#include "measure.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <functional>
#include <memory>
#include <string>

#include "anchor.hpp"
#include "metric.hpp"
#include "quadrature.hpp"

namespace hilbert {

namespace {

using detail::AnchorData;

constexpr double kMaxDiskRadius = 30.0;
constexpr double kMaxPolygonRadius = 300.0;
constexpr double kRadialPanelWidth = 1.0;
constexpr double kFineAngularPanel = 3.0;
constexpr double kAngularTail = 36.0;

struct Request {
  std::vector<double> radii;  // strictly increasing, positive
  bool sector{false};
  double theta_a{0.0};
  double theta_b{kTwoPi};
  std::optional<CapLine> cap;
  bool lebesgue{false};
  double budget_scale{1.0};
};

// Radial Gauss panels on [0, R_max] with a breakpoint at every radius.
struct RadialLayout {
  std::vector<double> lo, hi;
  std::vector<int> order;
  std::vector<std::size_t> radius_end;  // panels [0, radius_end[k]) make up radius k
  int64_t nodes{0};
};

RadialLayout radial_layout(const std::vector<double>& radii, int max_order) {
  RadialLayout L;
  double start = 0.0;
  for (double r : radii) {
    const double width = r - start;
    const int pieces = std::max(1, static_cast<int>(std::ceil(width / kRadialPanelWidth)));
    for (int j = 0; j < pieces; ++j) {
      const double a = start + width * j / pieces;
      const double b = j + 1 == pieces ? r : start + width * (j + 1) / pieces;
      L.lo.push_back(a);
      L.hi.push_back(b);
      L.order.push_back(max_order);
      L.nodes += max_order;
    }
    L.radius_end.push_back(L.lo.size());
    start = r;
  }
  return L;
}

// Integrates f over [0, min(R_k, rho_cap)] for every radius k; `out` receives
// cumulative values.
template <class F>
void radial_integrals(const RadialLayout& L, double rho_cap, F&& f, std::vector<double>& out) {
  std::size_t k = 0;
  double total = 0.0;
  for (std::size_t j = 0; j < L.lo.size(); ++j) {
    const double a = L.lo[j];
    const double b = std::min(L.hi[j], rho_cap);
    if (b > a) {
      const GaussRule& g = gauss_legendre(L.order[j]);
      const double c = 0.5 * (a + b), r = 0.5 * (b - a);
      double s = 0.0;
      for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * f(c + r * g.nodes[i]);
      total += s * r;
    }
    while (k < L.radius_end.size() && L.radius_end[k] == j + 1) out[k++] = total;
  }
}

// Hilbert radius of the cap crossing along a ray, or +inf when the ray leaves
// the domain first.
double cap_radius(const std::optional<CapLine>& cap, const Vec2& u, double tm, double tp) {
  if (!cap) return INFINITY;
  const double mu = dot(cap->normal, u);
  if (!(mu > 0.0)) return INFINITY;
  const double s = cap->offset / mu;
  if (s >= tp) return INFINITY;
  return 0.5 * (std::log1p(s / tm) - std::log((tp - s) / tp));
}

}  // namespace

namespace {

struct Task {
  int64_t edge{0};
  double weight{1.0};
  bool from_start{true};
  double lam_lo{0.0};  // range of the distance λ' from the base vertex
  double lam_hi{0.0};
  std::vector<double> kinks;  // λ' where the integrand has a kink
};

struct TaskResult {
  std::vector<double> value;
  std::vector<double> error;
};

void validate(const ConvexDomain& domain, const Request& req, const QuadratureSpec& q) {
  if (q.radial_order < 4 || q.radial_order > 64)
    throw Error(ErrorCode::kInvalidArgument, "radial_order must lie in [4, 64]");
  if (q.angular_refinement < 0 || q.angular_refinement > 6)
    throw Error(ErrorCode::kInvalidArgument, "angular_refinement must lie in [0, 6]");
  if (req.radii.empty()) throw Error(ErrorCode::kInvalidArgument, "no radii requested");
  double prev = 0.0;
  for (double r : req.radii) {
    if (!(r > prev) || !std::isfinite(r))
      throw Error(ErrorCode::kInvalidArgument, "radii must be positive and strictly increasing");
    prev = r;
  }
  const double limit = domain.is_polygonal() ? kMaxPolygonRadius : kMaxDiskRadius;
  if (prev > limit) throw Error(ErrorCode::kInvalidArgument, "radius above the supported range");
  if (req.sector && !(req.theta_b - req.theta_a >= 0.0 && req.theta_b - req.theta_a <= kTwoPi))
    throw Error(ErrorCode::kInvalidArgument, "sector must satisfy 0 <= theta_b - theta_a <= 2π");
  if (req.cap && !(req.cap->offset > 0.0))
    throw Error(ErrorCode::kInvalidArgument, "cap line must keep the origin on its inner side");
}

double edge_length(const Boundary& b, int64_t edge) {
  if (b.on_circle()) return 2.0 * std::sin(0.5 * b.edge_span(edge));
  return b.edge_vector(edge).norm();
}

// Polar angle range of an edge seen from the origin and the map from an angle
// offset within it to the distance λ from the start vertex.
struct EdgeParam {
  double phi{0.0};
  double span{0.0};
  double len{0.0};
  std::function<double(double)> lam;
};

EdgeParam edge_param(const Boundary& b, int64_t edge) {
  EdgeParam e;
  e.len = edge_length(b, edge);
  if (b.on_circle()) {
    e.phi = b.vertex_angle(edge);
    e.span = b.edge_span(edge);
    const double half = 0.5 * e.span;
    e.lam = [half](double o) { return std::sin(o) / std::cos(half - o); };
  } else {
    const Point2 va = b.vertex(edge), vb = b.vertex(b.next(edge));
    e.phi = std::atan2(va.y, va.x);
    e.span = std::atan2(cross(va, vb), dot(va, vb));
    const Vec2 t = (vb - va) / e.len;
    const double phi = e.phi;
    e.lam = [va, t, phi](double o) {
      const Vec2 u = unit_from_angle(phi + o);
      return cross(u, va) / cross(t, u);
    };
  }
  return e;
}

// Parts of an edge seen from the origin inside the sector, as ranges of the
// distance λ from its start vertex.
std::vector<std::pair<double, double>> clip_edge(const EdgeParam& e, const Request& req) {
  const double ws = req.theta_b - req.theta_a;
  if (!req.sector || ws >= kTwoPi) return {{0.0, e.len}};
  const double o = wrap_angle(req.theta_a - e.phi);
  std::vector<std::pair<double, double>> out;
  for (double start : {o, o - kTwoPi}) {
    const double lo = std::max(start, 0.0);
    const double hi = std::min(start + ws, e.span);
    if (hi > lo) {
      const double l1 = lo <= 0.0 ? 0.0 : std::clamp(e.lam(lo), 0.0, e.len);
      const double l2 = hi >= e.span ? e.len : std::clamp(e.lam(hi), 0.0, e.len);
      if (l2 > l1) out.emplace_back(l1, l2);
    }
  }
  return out;
}

// Distances λ from the start vertex at which the ray direction crosses one of
// the sorted polar angles in `kinks`.
std::vector<double> kinks_on_edge(const EdgeParam& e, const std::vector<double>& kinks) {
  std::vector<double> out;
  if (kinks.empty()) return out;
  const double lo = wrap_angle(e.phi);
  auto visit = [&](double from, double to, double shift) {
    for (auto it = std::upper_bound(kinks.begin(), kinks.end(), from);
         it != kinks.end() && *it < to; ++it) {
      const double l = e.lam(*it + shift - lo);
      if (l > 0.0 && l < e.len) out.push_back(l);
    }
  };
  visit(lo, lo + e.span, 0.0);
  if (lo + e.span > kTwoPi) visit(-1.0, lo + e.span - kTwoPi, kTwoPi);
  return out;
}

std::vector<Task> plan_tasks(const Boundary& b, const Request& req, bool half,
                             const std::vector<double>& kinks) {
  std::vector<int64_t> cuts;
  if (req.sector) {
    for (double th : {req.theta_a, req.theta_b}) {
      cuts.push_back(b.on_circle() ? b.locate_angle(th) : b.ray_hit({0, 0}, unit_from_angle(th)).edge);
    }
  }
  std::vector<Task> tasks;
  for (const auto& s : detail::edge_plan(b, half, cuts)) {
    const EdgeParam e = edge_param(b, s.edge);
    const double len = e.len, mid = 0.5 * len;
    const std::vector<double> ks = kinks_on_edge(e, kinks);
    for (const auto& [l1, l2] : clip_edge(e, req)) {
      if (l1 < mid) {
        Task t{s.edge, s.weight, true, l1, std::min(l2, mid), {}};
        for (double k : ks)
          if (k > t.lam_lo && k < t.lam_hi) t.kinks.push_back(k);
        tasks.push_back(std::move(t));
      }
      if (l2 > mid) {
        Task t{s.edge, s.weight, false, len - l2, len - std::max(l1, mid), {}};
        for (double k : ks)
          if (len - k > t.lam_lo && len - k < t.lam_hi) t.kinks.push_back(len - k);
        tasks.push_back(std::move(t));
      }
    }
  }
  return tasks;
}

double fine_limit(double r_max, double len, double exterior) {
  return std::max(6.0, 2.0 * r_max + 6.0 + std::log(len * exterior));
}

// Panel boundaries in τ = ln(|e| / 2λ'): uniform while the integrand still has
// structure, then widening over the exponentially decaying tail.
std::vector<double> angular_breaks(double tau_lo, double tau_hi, double t_fine, int refinement,
                                   const std::vector<double>& extra = {}) {
  const double scale = std::ldexp(1.0, -refinement);
  const double t_end = t_fine + kAngularTail;
  tau_hi = std::min(tau_hi, t_end);
  std::vector<double> br{tau_lo};
  const double h = kFineAngularPanel * scale;
  const int fine = static_cast<int>(std::ceil(t_fine / h));
  double t = 0.0;
  for (int j = 1; j <= fine; ++j) {
    t = t_fine * j / fine;
    if (t > tau_lo && t < tau_hi) br.push_back(t);
  }
  double w = 4.0 * scale;
  while (t < t_end) {
    t = std::min(t + w, t_end);
    w *= 1.5;
    if (t > tau_lo && t < tau_hi) br.push_back(t);
  }
  for (double t : extra)
    if (t > tau_lo && t < tau_hi) br.push_back(t);
  if (tau_hi > tau_lo) br.push_back(tau_hi);
  std::sort(br.begin(), br.end());
  br.erase(std::unique(br.begin(), br.end()), br.end());
  return br;
}

double tau_of(double len, double lam) { return std::log(len / (2.0 * lam)); }

}  // namespace

namespace {

struct Tau {
  double lo{0.0}, hi{0.0}, fine{0.0};
};

std::vector<double> kink_taus(const Task& t, double len) {
  std::vector<double> out;
  for (double k : t.kinks) out.push_back(tau_of(len, k));
  return out;
}

Tau tau_range(const Task& t, double len, double exterior, double r_max) {
  Tau r;
  r.fine = fine_limit(r_max, len, exterior);
  r.lo = std::max(0.0, tau_of(len, t.lam_hi));
  r.hi = t.lam_lo > 0.0 ? tau_of(len, t.lam_lo) : INFINITY;
  return r;
}

// Per-anchor scratch for the tangent unit ball along one ray.
struct BallEval {
  const AnchorData* A{nullptr};
  std::vector<double> hp, h;

  void set_ray(double lam) {
    for (std::size_t i = 0; i < hp.size(); ++i) hp[i] = A->height_base[i] - lam * A->normal_dir[i];
  }
  // sx·sy / area of the scaled ball at the point with fractions w = s/t⁺ and
  // g = gap/t⁺ along the ray, i.e. 1 / true area.
  double inverse_area(double w, double g) {
    std::size_t arg = 0;
    for (std::size_t i = 0; i < hp.size(); ++i) {
      h[i] = w * hp[i] + g * A->offset[i];
      if (h[i] < h[arg]) arg = i;
    }
    const bool side = arg == A->side_index;
    const ScaledBall sb = scaled_unit_ball(side ? A->a_side : A->a_exit, side ? A->b_side : A->b_exit, h);
    return (sb.sx / sb.area) * sb.sy;
  }
};

// Thinned boundaries keep fewer far vertices once the point is close to the
// exit edge: there the far edges only move the ball's far end, whose share of
// the area shrinks with the gap. Each entry is (thinning, largest gap/t⁺).
struct ThinLevel {
  int64_t thinning;
  double max_gap;
};
constexpr ThinLevel kThinLevels[] = {{detail::kThinning, INFINITY}, {16, 1e-3}, {4, 1e-6}};

// Ball evaluator at one thinning rate; the area is extrapolated from that rate
// and half of it, since the chord error scales like thinning⁻².
struct Level {
  int64_t rate{0};
  AnchorData fine, coarse;
  BallEval fb, cb;

  void bind() {
    fb = {&fine, std::vector<double>(fine.offset.size()), std::vector<double>(fine.offset.size())};
    cb = {&coarse, std::vector<double>(coarse.offset.size()), std::vector<double>(coarse.offset.size())};
  }
  void set_ray(double lam) {
    fb.set_ray(lam);
    if (!coarse.offset.empty()) cb.set_ray(lam);
  }
  double inverse_area(double w, double g) {
    if (coarse.offset.empty()) return fb.inverse_area(w, g);
    const double area = 1.0 / fb.inverse_area(w, g), area_coarse = 1.0 / cb.inverse_area(w, g);
    return 3.0 / (4.0 * area - area_coarse);
  }
};

// Contributions of the rays leaving through one half-edge, integrated in τ
// with Gauss–Kronrod panels and in ρ with the shared radial layout.
TaskResult run_task(const Boundary& b, const Task& task, const Request& req, const RadialLayout& L,
                    int refinement, bool symmetric) {
  const bool thinned = detail::thins(b) && !req.lebesgue;
  const AnchorData A = detail::make_anchor(b, task.edge, task.from_start,
                                           detail::kept_vertices(b, task.edge));
  BallEval exact_ball{&A, std::vector<double>(A.offset.size()), std::vector<double>(A.offset.size())};
  std::vector<std::unique_ptr<Level>> levels;
  std::vector<double> level_gap;
  if (thinned) {
    const detail::ThinningPlan plan = detail::thinning_plan(b);
    const int64_t base = plan.rate;
    for (const ThinLevel& t : kThinLevels) {
      const int64_t rate = std::min(t.thinning, base);
      if (!levels.empty() && rate == levels.back()->rate) continue;
      auto lv = std::make_unique<Level>();
      lv->rate = rate;
      lv->fine = detail::make_anchor(b, task.edge, task.from_start, detail::kept_vertices(b, task.edge, rate));
      if (plan.extrapolate)
        lv->coarse = detail::make_anchor(b, task.edge, task.from_start,
                                         detail::kept_vertices(b, task.edge, rate / 2));
      lv->bind();
      levels.push_back(std::move(lv));
      level_gap.push_back(t.max_gap);
    }
  }

  const std::size_t nr = req.radii.size();
  const Tau tr = tau_range(task, A.edge_length, A.exterior_angle, req.radii.back());
  const std::vector<double> br =
      angular_breaks(tr.lo, tr.hi, tr.fine, refinement, kink_taus(task, A.edge_length));
  const KronrodRule& gk = gauss_kronrod15();

  TaskResult res{std::vector<double>(nr, 0.0), std::vector<double>(nr, 0.0)};
  std::vector<double> ray(nr), kr(nr), ga(nr);

  auto eval_ray = [&](double lam) {
    const double tp = std::sqrt(A.base_norm2 + lam * (2.0 * A.base_dot_dir + lam));
    const Point2 pw = A.base_world + lam * A.dir_world;
    const Vec2 u = pw / pw.norm();
    const double tm = symmetric ? tp : b.ray_hit({0.0, 0.0}, -u).t;
    const double rho_cap = cap_radius(req.cap, u, tm, tp);
    const double ang = A.exit_offset * lam / (tp * tp);
    if (thinned) {
      for (auto& lv : levels) lv->set_ray(lam);
    } else if (!req.lebesgue) {
      exact_ball.set_ray(lam);
    }
    auto f = [&](double rho) {
      const RadialSolve r = radial_from_chord(tm, tp, rho);
      if (req.lebesgue) return r.s * r.ds_drho * ang;
      const double w = r.s / tp, g = r.gap / tp;
      double inv = 0.0;
      if (thinned) {
        std::size_t l = 0;
        while (l + 1 < levels.size() && g <= level_gap[l + 1]) ++l;
        inv = levels[l]->inverse_area(w, g);
      } else {
        inv = exact_ball.inverse_area(w, g);
      }
      return kPi * r.s * r.ds_drho * ang * inv;
    };
    radial_integrals(L, rho_cap, f, ray);
  };

  for (std::size_t p = 0; p + 1 < br.size(); ++p) {
    const double c = 0.5 * (br[p] + br[p + 1]), hw = 0.5 * (br[p + 1] - br[p]);
    std::fill(kr.begin(), kr.end(), 0.0);
    std::fill(ga.begin(), ga.end(), 0.0);
    for (std::size_t j = 0; j < gk.nodes.size(); ++j) {
      const double tau = c + hw * gk.nodes[j];
      eval_ray(0.5 * A.edge_length * std::exp(-tau));
      for (std::size_t k = 0; k < nr; ++k) {
        kr[k] += gk.kronrod_weights[j] * ray[k];
        ga[k] += gk.gauss_weights[j] * ray[k];
      }
    }
    for (std::size_t k = 0; k < nr; ++k) {
      res.value[k] += task.weight * hw * kr[k];
      res.error[k] += task.weight * hw * std::abs(kr[k] - ga[k]);
    }
  }
  return res;
}

int64_t task_evaluations(const Boundary& b, const Task& task, const Request& req,
                         const RadialLayout& L, int refinement) {
  const double len = edge_length(b, task.edge);
  // The exterior angle only shifts the fine limit logarithmically; π bounds it.
  const Tau tr = tau_range(task, len, kPi, req.radii.back());
  const auto panels = static_cast<int64_t>(
                          angular_breaks(tr.lo, tr.hi, tr.fine, refinement, kink_taus(task, len)).size()) - 1;
  return std::max<int64_t>(panels, 0) * 15 * L.nodes;
}

}  // namespace

namespace {

// Points where the cap line meets the metric sphere of radius R. Balls are
// convex, so the distance along the line is unimodal.
std::vector<Point2> cap_sphere_points(const ConvexDomain& d, const CapLine& cap, double R) {
  const Point2 foot = cap.offset * cap.normal;
  const Vec2 dir{-cap.normal.y, cap.normal.x};
  if (!contains(d, foot)) return {};
  const Chord c = chord(d, foot, dir);
  auto dist = [&](double t) { return hilbert_distance(d, {0.0, 0.0}, foot + t * dir); };
  double a = -c.t_minus, b = c.t_plus;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 200 && b - a > 1e-15 * (c.t_minus + c.t_plus); ++it) {
    const double m1 = b - g * (b - a), m2 = a + g * (b - a);
    if (dist(m1) < dist(m2)) b = m2; else a = m1;
  }
  const double tmin = 0.5 * (a + b);
  if (dist(tmin) >= R) return {};
  std::vector<Point2> out;
  for (double end : {-c.t_minus, c.t_plus}) {
    double in = tmin, out_t = end;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (in + out_t);
      if (mid == in || mid == out_t) break;
      (dist(mid) < R ? in : out_t) = mid;
    }
    out.push_back(foot + in * dir);
  }
  return out;
}

// Polar angles, sorted in [0, 2π), where the integrand has a kink in the ray
// direction: rays whose backward chord passes a vertex, and rays through the
// points where a cap line crosses a metric sphere.
std::vector<double> kink_angles(const ConvexDomain& d, const Request& req) {
  std::vector<double> out;
  if (d.is_polygonal() && !d.centrally_symmetric()) {
    const Boundary& b = d.boundary();
    for (int64_t j = 0; j < b.vertex_count(); ++j) {
      if (b.on_circle()) {
        out.push_back(wrap_angle(b.vertex_angle(j) + kPi));
      } else {
        const Point2 v = b.vertex(j);
        out.push_back(wrap_angle(std::atan2(-v.y, -v.x)));
      }
    }
  }
  if (req.cap) {
    for (double R : req.radii)
      for (const Point2& p : cap_sphere_points(d, *req.cap, R)) out.push_back(wrap_angle(std::atan2(p.y, p.x)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

constexpr double kDiskAngularPanel = kPi / 8.0;

std::vector<MeasureResult> disk_measure(const Request& req, const QuadratureSpec& q,
                                        const RadialLayout& L) {
  const std::size_t nr = req.radii.size();
  const double width = req.sector ? req.theta_b - req.theta_a : kTwoPi;
  const double start = req.sector ? req.theta_a : 0.0;
  auto density = [&](double rho) {
    const RadialSolve r = radial_from_chord(1.0, 1.0, rho);
    const double base = r.s * r.ds_drho;
    return req.lebesgue ? base : base * std::pow(r.gap * (1.0 + r.s), -1.5);
  };
  std::vector<double> br;
  if (req.cap) {
    const int pieces = std::max(1, static_cast<int>(std::ceil(width / kDiskAngularPanel)));
    for (int p = 0; p <= pieces; ++p) br.push_back(start + width * p / pieces);
    for (double k : kink_angles(ConvexDomain::disk(), req)) {
      const double o = wrap_angle(k - start);
      if (o > 0.0 && o < width) br.push_back(start + o);
    }
    std::sort(br.begin(), br.end());
  }
  const int64_t panels = br.empty() ? 0 : static_cast<int64_t>(br.size()) - 1;
  const int64_t planned = L.nodes * (req.cap ? 15 * panels : 1);
  if (static_cast<double>(planned) > static_cast<double>(q.max_evaluations) * req.budget_scale)
    throw Error(ErrorCode::kBudgetExceeded, "quadrature needs more evaluations than allowed");

  std::vector<MeasureResult> out(nr);
  std::vector<double> ray(nr);
  if (!req.cap) {
    radial_integrals(L, INFINITY, density, ray);
    for (std::size_t k = 0; k < nr; ++k) out[k] = {width * ray[k], 0.0, Method::kQuadrature, planned};
    return out;
  }
  const KronrodRule& gk = gauss_kronrod15();
  std::vector<double> kr(nr), ga(nr);
  for (std::size_t p = 0; p + 1 < br.size(); ++p) {
    const double hw = 0.5 * (br[p + 1] - br[p]), c = 0.5 * (br[p] + br[p + 1]);
    std::fill(kr.begin(), kr.end(), 0.0);
    std::fill(ga.begin(), ga.end(), 0.0);
    for (std::size_t j = 0; j < gk.nodes.size(); ++j) {
      const Vec2 u = unit_from_angle(c + hw * gk.nodes[j]);
      radial_integrals(L, cap_radius(req.cap, u, 1.0, 1.0), density, ray);
      for (std::size_t k = 0; k < nr; ++k) {
        kr[k] += gk.kronrod_weights[j] * ray[k];
        ga[k] += gk.gauss_weights[j] * ray[k];
      }
    }
    for (std::size_t k = 0; k < nr; ++k) {
      out[k].value += hw * kr[k];
      out[k].error_estimate += hw * std::abs(kr[k] - ga[k]);
    }
  }
  for (auto& r : out) r.evaluations = planned;
  return out;
}

std::vector<MeasureResult> measure(const ConvexDomain& domain, const Request& req,
                                   const QuadratureSpec& q) {
  validate(domain, req, q);
  const RadialLayout L = radial_layout(req.radii, q.radial_order);
  if (!domain.is_polygonal()) return disk_measure(req, q, L);

  const Boundary& b = domain.boundary();
  const bool symmetric = b.centrally_symmetric();
  const std::vector<Task> tasks =
      plan_tasks(b, req, symmetric && !req.sector && !req.cap, kink_angles(domain, req));
  int64_t planned = 0;
  for (const Task& t : tasks) planned += task_evaluations(b, t, req, L, q.angular_refinement);
  if (static_cast<double>(planned) > static_cast<double>(q.max_evaluations) * req.budget_scale)
    throw Error(ErrorCode::kBudgetExceeded, "quadrature needs " + std::to_string(planned) +
                                                " evaluations, more than allowed");

  std::vector<TaskResult> parts(tasks.size());
  parallel_for(tasks.size(), q.threads, [&](std::size_t i) {
    parts[i] = run_task(b, tasks[i], req, L, q.angular_refinement, symmetric);
  });
  const std::size_t nr = req.radii.size();
  std::vector<MeasureResult> out(nr);
  for (const TaskResult& p : parts) {
    for (std::size_t k = 0; k < nr; ++k) {
      out[k].value += p.value[k];
      out[k].error_estimate += p.error[k];
    }
  }
  for (auto& r : out) r.evaluations = planned;
  return out;
}

Request single(double R) {
  Request req;
  req.radii = {R};
  return req;
}

}  // namespace

MeasureResult ball_volume(const ConvexDomain& domain, double R, const QuadratureSpec& q) {
  return measure(domain, single(R), q).front();
}

std::vector<MeasureResult> ball_volumes(const ConvexDomain& domain, std::span<const double> radii,
                                        const QuadratureSpec& q) {
  Request req;
  req.radii.assign(radii.begin(), radii.end());
  req.budget_scale = static_cast<double>(std::max<std::size_t>(1, radii.size()));
  return measure(domain, req, q);
}

MeasureResult sector_ball_volume(const ConvexDomain& domain, double R, double theta_a,
                                 double theta_b, const std::optional<CapLine>& cap,
                                 const QuadratureSpec& q) {
  Request req = single(R);
  req.sector = true;
  req.theta_a = theta_a;
  req.theta_b = theta_b;
  if (cap) {
    const double n = cap->normal.norm();
    if (!(n > 0.0)) throw Error(ErrorCode::kInvalidArgument, "cap normal must be nonzero");
    req.cap = CapLine{cap->normal / n, cap->offset / n};
  }
  return measure(domain, req, q).front();
}

MeasureResult lebesgue_ball_area(const ConvexDomain& domain, double R, const QuadratureSpec& q) {
  Request req = single(R);
  req.lebesgue = true;
  return measure(domain, req, q).front();
}

namespace {

constexpr int64_t kMcChunk = 65536;

double uniform01(uint64_t seed, uint64_t counter) {
  uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace

MeasureResult ball_volume_mc(const ConvexDomain& domain, double R, const QuadratureSpec& q) {
  if (!(R > 0.0) || !std::isfinite(R)) throw Error(ErrorCode::kInvalidArgument, "radius must be positive");
  if (q.mc_samples < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two samples");
  const auto box = domain.bounding_box();
  const double wx = box[2] - box[0], wy = box[3] - box[1];
  const int64_t n = q.mc_samples;
  const auto chunks = static_cast<std::size_t>((n + kMcChunk - 1) / kMcChunk);
  std::vector<double> sum(chunks, 0.0), sum2(chunks, 0.0);
  parallel_for(chunks, q.threads, [&](std::size_t c) {
    const int64_t lo = static_cast<int64_t>(c) * kMcChunk, hi = std::min(n, lo + kMcChunk);
    double s = 0.0, s2 = 0.0;
    for (int64_t i = lo; i < hi; ++i) {
      const auto k = static_cast<uint64_t>(i);
      const Point2 x{box[0] + wx * uniform01(q.seed, 2 * k), box[1] + wy * uniform01(q.seed, 2 * k + 1)};
      if (!contains(domain, x) || hilbert_distance(domain, {0.0, 0.0}, x) >= R) continue;
      const double f = kPi / unit_ball_area(domain, x);
      s += f;
      s2 += f * f;
    }
    sum[c] = s;
    sum2[c] = s2;
  });
  double s = 0.0, s2 = 0.0;
  for (std::size_t c = 0; c < chunks; ++c) {
    s += sum[c];
    s2 += sum2[c];
  }
  const double nd = static_cast<double>(n);
  const double mean = s / nd;
  const double var = std::max(0.0, (s2 / nd - mean * mean) * nd / (nd - 1.0));
  const double area = wx * wy;
  return {area * mean, area * std::sqrt(var / nd), Method::kMonteCarlo, n};
}

}  // namespace hilbert
