#include "anchor.hpp"

#include <algorithm>
#include <cmath>

namespace hilbert::detail {

namespace {

double ccw_gap(double from, double to) {
  double d = to - from;
  if (d <= 0.0) d += kTwoPi;
  return d;
}

// Weights for Σ_{l=0}^{M−1} f(l) from samples that are dense at both ends of
// the run and geometrically sparser towards the middle. The skipped edges
// between two samples are summed from the cubic through the four nearest
// samples, using closed-form power sums.
void append_sampled_run(int64_t first_edge, int64_t m, double weight, std::vector<EdgeSample>& out) {
  std::vector<int64_t> pos;
  for (int64_t q = 0; q <= (m - 1) / 2 + 1;) {
    pos.push_back(q);
    pos.push_back(m - 1 - q);
    q += q < 6 ? 1 : std::max<int64_t>(1, static_cast<int64_t>(0.1 * static_cast<double>(q)));
  }
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  pos.erase(std::remove_if(pos.begin(), pos.end(), [m](int64_t p) { return p < 0 || p >= m; }),
            pos.end());
  const std::size_t k = pos.size();
  std::vector<double> w(k, 1.0);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const int64_t gap = pos[i + 1] - pos[i];
    if (gap < 2) continue;
    const double g = static_cast<double>(gap);
    // Σ_{j=1}^{g−1} (j/g)^e for e = 0..3
    const double s[4] = {g - 1.0, 0.5 * (g - 1.0), (g - 1.0) * (2.0 * g - 1.0) / (6.0 * g),
                         0.25 * (g - 1.0) * (g - 1.0) / g};
    const std::size_t lo = std::min(i > 0 ? i - 1 : 0, k >= 4 ? k - 4 : 0);
    const std::size_t hi = std::min(lo + 4, k);
    for (std::size_t j = lo; j < hi; ++j) {
      const double xj = static_cast<double>(pos[j] - pos[i]) / g;
      double c[4] = {1.0, 0.0, 0.0, 0.0};
      double denom = 1.0;
      int deg = 0;
      for (std::size_t o = lo; o < hi; ++o) {
        if (o == j) continue;
        const double xo = static_cast<double>(pos[o] - pos[i]) / g;
        for (int e = deg + 1; e > 0; --e) c[e] = c[e - 1] - xo * c[e];
        c[0] *= -xo;
        ++deg;
        denom *= xj - xo;
      }
      double sum = 0.0;
      for (int e = 0; e <= deg; ++e) sum += c[e] * s[e];
      w[j] += sum / denom;
    }
  }
  for (std::size_t i = 0; i < k; ++i) out.push_back({first_edge + pos[i], weight * w[i]});
}

}  // namespace

std::vector<EdgeSample> edge_plan(const Boundary& b, bool half, std::span<const int64_t> cuts) {
  std::vector<EdgeSample> out;
  const double w = half ? 2.0 : 1.0;
  const int64_t n = b.vertex_count();
  if (!b.on_circle()) {
    for (int64_t i = 0; i < (half ? n / 2 : n); ++i) out.push_back({i, w});
    return out;
  }
  auto append_run = [&](int64_t first, int64_t m) {
    if (m > kSampledRunThreshold) {
      append_sampled_run(first, m, w, out);
    } else {
      for (int64_t l = 0; l < m; ++l) out.push_back({first + l, w});
    }
  };
  const auto& runs = b.runs();
  const std::size_t rc = half ? runs.size() / 2 : runs.size();
  for (std::size_t r = 0; r < rc; ++r) {
    const int64_t off = b.run_offset(r);
    const int64_t end = off + runs[r].count - 1;  // interior edges are [off, end)
    std::vector<int64_t> inside;
    for (int64_t c : cuts)
      if (c >= off && c < end) inside.push_back(c);
    std::sort(inside.begin(), inside.end());
    inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
    int64_t from = off;
    for (int64_t c : inside) {
      append_run(from, c - from);
      out.push_back({c, w});
      from = c + 1;
    }
    append_run(from, end - from);
    out.push_back({end, w});  // edge leaving the run
  }
  return out;
}

ThinningPlan thinning_plan(const Boundary& b) {
  double span = 0.0;
  for (const AngleRun& r : b.runs())
    if (r.count > kSampledRunThreshold) span = std::max(span, r.step * static_cast<double>(r.count - 1));
  // Measured on regular polygons: relative area error ≈ 0.22 (span / 2π)² / rate²
  // before extrapolation and ≈ 5 (span / 2π)⁴ / rate⁴ after it.
  const double x = span / kTwoPi;
  ThinningPlan p{4, true};
  while (p.rate < kThinning && static_cast<double>(p.rate) < 150.0 * x) p.rate *= 2;
  const double r = static_cast<double>(p.rate);
  p.extrapolate = 0.22 * x * x / (r * r) > 1e-10;
  return p;
}

std::vector<int64_t> kept_vertices(const Boundary& b, int64_t edge, int64_t thinning) {
  const int64_t n = b.vertex_count();
  std::vector<int64_t> v;
  if (!thins(b)) {
    v.resize(static_cast<std::size_t>(n));
    for (int64_t i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
  }
  constexpr int64_t kExact = 16;
  auto wrap = [n](int64_t i) { return ((i % n) + n) % n; };
  for (int64_t d = 0; d <= n / 2 + 1;) {
    v.push_back(wrap(edge - d));
    v.push_back(wrap(edge + 1 + d));
    d += d < kExact ? 1 : std::max<int64_t>(1, d / thinning);
  }
  // Only the evenly spaced interior of long runs may be skipped; everywhere
  // else a dropped vertex could cut a corner of arbitrary size.
  for (std::size_t r = 0; r < b.runs().size(); ++r) {
    const int64_t off = b.run_offset(r), count = b.runs()[r].count;
    if (count <= kSampledRunThreshold) {
      for (int64_t j = 0; j < count; ++j) v.push_back(off + j);
    } else {
      v.push_back(off);
      v.push_back(off + count - 1);
    }
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

AnchorData make_anchor(const Boundary& b, int64_t edge, bool from_start,
                       const std::vector<int64_t>& kept) {
  const std::size_t m = kept.size();
  const int64_t base = from_start ? edge : b.next(edge);
  const auto pos = static_cast<std::size_t>(
      std::distance(kept.begin(), std::lower_bound(kept.begin(), kept.end(), edge)));
  if (pos >= m || kept[pos] != edge || kept[(pos + 1) % m] != b.next(edge))
    throw Error(ErrorCode::kInvalidArgument, "anchor edge missing from the kept vertices");
  AnchorData a;
  a.exit_index = pos;
  a.side_index = from_start ? (pos + m - 1) % m : (pos + 1) % m;
  a.offset.resize(m);
  a.height_base.resize(m);
  a.normal_dir.resize(m);
  a.a_exit.resize(m);
  a.b_exit.resize(m);
  a.a_side.resize(m);
  a.b_side.resize(m);
  const double sgn = from_start ? 1.0 : -1.0;

  if (b.on_circle()) {
    std::vector<double> mu(m);
    for (std::size_t i = 0; i < m; ++i) {
      const int64_t u = kept[i];
      const int64_t w = kept[(i + 1) % m];
      const auto [ru, lu] = b.run_of(u);
      const auto [rw, lw] = b.run_of(w);
      const double span = (ru == rw && lw > lu)
                              ? static_cast<double>(lw - lu) * b.runs()[ru].step
                              : ccw_gap(b.vertex_angle(u), b.vertex_angle(w));
      double a1 = u == base ? 0.0 : b.vertex_angle_diff(u, base);
      double a2 = a1 + span;
      if (w == base) {
        a2 = 0.0;
        a1 = -span;
      }
      mu[i] = a1 + 0.5 * span;
      a.offset[i] = std::cos(0.5 * span);
      a.height_base[i] = 2.0 * std::sin(0.5 * a1) * std::sin(0.5 * a2);
    }
    const double mu_e = mu[a.exit_index];
    const double mu_s = mu[a.side_index];
    for (std::size_t i = 0; i < m; ++i) {
      a.a_exit[i] = std::sin(mu[i] - mu_e);
      a.b_exit[i] = -std::cos(mu[i] - mu_e);
      a.a_side[i] = std::sin(mu[i] - mu_s);
      a.b_side[i] = -std::cos(mu[i] - mu_s);
      a.normal_dir[i] = sgn * a.a_exit[i];
    }
    const double half_e = 0.5 * b.edge_span(edge);
    a.edge_length = 2.0 * std::sin(half_e);
    a.exit_offset = std::cos(half_e);
    a.base_norm2 = 1.0;
    a.base_dot_dir = -std::sin(half_e);
    a.exterior_angle = std::abs(mu_e - mu_s);
    const double phi = b.vertex_angle(base);
    a.base_world = unit_from_angle(phi);
    const Vec2 rel{-sgn * std::sin(mu_e), sgn * std::cos(mu_e)};
    a.dir_world = {rel.x * std::cos(phi) - rel.y * std::sin(phi),
                   rel.x * std::sin(phi) + rel.y * std::cos(phi)};
  } else {
    const Point2 v = b.vertex(base);
    const Vec2 e = b.edge_vector(edge);
    const double len = e.norm();
    const Vec2 t = e / len;
    const EdgeLine le = b.edge_line(edge);
    const EdgeLine ls = b.edge_line(kept[a.side_index]);
    const Vec2 ts{-ls.normal.y, ls.normal.x};
    a.dir_world = sgn * t;
    a.base_world = v;
    for (std::size_t i = 0; i < m; ++i) {
      const EdgeLine li = b.edge_line(kept[i]);
      a.offset[i] = li.offset;
      a.height_base[i] = li.offset - dot(li.normal, v);
      a.normal_dir[i] = dot(li.normal, a.dir_world);
      a.a_exit[i] = dot(li.normal, t);
      a.b_exit[i] = -dot(li.normal, le.normal);
      a.a_side[i] = dot(li.normal, ts);
      a.b_side[i] = -dot(li.normal, ls.normal);
    }
    a.height_base[a.exit_index] = 0.0;
    a.height_base[a.side_index] = 0.0;
    a.edge_length = len;
    a.exit_offset = le.offset;
    a.base_norm2 = dot(v, v);
    a.base_dot_dir = dot(v, a.dir_world);
    a.exterior_angle = std::atan2(std::abs(cross(le.normal, ls.normal)), dot(le.normal, ls.normal));
  }
  a.normal_dir[a.exit_index] = 0.0;
  a.a_exit[a.exit_index] = 0.0;
  a.b_exit[a.exit_index] = -1.0;
  a.a_side[a.side_index] = 0.0;
  a.b_side[a.side_index] = -1.0;
  return a;
}

}  // namespace hilbert::detail
