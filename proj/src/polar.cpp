#include "vortex/polar.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace vortex {

double PolarGrid::theta_at(int k) const {
  const int n = ntheta();
  if (k < n) return theta[static_cast<std::size_t>(k)];
  return theta[static_cast<std::size_t>(k - n)] + 2.0 * kPi;
}

namespace {

// Nodes containing all breakpoints of [a, b], roughly n cells total, spacing
// uniform between breakpoints.
std::vector<double> graded_axis(double a, double b, int n, std::vector<double> breaks,
                                int min_per_interval) {
  if (b <= a) throw InvalidRange("graded_axis: empty interval");
  breaks.push_back(a);
  breaks.push_back(b);
  std::sort(breaks.begin(), breaks.end());
  std::vector<double> bp;
  for (double t : breaks) {
    if (t < a - 1e-15 || t > b + 1e-15) continue;
    if (!bp.empty() && t - bp.back() < 1e-14) continue;
    bp.push_back(std::clamp(t, a, b));
  }
  std::vector<double> nodes;
  nodes.push_back(bp.front());
  for (std::size_t s = 0; s + 1 < bp.size(); ++s) {
    const double len = bp[s + 1] - bp[s];
    int cells = std::max(min_per_interval, static_cast<int>(std::lround(n * len / (b - a))));
    for (int c = 1; c <= cells; ++c) nodes.push_back(bp[s] + len * c / cells);
  }
  nodes.back() = bp.back();
  return nodes;
}

}  // namespace

PolarGrid make_polar_grid(double r0, double r1, int nr, int ntheta,
                          const std::vector<double>& r_breaks,
                          const std::vector<double>& theta_breaks, int min_per_interval) {
  PolarGrid g;
  g.r = graded_axis(r0, r1, nr, r_breaks, min_per_interval);
  // Fold theta breakpoints into [0, 2*pi).
  std::vector<double> tb;
  for (double t : theta_breaks) {
    double f = std::fmod(t, 2.0 * kPi);
    if (f < 0.0) f += 2.0 * kPi;
    tb.push_back(f);
  }
  std::vector<double> tnodes = graded_axis(0.0, 2.0 * kPi, ntheta, tb, min_per_interval);
  tnodes.pop_back();  // 2*pi is the wrap of 0
  g.theta = tnodes;
  return g;
}

PolarMapField PolarMapField::sample(const PolarGrid& grid,
                                    const std::function<void(double, double, double&, double&)>& f) {
  PolarMapField out;
  out.grid = grid;
  const int nn = (grid.nr() + 1) * grid.ntheta();
  out.v1.resize(static_cast<std::size_t>(nn));
  out.v2.resize(static_cast<std::size_t>(nn));
  for (int i = 0; i <= grid.nr(); ++i) {
    for (int k = 0; k < grid.ntheta(); ++k) {
      const int id = out.idx(i, k);
      f(grid.r[static_cast<std::size_t>(i)], grid.theta[static_cast<std::size_t>(k)],
        out.v1[static_cast<std::size_t>(id)], out.v2[static_cast<std::size_t>(id)]);
    }
  }
  return out;
}

double map_graph_area_polar(const PolarMapField& v) {
  const PolarGrid& g = v.grid;
  if (g.nr() < 4 || g.ntheta() < 4) throw GridTooCoarse("map_graph_area_polar: need >= 4 cells per direction");
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(g.nr()) * g.ntheta());
  const int nt = g.ntheta();
  for (int i = 0; i < g.nr(); ++i) {
    const double r_l = g.r[static_cast<std::size_t>(i)], r_r = g.r[static_cast<std::size_t>(i + 1)];
    const double dr = r_r - r_l;
    const double r_c = 0.5 * (r_l + r_r);
    for (int k = 0; k < nt; ++k) {
      const int kp = (k + 1) % nt;
      const double dth = g.theta_at(k + 1) - g.theta_at(k);
      const int i00 = v.idx(i, k), i10 = v.idx(i + 1, k);
      const int i01 = v.idx(i, kp), i11 = v.idx(i + 1, kp);
      auto dr_of = [&](const std::vector<double>& f) {
        return 0.5 * ((f[static_cast<std::size_t>(i10)] - f[static_cast<std::size_t>(i00)]) +
                      (f[static_cast<std::size_t>(i11)] - f[static_cast<std::size_t>(i01)])) / dr;
      };
      auto dth_of = [&](const std::vector<double>& f) {
        return 0.5 * ((f[static_cast<std::size_t>(i01)] - f[static_cast<std::size_t>(i00)]) +
                      (f[static_cast<std::size_t>(i11)] - f[static_cast<std::size_t>(i10)])) / dth;
      };
      const double v1r = dr_of(v.v1), v2r = dr_of(v.v2);
      const double v1t = dth_of(v.v1), v2t = dth_of(v.v2);
      const double jac = v1r * v2t - v1t * v2r;
      const double arg = 1.0 + v1r * v1r + v2r * v2r +
                         (v1t * v1t + v2t * v2t + jac * jac) / (r_c * r_c);
      terms.push_back(std::sqrt(arg) * r_c * dr * dth);
    }
  }
  return pairwise_sum(terms);
}

}  // namespace vortex
