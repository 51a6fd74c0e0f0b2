#include "vortex/profile.hpp"

#include <algorithm>
#include <cmath>

namespace vortex {

double ConvexProfile::operator()(double w1) const {
  if (degenerate) return -1.0;
  if (w1 <= knots.front()) return values.front();
  if (w1 >= knots.back()) return values.back();
  auto it = std::upper_bound(knots.begin(), knots.end(), w1);
  const std::size_t k = static_cast<std::size_t>(it - knots.begin());
  const double t = (w1 - knots[k - 1]) / (knots[k] - knots[k - 1]);
  return values[k - 1] + t * (values[k] - values[k - 1]);
}

double ConvexProfile::slope(double w1) const {
  if (degenerate) return 0.0;
  if (w1 <= knots.front()) w1 = knots.front() + 1e-15;
  if (w1 >= knots.back()) w1 = knots.back() - 1e-15;
  auto it = std::upper_bound(knots.begin(), knots.end(), w1);
  const std::size_t k = static_cast<std::size_t>(it - knots.begin());
  return (values[k] - values[k - 1]) / (knots[k] - knots[k - 1]);
}

bool ConvexProfile::is_convex(double tol) const {
  if (degenerate) return true;
  for (std::size_t i = 1; i + 1 < knots.size(); ++i) {
    const double sl = (values[i] - values[i - 1]) / (knots[i] - knots[i - 1]);
    const double sr = (values[i + 1] - values[i]) / (knots[i + 1] - knots[i]);
    if (sr - sl < -tol) return false;
  }
  return true;
}

bool ConvexProfile::is_symmetric(double tol) const {
  if (degenerate) return true;
  const std::size_t n = values.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (std::abs(values[i] - values[n - 1 - i]) > tol) return false;
  }
  return true;
}

ConvexProfile ConvexProfile::constant(double span, double value, int n_knots) {
  ConvexProfile p;
  p.knots.resize(static_cast<std::size_t>(n_knots));
  p.values.assign(static_cast<std::size_t>(n_knots), value);
  for (int i = 0; i < n_knots; ++i) {
    p.knots[static_cast<std::size_t>(i)] = span * static_cast<double>(i) / (n_knots - 1);
  }
  return p;
}

ConvexProfile ConvexProfile::degenerate_profile(double span) {
  ConvexProfile p = constant(span, -1.0, 2);
  p.degenerate = true;
  return p;
}

ConvexProfile project_convex_symmetric(const std::vector<double>& knots,
                                       const std::vector<double>& raw_values) {
  if (knots.size() < 2 || knots.size() != raw_values.size()) {
    throw InvalidRange("project_convex_symmetric: need matching knots/values, >= 2 points");
  }
  const std::size_t n = knots.size();

  // Symmetrize, clamp to [-1, 1].
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double m = 0.5 * (raw_values[i] + raw_values[n - 1 - i]);
    v[i] = std::clamp(m, -1.0, 1.0);
  }

  // Lower convex envelope by monotone chain over (knot, value) points.
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i < n; ++i) {
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2], b = hull[hull.size() - 1];
      const double cross = (knots[b] - knots[a]) * (v[i] - v[a]) -
                           (knots[i] - knots[a]) * (v[b] - v[a]);
      if (cross <= 0.0) {
        hull.pop_back();  // b is above the chord a--i
      } else {
        break;
      }
    }
    hull.push_back(i);
  }

  ConvexProfile out;
  out.knots = knots;
  out.values.resize(n);
  std::size_t seg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (seg + 1 < hull.size() && knots[hull[seg + 1]] < knots[i]) ++seg;
    const std::size_t a = hull[seg];
    const std::size_t b = hull[std::min(seg + 1, hull.size() - 1)];
    if (a == b || knots[b] == knots[a]) {
      out.values[i] = v[a];
    } else {
      const double t = (knots[i] - knots[a]) / (knots[b] - knots[a]);
      out.values[i] = v[a] + t * (v[b] - v[a]);
    }
  }
  // Envelope of symmetric data is symmetric; pair-average to make it exact in
  // floating point.
  for (std::size_t i = 0; i < n / 2; ++i) {
    const double m = 0.5 * (out.values[i] + out.values[n - 1 - i]);
    out.values[i] = m;
    out.values[n - 1 - i] = m;
  }
  return out;
}

double CatenoidProfile::rho_bar(double t) const {
  return a * std::cosh((t - half_length) / a);
}

double CatenoidProfile::rho_bar_prime(double t) const {
  return std::sinh((t - half_length) / a);
}

}  // namespace vortex
