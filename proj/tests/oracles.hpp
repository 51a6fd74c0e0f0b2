#pragma once

// Independent reference implementations used only by the tests. Everything
// here is deliberately written with different algorithms than the library
// (recursive adaptive quadrature, brute-force envelopes, entrywise gradients)
// so that agreement is meaningful.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracles {

// Adaptive Simpson quadrature with absolute tolerance.
inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                          double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Entrywise gradient of the vortex map u(x) = x/|x|:
// D_j u_i = delta_ij/|x| - x_i x_j / |x|^3. Returns |grad u|^2.
inline double vortex_gradient_sq(double x1, double x2) {
  const double r = std::hypot(x1, x2);
  const double x[2] = {x1, x2};
  double s = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double d = (i == j ? 1.0 : 0.0) / r - x[i] * x[j] / (r * r * r);
      s += d * d;
    }
  return s;
}

// Brute-force lower convex envelope of nodal values on given knots: the
// supremum of all affine functions lying below the data, evaluated per knot.
inline std::vector<double> lower_convex_envelope(const std::vector<double>& knots,
                                                 const std::vector<double>& values) {
  const std::size_t n = knots.size();
  std::vector<double> out(n);
  for (std::size_t q = 0; q < n; ++q) {
    double best = values[q];
    // Chords between every pair of knots bracketing q.
    for (std::size_t a = 0; a <= q; ++a)
      for (std::size_t b = q; b < n; ++b) {
        if (a == b) continue;
        const double t = (knots[q] - knots[a]) / (knots[b] - knots[a]);
        best = std::min(best, (1.0 - t) * values[a] + t * values[b]);
      }
    out[q] = best;
  }
  return out;
}

// Scherk's first surface, z = log(cos x / cos y), minimal wherever cos > 0.
inline double scherk(double x, double y) { return std::log(std::cos(x) / std::cos(y)); }

}  // namespace oracles
