#pragma once

#include <vector>

#include "vortex/common.hpp"

namespace vortex {

/// Free-boundary profile h on [0, 2l]: piecewise linear on strictly increasing
/// knots, convex, symmetric about the midpoint, values in [-1, 1]. The
/// degenerate branch h == -1 is a separate flag, never a limit of knot values.
struct ConvexProfile {
  std::vector<double> knots;
  std::vector<double> values;
  bool degenerate = false;

  double span() const { return knots.empty() ? 0.0 : knots.back(); }

  // Piecewise-linear evaluation, clamped to [knots.front(), knots.back()].
  double operator()(double w1) const;

  // One-sided slope on the segment containing w1 (left segment at knots).
  double slope(double w1) const;

  bool is_convex(double tol = kTolConv) const;
  bool is_symmetric(double tol = 1e-12) const;

  static ConvexProfile constant(double span, double value, int n_knots);
  static ConvexProfile degenerate_profile(double span);
};

/// Symmetrize and take the lower convex envelope of nodal values on symmetric
/// knots. Idempotent; the output never exceeds the input pointwise.
ConvexProfile project_convex_symmetric(const std::vector<double>& knots,
                                       const std::vector<double>& raw_values);

/// Catenoid neck profile rho_bar(t) = a*cosh((t-l)/a) on [0, 2l] with
/// rho_bar(0) = rho_bar(2l) = 1.
struct CatenoidProfile {
  double a = 0.0;
  double half_length = 0.0;  // l

  double rho_bar(double t) const;
  double rho_bar_prime(double t) const;
};

}  // namespace vortex
