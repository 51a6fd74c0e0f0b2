#pragma once

#include <string>
#include <vector>

#include "vortex/area.hpp"
#include "vortex/solver.hpp"

namespace vortex {

struct OptimizeOptions {
  int n_knots = 17;   // odd knot count on [0, 2l]; endpoints pinned to 1
  int n1 = 128;       // chart cells along w1 for the inner solves
  int n2 = 64;        // chart cells along sigma
  double init_step = 0.25;
  double min_step = 2e-3;
  double tol_f = 1e-6;       // minimal accepted improvement
  int polish_iters = 200;    // Nelder-Mead budget after coordinate descent
  SolverOptions solver{};
};

struct OptimizeResult {
  ConvexProfile h;       // best non-degenerate profile found
  ScalarField psi;       // minimizer on the chart of h
  double f_nontrivial = 0.0;  // F restricted to non-degenerate profiles
  double f_star = 0.0;        // min(f_nontrivial, pi), pi from the h == -1 branch
  bool two_discs = false;     // true when the degenerate branch attains f_star
  int evaluations = 0;
};

/// Value of the doubled functional at the given profile: solve the minimal
/// graph problem on the chart of h with disc-trace side data and evaluate the
/// functional. Optionally returns the solution and accepts a warm start.
double profile_value(double l, const ConvexProfile& h, int n1, int n2,
                     const SolverOptions& solver = {}, ScalarField* psi_out = nullptr,
                     const ScalarField* warm = nullptr);

/// Minimize the doubled functional over convex symmetric profiles on [0, 2l]
/// with h(0) = h(2l) = 1: multi-start coordinate descent over the interior
/// half-knot values with convex-symmetric projection after every perturbation,
/// followed by a Nelder-Mead polish, then comparison with the degenerate
/// branch whose value is exactly pi.
OptimizeResult optimize_profile(double l, const OptimizeOptions& opts = {});

struct ThresholdResult {
  double l0 = 0.0;       // bisection estimate of the crossing of pi - f_nontrivial
  double g_lo = 0.0;     // pi - f_nontrivial at the initial bracket ends
  double g_hi = 0.0;
  int evaluations = 0;   // total functional evaluations across the search
};

/// Bisect for the half-length where the nontrivial minimum crosses pi.
/// Requires pi - f_nontrivial to change sign over [lo, hi]; throws NoSignChange
/// otherwise.
ThresholdResult find_threshold(double lo, double hi, double tol_l,
                               const OptimizeOptions& opts = {});

struct ValueCurveRow {
  double l = 0.0;
  double f_nontrivial = 0.0;
  double f_star = 0.0;
  double relaxed = 0.0;  // vortex graph area plus f_star
  bool two_discs = false;
  bool ok = false;
  std::string error;  // populated when ok is false
};

/// Evaluate the optimizer over a list of half-lengths; failures are captured
/// per row instead of aborting the sweep.
std::vector<ValueCurveRow> value_curve(const std::vector<double>& half_lengths,
                                       const OptimizeOptions& opts = {});

}  // namespace vortex
