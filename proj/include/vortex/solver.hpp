#pragma once

#include <functional>

#include "vortex/chart.hpp"
#include "vortex/common.hpp"

namespace vortex {

struct SolverOptions {
  double tol_res = 1e-8;  // inf-norm of the scaled energy gradient
  int max_iter = 500;
};

struct SolverReport {
  int iterations = 0;
  double residual = 0.0;
  double energy = 0.0;
};

/// Minimize the discrete graph-area energy over the interior nodes of the
/// chart with Dirichlet data on all four chart edges (dirichlet takes (x, w2)).
/// The energy is strictly convex; damped Newton with Armijo backtracking and a
/// sparse LDL^T factorization converges from the flat start. Throws
/// NoConvergence if the residual target is not met within max_iter steps.
ScalarField solve_minimal_graph(const MappedChart& chart,
                                const std::function<double(double, double)>& dirichlet,
                                const SolverOptions& opts = {}, SolverReport* report = nullptr,
                                const ScalarField* warm_start = nullptr);

/// Convenience overload: Dirichlet data is the disc trace on the two side
/// edges (w1 = x0 and w1 = x1) and zero on the bottom and along the graph.
ScalarField solve_minimal_graph(const MappedChart& chart, const BoundaryTrace& trace,
                                const SolverOptions& opts = {}, SolverReport* report = nullptr);

/// Scaled inf-norm of the discrete area-energy gradient at interior nodes; a
/// direct check that psi satisfies the minimal surface equation.
double mean_curvature_residual(const ScalarField& psi);

/// Clamp a field between 0 and the truncated disc trace after shifting down by
/// 1/m: psi_m = min(max(psi - 1/m, 0), phi_m). Produces data that vanishes
/// near the corners of the chart while converging to psi as m grows.
ScalarField regularize_boundary(const ScalarField& psi, int m);

}  // namespace vortex
