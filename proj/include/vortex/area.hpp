#pragma once

#include "vortex/chart.hpp"
#include "vortex/common.hpp"
#include "vortex/profile.hpp"

namespace vortex {

/// Area of the graph of the vortex map x/|x| over the annulus eps < |x| < l.
/// |grad u|^2 = 1/r^2 (verified numerically in the test suite against the
/// entrywise gradient), which gives the closed form
/// pi * [ l*sqrt(1+l^2) + asinh(l) - eps*sqrt(1+eps^2) - asinh(eps) ].
double vortex_graph_area(const ProblemParams& p);

/// Classical graph area of a nodal scalar field over the non-collapsed part of
/// its chart: cell-centered quadrature of sqrt(1 + |grad psi|^2), gradients by
/// corner differences pushed through the chart metric.
double scalar_graph_area(const ScalarField& psi);

/// Penalized functional on the doubled rectangle R_{2l}:
///   A(psi, SG_h) + int_{dirichlet part of boundary of SG_h} |psi - phi|
///   + int_{G_h minus bottom} |psi| + int_{L_h} phi,
/// with the degenerate branch h == -1 evaluated analytically to pi.
double functional_F2l(const ConvexProfile& h, const ScalarField& psi, const BoundaryTrace& bc);

/// Half-domain functional on R_l = (0, l) x (-1, 1); the edge w1 = l is free.
/// Satisfies 2 * F_l(h, psi) = F_2l(mirror(h), mirror(psi)).
double functional_Fl(const ConvexProfile& h, const ScalarField& psi, const BoundaryTrace& bc);

/// Relaxed area of the vortex-map graph: smooth graph term plus the infimum of
/// F_{2l}.
double relaxed_area(const ProblemParams& p, double f_star);

/// Mirror a profile on [0, l] to the doubled [0, 2l] (shared knot at l).
ConvexProfile mirror_profile(const ConvexProfile& h_half);

/// Mirror a field on a [0, l] chart onto the doubled chart (n1 doubles).
ScalarField mirror_field(const ScalarField& psi_half);

/// Left half of a symmetric profile on [0, 2l]; requires an odd knot count so
/// the midpoint is a knot.
ConvexProfile restrict_profile(const ConvexProfile& h_full);

/// Left half of a field on a [0, 2l] chart; requires even n1.
ScalarField restrict_field(const ScalarField& psi_full);

/// Exact integral of sqrt(1 - t^2) from a to b (both in [-1, 1]).
double circle_segment_integral(double a, double b);

}  // namespace vortex
