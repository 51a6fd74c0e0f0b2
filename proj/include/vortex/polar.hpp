#pragma once

#include <functional>
#include <vector>

#include "vortex/common.hpp"

namespace vortex {

/// Non-uniform tensor grid on (r, theta) in [r0, r1] x [0, 2*pi), periodic in
/// theta. Breakpoints passed to the builders are inserted exactly so that
/// piecewise-defined maps are smooth on every cell.
struct PolarGrid {
  std::vector<double> r;      // strictly increasing, r.front() = r0
  std::vector<double> theta;  // strictly increasing in [0, 2*pi), cell n wraps to theta[0] + 2*pi

  int nr() const { return static_cast<int>(r.size()) - 1; }
  int ntheta() const { return static_cast<int>(theta.size()); }  // periodic: as many cells as nodes
  double theta_at(int k) const;                                  // wraps past the seam
};

/// Build a grid with the given resolution whose node sets contain all listed
/// breakpoints; between consecutive breakpoints the spacing is uniform, and
/// every sub-interval receives nodes in proportion to its length (at least
/// min_per_interval cells each, so thin wedges are never under-resolved).
PolarGrid make_polar_grid(double r0, double r1, int nr, int ntheta,
                          const std::vector<double>& r_breaks,
                          const std::vector<double>& theta_breaks, int min_per_interval = 4);

/// R^2-valued map sampled on the nodes of a polar grid.
struct PolarMapField {
  PolarGrid grid;
  std::vector<double> v1, v2;  // node-major: index = i * ntheta + k

  int idx(int i, int k) const { return i * grid.ntheta() + k; }

  static PolarMapField sample(const PolarGrid& grid,
                              const std::function<void(double, double, double&, double&)>& f);
};

/// Graph area of the map v over the annulus, by midpoint quadrature of
///   sqrt(1 + |v_r|^2 + |v_theta|^2 / r^2 + (v1_r v2_theta - v1_theta v2_r)^2 / r^2) * r
/// with corner-difference derivatives per cell. Throws GridTooCoarse when the
/// grid has fewer than 4 cells in either direction.
double map_graph_area_polar(const PolarMapField& v);

}  // namespace vortex
