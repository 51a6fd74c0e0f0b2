#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vortex/common.hpp"

namespace vortex {

/// Binary occupancy solid, either on a cylinder (t, rho, theta) with
/// rho in (0, 1] and theta in [0, 2*pi), or on a Cartesian box (w1, w2, w3).
/// Cells are uniform per axis.
struct VoxelSolid {
  enum class Geometry : std::uint8_t { Cartesian = 0, Cylindrical = 1 };

  Geometry geometry = Geometry::Cartesian;
  int n1 = 0, n2 = 0, n3 = 0;        // cylindrical: (n_t, n_rho, n_theta)
  double origin[3] = {0.0, 0.0, 0.0};  // low corner per axis (theta origin 0)
  double cell[3] = {0.0, 0.0, 0.0};    // cell size per axis
  std::vector<std::uint8_t> occ;       // n1*n2*n3, row-major (i1, i2, i3)

  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n2 + j) * n3 + k;
  }
  bool at(int i, int j, int k) const { return occ[idx(i, j, k)] != 0; }
  void set(int i, int j, int k, bool v) { occ[idx(i, j, k)] = v ? 1 : 0; }

  /// Cylinder C_l = (-1, l) x B_1 at the given resolution, empty.
  static VoxelSolid cylinder(double l, int n_t, int n_rho, int n_theta);
  /// Cartesian box, empty.
  static VoxelSolid box(const double lo[3], const double hi[3], int n1, int n2, int n3);
};

/// Total angular measure (radians) of the occupied cells on one (t, rho)
/// shell of a cylindrical solid.
double shell_angle(const VoxelSolid& solid, int t_index, int rho_index);

/// Cylindrical Steiner symmetrization: each (t, rho) shell keeps its occupied
/// cell count but is rearranged into the arc theta in (-Theta/2, Theta/2);
/// when the count is odd the extra cell goes to the positive-theta side.
VoxelSolid cylindrical_steiner(const VoxelSolid& solid);

struct ClassicalSteinerResult {
  VoxelSolid solid;
  // Half-thickness of each column (n_a * n_b values for the two axes other
  // than the symmetrization axis, in axis order).
  std::vector<double> half_thickness;
};

/// Classical Steiner symmetrization of a Cartesian solid about the mid-plane
/// of the given axis (0, 1 or 2): each column's occupied cells are recentered
/// contiguously about the plane, extra cell on the positive side.
ClassicalSteinerResult classical_steiner(const VoxelSolid& solid, int axis);

double voxel_volume(const VoxelSolid& solid);

/// Face-count perimeter: sum of areas of faces between occupied and empty (or
/// out-of-domain) cells; cylindrical faces carry metric weights.
double voxel_perimeter(const VoxelSolid& solid);

/// Binary .vox serialization (little-endian header + packed bitset),
/// format documented in README.
void write_solid(const VoxelSolid& solid, const std::string& path);
VoxelSolid read_solid(const std::string& path);

}  // namespace vortex
