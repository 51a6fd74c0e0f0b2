#include "vortex/symmetry.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace vortex {

VoxelSolid VoxelSolid::cylinder(double l, int n_t, int n_rho, int n_theta) {
  if (l <= 0.0) throw InvalidRange("VoxelSolid::cylinder: l must be positive");
  if (n_t < 1 || n_rho < 1 || n_theta < 1) throw InvalidRange("VoxelSolid::cylinder: empty grid");
  VoxelSolid s;
  s.geometry = Geometry::Cylindrical;
  s.n1 = n_t;
  s.n2 = n_rho;
  s.n3 = n_theta;
  s.origin[0] = -1.0;
  s.origin[1] = 0.0;
  s.origin[2] = 0.0;
  s.cell[0] = (l + 1.0) / n_t;
  s.cell[1] = 1.0 / n_rho;
  s.cell[2] = 2.0 * kPi / n_theta;
  s.occ.assign(static_cast<std::size_t>(n_t) * n_rho * n_theta, 0);
  return s;
}

VoxelSolid VoxelSolid::box(const double lo[3], const double hi[3], int n1, int n2, int n3) {
  if (n1 < 1 || n2 < 1 || n3 < 1) throw InvalidRange("VoxelSolid::box: empty grid");
  VoxelSolid s;
  s.geometry = Geometry::Cartesian;
  s.n1 = n1;
  s.n2 = n2;
  s.n3 = n3;
  for (int a = 0; a < 3; ++a) {
    if (hi[a] <= lo[a]) throw InvalidRange("VoxelSolid::box: empty extent");
    s.origin[a] = lo[a];
  }
  s.cell[0] = (hi[0] - lo[0]) / n1;
  s.cell[1] = (hi[1] - lo[1]) / n2;
  s.cell[2] = (hi[2] - lo[2]) / n3;
  s.occ.assign(static_cast<std::size_t>(n1) * n2 * n3, 0);
  return s;
}

namespace {

void require_cylindrical(const VoxelSolid& s, const char* who) {
  if (s.geometry != VoxelSolid::Geometry::Cylindrical)
    throw InvalidRange(std::string(who) + ": cylindrical solid required");
}

int shell_count(const VoxelSolid& s, int i, int j) {
  int m = 0;
  for (int k = 0; k < s.n3; ++k) m += s.at(i, j, k) ? 1 : 0;
  return m;
}

}  // namespace

double shell_angle(const VoxelSolid& solid, int t_index, int rho_index) {
  require_cylindrical(solid, "shell_angle");
  if (t_index < 0 || t_index >= solid.n1 || rho_index < 0 || rho_index >= solid.n2)
    throw InvalidRange("shell_angle: index out of range");
  return shell_count(solid, t_index, rho_index) * solid.cell[2];
}

VoxelSolid cylindrical_steiner(const VoxelSolid& solid) {
  require_cylindrical(solid, "cylindrical_steiner");
  VoxelSolid out = solid;
  std::fill(out.occ.begin(), out.occ.end(), 0);
  const int nth = solid.n3;
  for (int i = 0; i < solid.n1; ++i) {
    for (int j = 0; j < solid.n2; ++j) {
      const int m = shell_count(solid, i, j);
      if (m == 0) continue;
      // Occupy q cells on each side of theta = 0; odd counts put the extra
      // cell at positive theta, which keeps the map idempotent.
      const int q = m / 2;
      for (int k = 0; k < q + (m % 2); ++k) out.set(i, j, k % nth, true);
      for (int k = 0; k < q; ++k) out.set(i, j, nth - 1 - k, true);
    }
  }
  return out;
}

ClassicalSteinerResult classical_steiner(const VoxelSolid& solid, int axis) {
  if (solid.geometry != VoxelSolid::Geometry::Cartesian)
    throw InvalidRange("classical_steiner: Cartesian solid required");
  if (axis < 0 || axis > 2) throw InvalidRange("classical_steiner: axis must be 0, 1 or 2");
  const int dims[3] = {solid.n1, solid.n2, solid.n3};
  const int na = dims[(axis + 1) % 3], nb = dims[(axis + 2) % 3], nc = dims[axis];

  ClassicalSteinerResult res;
  res.solid = solid;
  std::fill(res.solid.occ.begin(), res.solid.occ.end(), 0);
  res.half_thickness.assign(static_cast<std::size_t>(na) * nb, 0.0);

  auto cell_index = [&](int a, int b, int c) {
    int ijk[3];
    ijk[(axis + 1) % 3] = a;
    ijk[(axis + 2) % 3] = b;
    ijk[axis] = c;
    return solid.idx(ijk[0], ijk[1], ijk[2]);
  };

  for (int a = 0; a < na; ++a) {
    for (int b = 0; b < nb; ++b) {
      int m = 0;
      for (int c = 0; c < nc; ++c) m += solid.occ[cell_index(a, b, c)] ? 1 : 0;
      res.half_thickness[static_cast<std::size_t>(a) * nb + b] = 0.5 * m * solid.cell[axis];
      if (m == 0) continue;
      // Contiguous block centered on the mid-plane, extra cell above it.
      const int lo = (nc - m + ((nc - m) & 1)) / 2;
      for (int c = lo; c < lo + m; ++c) res.solid.occ[cell_index(a, b, c)] = 1;
    }
  }
  return res;
}

double voxel_volume(const VoxelSolid& s) {
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(s.n1) * s.n2);
  if (s.geometry == VoxelSolid::Geometry::Cylindrical) {
    for (int i = 0; i < s.n1; ++i)
      for (int j = 0; j < s.n2; ++j) {
        const double rho_c = s.origin[1] + (j + 0.5) * s.cell[1];
        terms.push_back(shell_count(s, i, j) * rho_c * s.cell[0] * s.cell[1] * s.cell[2]);
      }
  } else {
    const double v = s.cell[0] * s.cell[1] * s.cell[2];
    std::size_t m = 0;
    for (std::uint8_t c : s.occ) m += c ? 1 : 0;
    return static_cast<double>(m) * v;
  }
  return pairwise_sum(terms);
}

double voxel_perimeter(const VoxelSolid& s) {
  std::vector<double> terms;
  const bool cyl = s.geometry == VoxelSolid::Geometry::Cylindrical;
  auto occupied = [&](int i, int j, int k) {
    if (i < 0 || i >= s.n1 || j < 0 || j >= s.n2) return false;
    if (cyl) k = (k % s.n3 + s.n3) % s.n3;  // theta wraps
    else if (k < 0 || k >= s.n3) return false;
    return s.at(i, j, k);
  };
  for (int i = 0; i < s.n1; ++i) {
    for (int j = 0; j < s.n2; ++j) {
      for (int k = 0; k < s.n3; ++k) {
        if (!s.at(i, j, k)) continue;
        const double rho_c = s.origin[1] + (j + 0.5) * s.cell[1];
        // Face areas per direction; Cartesian weights when not cylindrical.
        const double a1 = cyl ? rho_c * s.cell[1] * s.cell[2] : s.cell[1] * s.cell[2];
        const double a2_lo = cyl ? (s.origin[1] + j * s.cell[1]) * s.cell[2] * s.cell[0]
                                 : s.cell[0] * s.cell[2];
        const double a2_hi = cyl ? (s.origin[1] + (j + 1) * s.cell[1]) * s.cell[2] * s.cell[0]
                                 : s.cell[0] * s.cell[2];
        const double a3 = cyl ? s.cell[0] * s.cell[1] : s.cell[0] * s.cell[1];
        if (!occupied(i - 1, j, k)) terms.push_back(a1);
        if (!occupied(i + 1, j, k)) terms.push_back(a1);
        // The rho = 0 axis face has zero area in the cylinder and is skipped
        // there by the weight itself.
        if (!occupied(i, j - 1, k) && a2_lo > 0.0) terms.push_back(a2_lo);
        if (!occupied(i, j + 1, k)) terms.push_back(a2_hi);
        if (!occupied(i, j, k - 1)) terms.push_back(a3);
        if (!occupied(i, j, k + 1)) terms.push_back(a3);
      }
    }
  }
  return pairwise_sum(terms);
}

namespace {
constexpr char kMagic[4] = {'V', 'O', 'X', 'S'};
}

void write_solid(const VoxelSolid& s, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("write_solid: cannot open " + path);
  f.write(kMagic, 4);
  const std::uint8_t geom = static_cast<std::uint8_t>(s.geometry);
  f.write(reinterpret_cast<const char*>(&geom), 1);
  const std::uint32_t dims[3] = {static_cast<std::uint32_t>(s.n1), static_cast<std::uint32_t>(s.n2),
                                 static_cast<std::uint32_t>(s.n3)};
  f.write(reinterpret_cast<const char*>(dims), sizeof(dims));
  f.write(reinterpret_cast<const char*>(s.origin), sizeof(s.origin));
  f.write(reinterpret_cast<const char*>(s.cell), sizeof(s.cell));
  std::vector<std::uint8_t> packed((s.occ.size() + 7) / 8, 0);
  for (std::size_t b = 0; b < s.occ.size(); ++b)
    if (s.occ[b]) packed[b / 8] |= static_cast<std::uint8_t>(1u << (b % 8));
  f.write(reinterpret_cast<const char*>(packed.data()), static_cast<std::streamsize>(packed.size()));
  if (!f) throw std::runtime_error("write_solid: write failed for " + path);
}

VoxelSolid read_solid(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("read_solid: cannot open " + path);
  char magic[4];
  f.read(magic, 4);
  if (!f || std::memcmp(magic, kMagic, 4) != 0)
    throw std::runtime_error("read_solid: bad magic in " + path);
  std::uint8_t geom = 0;
  f.read(reinterpret_cast<char*>(&geom), 1);
  std::uint32_t dims[3];
  f.read(reinterpret_cast<char*>(dims), sizeof(dims));
  VoxelSolid s;
  s.geometry = static_cast<VoxelSolid::Geometry>(geom);
  s.n1 = static_cast<int>(dims[0]);
  s.n2 = static_cast<int>(dims[1]);
  s.n3 = static_cast<int>(dims[2]);
  f.read(reinterpret_cast<char*>(s.origin), sizeof(s.origin));
  f.read(reinterpret_cast<char*>(s.cell), sizeof(s.cell));
  const std::size_t n = static_cast<std::size_t>(s.n1) * s.n2 * s.n3;
  std::vector<std::uint8_t> packed((n + 7) / 8);
  f.read(reinterpret_cast<char*>(packed.data()), static_cast<std::streamsize>(packed.size()));
  if (!f) throw std::runtime_error("read_solid: truncated file " + path);
  s.occ.assign(n, 0);
  for (std::size_t b = 0; b < n; ++b)
    s.occ[b] = (packed[b / 8] >> (b % 8)) & 1u;
  return s;
}

}  // namespace vortex
