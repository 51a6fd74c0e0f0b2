#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vortex/common.hpp"
#include "vortex/profile.hpp"

namespace vortex {

struct ProblemParams {
  double l = 1.0;
  double epsilon = 0.0;

  void validate() const {
    if (l <= 0.0) throw InvalidRange("ProblemParams: l must be positive");
    if (epsilon < 0.0 || epsilon >= l) throw InvalidRange("ProblemParams: need 0 <= epsilon < l");
  }
};

/// Rectangular chart (x, sigma) in [x0, x1] x [0, 1] mapped column-wise onto
/// { (x, w2) : lower(x) <= w2 <= upper(x) }, with w2 = lower + sigma*(upper-lower).
/// The subgraph chart of a profile h uses lower = -1 and upper = h, so
/// sigma = (w2 + 1) / (1 + h(x)). Columns with height below kTolCol are
/// collapsed and carry no field values.
struct MappedChart {
  double x0 = 0.0, x1 = 1.0;
  int n1 = 2, n2 = 2;                  // cells per direction; (n1+1)*(n2+1) nodes
  std::vector<double> lower, upper;    // per node column, size n1+1

  double dx() const { return (x1 - x0) / n1; }
  double dsig() const { return 1.0 / n2; }
  double x(int i) const { return x0 + dx() * i; }
  double height(int i) const { return upper[static_cast<std::size_t>(i)] - lower[static_cast<std::size_t>(i)]; }
  bool collapsed(int i) const { return height(i) < kTolCol; }
  double w2(int i, double sigma) const {
    return lower[static_cast<std::size_t>(i)] + sigma * height(i);
  }
  int nodes() const { return (n1 + 1) * (n2 + 1); }
  int idx(int i, int j) const { return i * (n2 + 1) + j; }

  // Inverse of the column map; requires a non-collapsed column.
  double sigma_of(int i, double w2_value) const { return (w2_value - lower[static_cast<std::size_t>(i)]) / height(i); }

  static MappedChart rect(double x0, double x1, double y0, double y1, int n1, int n2);
};

/// Chart over the subgraph SG_h in R_{2l} (or R_l when the profile spans [0, l]).
MappedChart build_chart(const ConvexProfile& h, int n1, int n2);

/// Dirichlet data for the doubled problem: half-circles on the vertical sides,
/// zero on the bottom, zero on the free graph G_h. truncation_m > 0 selects the
/// Lipschitz regularization phi_m = (phi - 2/m) v 0.
struct BoundaryTrace {
  int truncation_m = 0;

  double side(double w2_value) const;     // phi (or phi_m) on {0, 2l} x [-1, 1]
  static double phi_hat(double w2_value); // extension sqrt(1 - w2^2) on the whole chart
};

/// Nodal scalar field on a chart. Values on collapsed columns are zero.
struct ScalarField {
  MappedChart chart;
  std::vector<double> values;  // chart.nodes()

  double& at(int i, int j) { return values[static_cast<std::size_t>(chart.idx(i, j))]; }
  double at(int i, int j) const { return values[static_cast<std::size_t>(chart.idx(i, j))]; }

  static ScalarField zero(const MappedChart& chart);
  static ScalarField sample(const MappedChart& chart,
                            const std::function<double(double, double)>& f);  // f(x, w2)

  // Bilinear interpolation in (x, sigma) chart coordinates.
  double interpolate(double x, double sigma) const;
};

void write_csv(const ScalarField& f, const std::string& path);
std::string profile_to_json(const ConvexProfile& h);
ConvexProfile profile_from_json(const std::string& text);
ConvexProfile load_profile(const std::string& path);

}  // namespace vortex
