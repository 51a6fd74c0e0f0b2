#include "vortex/area.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace vortex {

double vortex_graph_area(const ProblemParams& p) {
  p.validate();
  auto primitive = [](double r) { return r * std::sqrt(1.0 + r * r) + std::asinh(r); };
  return kPi * (primitive(p.l) - primitive(p.epsilon));
}

double circle_segment_integral(double a, double b) {
  auto primitive = [](double t) {
    t = std::clamp(t, -1.0, 1.0);
    return 0.5 * (t * std::sqrt(1.0 - t * t) + std::asin(t));
  };
  return primitive(b) - primitive(a);
}

double scalar_graph_area(const ScalarField& psi) {
  const MappedChart& c = psi.chart;
  const double dx = c.dx();
  const double dsig = c.dsig();
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(c.n1) * c.n2);
  for (int i = 0; i < c.n1; ++i) {
    if (c.collapsed(i) || c.collapsed(i + 1)) continue;  // no graph over collapsed columns
    const double h_l = c.height(i), h_r = c.height(i + 1);
    const double h_c = 0.5 * (h_l + h_r);
    const double hp_c = (h_r - h_l) / dx;
    const double lop_c = (c.lower[static_cast<std::size_t>(i + 1)] - c.lower[static_cast<std::size_t>(i)]) / dx;
    for (int j = 0; j < c.n2; ++j) {
      const double f00 = psi.at(i, j), f10 = psi.at(i + 1, j);
      const double f01 = psi.at(i, j + 1), f11 = psi.at(i + 1, j + 1);
      const double fx = 0.5 * ((f10 - f00) + (f11 - f01)) / dx;
      const double fs = 0.5 * ((f01 - f00) + (f11 - f10)) / dsig;
      const double sig_c = (j + 0.5) * dsig;
      // Chain rule: psi(x, w2) = psi_tilde(x, sigma(x, w2)).
      const double psi_w2 = fs / h_c;
      const double psi_w1 = fx - fs * (lop_c + sig_c * hp_c) / h_c;
      terms.push_back(std::sqrt(1.0 + psi_w1 * psi_w1 + psi_w2 * psi_w2) * h_c * dx * dsig);
    }
  }
  return pairwise_sum(terms);
}

namespace {

// Trapezoid weight for node j of n2+1 nodes.
double trap(int j, int n2) { return (j == 0 || j == n2) ? 0.5 : 1.0; }

void check_collapsed_columns(const ScalarField& psi) {
  if (psi.values.empty()) return;  // empty field stands for psi == 0
  const MappedChart& c = psi.chart;
  for (int i = 0; i <= c.n1; ++i) {
    if (!c.collapsed(i)) continue;
    for (int j = 0; j <= c.n2; ++j) {
      if (std::abs(psi.at(i, j)) > 1e-10)
        throw ConstraintViolation("functional: psi must vanish outside the subgraph");
    }
  }
}

// |psi - phi| along one vertical chart column (Dirichlet side of SG_h),
// trapezoid rule in w2, plus the exact wall integral of phi over
// [upper(i), 1] where the profile sits below the side data support.
double side_term(const ScalarField& psi, const BoundaryTrace& bc, int i) {
  const MappedChart& c = psi.chart;
  double wall = circle_segment_integral(std::min(c.upper[static_cast<std::size_t>(i)], 1.0), 1.0);
  if (bc.truncation_m > 0) {
    // phi_m differs from phi; integrate the wall numerically instead.
    wall = 0.0;
    const int nw = 256;
    const double a = std::min(c.upper[static_cast<std::size_t>(i)], 1.0);
    const double dw = (1.0 - a) / nw;
    for (int k = 0; k <= nw; ++k)
      wall += ((k == 0 || k == nw) ? 0.5 : 1.0) * bc.side(a + k * dw) * dw;
  }
  if (c.collapsed(i)) {
    // Column is a single point; the whole side (-1, 1) is wall.
    if (bc.truncation_m > 0) return wall + 0.0;
    return circle_segment_integral(c.lower[static_cast<std::size_t>(i)], 1.0);
  }
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(c.n2) + 1);
  const double h = c.height(i);
  for (int j = 0; j <= c.n2; ++j) {
    const double w2v = c.w2(i, j * c.dsig());
    terms.push_back(trap(j, c.n2) * std::abs(psi.at(i, j) - bc.side(w2v)) * h * c.dsig());
  }
  return pairwise_sum(terms) + wall;
}

// |psi| along the bottom edge w2 = -1 (part of the Dirichlet boundary, phi = 0
// there) and |psi| along the free graph G_h away from the bottom, by
// trapezoid / segment midpoint rules.
double bottom_term(const ScalarField& psi) {
  const MappedChart& c = psi.chart;
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(c.n1) + 1);
  for (int i = 0; i <= c.n1; ++i) {
    const double v = c.collapsed(i) ? 0.0 : std::abs(psi.at(i, 0));
    terms.push_back(trap(i, c.n1) * v * c.dx());
  }
  return pairwise_sum(terms);
}

double graph_term(const ScalarField& psi) {
  const MappedChart& c = psi.chart;
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(c.n1));
  for (int i = 0; i < c.n1; ++i) {
    const double u_l = c.upper[static_cast<std::size_t>(i)];
    const double u_r = c.upper[static_cast<std::size_t>(i + 1)];
    // Only the part of G_h above the bottom contributes.
    if (u_l <= -1.0 + kTolCol && u_r <= -1.0 + kTolCol) continue;
    const double v_l = c.collapsed(i) ? 0.0 : std::abs(psi.at(i, c.n2));
    const double v_r = c.collapsed(i + 1) ? 0.0 : std::abs(psi.at(i + 1, c.n2));
    const double seg = std::hypot(c.dx(), u_r - u_l);
    terms.push_back(0.5 * (v_l + v_r) * seg);
  }
  return pairwise_sum(terms);
}

double functional_impl(const ConvexProfile& h, const ScalarField& psi, const BoundaryTrace& bc,
                       bool right_side_dirichlet) {
  check_collapsed_columns(psi);
  const MappedChart& c = psi.chart;
  if (std::abs(c.x1 - c.x0 - h.span()) > 1e-12)
    throw InvalidRange("functional: field chart does not span the profile domain");
  double total = scalar_graph_area(psi) + bottom_term(psi) + graph_term(psi);
  total += side_term(psi, bc, 0);
  if (right_side_dirichlet) total += side_term(psi, bc, c.n1);
  return total;
}

}  // namespace

double functional_F2l(const ConvexProfile& h, const ScalarField& psi, const BoundaryTrace& bc) {
  if (h.degenerate) {
    check_collapsed_columns(psi);
    return kPi;  // two unit half-discs plus nothing else, exactly
  }
  return functional_impl(h, psi, bc, /*right_side_dirichlet=*/true);
}

double functional_Fl(const ConvexProfile& h, const ScalarField& psi, const BoundaryTrace& bc) {
  if (h.degenerate) {
    check_collapsed_columns(psi);
    return 0.5 * kPi;
  }
  return functional_impl(h, psi, bc, /*right_side_dirichlet=*/false);
}

double relaxed_area(const ProblemParams& p, double f_star) {
  return vortex_graph_area(p) + f_star;
}

ConvexProfile mirror_profile(const ConvexProfile& h_half) {
  if (h_half.degenerate) return ConvexProfile::degenerate_profile(2.0 * h_half.span());
  const double l = h_half.span();
  ConvexProfile out;
  out.knots = h_half.knots;
  out.values = h_half.values;
  for (int k = static_cast<int>(h_half.knots.size()) - 2; k >= 0; --k) {
    out.knots.push_back(2.0 * l - h_half.knots[static_cast<std::size_t>(k)]);
    out.values.push_back(h_half.values[static_cast<std::size_t>(k)]);
  }
  return out;
}

ScalarField mirror_field(const ScalarField& psi_half) {
  const MappedChart& c = psi_half.chart;
  MappedChart doubled;
  doubled.x0 = c.x0;
  doubled.x1 = c.x0 + 2.0 * (c.x1 - c.x0);
  doubled.n1 = 2 * c.n1;
  doubled.n2 = c.n2;
  doubled.lower.resize(static_cast<std::size_t>(doubled.n1) + 1);
  doubled.upper.resize(static_cast<std::size_t>(doubled.n1) + 1);
  ScalarField out;
  for (int i = 0; i <= doubled.n1; ++i) {
    const int src = (i <= c.n1) ? i : 2 * c.n1 - i;
    doubled.lower[static_cast<std::size_t>(i)] = c.lower[static_cast<std::size_t>(src)];
    doubled.upper[static_cast<std::size_t>(i)] = c.upper[static_cast<std::size_t>(src)];
  }
  out.chart = doubled;
  out.values.resize(static_cast<std::size_t>(doubled.nodes()));
  for (int i = 0; i <= doubled.n1; ++i) {
    const int src = (i <= c.n1) ? i : 2 * c.n1 - i;
    for (int j = 0; j <= c.n2; ++j) out.at(i, j) = psi_half.at(src, j);
  }
  return out;
}

ConvexProfile restrict_profile(const ConvexProfile& h_full) {
  if (h_full.degenerate) return ConvexProfile::degenerate_profile(0.5 * h_full.span());
  const std::size_t n = h_full.knots.size();
  if (n % 2 == 0) throw InvalidRange("restrict_profile: odd knot count required");
  const std::size_t mid = n / 2;
  ConvexProfile out;
  out.knots.assign(h_full.knots.begin(), h_full.knots.begin() + static_cast<std::ptrdiff_t>(mid + 1));
  out.values.assign(h_full.values.begin(), h_full.values.begin() + static_cast<std::ptrdiff_t>(mid + 1));
  return out;
}

ScalarField restrict_field(const ScalarField& psi_full) {
  const MappedChart& c = psi_full.chart;
  if (c.n1 % 2 != 0) throw InvalidRange("restrict_field: even n1 required");
  MappedChart half;
  half.x0 = c.x0;
  half.x1 = 0.5 * (c.x0 + c.x1);
  half.n1 = c.n1 / 2;
  half.n2 = c.n2;
  half.lower.assign(c.lower.begin(), c.lower.begin() + half.n1 + 1);
  half.upper.assign(c.upper.begin(), c.upper.begin() + half.n1 + 1);
  ScalarField out;
  out.chart = half;
  out.values.resize(static_cast<std::size_t>(half.nodes()));
  for (int i = 0; i <= half.n1; ++i)
    for (int j = 0; j <= half.n2; ++j) out.at(i, j) = psi_full.at(i, j);
  return out;
}

}  // namespace vortex
