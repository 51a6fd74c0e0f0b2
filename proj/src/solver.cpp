#include "vortex/solver.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <vector>

namespace vortex {

namespace {

// Per-cell chart geometry and the 2x4 map from corner values to (psi_w1, psi_w2).
struct CellMap {
  int corners[4];  // node indices: 00, 10, 01, 11
  double m1[4];    // row for psi_w1
  double m2[4];    // row for psi_w2
  double weight;   // H_c * dx * dsig
};

std::vector<CellMap> build_cells(const MappedChart& c) {
  std::vector<CellMap> cells;
  const double dx = c.dx(), dsig = c.dsig();
  for (int i = 0; i < c.n1; ++i) {
    if (c.collapsed(i) || c.collapsed(i + 1)) continue;
    const double h_l = c.height(i), h_r = c.height(i + 1);
    const double h_c = 0.5 * (h_l + h_r);
    const double hp_c = (h_r - h_l) / dx;
    const double lop_c = (c.lower[static_cast<std::size_t>(i + 1)] - c.lower[static_cast<std::size_t>(i)]) / dx;
    for (int j = 0; j < c.n2; ++j) {
      CellMap cm;
      cm.corners[0] = c.idx(i, j);
      cm.corners[1] = c.idx(i + 1, j);
      cm.corners[2] = c.idx(i, j + 1);
      cm.corners[3] = c.idx(i + 1, j + 1);
      const double sig_c = (j + 0.5) * dsig;
      const double cx = 0.5 / dx, cs = 0.5 / dsig;
      // fx coefficients, fs coefficients (corner order 00, 10, 01, 11)
      const double fx[4] = {-cx, cx, -cx, cx};
      const double fs[4] = {-cs, -cs, cs, cs};
      const double mix = (lop_c + sig_c * hp_c) / h_c;
      for (int a = 0; a < 4; ++a) {
        cm.m1[a] = fx[a] - mix * fs[a];
        cm.m2[a] = fs[a] / h_c;
      }
      cm.weight = h_c * dx * dsig;
      cells.push_back(cm);
    }
  }
  return cells;
}

double energy_of(const std::vector<CellMap>& cells, const Eigen::VectorXd& f) {
  std::vector<double> terms;
  terms.reserve(cells.size());
  for (const CellMap& cm : cells) {
    double g1 = 0.0, g2 = 0.0;
    for (int a = 0; a < 4; ++a) {
      g1 += cm.m1[a] * f[cm.corners[a]];
      g2 += cm.m2[a] * f[cm.corners[a]];
    }
    terms.push_back(cm.weight * std::sqrt(1.0 + g1 * g1 + g2 * g2));
  }
  return pairwise_sum(terms);
}

void gradient_of(const std::vector<CellMap>& cells, const Eigen::VectorXd& f, Eigen::VectorXd& grad) {
  grad.setZero();
  for (const CellMap& cm : cells) {
    double g1 = 0.0, g2 = 0.0;
    for (int a = 0; a < 4; ++a) {
      g1 += cm.m1[a] * f[cm.corners[a]];
      g2 += cm.m2[a] * f[cm.corners[a]];
    }
    const double s = std::sqrt(1.0 + g1 * g1 + g2 * g2);
    const double c1 = cm.weight * g1 / s, c2 = cm.weight * g2 / s;
    for (int a = 0; a < 4; ++a) grad[cm.corners[a]] += c1 * cm.m1[a] + c2 * cm.m2[a];
  }
}

}  // namespace

ScalarField solve_minimal_graph(const MappedChart& chart,
                                const std::function<double(double, double)>& dirichlet,
                                const SolverOptions& opts, SolverReport* report,
                                const ScalarField* warm_start) {
  const int nn = chart.nodes();
  std::vector<int> free_of_node(static_cast<std::size_t>(nn), -1);
  std::vector<int> node_of_free;
  for (int i = 1; i < chart.n1; ++i) {
    if (chart.collapsed(i)) continue;
    for (int j = 1; j < chart.n2; ++j) {
      free_of_node[static_cast<std::size_t>(chart.idx(i, j))] = static_cast<int>(node_of_free.size());
      node_of_free.push_back(chart.idx(i, j));
    }
  }
  const int nf = static_cast<int>(node_of_free.size());

  Eigen::VectorXd f = Eigen::VectorXd::Zero(nn);
  for (int i = 0; i <= chart.n1; ++i) {
    if (chart.collapsed(i)) continue;
    for (int j = 0; j <= chart.n2; ++j) {
      const bool edge = (i == 0 || i == chart.n1 || j == 0 || j == chart.n2);
      if (edge) {
        f[chart.idx(i, j)] = dirichlet(chart.x(i), chart.w2(i, j * chart.dsig()));
      } else if (warm_start) {
        const MappedChart& wc = warm_start->chart;
        const double xw = std::clamp(chart.x(i), wc.x0, wc.x1);
        f[chart.idx(i, j)] = warm_start->interpolate(xw, j * chart.dsig());
      }
    }
  }

  const std::vector<CellMap> cells = build_cells(chart);
  const double scale = chart.dx() * chart.dsig();  // node "area" in chart coords

  Eigen::VectorXd grad(nn);
  double energy = energy_of(cells, f);
  double residual = 0.0;
  int iter = 0;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
  bool analyzed = false;

  for (; iter < opts.max_iter; ++iter) {
    gradient_of(cells, f, grad);
    residual = 0.0;
    for (int q = 0; q < nf; ++q) residual = std::max(residual, std::abs(grad[node_of_free[static_cast<std::size_t>(q)]]));
    residual /= scale;
    if (residual < opts.tol_res || nf == 0) break;

    // Hessian restricted to free nodes.
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(cells.size() * 16);
    for (const CellMap& cm : cells) {
      double g1 = 0.0, g2 = 0.0;
      for (int a = 0; a < 4; ++a) {
        g1 += cm.m1[a] * f[cm.corners[a]];
        g2 += cm.m2[a] * f[cm.corners[a]];
      }
      const double s2 = 1.0 + g1 * g1 + g2 * g2;
      const double s = std::sqrt(s2);
      // d^2/dg^2 sqrt(1+|g|^2) = (I - g g^T / s^2) / s
      const double a11 = (1.0 - g1 * g1 / s2) / s;
      const double a12 = (-g1 * g2 / s2) / s;
      const double a22 = (1.0 - g2 * g2 / s2) / s;
      for (int a = 0; a < 4; ++a) {
        const int ra = free_of_node[static_cast<std::size_t>(cm.corners[a])];
        if (ra < 0) continue;
        const double r1 = a11 * cm.m1[a] + a12 * cm.m2[a];
        const double r2 = a12 * cm.m1[a] + a22 * cm.m2[a];
        for (int b = 0; b < 4; ++b) {
          const int rb = free_of_node[static_cast<std::size_t>(cm.corners[b])];
          if (rb < 0) continue;
          trips.emplace_back(ra, rb, cm.weight * (r1 * cm.m1[b] + r2 * cm.m2[b]));
        }
      }
    }
    Eigen::SparseMatrix<double> hess(nf, nf);
    hess.setFromTriplets(trips.begin(), trips.end());

    Eigen::VectorXd rhs(nf);
    for (int q = 0; q < nf; ++q) rhs[q] = -grad[node_of_free[static_cast<std::size_t>(q)]];
    if (!analyzed) {
      ldlt.analyzePattern(hess);
      analyzed = true;
    }
    ldlt.factorize(hess);
    if (ldlt.info() != Eigen::Success) throw NoConvergence(iter, residual, "solve_minimal_graph: factorization failed");
    Eigen::VectorXd step = ldlt.solve(rhs);

    // Armijo backtracking on the energy.
    const double slope = -rhs.dot(step);  // grad . step, negative for a descent direction
    double t = 1.0;
    Eigen::VectorXd trial = f;
    for (int ls = 0; ls < 40; ++ls) {
      for (int q = 0; q < nf; ++q) trial[node_of_free[static_cast<std::size_t>(q)]] = f[node_of_free[static_cast<std::size_t>(q)]] + t * step[q];
      const double e_trial = energy_of(cells, trial);
      if (e_trial <= energy + 1e-4 * t * slope) {
        f = trial;
        energy = e_trial;
        break;
      }
      t *= 0.5;
      if (ls == 39) throw NoConvergence(iter, residual, "solve_minimal_graph: line search failed");
    }
  }
  if (iter >= opts.max_iter && residual >= opts.tol_res)
    throw NoConvergence(iter, residual, "solve_minimal_graph: residual target not reached");

  ScalarField out;
  out.chart = chart;
  out.values.assign(f.data(), f.data() + nn);
  for (int i = 0; i <= chart.n1; ++i)
    if (chart.collapsed(i))
      for (int j = 0; j <= chart.n2; ++j) out.at(i, j) = 0.0;
  if (report) {
    report->iterations = iter;
    report->residual = residual;
    report->energy = energy;
  }
  return out;
}

ScalarField solve_minimal_graph(const MappedChart& chart, const BoundaryTrace& trace,
                                const SolverOptions& opts, SolverReport* report) {
  const double x0 = chart.x0, x1 = chart.x1;
  auto data = [&](double x, double w2) {
    const bool side = std::abs(x - x0) < 1e-14 || std::abs(x - x1) < 1e-14;
    return side ? trace.side(w2) : 0.0;
  };
  return solve_minimal_graph(chart, data, opts, report);
}

ScalarField regularize_boundary(const ScalarField& psi, int m) {
  if (m < 1) throw InvalidRange("regularize_boundary: m must be positive");
  const MappedChart& c = psi.chart;
  BoundaryTrace trace;
  trace.truncation_m = m;
  ScalarField out = psi;
  const double inv_m = 1.0 / m;
  for (int i = 0; i <= c.n1; ++i) {
    for (int j = 0; j <= c.n2; ++j) {
      const double w2 = c.w2(i, j * c.dsig());
      const double cap = trace.side(w2);
      out.at(i, j) = std::min(std::max(psi.at(i, j) - inv_m, 0.0), cap);
    }
  }
  return out;
}

double mean_curvature_residual(const ScalarField& psi) {
  const MappedChart& c = psi.chart;
  const std::vector<CellMap> cells = build_cells(c);
  Eigen::VectorXd f = Eigen::Map<const Eigen::VectorXd>(psi.values.data(), psi.values.size());
  Eigen::VectorXd grad(c.nodes());
  gradient_of(cells, f, grad);
  double res = 0.0;
  for (int i = 1; i < c.n1; ++i) {
    if (c.collapsed(i)) continue;
    for (int j = 1; j < c.n2; ++j) res = std::max(res, std::abs(grad[c.idx(i, j)]));
  }
  return res / (c.dx() * c.dsig());
}

}  // namespace vortex
