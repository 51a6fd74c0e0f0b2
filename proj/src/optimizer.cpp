#include "vortex/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "vortex/sequences.hpp"

namespace vortex {

double profile_value(double l, const ConvexProfile& h, int n1, int n2,
                     const SolverOptions& solver, ScalarField* psi_out,
                     const ScalarField* warm) {
  if (h.degenerate) return kPi;
  const MappedChart chart = build_chart(h, n1, n2);
  BoundaryTrace trace;
  const double x0 = chart.x0, x1 = chart.x1;
  auto data = [&](double x, double w2) {
    const bool side = std::abs(x - x0) < 1e-14 || std::abs(x - x1) < 1e-14;
    return side ? trace.side(w2) : 0.0;
  };
  ScalarField psi = solve_minimal_graph(chart, data, solver, nullptr, warm);
  const double f = functional_F2l(h, psi, trace);
  if (psi_out) *psi_out = std::move(psi);
  (void)l;
  return f;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Free parameters are the interior half-knot values v[0..d-1] for knots
// 1..mid of an odd symmetric knot vector; endpoints are pinned to 1.
struct Search {
  double l;
  std::vector<double> knots;  // n_knots values on [0, 2l]
  int dim;
  const OptimizeOptions& opts;
  int evaluations = 0;
  ScalarField warm;  // best solution so far, used as the next initial guess
  bool have_warm = false;

  Search(double l_, const OptimizeOptions& o) : l(l_), opts(o) {
    const int n = opts.n_knots;
    if (n < 5 || n % 2 == 0) throw InvalidRange("optimize_profile: n_knots must be odd and >= 5");
    knots.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) knots[static_cast<std::size_t>(i)] = 2.0 * l * i / (n - 1);
    dim = (n - 1) / 2;
  }

  ConvexProfile assemble(const std::vector<double>& v) const {
    const int n = opts.n_knots;
    std::vector<double> vals(static_cast<std::size_t>(n), 1.0);
    for (int p = 0; p < dim; ++p) {
      const double c = std::clamp(v[static_cast<std::size_t>(p)], -1.0, 1.0);
      vals[static_cast<std::size_t>(1 + p)] = c;
      vals[static_cast<std::size_t>(n - 2 - p)] = c;
    }
    ConvexProfile h = project_convex_symmetric(knots, vals);
    h.values.front() = 1.0;
    h.values.back() = 1.0;
    return h;
  }

  std::map<std::vector<double>, double> memo;  // keyed on projected knot values

  // A profile touching -1 in the interior collapses chart columns; the
  // degenerate branch already represents full collapse (value pi), and the
  // discrete functional is unreliable on partially collapsed charts at the
  // grids used here, so such profiles are kept out of the nontrivial search.
  // They are approached continuously by non-collapsed profiles, so the
  // infimum is unchanged.
  static bool interior_collapse(const ConvexProfile& h) {
    for (std::size_t i = 1; i + 1 < h.values.size(); ++i)
      if (h.values[i] <= -1.0 + kTolCol) return true;
    return false;
  }

  double eval(const std::vector<double>& v, ScalarField* psi_out = nullptr) {
    const ConvexProfile h = assemble(v);
    if (interior_collapse(h)) return kInf;
    if (!psi_out) {
      auto it = memo.find(h.values);
      if (it != memo.end()) return it->second;
    }
    ++evaluations;
    double f = kInf;
    try {
      f = profile_value(l, h, opts.n1, opts.n2, opts.solver, psi_out,
                        have_warm ? &warm : nullptr);
    } catch (const NoConvergence&) {
    } catch (const DegenerateProfile&) {
    }
    memo[h.values] = f;
    return f;
  }

  // Greedy coordinate descent with shrinking step; updates v and the warm
  // start in place, returns the best value.
  double coordinate_descent(std::vector<double>& v) {
    ScalarField psi;
    double best = eval(v, &psi);
    if (std::isfinite(best)) {
      warm = std::move(psi);
      have_warm = true;
    }
    double step = opts.init_step;
    while (step >= opts.min_step) {
      bool improved = false;
      for (int p = 0; p < dim; ++p) {
        for (double s : {step, -step}) {
          std::vector<double> trial = v;
          for (;;) {  // keep moving in a profitable direction
            trial[static_cast<std::size_t>(p)] =
                std::clamp(trial[static_cast<std::size_t>(p)] + s, -1.0, 1.0);
            const double f = eval(trial);
            if (f < best - opts.tol_f) {
              best = f;
              v = trial;
              improved = true;
            } else {
              break;
            }
          }
        }
      }
      if (improved) {
        // Refresh the warm start at the new incumbent before the next sweep.
        ScalarField fresh;
        if (std::isfinite(profile_value(l, assemble(v), opts.n1, opts.n2, opts.solver, &fresh,
                                        have_warm ? &warm : nullptr))) {
          warm = std::move(fresh);
          have_warm = true;
        }
      } else {
        step *= 0.5;
      }
    }
    return best;
  }

  // Standard Nelder-Mead on the free values, projection handled by eval.
  double nelder_mead(std::vector<double>& v, double f_v) {
    const int d = dim;
    std::vector<std::vector<double>> pts(static_cast<std::size_t>(d + 1), v);
    std::vector<double> fs(static_cast<std::size_t>(d + 1), f_v);
    for (int p = 0; p < d; ++p) {
      pts[static_cast<std::size_t>(p + 1)][static_cast<std::size_t>(p)] += 0.02;
      fs[static_cast<std::size_t>(p + 1)] = eval(pts[static_cast<std::size_t>(p + 1)]);
    }
    std::vector<std::size_t> order(static_cast<std::size_t>(d + 1));
    for (int it = 0; it < opts.polish_iters; ++it) {
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
      if (fs[order.back()] - fs[order.front()] < 0.1 * opts.tol_f) break;
      const std::size_t worst = order.back(), best_i = order.front();
      std::vector<double> centroid(static_cast<std::size_t>(d), 0.0);
      for (std::size_t q = 0; q + 1 < order.size(); ++q)
        for (int p = 0; p < d; ++p)
          centroid[static_cast<std::size_t>(p)] += pts[order[q]][static_cast<std::size_t>(p)] / d;
      auto combine = [&](double t) {
        std::vector<double> out(static_cast<std::size_t>(d));
        for (int p = 0; p < d; ++p)
          out[static_cast<std::size_t>(p)] =
              centroid[static_cast<std::size_t>(p)] +
              t * (centroid[static_cast<std::size_t>(p)] - pts[worst][static_cast<std::size_t>(p)]);
        return out;
      };
      std::vector<double> refl = combine(1.0);
      const double f_refl = eval(refl);
      if (f_refl < fs[best_i]) {
        std::vector<double> expa = combine(2.0);
        const double f_expa = eval(expa);
        if (f_expa < f_refl) {
          pts[worst] = expa;
          fs[worst] = f_expa;
        } else {
          pts[worst] = refl;
          fs[worst] = f_refl;
        }
      } else if (f_refl < fs[order[order.size() - 2]]) {
        pts[worst] = refl;
        fs[worst] = f_refl;
      } else {
        std::vector<double> contr = combine(-0.5);
        const double f_contr = eval(contr);
        if (f_contr < fs[worst]) {
          pts[worst] = contr;
          fs[worst] = f_contr;
        } else {
          for (std::size_t q = 0; q < order.size(); ++q) {
            if (order[q] == best_i) continue;
            for (int p = 0; p < d; ++p)
              pts[order[q]][static_cast<std::size_t>(p)] =
                  0.5 * (pts[order[q]][static_cast<std::size_t>(p)] +
                         pts[best_i][static_cast<std::size_t>(p)]);
            fs[order[q]] = eval(pts[order[q]]);
          }
        }
      }
    }
    std::size_t best_i = 0;
    for (std::size_t q = 1; q < fs.size(); ++q)
      if (fs[q] < fs[best_i]) best_i = q;
    v = pts[best_i];
    return fs[best_i];
  }

  std::vector<std::vector<double>> starting_points() const {
    std::vector<std::vector<double>> starts;
    try {
      const CatenoidProfile cat = catenoid_parameters(l);
      std::vector<double> neck(static_cast<std::size_t>(dim)), wide(static_cast<std::size_t>(dim));
      for (int p = 0; p < dim; ++p) {
        const double rb = cat.rho_bar(knots[static_cast<std::size_t>(1 + p)]);
        neck[static_cast<std::size_t>(p)] = 2.0 * rb - 1.0;
        wide[static_cast<std::size_t>(p)] = rb;
      }
      starts.push_back(neck);
      starts.push_back(wide);
    } catch (const NoCatenoid&) {
    }
    starts.emplace_back(static_cast<std::size_t>(dim), 1.0);  // flat lid
    std::vector<double> tent(static_cast<std::size_t>(dim));
    for (int p = 0; p < dim; ++p) {
      const double t = knots[static_cast<std::size_t>(1 + p)];
      tent[static_cast<std::size_t>(p)] = 1.0 - 1.5 * std::min(t, 2.0 * l - t) / l;
    }
    starts.push_back(tent);
    return starts;
  }
};

OptimizeResult optimize_impl(double l, const OptimizeOptions& opts,
                             const std::vector<double>* extra_start, int* eval_count) {
  if (l <= 0.0) throw InvalidRange("optimize_profile: l must be positive");
  Search search(l, opts);
  std::vector<std::vector<double>> starts = search.starting_points();
  if (extra_start && static_cast<int>(extra_start->size()) == search.dim)
    starts.insert(starts.begin(), *extra_start);

  double best_f = kInf;
  std::vector<double> best_v;
  for (auto& v : starts) {
    const double f = search.coordinate_descent(v);
    if (f < best_f) {
      best_f = f;
      best_v = v;
    }
  }
  if (!std::isfinite(best_f))
    throw NoConvergence(0, best_f, "optimize_profile: every start failed to converge");
  // The simplex polish only matters when the nontrivial branch can win
  // (F* = min(F, pi)); once descent lands clearly above pi, the two-discs
  // branch decides F* and polishing a losing branch just burns slow solves
  // on steep near-collapse charts.
  if (opts.polish_iters > 0 && best_f < kPi + 0.25)
    best_f = search.nelder_mead(best_v, best_f);

  OptimizeResult res;
  res.h = search.assemble(best_v);
  res.f_nontrivial = profile_value(l, res.h, opts.n1, opts.n2, opts.solver, &res.psi,
                                   search.have_warm ? &search.warm : nullptr);
  ++search.evaluations;
  res.f_star = std::min(res.f_nontrivial, kPi);
  res.two_discs = res.f_nontrivial >= kPi;
  res.evaluations = search.evaluations;
  if (eval_count) *eval_count += search.evaluations;
  return res;
}

}  // namespace

OptimizeResult optimize_profile(double l, const OptimizeOptions& opts) {
  return optimize_impl(l, opts, nullptr, nullptr);
}

ThresholdResult find_threshold(double lo, double hi, double tol_l, const OptimizeOptions& opts) {
  if (!(lo > 0.0) || !(hi > lo)) throw InvalidRange("find_threshold: need 0 < lo < hi");
  if (!(tol_l > 0.0)) throw InvalidRange("find_threshold: tol_l must be positive");
  ThresholdResult res;
  // The bisection only needs the sign of pi - f_nontrivial, so trade final
  // precision for speed: no polish stage and a coarser descent floor.
  OptimizeOptions fast = opts;
  fast.polish_iters = 0;
  fast.min_step = std::max(opts.min_step, 4e-3);
  fast.solver.tol_res = std::max(opts.solver.tol_res, 1e-6);
  // Reuse the previous optimum's free values as an extra start; the knot grid
  // rescales with l so the values transfer directly.
  auto free_values = [&](const OptimizeResult& r) {
    const int d = (opts.n_knots - 1) / 2;
    std::vector<double> v(static_cast<std::size_t>(d));
    for (int p = 0; p < d; ++p) v[static_cast<std::size_t>(p)] = r.h.values[static_cast<std::size_t>(1 + p)];
    return v;
  };
  OptimizeResult r_lo = optimize_impl(lo, fast, nullptr, &res.evaluations);
  res.g_lo = kPi - r_lo.f_nontrivial;
  std::vector<double> seed = free_values(r_lo);
  OptimizeResult r_hi = optimize_impl(hi, fast, &seed, &res.evaluations);
  res.g_hi = kPi - r_hi.f_nontrivial;
  if (res.g_lo * res.g_hi >= 0.0)
    throw NoSignChange("find_threshold: pi - f_nontrivial has the same sign at both ends");

  double a = lo, b = hi, g_a = res.g_lo;
  while (b - a > tol_l) {
    const double mid = 0.5 * (a + b);
    OptimizeResult r_mid = optimize_impl(mid, fast, &seed, &res.evaluations);
    seed = free_values(r_mid);
    const double g_mid = kPi - r_mid.f_nontrivial;
    if ((g_mid > 0.0) == (g_a > 0.0)) {
      a = mid;
      g_a = g_mid;
    } else {
      b = mid;
    }
  }
  res.l0 = 0.5 * (a + b);
  return res;
}

std::vector<ValueCurveRow> value_curve(const std::vector<double>& half_lengths,
                                       const OptimizeOptions& opts) {
  std::vector<ValueCurveRow> rows;
  rows.reserve(half_lengths.size());
  for (double l : half_lengths) {
    ValueCurveRow row;
    row.l = l;
    try {
      const OptimizeResult r = optimize_profile(l, opts);
      row.f_nontrivial = r.f_nontrivial;
      row.f_star = r.f_star;
      row.two_discs = r.two_discs;
      ProblemParams p;
      p.l = l;
      row.relaxed = relaxed_area(p, r.f_star);
      row.ok = true;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace vortex
