#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vortex/area.hpp"
#include "vortex/optimizer.hpp"
#include "vortex/polar.hpp"
#include "vortex/sequences.hpp"
#include "vortex/solver.hpp"
#include "vortex/symmetry.hpp"

using nlohmann::json;
using namespace vortex;

namespace {

constexpr const char* kVersion = "0.1.0";

using clk = std::chrono::steady_clock;

double elapsed_ms(clk::time_point start) {
  return std::chrono::duration<double, std::milli>(clk::now() - start).count();
}

void emit(json result, const json& config, clk::time_point start) {
  result["version"] = kVersion;
  result["config_echo"] = config;
  result["runtime_ms"] = elapsed_ms(start);
  std::cout << result.dump(2) << "\n";
}

int emit_error(const std::string& code, const std::string& message, const json& context) {
  json err = {{"error", {{"code", code}, {"message", message}, {"context", context}}}};
  std::cout << err.dump(2) << "\n";
  return code == "non-convergence" ? 3 : 2;
}

ConvexProfile profile_or_lid(const std::string& path, double l, int n_knots) {
  if (!path.empty()) return load_profile(path);
  return ConvexProfile::constant(2.0 * l, 1.0, n_knots);
}

// Solve the inner Plateau problem on the chart of h with disc-trace side data.
ScalarField solve_for(const ConvexProfile& h, int grid, double tol, SolverReport* rep) {
  const MappedChart chart = build_chart(h, grid, grid);
  SolverOptions so;
  so.tol_res = tol;
  BoundaryTrace bc;
  return solve_minimal_graph(chart, bc, so, rep);
}

json profile_json(const ConvexProfile& h) {
  return json{{"knots", h.knots}, {"values", h.values}, {"degenerate", h.degenerate}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relaxed area of the vortex map: free-boundary Plateau toolbox"};
  app.require_subcommand(1);

  int threads = 1;
  long seed = 0;
  app.add_option("--threads", threads, "worker threads (VORTEX_THREADS overrides)");
  app.add_option("--seed", seed, "seed for randomized property suites");

  // area
  auto* c_area = app.add_subcommand("area", "evaluate an area functional");
  double a_l = 1.0, a_eps = 0.0, a_tol = 1e-8;
  int a_grid = 128;
  std::string a_fn = "vortex", a_hfile;
  c_area->add_option("--l", a_l, "half-length / disc radius");
  c_area->add_option("--epsilon", a_eps, "inner radius of the annulus");
  c_area->add_option("--grid", a_grid, "cells per direction");
  c_area->add_option("--functional", a_fn, "vortex | F2l | Fl")
      ->check(CLI::IsMember({"vortex", "F2l", "Fl"}));
  c_area->add_option("--h-file", a_hfile, "profile JSON (default: h == 1)");
  c_area->add_option("--tol", a_tol, "solver residual tolerance");

  // solve
  auto* c_solve = app.add_subcommand("solve", "solve the inner Plateau problem for a profile");
  double s_l = 1.0, s_tol = 1e-8;
  int s_grid = 128;
  std::string s_hfile, s_out;
  c_solve->add_option("--l", s_l, "half-length");
  c_solve->add_option("--h-file", s_hfile, "profile JSON (default: h == 1)");
  c_solve->add_option("--grid", s_grid, "cells per direction");
  c_solve->add_option("--tol", s_tol, "residual tolerance");
  c_solve->add_option("--out", s_out, "CSV dump of the solution (w1,w2,value)");

  // optimize
  auto* c_opt = app.add_subcommand("optimize", "minimize over convex symmetric profiles");
  double o_l = 1.0, o_tol = 1e-6;
  int o_knots = 17, o_grid = 128, o_grid2 = -1;
  std::string o_hout, o_out;
  c_opt->add_option("--l", o_l, "half-length");
  c_opt->add_option("--knots", o_knots, "odd knot count on [0, 2l]");
  c_opt->add_option("--grid", o_grid, "cells along w1 for the inner solves");
  c_opt->add_option("--grid2", o_grid2, "cells along sigma (default: grid/2)");
  c_opt->add_option("--tol", o_tol, "minimal accepted improvement");
  c_opt->add_option("--h-out", o_hout, "write the optimal profile as JSON");
  c_opt->add_option("--out", o_out, "CSV dump of the optimal field");

  // threshold
  auto* c_thr = app.add_subcommand("threshold", "bisect for the regime-switch half-length");
  double t_lo = 0.5, t_hi = 1.5, t_toll = 0.01;
  int t_knots = 17, t_grid = 65;
  c_thr->add_option("--lo", t_lo, "bracket start");
  c_thr->add_option("--hi", t_hi, "bracket end");
  c_thr->add_option("--tol-l", t_toll, "bracket width at exit");
  c_thr->add_option("--knots", t_knots, "odd knot count");
  c_thr->add_option("--grid", t_grid, "inner grid");

  // sequence
  auto* c_seq = app.add_subcommand("sequence", "graph area of an approximating sequence");
  double q_l = 1.0;
  int q_k = 64, q_grid = 800;
  std::string q_which = "cylinder", q_hfile, q_out;
  c_seq->add_option("--which", q_which, "cylinder | two-discs | catenoid-flap | recovery")
      ->check(CLI::IsMember({"cylinder", "two-discs", "catenoid-flap", "recovery"}));
  c_seq->add_option("--l", q_l, "disc radius");
  c_seq->add_option("--k", q_k, "sequence index");
  c_seq->add_option("--grid", q_grid, "radial cells of the polar quadrature grid");
  c_seq->add_option("--h-file", q_hfile, "profile JSON for the recovery sequence");
  c_seq->add_option("--out", q_out, "CSV dump of the sampled map (r,theta,u1,u2)");

  // symmetrize
  auto* c_sym = app.add_subcommand("symmetrize", "Steiner symmetrization of a voxel solid");
  std::string y_mode = "cylindrical", y_in, y_out;
  int y_axis = 2;
  c_sym->add_option("--mode", y_mode, "cylindrical | classical")
      ->check(CLI::IsMember({"cylindrical", "classical"}));
  c_sym->add_option("--in", y_in, "input .vox solid")->required();
  c_sym->add_option("--out", y_out, "output .vox solid")->required();
  c_sym->add_option("--axis", y_axis, "classical mode: symmetrization axis 0|1|2");

  // value-curve
  auto* c_vc = app.add_subcommand("value-curve", "optimizer sweep over half-lengths");
  double v_lo = 0.25, v_hi = 1.5;
  int v_steps = 6, v_knots = 17, v_grid = 65;
  std::string v_out;
  c_vc->add_option("--lo", v_lo, "first half-length");
  c_vc->add_option("--hi", v_hi, "last half-length");
  c_vc->add_option("--steps", v_steps, "number of rows");
  c_vc->add_option("--knots", v_knots, "odd knot count");
  c_vc->add_option("--grid", v_grid, "inner grid");
  c_vc->add_option("--out", v_out, "CSV with header l,F,branch,relaxed_area");

  CLI11_PARSE(app, argc, argv);
  if (const char* env = std::getenv("VORTEX_THREADS")) threads = std::atoi(env);

  json config = {{"threads", threads}, {"seed", seed}};
  const auto start = clk::now();

  try {
    if (*c_area) {
      config.update({{"subcommand", "area"}, {"l", a_l}, {"epsilon", a_eps}, {"grid", a_grid},
                     {"functional", a_fn}, {"h_file", a_hfile}});
      double value = 0.0;
      if (a_fn == "vortex") {
        ProblemParams p;
        p.l = a_l;
        p.epsilon = a_eps;
        p.validate();
        value = vortex_graph_area(p);
      } else {
        ConvexProfile h = profile_or_lid(a_hfile, a_l, 9);
        BoundaryTrace bc;
        if (h.degenerate) {
          value = (a_fn == "F2l") ? functional_F2l(h, ScalarField{}, bc)
                                  : functional_Fl(h, ScalarField{}, bc);
        } else {
          ScalarField psi = solve_for(h, a_grid, a_tol, nullptr);
          value = (a_fn == "F2l") ? functional_F2l(h, psi, bc) : functional_Fl(h, psi, bc);
        }
      }
      emit({{"value", value}, {"grid", a_grid}}, config, start);
    } else if (*c_solve) {
      config.update({{"subcommand", "solve"}, {"l", s_l}, {"grid", s_grid}, {"tol", s_tol},
                     {"h_file", s_hfile}});
      ConvexProfile h = profile_or_lid(s_hfile, s_l, 9);
      SolverReport rep;
      ScalarField psi = solve_for(h, s_grid, s_tol, &rep);
      BoundaryTrace bc;
      const double f = functional_F2l(h, psi, bc);
      if (!s_out.empty()) write_csv(psi, s_out);
      emit({{"F_value", f}, {"residual", rep.residual}, {"iters", rep.iterations}}, config, start);
    } else if (*c_opt) {
      config.update({{"subcommand", "optimize"}, {"l", o_l}, {"knots", o_knots},
                     {"grid", o_grid}, {"tol", o_tol}});
      OptimizeOptions oo;
      oo.n_knots = o_knots;
      oo.n1 = o_grid;
      oo.n2 = o_grid2 > 0 ? o_grid2 : std::max(o_grid / 2, 8);
      oo.tol_f = o_tol;
      OptimizeResult r = optimize_profile(o_l, oo);
      ProblemParams p;
      p.l = o_l;
      if (!o_hout.empty()) {
        std::ofstream f(o_hout);
        f << profile_to_json(r.two_discs ? ConvexProfile::degenerate_profile(2.0 * o_l) : r.h);
      }
      if (!o_out.empty()) write_csv(r.psi, o_out);
      emit({{"F", r.f_star},
            {"F_nontrivial", r.f_nontrivial},
            {"branch", r.two_discs ? "two-discs" : "catenoid-type"},
            {"relaxed_area", relaxed_area(p, r.f_star)},
            {"h", profile_json(r.h)},
            {"evaluations", r.evaluations}},
           config, start);
    } else if (*c_thr) {
      config.update({{"subcommand", "threshold"}, {"lo", t_lo}, {"hi", t_hi},
                     {"tol_l", t_toll}, {"knots", t_knots}, {"grid", t_grid}});
      OptimizeOptions oo;
      oo.n_knots = t_knots;
      oo.n1 = t_grid;
      oo.n2 = t_grid;
      ThresholdResult r = find_threshold(t_lo, t_hi, t_toll, oo);
      emit({{"l0", r.l0}, {"g_lo", r.g_lo}, {"g_hi", r.g_hi}, {"evaluations", r.evaluations}},
           config, start);
    } else if (*c_seq) {
      config.update({{"subcommand", "sequence"}, {"which", q_which}, {"l", q_l}, {"k", q_k},
                     {"grid", q_grid}});
      SequenceParams sp = SequenceParams::defaults(q_k);
      sp.validate(q_l);
      ProblemParams p;
      p.l = q_l;
      p.validate();
      MapFn map;
      double limit = 0.0;
      if (q_which == "cylinder") {
        map = cylinder_map(sp, q_l);
        limit = vortex_graph_area(p) + 2.0 * kPi * q_l;
      } else if (q_which == "two-discs") {
        map = two_discs_map(sp, q_l);
        limit = vortex_graph_area(p) + kPi;
      } else if (q_which == "catenoid-flap") {
        const CatenoidProfile cat = catenoid_parameters(q_l);
        map = catenoid_flap_map(sp, q_l);
        limit = vortex_graph_area(p) + 0.5 * catenoid_area(cat) + flap_area(cat);
      } else {  // recovery
        ConvexProfile h;
        if (!q_hfile.empty()) {
          h = load_profile(q_hfile);
        } else {
          OptimizeOptions oo;
          oo.n1 = 128;
          oo.n2 = 64;
          oo.polish_iters = 0;
          h = optimize_profile(q_l, oo).h;
        }
        SolverReport rep;
        ScalarField psi = solve_for(h, 128, 1e-8, &rep);
        BoundaryTrace bc;
        limit = vortex_graph_area(p) + functional_F2l(h, psi, bc);
        map = recovery_map(sp, q_l, restrict_profile(h), restrict_field(psi));
      }
      const int ntheta = 96, strip_cells = 48;
      const double area = sequence_area(map, sp, q_l, q_grid, ntheta, strip_cells);
      if (!q_out.empty()) {
        PolarGrid grid = sequence_grid(sp, q_l, q_grid, ntheta, strip_cells);
        PolarMapField fld = PolarMapField::sample(grid, map);
        std::ofstream f(q_out);
        f << "r,theta,u1,u2\n";
        for (int i = 0; i < grid.nr(); ++i)
          for (int k = 0; k < grid.ntheta(); ++k)
            f << grid.r[static_cast<std::size_t>(i)] << "," << grid.theta_at(k) << ","
              << fld.v1[fld.idx(i, k)] << "," << fld.v2[fld.idx(i, k)] << "\n";
      }
      emit({{"area", area},
            {"limit_prediction", limit},
            {"relative_gap", std::abs(area - limit) / limit}},
           config, start);
    } else if (*c_sym) {
      config.update({{"subcommand", "symmetrize"}, {"mode", y_mode}, {"in", y_in},
                     {"out", y_out}, {"axis", y_axis}});
      VoxelSolid in = read_solid(y_in);
      VoxelSolid out;
      if (y_mode == "cylindrical") {
        out = cylindrical_steiner(in);
      } else {
        out = classical_steiner(in, y_axis).solid;
      }
      write_solid(out, y_out);
      emit({{"volume_before", voxel_volume(in)},
            {"volume_after", voxel_volume(out)},
            {"perimeter_before", voxel_perimeter(in)},
            {"perimeter_after", voxel_perimeter(out)}},
           config, start);
    } else if (*c_vc) {
      config.update({{"subcommand", "value-curve"}, {"lo", v_lo}, {"hi", v_hi},
                     {"steps", v_steps}, {"knots", v_knots}, {"grid", v_grid}});
      if (v_steps < 2) throw InvalidRange("value-curve: need at least 2 steps");
      std::vector<double> ls(static_cast<std::size_t>(v_steps));
      for (int i = 0; i < v_steps; ++i)
        ls[static_cast<std::size_t>(i)] = v_lo + (v_hi - v_lo) * i / (v_steps - 1);
      OptimizeOptions oo;
      oo.n_knots = v_knots;
      oo.n1 = v_grid;
      oo.n2 = v_grid;
      std::vector<ValueCurveRow> rows = value_curve(ls, oo);
      json jrows = json::array();
      for (const ValueCurveRow& r : rows) {
        jrows.push_back({{"l", r.l}, {"F", r.f_star}, {"F_nontrivial", r.f_nontrivial},
                         {"branch", r.two_discs ? "two-discs" : "catenoid-type"},
                         {"relaxed_area", r.relaxed}, {"ok", r.ok}, {"error", r.error}});
      }
      if (!v_out.empty()) {
        std::ofstream f(v_out);
        f << "l,F,branch,relaxed_area\n";
        for (const ValueCurveRow& r : rows)
          if (r.ok)
            f << r.l << "," << r.f_star << "," << (r.two_discs ? "two-discs" : "catenoid-type")
              << "," << r.relaxed << "\n";
      }
      emit({{"rows", jrows}}, config, start);
    }
  } catch (const NoConvergence& e) {
    return emit_error("non-convergence", e.what(),
                      {{"iterations", e.iters}, {"residual", e.residual}});
  } catch (const NoSignChange& e) {
    return emit_error("no-sign-change", e.what(), json::object());
  } catch (const std::invalid_argument& e) {
    return emit_error("validation", e.what(), json::object());
  } catch (const std::exception& e) {
    return emit_error("validation", e.what(), json::object());
  }
  return 0;
}
