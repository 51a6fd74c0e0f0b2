#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vortex/area.hpp"
#include "vortex/optimizer.hpp"
#include "vortex/sequences.hpp"
#include "vortex/solver.hpp"
#include "vortex/symmetry.hpp"

namespace py = pybind11;
using namespace vortex;

namespace {

ScalarField solve_on_profile(const ConvexProfile& h, int grid, double tol) {
  const MappedChart chart = build_chart(h, grid, grid);
  SolverOptions so;
  so.tol_res = tol;
  BoundaryTrace bc;
  return solve_minimal_graph(chart, bc, so);
}

py::dict sequence_result(const std::string& which, double l, int k, int nr) {
  SequenceParams sp = SequenceParams::defaults(k);
  sp.validate(l);
  ProblemParams p;
  p.l = l;
  p.validate();
  MapFn map;
  double limit = 0.0;
  if (which == "cylinder") {
    map = cylinder_map(sp, l);
    limit = vortex_graph_area(p) + 2.0 * kPi * l;
  } else if (which == "two-discs") {
    map = two_discs_map(sp, l);
    limit = vortex_graph_area(p) + kPi;
  } else if (which == "catenoid-flap") {
    const CatenoidProfile cat = catenoid_parameters(l);
    map = catenoid_flap_map(sp, l);
    limit = vortex_graph_area(p) + 0.5 * catenoid_area(cat) + flap_area(cat);
  } else if (which == "recovery") {
    OptimizeOptions oo;
    oo.n1 = 128;
    oo.n2 = 64;
    oo.polish_iters = 0;
    const ConvexProfile h = optimize_profile(l, oo).h;
    ScalarField psi = solve_on_profile(h, 128, 1e-8);
    BoundaryTrace bc;
    limit = vortex_graph_area(p) + functional_F2l(h, psi, bc);
    map = recovery_map(sp, l, restrict_profile(h), restrict_field(psi));
  } else {
    throw InvalidRange("sequence: unknown kind " + which);
  }
  const double area = sequence_area(map, sp, l, nr, 96, 48);
  py::dict out;
  out["area"] = area;
  out["limit_prediction"] = limit;
  out["relative_gap"] = std::abs(area - limit) / limit;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Relaxed area of the vortex map: free-boundary Plateau toolbox";

  py::register_exception<NoConvergence>(m, "NoConvergenceError");
  py::register_exception<NoSignChange>(m, "NoSignChangeError");
  py::register_exception<NoCatenoid>(m, "NoCatenoidError");

  py::class_<ConvexProfile>(m, "Profile")
      .def(py::init([](std::vector<double> knots, std::vector<double> values) {
             return project_convex_symmetric(knots, values);
           }),
           py::arg("knots"), py::arg("values"))
      .def_readonly("knots", &ConvexProfile::knots)
      .def_readonly("values", &ConvexProfile::values)
      .def_readonly("degenerate", &ConvexProfile::degenerate)
      .def("__call__", &ConvexProfile::operator())
      .def_static("constant",
                  [](double span, double value, int n) {
                    return ConvexProfile::constant(span, value, n);
                  },
                  py::arg("span"), py::arg("value"), py::arg("n_knots") = 9)
      .def_static("degenerate_profile", &ConvexProfile::degenerate_profile);

  m.def("vortex_graph_area",
        [](double l, double epsilon) {
          ProblemParams p;
          p.l = l;
          p.epsilon = epsilon;
          p.validate();
          return vortex_graph_area(p);
        },
        py::arg("l"), py::arg("epsilon") = 0.0,
        "Area of the vortex-map graph over the annulus epsilon < |x| < l.");

  m.def("relaxed_area",
        [](double l, double f_star, double epsilon) {
          ProblemParams p;
          p.l = l;
          p.epsilon = epsilon;
          p.validate();
          return relaxed_area(p, f_star);
        },
        py::arg("l"), py::arg("f_star"), py::arg("epsilon") = 0.0);

  m.def("catenoid",
        [](double l) {
          const CatenoidProfile c = catenoid_parameters(l);
          py::dict out;
          out["a"] = c.a;
          out["area"] = catenoid_area(c);
          out["flap_area"] = flap_area(c);
          return out;
        },
        py::arg("l"), "Neck parameter and closed-form areas, or NoCatenoidError.");

  m.def("functional_value",
        [](const ConvexProfile& h, int grid, double tol) {
          BoundaryTrace bc;
          if (h.degenerate) return functional_F2l(h, ScalarField{}, bc);
          ScalarField psi = solve_on_profile(h, grid, tol);
          return functional_F2l(h, psi, bc);
        },
        py::arg("h"), py::arg("grid") = 128, py::arg("tol") = 1e-8,
        "Doubled functional at h with the solved inner minimal graph.");

  m.def("solve",
        [](const ConvexProfile& h, int grid, double tol) {
          const MappedChart chart = build_chart(h, grid, grid);
          SolverOptions so;
          so.tol_res = tol;
          SolverReport rep;
          BoundaryTrace bc;
          ScalarField psi = solve_minimal_graph(chart, bc, so, &rep);
          py::dict out;
          out["F"] = functional_F2l(h, psi, bc);
          out["residual"] = rep.residual;
          out["iterations"] = rep.iterations;
          out["values"] = psi.values;
          out["grid"] = grid;
          return out;
        },
        py::arg("h"), py::arg("grid") = 128, py::arg("tol") = 1e-8);

  m.def("optimize",
        [](double l, int knots, int n1, int n2) {
          OptimizeOptions oo;
          oo.n_knots = knots;
          oo.n1 = n1;
          oo.n2 = n2 > 0 ? n2 : std::max(n1 / 2, 8);
          OptimizeResult r = optimize_profile(l, oo);
          ProblemParams p;
          p.l = l;
          py::dict out;
          out["F"] = r.f_star;
          out["F_nontrivial"] = r.f_nontrivial;
          out["branch"] = r.two_discs ? "two-discs" : "catenoid-type";
          out["relaxed_area"] = relaxed_area(p, r.f_star);
          out["h_knots"] = r.h.knots;
          out["h_values"] = r.h.values;
          out["evaluations"] = r.evaluations;
          return out;
        },
        py::arg("l"), py::arg("knots") = 17, py::arg("grid") = 128, py::arg("grid2") = -1);

  m.def("find_threshold",
        [](double lo, double hi, double tol_l, int knots, int grid) {
          OptimizeOptions oo;
          oo.n_knots = knots;
          oo.n1 = grid;
          oo.n2 = grid;
          ThresholdResult r = find_threshold(lo, hi, tol_l, oo);
          py::dict out;
          out["l0"] = r.l0;
          out["g_lo"] = r.g_lo;
          out["g_hi"] = r.g_hi;
          out["evaluations"] = r.evaluations;
          return out;
        },
        py::arg("lo") = 0.5, py::arg("hi") = 1.5, py::arg("tol_l") = 0.01,
        py::arg("knots") = 17, py::arg("grid") = 65);

  m.def("sequence", &sequence_result, py::arg("which"), py::arg("l"), py::arg("k") = 64,
        py::arg("grid") = 800,
        "Graph area of an approximating sequence and its predicted limit.");

  m.def("symmetrize_file",
        [](const std::string& in_path, const std::string& out_path, const std::string& mode,
           int axis) {
          VoxelSolid in = read_solid(in_path);
          VoxelSolid out = mode == "cylindrical" ? cylindrical_steiner(in)
                                                 : classical_steiner(in, axis).solid;
          write_solid(out, out_path);
          py::dict res;
          res["volume_before"] = voxel_volume(in);
          res["volume_after"] = voxel_volume(out);
          res["perimeter_before"] = voxel_perimeter(in);
          res["perimeter_after"] = voxel_perimeter(out);
          return res;
        },
        py::arg("in_path"), py::arg("out_path"), py::arg("mode") = "cylindrical",
        py::arg("axis") = 2);
}
