#include <doctest.h>

#include <cmath>

#include "vortex/area.hpp"
#include "vortex/optimizer.hpp"

using namespace vortex;

namespace {

OptimizeOptions cheap() {
  OptimizeOptions o;
  o.n_knots = 9;
  o.n1 = 48;
  o.n2 = 32;
  o.min_step = 8e-3;
  o.polish_iters = 60;
  return o;
}

}  // namespace

TEST_CASE("profile_value agrees with a direct functional evaluation") {
  const double l = 0.5;
  ConvexProfile h = ConvexProfile::constant(2.0 * l, 1.0, 9);
  ScalarField psi;
  const double f = profile_value(l, h, 64, 64, {}, &psi);
  BoundaryTrace bc;
  CHECK(f == doctest::Approx(functional_F2l(h, psi, bc)).epsilon(1e-14));
  // Below the zero-field competitor and above the subgraph area.
  CHECK(f < 4.0 * l + kPi);
  CHECK(f > 4.0 * l);
}

TEST_CASE("small l lands in the catenoid-type regime") {
  OptimizeResult r = optimize_profile(0.25, cheap());
  CHECK(!r.two_discs);
  CHECK(r.f_star < kPi - 0.5);
  CHECK(r.f_star <= 2.0 * kPi * 0.25 + 1e-2);  // cylinder competitor bound
  CHECK(r.h.is_convex());
  CHECK(r.h.is_symmetric(1e-9));
  CHECK(r.h.values.front() == doctest::Approx(1.0));
  CHECK(r.h.values.back() == doctest::Approx(1.0));
  // Consistency: re-evaluating the returned pair reproduces f_nontrivial.
  BoundaryTrace bc;
  CHECK(functional_F2l(r.h, r.psi, bc) == doctest::Approx(r.f_nontrivial).epsilon(1e-10));
}

TEST_CASE("large l lands on the two-discs branch with F_star = pi") {
  OptimizeResult r = optimize_profile(3.0, cheap());
  CHECK(r.two_discs);
  CHECK(r.f_star == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(r.f_nontrivial > kPi);
}

TEST_CASE("optimizer value never exceeds the analytic competitors") {
  for (double l : {0.1, 0.5, 1.0}) {
    OptimizeResult r = optimize_profile(l, cheap());
    CHECK(r.f_star <= std::min(kPi, 2.0 * kPi * l) + 1e-3);
  }
}

TEST_CASE("value curve captures failures per row") {
  std::vector<ValueCurveRow> rows = value_curve({0.3, -1.0}, cheap());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].ok);
  CHECK(rows[0].f_star < kPi);
  CHECK(rows[0].relaxed == doctest::Approx(rows[0].f_star + [] {
          ProblemParams p;
          p.l = 0.3;
          return vortex_graph_area(p);
        }()).epsilon(1e-12));
  CHECK(!rows[1].ok);
  CHECK(!rows[1].error.empty());
}

TEST_CASE("threshold requires a sign change") {
  OptimizeOptions o = cheap();
  CHECK_THROWS_AS(find_threshold(0.05, 0.2, 0.05, o), NoSignChange);
}

TEST_CASE("invalid options are rejected") {
  OptimizeOptions o = cheap();
  o.n_knots = 8;  // must be odd
  CHECK_THROWS_AS(optimize_profile(0.5, o), InvalidRange);
  CHECK_THROWS_AS(optimize_profile(-0.5, cheap()), InvalidRange);
}
