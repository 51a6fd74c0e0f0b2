#include "vortex/chart.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "json.hpp"

namespace vortex {

MappedChart MappedChart::rect(double x0, double x1, double y0, double y1, int n1, int n2) {
  MappedChart c;
  c.x0 = x0;
  c.x1 = x1;
  c.n1 = n1;
  c.n2 = n2;
  c.lower.assign(static_cast<std::size_t>(n1) + 1, y0);
  c.upper.assign(static_cast<std::size_t>(n1) + 1, y1);
  return c;
}

MappedChart build_chart(const ConvexProfile& h, int n1, int n2) {
  if (h.degenerate) throw DegenerateProfile("build_chart: h is identically -1");
  if (n1 < 2 || n2 < 2) throw GridTooCoarse("build_chart: need n1, n2 >= 2");
  MappedChart c;
  c.x0 = 0.0;
  c.x1 = h.span();
  c.n1 = n1;
  c.n2 = n2;
  c.lower.assign(static_cast<std::size_t>(n1) + 1, -1.0);
  c.upper.resize(static_cast<std::size_t>(n1) + 1);
  for (int i = 0; i <= n1; ++i) c.upper[static_cast<std::size_t>(i)] = h(c.x(i));
  return c;
}

double BoundaryTrace::phi_hat(double w2_value) {
  const double s = 1.0 - w2_value * w2_value;
  return s > 0.0 ? std::sqrt(s) : 0.0;
}

double BoundaryTrace::side(double w2_value) const {
  const double phi = phi_hat(w2_value);
  if (truncation_m > 0) return std::max(phi - 2.0 / truncation_m, 0.0);
  return phi;
}

ScalarField ScalarField::zero(const MappedChart& chart) {
  ScalarField f;
  f.chart = chart;
  f.values.assign(static_cast<std::size_t>(chart.nodes()), 0.0);
  return f;
}

ScalarField ScalarField::sample(const MappedChart& chart,
                                const std::function<double(double, double)>& f) {
  ScalarField out = zero(chart);
  for (int i = 0; i <= chart.n1; ++i) {
    if (chart.collapsed(i)) continue;
    for (int j = 0; j <= chart.n2; ++j) {
      out.at(i, j) = f(chart.x(i), chart.w2(i, j * chart.dsig()));
    }
  }
  return out;
}

double ScalarField::interpolate(double x, double sigma) const {
  const double fi = std::clamp((x - chart.x0) / chart.dx(), 0.0, static_cast<double>(chart.n1));
  const double fj = std::clamp(sigma / chart.dsig(), 0.0, static_cast<double>(chart.n2));
  const int i = std::min(static_cast<int>(fi), chart.n1 - 1);
  const int j = std::min(static_cast<int>(fj), chart.n2 - 1);
  const double a = fi - i, b = fj - j;
  return (1 - a) * (1 - b) * at(i, j) + a * (1 - b) * at(i + 1, j) +
         (1 - a) * b * at(i, j + 1) + a * b * at(i + 1, j + 1);
}

void write_csv(const ScalarField& f, const std::string& path) {
  std::ofstream out(path);
  out << "w1,w2,value\n";
  for (int i = 0; i <= f.chart.n1; ++i) {
    for (int j = 0; j <= f.chart.n2; ++j) {
      out << f.chart.x(i) << ',' << f.chart.w2(i, j * f.chart.dsig()) << ',' << f.at(i, j)
          << '\n';
    }
  }
}

std::string profile_to_json(const ConvexProfile& h) {
  nlohmann::json j;
  j["knots"] = h.knots;
  j["values"] = h.values;
  j["degenerate"] = h.degenerate;
  return j.dump(2);
}

ConvexProfile profile_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ConvexProfile h;
  h.knots = j.at("knots").get<std::vector<double>>();
  h.values = j.at("values").get<std::vector<double>>();
  h.degenerate = j.value("degenerate", false);
  return h;
}

ConvexProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidRange("cannot open profile file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return profile_from_json(text);
}

}  // namespace vortex
