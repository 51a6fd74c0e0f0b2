#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vortex {

inline constexpr double kPi = 3.14159265358979323846;

// Tolerances fixed once for the whole project.
inline constexpr double kTolConv = 1e-10;  // convexity slack on second differences
inline constexpr double kTolCol = 1e-8;    // column height below which a chart column is collapsed

struct InvalidRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegenerateProfile : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GridTooCoarse : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConstraintViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NoSignChange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoCatenoid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoConvergence : std::runtime_error {
  NoConvergence(int iterations, double residual_, const std::string& what_arg)
      : std::runtime_error(what_arg), iters(iterations), residual(residual_) {}
  int iters;
  double residual;
};

// Deterministic pairwise reduction; the result does not depend on how the
// caller produced the terms, only on their order.
double pairwise_sum(std::span<const double> terms);

}  // namespace vortex
