#include "vortex/common.hpp"

namespace vortex {

namespace {

double pairwise_sum_rec(std::span<const double> t) {
  if (t.size() <= 8) {
    double s = 0.0;
    for (double x : t) s += x;
    return s;
  }
  const std::size_t half = t.size() / 2;
  return pairwise_sum_rec(t.subspan(0, half)) + pairwise_sum_rec(t.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> terms) { return pairwise_sum_rec(terms); }

}  // namespace vortex
