#pragma once

#include <cstddef>
#include <functional>

namespace uavbs {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t evaluations = 0;
};

struct QuadratureOptions {
  double rel_tol = 1e-8;
  double abs_tol = 1e-15;
  std::size_t max_intervals = 2000;
};

// Globally adaptive 7/15-point Gauss-Kronrod on the finite interval [a, b].
// Bisects the interval with the largest error estimate until the summed
// estimate is below max(abs_tol, rel_tol * |value|). Throws QuadratureError
// when max_intervals is exhausted first or the integrand returns a non-finite value.
QuadratureResult integrate_gk15(const std::function<double(double)>& f, double a, double b,
                                const QuadratureOptions& opts = {});

}  // namespace uavbs
