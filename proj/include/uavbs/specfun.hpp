#pragma once

#include "uavbs/rng.hpp"

namespace uavbs {

// Gamma distribution parameterized by shape k and mean Omega, as used for
// Nakagami-m channel power gains. The implied scale is mean / shape.
class GammaDistSpec {
 public:
  // Throws DomainError unless shape > 0 and mean > 0.
  GammaDistSpec(double shape, double mean);

  double shape() const { return shape_; }
  double mean() const { return mean_; }
  double scale() const { return mean_ / shape_; }

 private:
  double shape_;
  double mean_;
};

/// Regularized lower incomplete gamma P(a, x) = (1/Gamma(a)) * int_0^x t^(a-1) e^-t dt.
///
/// Series expansion for x < a + 1, Lentz continued fraction for the upper
/// function otherwise. Absolute accuracy is better than 1e-12 for the shapes
/// used in channel models (0 < a <= ~100). x = +inf yields 1.
/// Throws DomainError for a <= 0, x < 0 or NaN arguments.
double reg_lower_inc_gamma(double shape, double x);

// Regularized upper function Q(a, x) = 1 - P(a, x), computed without cancellation.
double reg_upper_inc_gamma(double shape, double x);

double gamma_cdf(const GammaDistSpec& spec, double x);

// Density; throws DomainError for x <= 0.
double gamma_pdf(const GammaDistSpec& spec, double x);

double gamma_sample(const GammaDistSpec& spec, Rng& rng);

}  // namespace uavbs
