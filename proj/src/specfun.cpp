#include "uavbs/specfun.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "uavbs/error.hpp"

namespace uavbs {

namespace {

constexpr int kMaxIterations = 100000;
constexpr double kEpsilon = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min() / kEpsilon;

void check_args(double shape, double x) {
  if (!(shape > 0.0) || std::isinf(shape)) {
    throw DomainError("incomplete gamma: shape must be positive and finite, got " +
                      std::to_string(shape));
  }
  if (!(x >= 0.0)) {
    throw DomainError("incomplete gamma: x must be nonnegative, got " + std::to_string(x));
  }
}

// log of x^a e^-x / Gamma(a)
double log_prefactor(double shape, double x) {
  return shape * std::log(x) - x - std::lgamma(shape);
}

// P(a, x) by the power series; converges for all x but is used for x < a + 1.
double lower_series(double shape, double x) {
  double ap = shape;
  double term = 1.0 / shape;
  double sum = term;
  for (int n = 0; n < kMaxIterations; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEpsilon) {
      return sum * std::exp(log_prefactor(shape, x));
    }
  }
  throw DomainError("incomplete gamma series did not converge");
}

// Q(a, x) by the modified Lentz continued fraction; used for x >= a + 1.
double upper_continued_fraction(double shape, double x) {
  double b = x + 1.0 - shape;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - shape);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEpsilon) {
      return std::exp(log_prefactor(shape, x)) * h;
    }
  }
  throw DomainError("incomplete gamma continued fraction did not converge");
}

}  // namespace

GammaDistSpec::GammaDistSpec(double shape, double mean) : shape_(shape), mean_(mean) {
  if (!(shape > 0.0) || !std::isfinite(shape)) {
    throw DomainError("gamma distribution: shape must be positive, got " + std::to_string(shape));
  }
  if (!(mean > 0.0) || !std::isfinite(mean)) {
    throw DomainError("gamma distribution: mean must be positive, got " + std::to_string(mean));
  }
}

double reg_lower_inc_gamma(double shape, double x) {
  check_args(shape, x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < shape + 1.0) return lower_series(shape, x);
  return 1.0 - upper_continued_fraction(shape, x);
}

double reg_upper_inc_gamma(double shape, double x) {
  check_args(shape, x);
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < shape + 1.0) return 1.0 - lower_series(shape, x);
  return upper_continued_fraction(shape, x);
}

double gamma_cdf(const GammaDistSpec& spec, double x) {
  return reg_lower_inc_gamma(spec.shape(), spec.shape() * x / spec.mean());
}

double gamma_pdf(const GammaDistSpec& spec, double x) {
  if (!(x > 0.0)) {
    throw DomainError("gamma pdf: x must be positive, got " + std::to_string(x));
  }
  const double k = spec.shape();
  const double rate = k / spec.mean();
  if (std::isinf(x)) return 0.0;
  return std::exp(k * std::log(rate) + (k - 1.0) * std::log(x) - rate * x - std::lgamma(k));
}

double gamma_sample(const GammaDistSpec& spec, Rng& rng) {
  std::gamma_distribution<double> dist(spec.shape(), spec.scale());
  return dist(rng);
}

}  // namespace uavbs
