#include "uavbs/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uavbs/error.hpp"

namespace uavbs {

namespace {

// 1 / golden ratio
constexpr double kInvPhi = 0.6180339887498948482;

}  // namespace

double mission_energy(double x1, const Scenario& scenario, const SystemParams& params) {
  return (scenario.x2 - x1) / params.v * params.P_f + (params.T_b + params.T_u) * params.P_v;
}

double energy_efficiency(double x1, const Scenario& scenario, const SystemParams& params,
                         const ChannelParams& ch) {
  Scenario at = scenario;
  at.x1 = x1;
  const OutageReport report = system_outage(at, params, ch);
  double delivered = 0.0;
  for (std::size_t i = 0; i < report.per_tag.size(); ++i) {
    delivered += params.R_m[i] * (1.0 - report.per_tag[i]);
  }
  delivered /= static_cast<double>(params.M);
  return delivered / mission_energy(x1, at, params);
}

FeasibleRegion feasible_region(const Scenario& scenario, const SystemParams& params) {
  const double transmit = (params.T_b + params.T_u) * params.P_v;
  if (params.E_total < transmit) {
    throw InfeasibleBudget("energy budget " + std::to_string(params.E_total) +
                           " J is below the transmit energy " + std::to_string(transmit) + " J");
  }
  const double lo = scenario.x2 - params.v * (params.E_total - transmit) / params.P_f;
  return {std::min(lo, scenario.x2), scenario.x2};
}

int golden_section_iteration_bound(double lo, double hi, double tol) {
  if (!(hi - lo > tol)) return 0;
  return static_cast<int>(std::ceil(std::log((hi - lo) / tol) / std::log(1.0 / kInvPhi)));
}

GoldenResult golden_section(const std::function<double(double)>& objective, double lo, double hi,
                            double tol) {
  if (!(tol > 0.0)) throw DomainError("golden section tolerance must be positive");
  if (!(lo <= hi)) throw DomainError("golden section needs lo <= hi");
  if (lo == hi) return {lo, objective(lo), 0};

  const int max_iterations = golden_section_iteration_bound(lo, hi, tol) + 2;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = b - a > tol ? objective(c) : 0.0;
  double fd = b - a > tol ? objective(d) : 0.0;
  int iterations = 0;
  while (b - a > tol && iterations < max_iterations) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = objective(d);
    }
    ++iterations;
  }
  const double mid = 0.5 * (a + b);
  return {mid, objective(mid), iterations};
}

OptResult optimize_location(const Scenario& scenario, const SystemParams& params,
                            const ChannelParams& ch, const OptimizeOptions& opts) {
  if (opts.grid_points < 2) throw DomainError("optimizer grid needs at least two points");
  const FeasibleRegion region = feasible_region(scenario, params);
  OptResult out;
  out.feasible_lo = region.lo;
  out.feasible_hi = region.hi;

  auto evaluate = [&](double x1) {
    const double eta = energy_efficiency(x1, scenario, params, ch);
    out.trace.emplace_back(x1, eta);
    return eta;
  };

  if (region.lo == region.hi) {
    out.x1_star = region.hi;
    out.eta_en_star = evaluate(region.hi);
    return out;
  }

  const std::size_t n = opts.grid_points;
  const double step = (region.hi - region.lo) / static_cast<double>(n - 1);
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = i + 1 == n ? region.hi : region.lo + step * static_cast<double>(i);
  }
  std::size_t best = 0;
  double best_value = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double eta = evaluate(grid[i]);
    if (eta > best_value) {
      best_value = eta;
      best = i;
    }
  }

  const double a = grid[best == 0 ? 0 : best - 1];
  const double b = grid[std::min(best + 1, n - 1)];
  const GoldenResult refined = golden_section(evaluate, a, b, opts.tol);
  out.iterations = refined.iterations;
  if (refined.value >= best_value) {
    out.x1_star = refined.x;
    out.eta_en_star = refined.value;
  } else {
    out.x1_star = grid[best];
    out.eta_en_star = best_value;
  }
  return out;
}

}  // namespace uavbs
