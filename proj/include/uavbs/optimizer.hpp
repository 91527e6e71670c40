#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "uavbs/channel.hpp"
#include "uavbs/geometry.hpp"
#include "uavbs/outage.hpp"

namespace uavbs {

// Mission energy ((x2 - x1) / v) P_f + (T_b + T_u) P_v in joules.
double mission_energy(double x1, const Scenario& scenario, const SystemParams& params);

// Average delivered rate per joule when collecting at x1 (bits/s/Hz/J).
double energy_efficiency(double x1, const Scenario& scenario, const SystemParams& params,
                         const ChannelParams& ch);

struct FeasibleRegion {
  double lo = 0.0;
  double hi = 0.0;
};

// Collection points whose mission energy fits into E_total:
// [x2 - v (E_total - (T_b + T_u) P_v) / P_f, x2].
// Throws InfeasibleBudget when E_total < (T_b + T_u) P_v.
FeasibleRegion feasible_region(const Scenario& scenario, const SystemParams& params);

struct GoldenResult {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
};

// Maximizes a unimodal objective on [lo, hi] by golden-section bracketing.
// Stops once the bracket is at most `tol` wide and returns its midpoint.
GoldenResult golden_section(const std::function<double(double)>& objective, double lo, double hi,
                            double tol);

// Upper bound on golden_section's iteration count for a given bracket.
int golden_section_iteration_bound(double lo, double hi, double tol);

struct OptResult {
  double x1_star = 0.0;
  double eta_en_star = 0.0;
  double feasible_lo = 0.0;
  double feasible_hi = 0.0;
  int iterations = 0;
  std::vector<std::pair<double, double>> trace;  // (x1, eta_en) in evaluation order
};

struct OptimizeOptions {
  double tol = 1e-3;
  std::size_t grid_points = 64;
};

// Coarse grid scan over the feasible region, then golden-section refinement
// inside the bracket around the best grid point.
OptResult optimize_location(const Scenario& scenario, const SystemParams& params,
                            const ChannelParams& ch, const OptimizeOptions& opts = {});

}  // namespace uavbs
