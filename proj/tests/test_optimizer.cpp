#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "uavbs/error.hpp"
#include "uavbs/optimizer.hpp"

using namespace uavbs;
using uavbs::testing::reference_scenario;
using uavbs::testing::reference_system;

TEST_CASE("mission energy and efficiency edge cases") {
  const ChannelParams ch;
  SystemParams p = reference_system(10.0);
  const Scenario sc = reference_scenario();
  CHECK(mission_energy(sc.x2, sc, p) == (p.T_b + p.T_u) * p.P_v);
  CHECK(mission_energy(sc.x2 - 10.0, sc, p) == doctest::Approx(100.0 + 20.0));

  p.P_c = 1e9;
  CHECK(energy_efficiency(50.0, sc, p, ch) == 0.0);
  CHECK_THROWS_AS(energy_efficiency(sc.x2 + 1.0, sc, p, ch), DomainError);
}

TEST_CASE("energy_efficiency numerator uses per-tag rates") {
  const ChannelParams ch;
  SystemParams p = reference_system(10.0);
  const Scenario sc = reference_scenario(30.0);
  const OutageReport r = system_outage(sc, p, ch);
  double delivered = 0.0;
  for (int i = 0; i < 3; ++i) delivered += p.R_m[i] * (1.0 - r.per_tag[i]);
  CHECK(energy_efficiency(30.0, sc, p, ch) ==
        doctest::Approx(delivered / 3.0 / mission_energy(30.0, sc, p)).epsilon(1e-14));
}

TEST_CASE("feasible_region") {
  const Scenario sc = reference_scenario();
  SystemParams p = reference_system(10.0);
  p.E_total = 2100.0;
  const FeasibleRegion r = feasible_region(sc, p);
  CHECK(r.lo == 92.0);
  CHECK(r.hi == 300.0);
  for (double x1 = r.lo; x1 <= r.hi; x1 += 0.5) {
    CHECK(mission_energy(x1, sc, p) <= p.E_total + 1e-9);
  }
  CHECK(mission_energy(r.lo - 0.01, sc, p) > p.E_total);

  p.E_total = (p.T_b + p.T_u) * p.P_v;
  const FeasibleRegion tight = feasible_region(sc, p);
  CHECK(tight.lo == sc.x2);
  CHECK(tight.hi == sc.x2);

  p.E_total -= 1e-6;
  CHECK_THROWS_AS(feasible_region(sc, p), InfeasibleBudget);
}

TEST_CASE("golden_section on a symmetric parabola") {
  const GoldenResult r = golden_section([](double x) { return -(x - 5.0) * (x - 5.0); }, 0.0, 10.0, 1e-6);
  CHECK(std::abs(r.x - 5.0) <= 1e-6);
  CHECK(r.iterations <= golden_section_iteration_bound(0.0, 10.0, 1e-6) + 2);
  CHECK(r.value == doctest::Approx(0.0).epsilon(1e-12));

  const GoldenResult degenerate = golden_section([](double x) { return x; }, 3.0, 3.0, 1e-3);
  CHECK(degenerate.x == 3.0);
  CHECK(degenerate.iterations == 0);
  CHECK_THROWS_AS(golden_section([](double x) { return x; }, 1.0, 0.0, 1e-3), DomainError);
  CHECK_THROWS_AS(golden_section([](double x) { return x; }, 0.0, 1.0, 0.0), DomainError);
}

TEST_CASE("golden_section property: random concave quadratics") {
  std::mt19937_64 gen(1234);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  std::uniform_real_distribution<double> width(0.1, 500.0);
  std::uniform_real_distribution<double> curvature(0.01, 50.0);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  std::uniform_real_distribution<double> log_tol(-7.0, -1.0);
  for (int c = 0; c < 100; ++c) {
    const double lo = u(gen);
    const double hi = lo + width(gen);
    const double peak = lo + frac(gen) * (hi - lo);
    const double a = curvature(gen);
    const double tol = std::pow(10.0, log_tol(gen));
    const GoldenResult r =
        golden_section([&](double x) { return -a * (x - peak) * (x - peak); }, lo, hi, tol);
    CAPTURE(c);
    CHECK(std::abs(r.x - peak) <= tol);
    CHECK(r.iterations <= golden_section_iteration_bound(lo, hi, tol) + 2);
  }
}

TEST_CASE("optimize_location with no flight budget stays at the upload point") {
  const ChannelParams ch;
  SystemParams p = reference_system(10.0);
  p.E_total = (p.T_b + p.T_u) * p.P_v;
  const OptResult r = optimize_location(reference_scenario(), p, ch);
  CHECK(r.x1_star == 300.0);
  CHECK(r.iterations == 0);
  CHECK(r.trace.size() == 1);
}

TEST_CASE("optimize_location result lies in the feasible region and beats its grid") {
  const ChannelParams ch;
  for (double e_total : {2100.0, 3000.0}) {
    SystemParams p = reference_system(10.0);
    p.E_total = e_total;
    const Scenario sc = reference_scenario();
    const OptResult r = optimize_location(sc, p, ch);
    CHECK(r.feasible_lo <= r.x1_star);
    CHECK(r.x1_star <= r.feasible_hi);
    CHECK(r.feasible_hi == sc.x2);
    CHECK(mission_energy(r.x1_star, sc, p) <= p.E_total + 1e-9);
    for (std::size_t i = 0; i < 64; ++i) CHECK(r.eta_en_star >= r.trace[i].second);
    CHECK(r.trace.size() > 64);
  }
}

TEST_CASE("optimize_location is stable under tolerance refinement") {
  const ChannelParams ch;
  const SystemParams p = reference_system(10.0);
  const Scenario sc = reference_scenario();
  const OptResult coarse = optimize_location(sc, p, ch, {1e-2, 64});
  const OptResult fine = optimize_location(sc, p, ch, {1e-4, 64});
  CHECK(std::abs(coarse.x1_star - fine.x1_star) <= 1e-2);
}

TEST_CASE("larger energy budget never lowers the optimum") {
  const ChannelParams ch;
  const Scenario sc = reference_scenario();
  double prev = 0.0;
  for (double e_total : {100.0, 500.0, 1500.0, 2100.0, 2600.0, 3000.0, 5000.0}) {
    SystemParams p = reference_system(10.0);
    p.E_total = e_total;
    const double eta = optimize_location(sc, p, ch).eta_en_star;
    CHECK(eta >= prev - 1e-12);
    prev = eta;
  }
}

TEST_CASE("efficiency curves peak inside the region and move toward the BS with power") {
  const ChannelParams ch;
  const Scenario sc = reference_scenario();
  double prev_argmax = -1e9;
  for (double pv : {1.0, 5.0, 10.0}) {
    const SystemParams p = reference_system(pv);
    const FeasibleRegion region = feasible_region(sc, p);
    constexpr int n = 600;
    int best = 0;
    double best_eta = -1.0;
    for (int i = 0; i <= n; ++i) {
      const double x1 = region.lo + (region.hi - region.lo) * i / n;
      const double eta = energy_efficiency(x1, sc, p, ch);
      if (eta > best_eta) {
        best_eta = eta;
        best = i;
      }
    }
    CAPTURE(pv);
    CHECK(best > 0);
    CHECK(best < n);
    const double argmax = region.lo + (region.hi - region.lo) * best / n;
    CHECK(argmax >= prev_argmax);
    prev_argmax = argmax;
  }
}
