#include "uavbs/sweeps.hpp"

#include <cmath>

#include <fmt/format.h>

#include "uavbs/error.hpp"
#include "uavbs/parallel.hpp"

namespace uavbs {

namespace {

constexpr const char* kUnitsLine = "# meters, watts, seconds, bits/s/Hz/J\n";

double checked(double value, const char* what) {
  if (!std::isfinite(value)) throw NumericalError(fmt::format("{} is not finite", what));
  return value;
}

double checked_probability(double p, const char* what) {
  checked(p, what);
  if (p < 0.0 || p > 1.0) {
    throw NumericalError(fmt::format("{} = {} lies outside [0, 1]", what, p));
  }
  return p;
}

RunConfig with_x1(const RunConfig& config, double x1) {
  RunConfig c = config;
  c.scenario.x1 = x1;
  return c;
}

}  // namespace

std::vector<OutageSweepRow> outage_sweep(const RunConfig& config, unsigned threads) {
  if (config.sweep.variable != SweepVariable::x1) {
    throw ConfigError("outage-sweep needs a sweep over x1");
  }
  const std::vector<double> xs = config.sweep.points();
  std::vector<OutageSweepRow> rows(xs.size());
  parallel_for(xs.size(), threads, [&](std::size_t i) {
    const RunConfig c = with_x1(config, xs[i]);
    rows[i].x1 = xs[i];
    rows[i].analytic = system_outage(c.scenario, c.system, c.channel);
    if (c.mc.trials > 0) rows[i].mc = mc_system_outage(c.scenario, c.system, c.channel, c.mc);
  });
  return rows;
}

std::string outage_sweep_csv(const RunConfig& config, const std::vector<OutageSweepRow>& rows) {
  const int m = config.system.M;
  fmt::memory_buffer out;
  auto it = std::back_inserter(out);
  fmt::format_to(it, "{}x1,p_in_system", kUnitsLine);
  for (int i = 1; i <= m; ++i) fmt::format_to(it, ",p_in_tag_{}", i);
  for (int i = 1; i <= m; ++i) fmt::format_to(it, ",p_e_tag_{}", i);
  if (config.mc.trials > 0) fmt::format_to(it, ",mc_p_in_system,mc_ci95");
  fmt::format_to(it, "\n");
  for (const auto& row : rows) {
    fmt::format_to(it, "{},{}", checked(row.x1, "x1"),
                   checked_probability(row.analytic.system_avg, "p_in_system"));
    for (double p : row.analytic.per_tag) fmt::format_to(it, ",{}", checked_probability(p, "p_in"));
    for (double p : row.analytic.energy_outage) {
      fmt::format_to(it, ",{}", checked_probability(p, "p_e"));
    }
    if (row.mc) {
      fmt::format_to(it, ",{},{}", checked_probability(row.mc->value, "mc_p_in_system"),
                     checked(row.mc->half_width_95, "mc_ci95"));
    }
    fmt::format_to(it, "\n");
  }
  return fmt::to_string(out);
}

std::vector<PowerSweepRow> power_sweep(const RunConfig& config, unsigned threads) {
  if (config.sweep.variable != SweepVariable::P_v) {
    throw ConfigError("power-sweep needs a sweep over P_v");
  }
  const std::vector<double> powers = config.sweep.points();
  std::vector<PowerSweepRow> rows(powers.size());
  parallel_for(powers.size(), threads, [&](std::size_t i) {
    RunConfig c = config;
    c.system.P_v = powers[i];
    rows[i].p_v = powers[i];
    try {
      rows[i].result = optimize_location(c.scenario, c.system, c.channel, c.optimizer);
    } catch (const InfeasibleBudget&) {
      rows[i].result.reset();
    }
  });
  return rows;
}

std::string power_sweep_csv(const std::vector<PowerSweepRow>& rows) {
  fmt::memory_buffer out;
  auto it = std::back_inserter(out);
  fmt::format_to(it, "{}p_v,x1_star,eta_en_star,status\n", kUnitsLine);
  for (const auto& row : rows) {
    if (row.result) {
      fmt::format_to(it, "{},{},{},ok\n", checked(row.p_v, "p_v"),
                     checked(row.result->x1_star, "x1_star"),
                     checked(row.result->eta_en_star, "eta_en_star"));
    } else {
      fmt::format_to(it, "{},,,infeasible\n", checked(row.p_v, "p_v"));
    }
  }
  return fmt::to_string(out);
}

OptResult run_optimize(const RunConfig& config) {
  return optimize_location(config.scenario, config.system, config.channel, config.optimizer);
}

std::string optimize_report(const OptResult& r) {
  return fmt::format(
      "x1_star = {} m\neta_en_star = {} bits/s/Hz/J\nfeasible_region = [{}, {}] m\n"
      "iterations = {}\nevaluations = {}\n",
      r.x1_star, r.eta_en_star, r.feasible_lo, r.feasible_hi, r.iterations, r.trace.size());
}

std::string optimize_trace_csv(const OptResult& r) {
  fmt::memory_buffer out;
  auto it = std::back_inserter(out);
  fmt::format_to(it, "{}x1,eta_en\n", kUnitsLine);
  for (const auto& [x1, eta] : r.trace) {
    fmt::format_to(it, "{},{}\n", checked(x1, "x1"), checked(eta, "eta_en"));
  }
  return fmt::to_string(out);
}

bool ValidationReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

ValidationReport mc_validate(const RunConfig& config, unsigned threads) {
  if (config.mc.trials == 0) throw ConfigError("mc-validate needs McConfig.trials > 0");
  const auto& sys = config.system;
  const auto& ch = config.channel;
  const auto& sc = config.scenario;
  const RateThresholds th = uplink_rate(sys);

  struct Job {
    std::string name;
    std::function<double()> analytic;
    std::function<McEstimate()> simulate;
  };
  std::vector<Job> jobs;

  for (std::size_t i = 0; i < sc.tag_count(); ++i) {
    const LinkStats vu = make_link_stats(link_distance(sc.uav_collect(), sc.tag(i)), sc.h, ch);
    const int slot = sc.slot_of(i);
    const double gamma = th.gamma_th_tags[i];
    jobs.push_back({fmt::format("energy_outage tag={} slot={} x1={}", i + 1, slot, sc.x1),
                    [=, &sys, &ch] { return energy_outage(slot, vu, sys, ch); },
                    [=, &sys, &ch, &config] { return mc_energy_outage(slot, vu, sys, ch, config.mc); }});
    jobs.push_back({fmt::format("snr_cdf_backscatter tag={} x={} x1={}", i + 1, gamma, sc.x1),
                    [=, &sys, &ch] { return snr_cdf_backscatter(gamma, vu, sys, ch); },
                    [=, &sys, &ch, &config] {
                      return mc_snr_backscatter(gamma, vu, sys, ch, config.mc);
                    }});
  }
  const LinkStats vb = make_link_stats(link_distance(sc.uav_upload(), sc.base_station()), sc.h, ch);
  jobs.push_back({fmt::format("snr_cdf_uplink x={} x2={}", th.gamma_th_uplink, sc.x2),
                  [=, &sys, &ch] { return snr_cdf_uplink(th.gamma_th_uplink, vb, sys, ch); },
                  [=, &sys, &ch, &config] {
                    return mc_snr_uplink(th.gamma_th_uplink, vb, sys, ch, config.mc);
                  }});

  const std::vector<double> xs = config.sweep.variable == SweepVariable::x1
                                     ? config.sweep.points()
                                     : std::vector<double>{sc.x1};
  for (double x1 : xs) {
    const RunConfig c = with_x1(config, x1);
    jobs.push_back({fmt::format("system_outage x1={}", x1),
                    [c] { return system_outage(c.scenario, c.system, c.channel).system_avg; },
                    [c] { return mc_system_outage(c.scenario, c.system, c.channel, c.mc); }});
  }

  ValidationReport report;
  report.checks.resize(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t i) {
    ValidationCheck& check = report.checks[i];
    check.name = jobs[i].name;
    check.analytic = jobs[i].analytic();
    check.mc = jobs[i].simulate();
    check.passed = std::abs(check.analytic - check.mc.value) <= 3.0 * check.mc.half_width_95;
  });
  return report;
}

std::string format_validation(const ValidationReport& report) {
  fmt::memory_buffer out;
  auto it = std::back_inserter(out);
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    if (c.passed) ++passed;
    fmt::format_to(it, "{} {}: analytic={:.6f} mc={:.6f} ci95={:.6f} delta={:+.6f}\n",
                   c.passed ? "PASS" : "FAIL", c.name, c.analytic, c.mc.value,
                   c.mc.half_width_95, c.mc.value - c.analytic);
  }
  fmt::format_to(it, "{}/{} checks passed\n", passed, report.checks.size());
  return fmt::to_string(out);
}

}  // namespace uavbs
