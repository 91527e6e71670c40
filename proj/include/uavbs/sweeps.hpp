#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uavbs/config.hpp"

namespace uavbs {

// Every sweep evaluates its points concurrently on `threads` workers
// (0 = hardware concurrency). Results are ordered by sweep point and do not
// depend on the thread count.

struct OutageSweepRow {
  double x1 = 0.0;
  OutageReport analytic;
  std::optional<McEstimate> mc;  // present when mc.trials > 0
};

// Analytic (and optionally simulated) outage along the x1 sweep.
std::vector<OutageSweepRow> outage_sweep(const RunConfig& config, unsigned threads = 0);
std::string outage_sweep_csv(const RunConfig& config, const std::vector<OutageSweepRow>& rows);

struct PowerSweepRow {
  double p_v = 0.0;
  std::optional<OptResult> result;  // empty when the budget is infeasible
};

// Optimal collection point for each transmit power of the P_v sweep.
std::vector<PowerSweepRow> power_sweep(const RunConfig& config, unsigned threads = 0);
std::string power_sweep_csv(const std::vector<PowerSweepRow>& rows);

OptResult run_optimize(const RunConfig& config);
std::string optimize_report(const OptResult& result);
std::string optimize_trace_csv(const OptResult& result);

struct ValidationCheck {
  std::string name;
  double analytic = 0.0;
  McEstimate mc;
  bool passed = false;  // |analytic - mc| <= 3 half-widths
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_passed() const;
};

// Closed forms against the Monte-Carlo oracle: energy outage and both SNR
// CDFs per tag at the configured x1, and system outage at every x1 of the
// sweep (or the configured x1 when sweeping P_v).
ValidationReport mc_validate(const RunConfig& config, unsigned threads = 0);
std::string format_validation(const ValidationReport& report);

}  // namespace uavbs
