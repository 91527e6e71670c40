// uavbs: outage, energy-efficiency and validation runs for UAV-assisted
// backscatter data collection.
//
// Exit status: 0 success, 2 configuration error, 3 infeasible energy budget,
// 4 numerical failure, 5 validation-suite failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "uavbs/config.hpp"
#include "uavbs/error.hpp"
#include "uavbs/sweeps.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kInfeasible = 3,
  kNumerical = 4,
  kValidationFailed = 5,
};

struct Options {
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mode;
  std::optional<double> tol;
  unsigned threads = 0;
};

uavbs::RunConfig load(const Options& opt) {
  uavbs::RunConfig cfg =
      opt.config_path.empty() ? uavbs::parse_config("") : uavbs::load_config(opt.config_path);
  if (opt.trials) cfg.mc.trials = *opt.trials;
  if (opt.seed) cfg.mc.seed = *opt.seed;
  if (opt.mode) cfg.mc.mode = uavbs::parse_correlation_mode(*opt.mode);
  if (opt.tol) {
    if (!(*opt.tol > 0.0)) throw uavbs::ConfigError("--tol must be positive");
    cfg.optimizer.tol = *opt.tol;
  }
  if (!opt.out_path.empty()) cfg.output_path = opt.out_path;
  return cfg;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

int run(const std::string& command, const Options& opt) {
  const uavbs::RunConfig cfg = load(opt);
  if (command == "outage-sweep") {
    const auto rows = uavbs::outage_sweep(cfg, opt.threads);
    write_output(cfg.output_path, uavbs::outage_sweep_csv(cfg, rows));
    return kOk;
  }
  if (command == "optimize") {
    const uavbs::OptResult result = uavbs::run_optimize(cfg);
    std::cout << uavbs::optimize_report(result);
    if (!cfg.output_path.empty()) {
      write_output(cfg.output_path, uavbs::optimize_trace_csv(result));
    }
    return kOk;
  }
  if (command == "power-sweep") {
    const auto rows = uavbs::power_sweep(cfg, opt.threads);
    write_output(cfg.output_path, uavbs::power_sweep_csv(rows));
    return kOk;
  }
  const uavbs::ValidationReport report = uavbs::mc_validate(cfg, opt.threads);
  const std::string text = uavbs::format_validation(report);
  std::cout << text;
  if (!cfg.output_path.empty()) write_output(cfg.output_path, text);
  return report.all_passed() ? kOk : kValidationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UAV-assisted backscatter outage and energy-efficiency toolkit"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "Configuration file (defaults if omitted)");
    sub->add_option("--out", opt.out_path, "Output file; '-' or omitted writes to stdout");
    sub->add_option("--trials", opt.trials, "Monte-Carlo trials per estimate (0 disables)");
    sub->add_option("--seed", opt.seed, "Monte-Carlo seed");
    sub->add_option("--mode", opt.mode, "Correlation mode")
        ->check(CLI::IsMember({"paper_faithful", "physical"}));
    sub->add_option("--tol", opt.tol, "Golden-section tolerance in meters");
    sub->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
  };

  std::string command;
  for (const auto& [name, help] :
       {std::pair{"outage-sweep", "System and per-tag outage along an x1 sweep (CSV)"},
        std::pair{"optimize", "Energy-optimal collection point under the energy budget"},
        std::pair{"power-sweep", "Optimal collection point per transmit power (CSV)"},
        std::pair{"mc-validate", "Check every closed form against the Monte-Carlo oracle"}}) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->callback([&command, n = std::string(name)] { command = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    return run(command, opt);
  } catch (const uavbs::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const uavbs::InfeasibleBudget& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const uavbs::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const uavbs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
