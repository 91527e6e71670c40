#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uavbs/channel.hpp"
#include "uavbs/geometry.hpp"
#include "uavbs/montecarlo.hpp"
#include "uavbs/optimizer.hpp"
#include "uavbs/outage.hpp"

namespace uavbs {

enum class SweepVariable { x1, P_v };
enum class SweepScale { linear, log };

struct SweepSpec {
  SweepVariable variable = SweepVariable::x1;
  double lo = 0.0;
  double hi = 300.0;
  int steps = 15;
  SweepScale scale = SweepScale::linear;

  // Sweep points in order. A single step requires lo == hi.
  std::vector<double> points() const;
  void validate() const;
};

// Either explicit tag positions or a seeded uniform placement on [0, range].
struct TagPlacement {
  std::optional<std::vector<double>> positions;
  std::uint64_t seed = 20190626;
  double range = 20.0;
};

struct RunConfig {
  SystemParams system;
  ChannelParams channel;
  Scenario scenario;  // tag_x is filled from `tags` by resolve()
  TagPlacement tags;
  McConfig mc;
  OptimizeOptions optimizer;
  SweepSpec sweep;
  std::string output_path;

  // Places tags (when seeded), fills R_m defaults and validates everything.
  // Throws ConfigError.
  void resolve();
};

// Parses the sectioned key = value format. `source` names the input in error
// messages, which carry the offending line number. An empty text yields the
// reference defaults. The result is resolved.
RunConfig parse_config(std::string_view text, std::string_view source = "<config>");
RunConfig load_config(const std::string& path);

// Full text form of a configuration; parse_config(to_config_text(c)) == c.
std::string to_config_text(const RunConfig& config);

std::string_view to_string(SweepVariable v);
std::string_view to_string(SweepScale s);

}  // namespace uavbs
