#include "uavbs/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "uavbs/error.hpp"

namespace uavbs {

std::string_view to_string(SweepVariable v) { return v == SweepVariable::x1 ? "x1" : "P_v"; }
std::string_view to_string(SweepScale s) { return s == SweepScale::linear ? "linear" : "log"; }

void SweepSpec::validate() const {
  if (steps == 1) {
    if (lo != hi) throw ConfigError("a single-step sweep needs lo == hi");
  } else if (steps < 2) {
    throw ConfigError("sweep needs at least two steps");
  } else if (!(lo < hi)) {
    throw ConfigError("sweep needs lo < hi");
  }
  if (scale == SweepScale::log && !(lo > 0.0)) {
    throw ConfigError("log-spaced sweep needs lo > 0");
  }
}

std::vector<double> SweepSpec::points() const {
  validate();
  std::vector<double> out(static_cast<std::size_t>(steps));
  if (steps == 1) {
    out[0] = lo;
    return out;
  }
  const double n = steps - 1;
  for (int i = 0; i < steps; ++i) {
    if (i == steps - 1) {
      out[i] = hi;
    } else if (scale == SweepScale::linear) {
      out[i] = lo + (hi - lo) * (i / n);
    } else {
      out[i] = lo * std::pow(hi / lo, i / n);
    }
  }
  return out;
}

void RunConfig::resolve() {
  try {
    if (system.R_m.empty()) system.R_m.assign(static_cast<std::size_t>(std::max(system.M, 0)), 1.0);
    if (tags.positions) {
      if (tags.positions->size() != static_cast<std::size_t>(system.M)) {
        throw ConfigError(fmt::format("tag_x lists {} tags but M = {}", tags.positions->size(),
                                      system.M));
      }
      scenario.tag_x = *tags.positions;
    } else {
      if (system.M < 1) throw ConfigError("M must be at least 1");
      Rng rng(tags.seed, 0);
      scenario.tag_x = place_tags(static_cast<std::size_t>(system.M), tags.range, rng);
    }
    system.validate();
    channel.validate();
    scenario.validate();
    sweep.validate();
    if (!(optimizer.tol > 0.0)) throw ConfigError("optimizer tol must be positive");
    if (optimizer.grid_points < 2) throw ConfigError("optimizer grid_points must be at least 2");
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

class Parser {
 public:
  Parser(std::string_view source, RunConfig& cfg) : source_(source), cfg_(cfg) { register_keys(); }

  void parse(std::string_view text) {
    int line_no = 0;
    std::string section;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto end = std::min(text.find('\n', pos), text.size());
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      line_ = line_no;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') fail("malformed section header");
        section = std::string(trim(line.substr(1, line.size() - 2)));
        if (!sections_.contains(section)) fail(fmt::format("unknown section [{}]", section));
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) fail("expected 'key = value'");
      if (section.empty()) fail("key outside of any section");
      const std::string key(trim(line.substr(0, eq)));
      const std::string_view value = trim(line.substr(eq + 1));
      const std::string full = section + "." + key;
      const auto it = setters_.find(full);
      if (it == setters_.end()) fail(fmt::format("unknown key '{}' in [{}]", key, section));
      if (!seen_.insert(full).second) fail(fmt::format("duplicate key '{}'", full));
      if (value.empty()) fail(fmt::format("empty value for '{}'", full));
      it->second(value);
    }
    line_ = 0;

    const bool explicit_tags = seen_.contains("Scenario.tag_x");
    if (explicit_tags && (seen_.contains("Scenario.tag_seed") || seen_.contains("Scenario.tag_range"))) {
      throw ConfigError(fmt::format(
          "{}:{}: give either tag_x or tag_seed/tag_range, not both", source_,
          lines_.at("Scenario.tag_x")));
    }
    if (explicit_tags && !seen_.contains("SystemParams.M")) {
      cfg_.system.M = static_cast<int>(cfg_.tags.positions->size());
    }
    if (!seen_.contains("SystemParams.R_m")) cfg_.system.R_m.clear();
  }

  const std::map<std::string, int>& lines() const { return lines_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ConfigError(fmt::format("{}:{}: {}", source_, line_, msg));
  }

  double number(std::string_view v) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
      fail(fmt::format("invalid number '{}'", v));
    }
    return out;
  }

  std::uint64_t unsigned_integer(std::string_view v) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
      fail(fmt::format("invalid nonnegative integer '{}'", v));
    }
    return out;
  }

  int integer(std::string_view v) {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) fail(fmt::format("invalid integer '{}'", v));
    return out;
  }

  template <typename T, typename F>
  std::vector<T> list(std::string_view v, F&& element) {
    std::vector<T> out;
    std::size_t pos = 0;
    while (pos <= v.size()) {
      const auto comma = std::min(v.find(',', pos), v.size());
      const auto item = trim(v.substr(pos, comma - pos));
      if (item.empty()) fail("empty list element");
      out.push_back(element(item));
      pos = comma + 1;
    }
    return out;
  }

  void add(const std::string& section, const std::string& key,
           std::function<void(std::string_view)> setter) {
    sections_.insert(section);
    const std::string full = section + "." + key;
    setters_[full] = [this, full, setter = std::move(setter)](std::string_view v) {
      lines_[full] = line_;
      setter(v);
    };
  }

  void add_number(const std::string& section, const std::string& key, double& target) {
    add(section, key, [this, &target](std::string_view v) { target = number(v); });
  }

  void register_keys() {
    auto& s = cfg_.system;
    add("SystemParams", "M", [this, &s](std::string_view v) { s.M = integer(v); });
    add_number("SystemParams", "P_v", s.P_v);
    add_number("SystemParams", "P_c", s.P_c);
    add_number("SystemParams", "P_f", s.P_f);
    add_number("SystemParams", "eta_r", s.eta_r);
    add_number("SystemParams", "eta_c", s.eta_c);
    add_number("SystemParams", "T_b", s.T_b);
    add_number("SystemParams", "T_u", s.T_u);
    add_number("SystemParams", "sigma2_um", s.sigma2_um);
    add_number("SystemParams", "sigma2_v", s.sigma2_v);
    add_number("SystemParams", "sigma2_b", s.sigma2_b);
    add("SystemParams", "R_m", [this, &s](std::string_view v) {
      s.R_m = list<double>(v, [this](std::string_view x) { return number(x); });
    });
    add_number("SystemParams", "v", s.v);
    add_number("SystemParams", "E_total", s.E_total);

    auto& c = cfg_.channel;
    add_number("ChannelParams", "c", c.c);
    add_number("ChannelParams", "q", c.q);
    add_number("ChannelParams", "beta0", c.beta0);
    add_number("ChannelParams", "alpha", c.alpha);
    add_number("ChannelParams", "k_los", c.k_los);
    add_number("ChannelParams", "k_nlos", c.k_nlos);
    add_number("ChannelParams", "eta_nlos", c.eta_nlos);

    auto& sc = cfg_.scenario;
    add("Scenario", "tag_x", [this](std::string_view v) {
      cfg_.tags.positions = list<double>(v, [this](std::string_view x) { return number(x); });
    });
    add("Scenario", "tag_seed",
        [this](std::string_view v) { cfg_.tags.seed = unsigned_integer(v); });
    add_number("Scenario", "tag_range", cfg_.tags.range);
    add_number("Scenario", "x1", sc.x1);
    add_number("Scenario", "x2", sc.x2);
    add_number("Scenario", "x_b", sc.x_b);
    add_number("Scenario", "h", sc.h);
    add("Scenario", "slots", [this, &sc](std::string_view v) {
      sc.slots = list<int>(v, [this](std::string_view x) { return integer(x); });
    });

    auto& mc = cfg_.mc;
    add("McConfig", "trials", [this, &mc](std::string_view v) { mc.trials = unsigned_integer(v); });
    add("McConfig", "seed", [this, &mc](std::string_view v) { mc.seed = unsigned_integer(v); });
    add("McConfig", "mode", [this, &mc](std::string_view v) {
      try {
        mc.mode = parse_correlation_mode(v);
      } catch (const ConfigError& e) {
        fail(e.what());
      }
    });

    auto& opt = cfg_.optimizer;
    add_number("Optimizer", "tol", opt.tol);
    add("Optimizer", "grid_points",
        [this, &opt](std::string_view v) { opt.grid_points = unsigned_integer(v); });

    auto& sw = cfg_.sweep;
    add("Sweep", "variable", [this, &sw](std::string_view v) {
      if (v == "x1") {
        sw.variable = SweepVariable::x1;
      } else if (v == "P_v") {
        sw.variable = SweepVariable::P_v;
      } else {
        fail(fmt::format("unknown sweep variable '{}' (expected x1 or P_v)", v));
      }
    });
    add_number("Sweep", "lo", sw.lo);
    add_number("Sweep", "hi", sw.hi);
    add("Sweep", "steps", [this, &sw](std::string_view v) { sw.steps = integer(v); });
    add("Sweep", "scale", [this, &sw](std::string_view v) {
      if (v == "linear") {
        sw.scale = SweepScale::linear;
      } else if (v == "log") {
        sw.scale = SweepScale::log;
      } else {
        fail(fmt::format("unknown sweep scale '{}' (expected linear or log)", v));
      }
    });

    add("Output", "path", [this](std::string_view v) { cfg_.output_path = std::string(v); });
  }

  std::string source_;
  RunConfig& cfg_;
  int line_ = 0;
  std::set<std::string> sections_;
  std::map<std::string, std::function<void(std::string_view)>> setters_;
  std::set<std::string> seen_;
  std::map<std::string, int> lines_;
};

// Key whose line a semantic error most likely refers to.
std::string blame_key(std::string_view message) {
  static const std::pair<const char*, const char*> hints[] = {
      {"R_m", "SystemParams.R_m"},     {"tag_x", "Scenario.tag_x"},
      {"slot", "Scenario.slots"},      {"x1", "Scenario.x1"},
      {"altitude", "Scenario.h"},      {"eta_r", "SystemParams.eta_r"},
      {"eta_c", "SystemParams.eta_c"}, {"eta_nlos", "ChannelParams.eta_nlos"},
      {"sweep", "Sweep.steps"},        {"tol", "Optimizer.tol"},
  };
  for (const auto& [needle, key] : hints) {
    if (message.find(needle) != std::string_view::npos) return key;
  }
  return {};
}

}  // namespace

RunConfig parse_config(std::string_view text, std::string_view source) {
  RunConfig cfg;
  Parser parser(source, cfg);
  parser.parse(text);
  try {
    cfg.resolve();
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    if (msg.rfind(std::string(source) + ":", 0) == 0) throw;
    const auto& lines = parser.lines();
    if (const auto it = lines.find(blame_key(msg)); it != lines.end()) {
      throw ConfigError(fmt::format("{}:{}: {}", source, it->second, msg));
    }
    throw ConfigError(fmt::format("{}: {}", source, msg));
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path);
}

namespace {

template <typename T>
std::string join(const std::vector<T>& xs) {
  return fmt::format("{}", fmt::join(xs, ", "));
}

}  // namespace

std::string to_config_text(const RunConfig& c) {
  fmt::memory_buffer out;
  auto it = std::back_inserter(out);
  const auto& s = c.system;
  fmt::format_to(it, "[SystemParams]\nM = {}\nP_v = {}\nP_c = {}\nP_f = {}\n", s.M, s.P_v, s.P_c,
                 s.P_f);
  fmt::format_to(it, "eta_r = {}\neta_c = {}\nT_b = {}\nT_u = {}\n", s.eta_r, s.eta_c, s.T_b, s.T_u);
  fmt::format_to(it, "sigma2_um = {}\nsigma2_v = {}\nsigma2_b = {}\n", s.sigma2_um, s.sigma2_v,
                 s.sigma2_b);
  fmt::format_to(it, "R_m = {}\nv = {}\nE_total = {}\n\n", join(s.R_m), s.v, s.E_total);

  const auto& ch = c.channel;
  fmt::format_to(it, "[ChannelParams]\nc = {}\nq = {}\nbeta0 = {}\nalpha = {}\n", ch.c, ch.q,
                 ch.beta0, ch.alpha);
  fmt::format_to(it, "k_los = {}\nk_nlos = {}\neta_nlos = {}\n\n", ch.k_los, ch.k_nlos,
                 ch.eta_nlos);

  const auto& sc = c.scenario;
  fmt::format_to(it, "[Scenario]\n");
  if (c.tags.positions) {
    fmt::format_to(it, "tag_x = {}\n", join(*c.tags.positions));
  } else {
    fmt::format_to(it, "tag_seed = {}\ntag_range = {}\n", c.tags.seed, c.tags.range);
  }
  fmt::format_to(it, "x1 = {}\nx2 = {}\nx_b = {}\nh = {}\n", sc.x1, sc.x2, sc.x_b, sc.h);
  if (!sc.slots.empty()) fmt::format_to(it, "slots = {}\n", join(sc.slots));

  fmt::format_to(it, "\n[McConfig]\ntrials = {}\nseed = {}\nmode = {}\n\n", c.mc.trials,
                 c.mc.seed, to_string(c.mc.mode));
  fmt::format_to(it, "[Optimizer]\ntol = {}\ngrid_points = {}\n\n", c.optimizer.tol,
                 c.optimizer.grid_points);
  fmt::format_to(it, "[Sweep]\nvariable = {}\nlo = {}\nhi = {}\nsteps = {}\nscale = {}\n",
                 to_string(c.sweep.variable), c.sweep.lo, c.sweep.hi, c.sweep.steps,
                 to_string(c.sweep.scale));
  if (!c.output_path.empty()) fmt::format_to(it, "\n[Output]\npath = {}\n", c.output_path);
  return fmt::to_string(out);
}

}  // namespace uavbs
