#include "uavbs/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uavbs/error.hpp"

namespace uavbs {

std::string_view to_string(CorrelationMode mode) {
  switch (mode) {
    case CorrelationMode::paper_faithful:
      return "paper_faithful";
    case CorrelationMode::physical:
      return "physical";
  }
  return "unknown";
}

CorrelationMode parse_correlation_mode(std::string_view name) {
  if (name == "paper_faithful") return CorrelationMode::paper_faithful;
  if (name == "physical") return CorrelationMode::physical;
  throw ConfigError("unknown correlation mode '" + std::string(name) +
                    "' (expected paper_faithful or physical)");
}

McEstimate make_estimate(std::uint64_t hits, std::uint64_t trials) {
  if (trials == 0) throw DomainError("Monte-Carlo estimate needs at least one trial");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  const double normal = 1.959963984540054 * std::sqrt(p * (1.0 - p) / n);
  return {p, std::min(0.5, std::max(normal, 1.0 / n)), trials};
}

GainSampler::GainSampler(const LinkStats& link, const ChannelParams& ch)
    : los_(link.p_los),
      los_gain_(ch.k_los, link.omega_los / ch.k_los),
      nlos_gain_(ch.k_nlos, link.omega_nlos / ch.k_nlos) {}

McEstimate mc_energy_outage(int slot, const LinkStats& link, const SystemParams& params,
                            const ChannelParams& ch, const McConfig& cfg) {
  if (slot < 1 || slot > params.M) throw DomainError("slot index out of range");
  Rng rng(cfg.seed, 0);
  GainSampler gain(link, ch);
  const double slot_time = params.T_b / params.M;
  const double need = slot_time * params.P_c;
  const double harvest = (slot - params.eta_r) * params.eta_c * params.P_v * slot_time;
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    if (harvest * gain.draw(rng) < need) ++hits;
  }
  return make_estimate(hits, cfg.trials);
}

McEstimate mc_snr_uplink(double x, const LinkStats& link_vb, const SystemParams& params,
                         const ChannelParams& ch, const McConfig& cfg) {
  Rng rng(cfg.seed, 0);
  GainSampler gain(link_vb, ch);
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    if (params.P_v * gain.draw(rng) / params.sigma2_b < x) ++hits;
  }
  return make_estimate(hits, cfg.trials);
}

namespace {

double backscatter_snr(double g, double g_prime, const SystemParams& params) {
  return params.eta_r * params.P_v * g * g_prime / (g * params.sigma2_um + params.sigma2_v);
}

}  // namespace

McEstimate mc_snr_backscatter(double x, const LinkStats& link_vu, const SystemParams& params,
                              const ChannelParams& ch, const McConfig& cfg) {
  Rng rng(cfg.seed, 0);
  GainSampler gain(link_vu, ch);
  const bool shared = cfg.mode == CorrelationMode::physical;
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const bool los = gain.draw_los(rng);
    const double g = gain.draw_in_state(los, rng);
    const double g_prime = gain.draw_in_state(shared ? los : gain.draw_los(rng), rng);
    if (backscatter_snr(g, g_prime, params) < x) ++hits;
  }
  return make_estimate(hits, cfg.trials);
}

McEstimate mc_tag_outage(std::size_t tag, const Scenario& scenario, const SystemParams& params,
                         const ChannelParams& ch, const McConfig& cfg) {
  validate_inputs(scenario, params, ch);
  const RateThresholds th = uplink_rate(params);
  const int slot = scenario.slot_of(tag);
  const LinkStats vu =
      make_link_stats(link_distance(scenario.uav_collect(), scenario.tag(tag)), scenario.h, ch);
  const LinkStats vb = make_link_stats(
      link_distance(scenario.uav_upload(), scenario.base_station()), scenario.h, ch);

  Rng rng(cfg.seed, tag);
  GainSampler forward(vu, ch);
  GainSampler uplink(vb, ch);

  const double slot_time = params.T_b / params.M;
  const double need = slot_time * params.P_c;
  const double harvest = (slot - params.eta_r) * params.eta_c * params.P_v * slot_time;
  const double gamma_tag = th.gamma_th_tags[tag];
  const double gamma_up = th.gamma_th_uplink;
  const bool physical = cfg.mode == CorrelationMode::physical;

  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const bool los = forward.draw_los(rng);
    const double g = forward.draw_in_state(los, rng);
    double g_prime;
    double g_energy;
    if (physical) {
      g_prime = forward.draw_in_state(los, rng);
      g_energy = g;
    } else {
      g_prime = forward.draw(rng);
      g_energy = forward.draw(rng);
    }
    const double g_vb = uplink.draw(rng);

    const bool energy_out = harvest * g_energy < need;
    const bool tag_out = backscatter_snr(g, g_prime, params) < gamma_tag;
    const bool up_out = params.P_v * g_vb / params.sigma2_b < gamma_up;
    if (energy_out || tag_out || up_out) ++hits;
  }
  return make_estimate(hits, cfg.trials);
}

McEstimate mc_system_outage(const Scenario& scenario, const SystemParams& params,
                            const ChannelParams& ch, const McConfig& cfg) {
  const std::size_t m = scenario.tag_count();
  double sum = 0.0;
  double var = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const McEstimate e = mc_tag_outage(i, scenario, params, ch, cfg);
    sum += e.value;
    var += e.half_width_95 * e.half_width_95;
  }
  const double md = static_cast<double>(m);
  const double floor = 1.0 / static_cast<double>(cfg.trials);
  return {sum / md, std::min(0.5, std::max(floor, std::sqrt(var) / md)), cfg.trials};
}

}  // namespace uavbs
