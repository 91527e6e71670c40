#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "uavbs/channel.hpp"
#include "uavbs/geometry.hpp"
#include "uavbs/outage.hpp"
#include "uavbs/rng.hpp"

namespace uavbs {

enum class CorrelationMode {
  // Every gain in the outage event is an independent draw with its own LoS
  // state, exactly as the closed forms factorize.
  paper_faithful,
  // One forward gain per trial shared by the energy and SNR events, and one
  // LoS state shared by the forward and backscatter gains of a link.
  physical,
};

std::string_view to_string(CorrelationMode mode);
// Throws ConfigError on unknown names.
CorrelationMode parse_correlation_mode(std::string_view name);

struct McConfig {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 20190725;
  CorrelationMode mode = CorrelationMode::paper_faithful;
};

struct McEstimate {
  double value = 0.0;
  double half_width_95 = 0.0;  // normal approximation, floored at 1 / trials
  std::uint64_t trials = 0;
};

// Builds an estimate from an event count.
McEstimate make_estimate(std::uint64_t hits, std::uint64_t trials);

// Draws from the LoS/NLoS mixture of one link.
class GainSampler {
 public:
  GainSampler(const LinkStats& link, const ChannelParams& ch);

  bool draw_los(Rng& rng) { return los_(rng); }
  double draw(Rng& rng) { return draw_in_state(draw_los(rng), rng); }
  double draw_in_state(bool los, Rng& rng) { return los ? los_gain_(rng) : nlos_gain_(rng); }

 private:
  std::bernoulli_distribution los_;
  std::gamma_distribution<double> los_gain_;
  std::gamma_distribution<double> nlos_gain_;
};

McEstimate mc_energy_outage(int slot, const LinkStats& link, const SystemParams& params,
                            const ChannelParams& ch, const McConfig& cfg);

// Uses substream `tag` of cfg.seed.
McEstimate mc_tag_outage(std::size_t tag, const Scenario& scenario, const SystemParams& params,
                         const ChannelParams& ch, const McConfig& cfg);

// Mean of the per-tag estimators; half-width combines the independent
// per-tag half-widths in quadrature.
McEstimate mc_system_outage(const Scenario& scenario, const SystemParams& params,
                            const ChannelParams& ch, const McConfig& cfg);

// Empirical Pr(SNR < x) for the two SNRs; used by the validation suite.
McEstimate mc_snr_uplink(double x, const LinkStats& link_vb, const SystemParams& params,
                         const ChannelParams& ch, const McConfig& cfg);
McEstimate mc_snr_backscatter(double x, const LinkStats& link_vu, const SystemParams& params,
                              const ChannelParams& ch, const McConfig& cfg);

}  // namespace uavbs
