#pragma once

#include <cstddef>
#include <vector>

#include "uavbs/channel.hpp"
#include "uavbs/geometry.hpp"

namespace uavbs {

// System-wide scalars. Defaults reproduce the reference evaluation setup.
struct SystemParams {
  int M = 3;
  double P_v = 10.0;    // W, UAV transmit power
  double P_c = 1e-3;    // W, tag circuit power
  double P_f = 100.0;   // W, UAV flight power
  double eta_r = 0.5;   // reflected fraction
  double eta_c = 0.5;   // conversion efficiency
  double T_b = 1.0;     // s, backscatter period
  double T_u = 1.0;     // s, upload period
  double sigma2_um = 1e-9;  // W, tag noise
  double sigma2_v = 1e-9;   // W, UAV noise
  double sigma2_b = 1e-9;   // W, BS noise
  std::vector<double> R_m = {1.0, 1.0, 1.0};  // bits/s/Hz per tag
  double v = 10.0;          // m/s
  double E_total = 3000.0;  // J

  void validate() const;
};

struct RateThresholds {
  double R_u = 0.0;
  std::vector<double> gamma_th_tags;  // 2^R_m - 1
  double gamma_th_uplink = 0.0;       // 2^R_u - 1
};

// R_u = T_b / (M T_u) * sum(R_m), with the Shannon thresholds of every link.
RateThresholds uplink_rate(const SystemParams& params);

// Probability that tag in TDMA slot `slot` (1..M) harvests less than its
// circuit consumption over its own slot.
double energy_outage(int slot, const LinkStats& link, const SystemParams& params,
                     const ChannelParams& ch);

// CDF of the UAV-to-BS SNR P_v |g_vb|^2 / sigma2_b.
double snr_cdf_uplink(double x, const LinkStats& link_vb, const SystemParams& params,
                      const ChannelParams& ch);

// CDF of the backscatter SNR eta_r P_v |g|^2 |g'|^2 / (|g|^2 sigma2_um + sigma2_v)
// with g and g' independent LoS/NLoS mixtures. Evaluated by adaptive
// quadrature over the forward gain; throws QuadratureError on failure.
double snr_cdf_backscatter(double x, const LinkStats& link_vu, const SystemParams& params,
                           const ChannelParams& ch);

// The three factors of one tag's end-to-end outage.
struct TagOutage {
  int slot = 0;
  double energy = 0.0;       // P_E,m
  double backscatter = 0.0;  // F_gamma_UmV(gamma_th^m)
  double uplink = 0.0;       // F_gamma_VB(gamma_th^U)
  double total = 0.0;        // P_in,m
};

TagOutage tag_outage_terms(std::size_t tag, const Scenario& scenario, const SystemParams& params,
                           const ChannelParams& ch);

// P_in,m = 1 - (1 - F_bs)(1 - F_vb)(1 - P_E,m) for tag index `tag` (0-based).
double tag_outage(std::size_t tag, const Scenario& scenario, const SystemParams& params,
                  const ChannelParams& ch);

struct OutageReport {
  std::vector<double> per_tag;
  double system_avg = 0.0;
  std::vector<double> energy_outage;
  std::vector<double> gamma_th_tags;
  double gamma_th_uplink = 0.0;
};

OutageReport system_outage(const Scenario& scenario, const SystemParams& params,
                           const ChannelParams& ch);

// Checks that the scenario and parameters agree on M and R_m.
void validate_inputs(const Scenario& scenario, const SystemParams& params,
                     const ChannelParams& ch);

}  // namespace uavbs
