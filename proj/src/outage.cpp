#include "uavbs/outage.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "uavbs/error.hpp"
#include "uavbs/quadrature.hpp"

namespace uavbs {

void SystemParams::validate() const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw DomainError("system parameter out of range: " + what);
  };
  require(M >= 1, "M >= 1");
  require(P_v > 0.0 && std::isfinite(P_v), "P_v > 0");
  require(P_c >= 0.0 && std::isfinite(P_c), "P_c >= 0");
  require(P_f > 0.0 && std::isfinite(P_f), "P_f > 0");
  require(eta_r > 0.0 && eta_r < 1.0, "0 < eta_r < 1");
  require(eta_c > 0.0 && eta_c <= 1.0, "0 < eta_c <= 1");
  require(T_b > 0.0 && std::isfinite(T_b), "T_b > 0");
  require(T_u > 0.0 && std::isfinite(T_u), "T_u > 0");
  require(sigma2_um > 0.0 && sigma2_v > 0.0 && sigma2_b > 0.0, "noise powers > 0");
  require(v > 0.0 && std::isfinite(v), "v > 0");
  require(E_total > 0.0 && std::isfinite(E_total), "E_total > 0");
  require(R_m.size() == static_cast<std::size_t>(M),
          "R_m has " + std::to_string(R_m.size()) + " entries, expected M = " + std::to_string(M));
  for (double r : R_m) require(r >= 0.0 && std::isfinite(r), "R_m >= 0");
}

void validate_inputs(const Scenario& scenario, const SystemParams& params,
                     const ChannelParams& ch) {
  params.validate();
  ch.validate();
  scenario.validate();
  if (scenario.tag_count() != static_cast<std::size_t>(params.M)) {
    throw DomainError("scenario has " + std::to_string(scenario.tag_count()) +
                      " tags but M = " + std::to_string(params.M));
  }
}

RateThresholds uplink_rate(const SystemParams& params) {
  RateThresholds out;
  const double sum = std::accumulate(params.R_m.begin(), params.R_m.end(), 0.0);
  out.R_u = params.T_b / (params.M * params.T_u) * sum;
  out.gamma_th_tags.reserve(params.R_m.size());
  for (double r : params.R_m) out.gamma_th_tags.push_back(std::exp2(r) - 1.0);
  out.gamma_th_uplink = std::exp2(out.R_u) - 1.0;
  return out;
}

double energy_outage(int slot, const LinkStats& link, const SystemParams& params,
                     const ChannelParams& ch) {
  if (slot < 1 || slot > params.M) {
    throw DomainError("slot index " + std::to_string(slot) + " outside 1.." +
                      std::to_string(params.M));
  }
  const double path = std::pow(link.distance, ch.alpha);
  const double harvest = (slot - params.eta_r) * params.eta_c * params.P_v * ch.beta0;
  const double base = params.P_c * path / harvest;
  return link.p_los * reg_lower_inc_gamma(ch.k_los, base * ch.k_los) +
         link.p_nlos() * reg_lower_inc_gamma(ch.k_nlos, base * ch.k_nlos / ch.eta_nlos);
}

double snr_cdf_uplink(double x, const LinkStats& link_vb, const SystemParams& params,
                      const ChannelParams& ch) {
  if (!(x >= 0.0)) throw DomainError("SNR threshold must be nonnegative");
  const double base = x * params.sigma2_b * std::pow(link_vb.distance, ch.alpha) /
                      (params.P_v * ch.beta0);
  return link_vb.p_los * reg_lower_inc_gamma(ch.k_los, base * ch.k_los) +
         link_vb.p_nlos() * reg_lower_inc_gamma(ch.k_nlos, base * ch.k_nlos / ch.eta_nlos);
}

namespace {

constexpr double kTailMass = 1e-14;

// Integral over s of h(s) * s^(k-1) e^-s / Gamma(k) on (0, inf) for h with
// values in [0, 1]. The lower part uses s = s_c e^-u to resolve the s -> 0
// behaviour; both tails are cut where the Gamma(k, 1) mass is below kTailMass.
double integrate_against_unit_gamma(const std::function<double(double)>& h, double k,
                                    const QuadratureOptions& opts) {
  const GammaDistSpec unit(k, k);
  const double s_c = std::max(1.0, k);
  double s_lo = s_c;
  while (reg_lower_inc_gamma(k, s_lo) > kTailMass) s_lo *= 0.5;
  double s_hi = s_c;
  while (reg_upper_inc_gamma(k, s_hi) > kTailMass) s_hi *= 2.0;
  const double u_max = std::log(s_c / s_lo);

  auto lower = [&](double u) {
    const double s = s_c * std::exp(-u);
    return h(s) * gamma_pdf(unit, s) * s;
  };
  auto upper = [&](double s) { return h(s) * gamma_pdf(unit, s); };
  return integrate_gk15(lower, 0.0, u_max, opts).value +
         integrate_gk15(upper, s_c, s_hi, opts).value;
}

}  // namespace

double snr_cdf_backscatter(double x, const LinkStats& link_vu, const SystemParams& params,
                           const ChannelParams& ch) {
  if (!(x >= 0.0)) throw DomainError("SNR threshold must be nonnegative");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;

  const double scale = x / (params.eta_r * params.P_v);
  // Conditional on |g|^2 = y, outage iff |g'|^2 < x (y s_um + s_v) / (eta_r P_v y).
  auto conditional = [&](double y) {
    return mixture_gain_cdf(link_vu, ch, scale * (params.sigma2_um + params.sigma2_v / y));
  };

  QuadratureOptions opts;
  opts.rel_tol = 1e-8;
  opts.abs_tol = 1e-15;

  double total = 0.0;
  const struct {
    double weight;
    double k;
    double omega;
  } branches[] = {{link_vu.p_los, ch.k_los, link_vu.omega_los},
                  {link_vu.p_nlos(), ch.k_nlos, link_vu.omega_nlos}};
  for (const auto& b : branches) {
    if (b.weight == 0.0) continue;
    const double y_per_s = b.omega / b.k;
    total += b.weight * integrate_against_unit_gamma(
                            [&](double s) { return conditional(s * y_per_s); }, b.k, opts);
  }
  return total;
}

TagOutage tag_outage_terms(std::size_t tag, const Scenario& scenario, const SystemParams& params,
                           const ChannelParams& ch) {
  validate_inputs(scenario, params, ch);
  const RateThresholds th = uplink_rate(params);

  const double d_vu = link_distance(scenario.uav_collect(), scenario.tag(tag));
  const double d_vb = link_distance(scenario.uav_upload(), scenario.base_station());
  const LinkStats vu = make_link_stats(d_vu, scenario.h, ch);
  const LinkStats vb = make_link_stats(d_vb, scenario.h, ch);

  TagOutage out;
  out.slot = scenario.slot_of(tag);
  out.energy = energy_outage(out.slot, vu, params, ch);
  out.backscatter = snr_cdf_backscatter(th.gamma_th_tags[tag], vu, params, ch);
  out.uplink = snr_cdf_uplink(th.gamma_th_uplink, vb, params, ch);
  out.total = 1.0 - (1.0 - out.backscatter) * (1.0 - out.uplink) * (1.0 - out.energy);
  return out;
}

double tag_outage(std::size_t tag, const Scenario& scenario, const SystemParams& params,
                  const ChannelParams& ch) {
  return tag_outage_terms(tag, scenario, params, ch).total;
}

OutageReport system_outage(const Scenario& scenario, const SystemParams& params,
                           const ChannelParams& ch) {
  validate_inputs(scenario, params, ch);
  const RateThresholds th = uplink_rate(params);
  OutageReport report;
  report.gamma_th_tags = th.gamma_th_tags;
  report.gamma_th_uplink = th.gamma_th_uplink;
  for (std::size_t i = 0; i < scenario.tag_count(); ++i) {
    const TagOutage t = tag_outage_terms(i, scenario, params, ch);
    report.per_tag.push_back(t.total);
    report.energy_outage.push_back(t.energy);
  }
  report.system_avg = std::accumulate(report.per_tag.begin(), report.per_tag.end(), 0.0) /
                      static_cast<double>(report.per_tag.size());
  return report;
}

}  // namespace uavbs
