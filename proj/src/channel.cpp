#include "uavbs/channel.hpp"

#include <cmath>
#include <string>

#include "uavbs/error.hpp"
#include "uavbs/geometry.hpp"

namespace uavbs {

void ChannelParams::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("channel parameter out of range: ") + what);
  };
  require(c > 0.0 && std::isfinite(c), "c > 0");
  require(q > 0.0 && std::isfinite(q), "q > 0");
  require(beta0 > 0.0 && std::isfinite(beta0), "beta0 > 0");
  require(alpha > 0.0 && std::isfinite(alpha), "alpha > 0");
  require(k_los > 0.0 && std::isfinite(k_los), "k_los > 0");
  require(k_nlos > 0.0 && std::isfinite(k_nlos), "k_nlos > 0");
  require(eta_nlos > 0.0 && eta_nlos <= 1.0, "0 < eta_nlos <= 1");
}

double los_probability(double theta_deg, const ChannelParams& ch) {
  if (!(theta_deg > 0.0 && theta_deg <= 90.0)) {
    throw DomainError("elevation angle must lie in (0, 90] degrees, got " +
                      std::to_string(theta_deg));
  }
  return 1.0 / (1.0 + ch.c * std::exp(-ch.q * (theta_deg - ch.c)));
}

LinkStats make_link_stats(double distance, double h, const ChannelParams& ch) {
  LinkStats s;
  s.distance = distance;
  s.theta_deg = elevation_angle_deg(distance, h);
  s.p_los = los_probability(s.theta_deg, ch);
  s.omega_los = ch.beta0 * std::pow(distance, -ch.alpha);
  s.omega_nlos = ch.eta_nlos * s.omega_los;
  return s;
}

double mixture_gain_cdf(const LinkStats& link, const ChannelParams& ch, double x) {
  return link.p_los * gamma_cdf(link.los_gain(ch), x) +
         link.p_nlos() * gamma_cdf(link.nlos_gain(ch), x);
}

double mixture_gain_pdf(const LinkStats& link, const ChannelParams& ch, double x) {
  return link.p_los * gamma_pdf(link.los_gain(ch), x) +
         link.p_nlos() * gamma_pdf(link.nlos_gain(ch), x);
}

}  // namespace uavbs
