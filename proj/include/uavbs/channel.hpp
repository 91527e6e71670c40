#pragma once

#include "uavbs/specfun.hpp"

namespace uavbs {

// Air-to-ground channel constants. Defaults are the suburban setup used
// throughout the project: c = 11.95, q = 0.136, unit reference gain at 1 m,
// free-space exponent, Nakagami shape 2 on both states, NLoS attenuation 0.5.
struct ChannelParams {
  double c = 11.95;
  double q = 0.136;  // per degree
  double beta0 = 1.0;
  double alpha = 2.0;
  double k_los = 2.0;
  double k_nlos = 2.0;
  double eta_nlos = 0.5;

  // Throws DomainError when any invariant is violated.
  void validate() const;
};

// Quantities derived from one link's length.
struct LinkStats {
  double distance = 0.0;   // m
  double theta_deg = 0.0;  // elevation, degrees
  double p_los = 0.0;
  double omega_los = 0.0;   // beta0 * d^-alpha
  double omega_nlos = 0.0;  // eta_nlos * omega_los

  double p_nlos() const { return 1.0 - p_los; }
  GammaDistSpec los_gain(const ChannelParams& ch) const { return {ch.k_los, omega_los}; }
  GammaDistSpec nlos_gain(const ChannelParams& ch) const { return {ch.k_nlos, omega_nlos}; }
};

// 1 / (1 + c exp(-q (theta - c))); theta in degrees, must lie in (0, 90].
double los_probability(double theta_deg, const ChannelParams& ch);

LinkStats make_link_stats(double distance, double h, const ChannelParams& ch);

// CDF of the LoS/NLoS mixture of channel power gains.
double mixture_gain_cdf(const LinkStats& link, const ChannelParams& ch, double x);

// Density of the mixture; x must be positive.
double mixture_gain_pdf(const LinkStats& link, const ChannelParams& ch, double x);

}  // namespace uavbs
