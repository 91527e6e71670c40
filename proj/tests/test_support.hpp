#pragma once

#include "uavbs/channel.hpp"
#include "uavbs/geometry.hpp"
#include "uavbs/outage.hpp"
#include "uavbs/rng.hpp"

namespace uavbs::testing {

// Reference evaluation setup with tags placed by the default config seed.
inline Scenario reference_scenario(double x1 = 100.0) {
  Scenario sc;
  Rng rng(20190626, 0);
  sc.tag_x = place_tags(3, 20.0, rng);
  sc.x1 = x1;
  return sc;
}

inline SystemParams reference_system(double p_v = 10.0) {
  SystemParams p;
  p.P_v = p_v;
  return p;
}

}  // namespace uavbs::testing
