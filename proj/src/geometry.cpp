#include "uavbs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "uavbs/error.hpp"

namespace uavbs {

void Scenario::validate() const {
  if (tag_x.empty()) throw DomainError("scenario needs at least one tag");
  if (!(h > 0.0)) throw DomainError("UAV altitude h must be positive");
  if (!(x1 <= x2)) {
    throw DomainError("collection point x1 = " + std::to_string(x1) +
                      " lies beyond the upload point x2 = " + std::to_string(x2));
  }
  for (double x : tag_x) {
    if (!std::isfinite(x)) throw DomainError("tag positions must be finite");
  }
  if (!slots.empty()) {
    if (slots.size() != tag_x.size()) {
      throw DomainError("slot list has " + std::to_string(slots.size()) + " entries for " +
                        std::to_string(tag_x.size()) + " tags");
    }
    std::vector<int> sorted = slots;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != static_cast<int>(i) + 1) {
        throw DomainError("slots must be a permutation of 1..M");
      }
    }
  }
}

int Scenario::slot_of(std::size_t tag) const {
  if (tag >= tag_x.size()) throw DomainError("tag index out of range");
  if (!slots.empty()) return slots[tag];
  // Rank by position; ties broken by index so slots stay a permutation.
  int rank = 1;
  for (std::size_t j = 0; j < tag_x.size(); ++j) {
    if (tag_x[j] < tag_x[tag] || (tag_x[j] == tag_x[tag] && j < tag)) ++rank;
  }
  return rank;
}

double link_distance(Point p, Point q) {
  const double d = std::hypot(p.x - q.x, p.y - q.y);
  if (d == 0.0) throw DegenerateGeometry("link endpoints coincide");
  return d;
}

double elevation_angle_deg(double distance, double h) {
  if (!(h > 0.0) || !(h <= distance)) {
    throw DomainError("elevation angle requires 0 < h <= d (h = " + std::to_string(h) +
                      ", d = " + std::to_string(distance) + ")");
  }
  return 180.0 / std::numbers::pi * std::asin(h / distance);
}

std::vector<double> place_tags(std::size_t count, double range_m, Rng& rng) {
  if (count == 0) throw DomainError("tag count must be positive");
  if (!(range_m > 0.0)) throw DomainError("tag range must be positive");
  std::uniform_real_distribution<double> uniform(0.0, range_m);
  std::vector<double> xs(count);
  for (auto& x : xs) x = uniform(rng);
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace uavbs
