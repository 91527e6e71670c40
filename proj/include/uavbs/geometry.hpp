#pragma once

#include <cstddef>
#include <vector>

#include "uavbs/rng.hpp"

namespace uavbs {

struct Point {
  double x = 0.0;  // m
  double y = 0.0;  // m, altitude
};

// Mission geometry on the vertical plane. Tags sit on the ground at
// (tag_x[i], 0); the UAV hovers at (x1, h) while collecting and at (x2, h)
// while uploading to the base station at (x_b, 0).
struct Scenario {
  std::vector<double> tag_x;
  double x1 = 100.0;
  double x2 = 300.0;
  double x_b = 500.0;
  double h = 50.0;
  // TDMA slot (1-based) of each tag. Empty means ascending position order.
  std::vector<int> slots;

  std::size_t tag_count() const { return tag_x.size(); }

  // Throws DomainError on h <= 0, no tags, x1 > x2 or a malformed slot permutation.
  void validate() const;

  // Slot index m in 1..M of tag i.
  int slot_of(std::size_t tag) const;

  Point uav_collect() const { return {x1, h}; }
  Point uav_upload() const { return {x2, h}; }
  Point tag(std::size_t i) const { return {tag_x.at(i), 0.0}; }
  Point base_station() const { return {x_b, 0.0}; }
};

// Euclidean distance; throws DegenerateGeometry when the points coincide.
double link_distance(Point p, Point q);

// Elevation angle (180/pi) * asin(h / d) in degrees, in (0, 90].
// Throws DomainError unless 0 < h <= d.
double elevation_angle_deg(double distance, double h);

// `count` positions drawn uniformly from [0, range_m], sorted ascending.
std::vector<double> place_tags(std::size_t count, double range_m, Rng& rng);

}  // namespace uavbs
