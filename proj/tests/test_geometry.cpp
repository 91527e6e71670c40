#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "uavbs/error.hpp"
#include "uavbs/geometry.hpp"

using namespace uavbs;

TEST_CASE("link_distance") {
  CHECK(link_distance({0, 50}, {0, 0}) == 50.0);
  CHECK(link_distance({300, 50}, {0, 0}) == doctest::Approx(std::sqrt(92500.0)));
  CHECK(link_distance({300, 50}, {0, 0}) == doctest::Approx(304.138).epsilon(1e-6));
  CHECK(link_distance({300, 50}, {500, 0}) == doctest::Approx(std::sqrt(42500.0)));
  CHECK_THROWS_AS(link_distance({1, 2}, {1, 2}), DegenerateGeometry);
}

TEST_CASE("elevation_angle_deg") {
  CHECK(elevation_angle_deg(50.0, 50.0) == doctest::Approx(90.0));
  CHECK(elevation_angle_deg(100.0, 50.0) == doctest::Approx(30.0));
  // asin(50 / 304.138) in degrees
  CHECK(elevation_angle_deg(std::sqrt(92500.0), 50.0) == doctest::Approx(9.4623).epsilon(1e-5));
  CHECK_THROWS_AS(elevation_angle_deg(40.0, 50.0), DomainError);
  CHECK_THROWS_AS(elevation_angle_deg(40.0, 0.0), DomainError);
}

TEST_CASE("ground links are never shorter than the altitude; angle falls with offset") {
  const double h = 50.0;
  double prev_angle = 91.0;
  for (int i = 0; i <= 400; ++i) {
    const double offset = 0.75 * i;
    const double d = link_distance({offset, h}, {0.0, 0.0});
    CHECK(d >= h);
    if (offset == 0.0) CHECK(d == h);
    const double angle = elevation_angle_deg(d, h);
    CHECK(angle < prev_angle);
    prev_angle = angle;
  }
}

TEST_CASE("place_tags support, ordering and determinism") {
  Rng rng(3);
  const auto tags = place_tags(3, 20.0, rng);
  REQUIRE(tags.size() == 3);
  for (double x : tags) {
    CHECK(x >= 0.0);
    CHECK(x <= 20.0);
  }
  CHECK(std::is_sorted(tags.begin(), tags.end()));
  Rng again(3);
  CHECK(place_tags(3, 20.0, again) == tags);

  Rng tiny(1);
  CHECK(place_tags(1, 1e-12, tiny)[0] == doctest::Approx(0.0));

  CHECK_THROWS_AS(place_tags(0, 20.0, rng), DomainError);
  CHECK_THROWS_AS(place_tags(2, 0.0, rng), DomainError);
}

TEST_CASE("place_tags empirical mean") {
  Rng rng(11);
  double sum = 0.0;
  constexpr int n = 100'000;
  for (int i = 0; i < n; ++i) sum += place_tags(1, 20.0, rng)[0];
  CHECK(std::abs(sum / n - 10.0) < 0.1);
}

TEST_CASE("scenario slots default to ascending position order") {
  Scenario sc;
  sc.tag_x = {12.0, 3.0, 7.0};
  CHECK(sc.slot_of(0) == 3);
  CHECK(sc.slot_of(1) == 1);
  CHECK(sc.slot_of(2) == 2);

  sc.tag_x = {5.0, 5.0};
  CHECK(sc.slot_of(0) == 1);
  CHECK(sc.slot_of(1) == 2);

  sc.tag_x = {1.0, 2.0, 3.0};
  sc.slots = {3, 1, 2};
  sc.validate();
  CHECK(sc.slot_of(0) == 3);
  sc.slots = {1, 1, 2};
  CHECK_THROWS_AS(sc.validate(), DomainError);
  sc.slots = {1, 2};
  CHECK_THROWS_AS(sc.validate(), DomainError);
}

TEST_CASE("scenario validation") {
  Scenario sc;
  CHECK_THROWS_AS(sc.validate(), DomainError);
  sc.tag_x = {1.0};
  sc.validate();
  sc.x1 = sc.x2 + 1.0;
  CHECK_THROWS_AS(sc.validate(), DomainError);
  sc.x1 = sc.x2;
  sc.validate();
  sc.h = 0.0;
  CHECK_THROWS_AS(sc.validate(), DomainError);
}
