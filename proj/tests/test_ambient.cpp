#include <cmath>
#include <vector>

#include "doctest.h"
#include "wasp/ambient.hpp"
#include "wasp/errors.hpp"
#include "wasp/random.hpp"

using namespace wasp;

TEST_CASE("interpolate endpoints and midpoint") {
  const Point x{1.5, -2.0, 3.0};
  const Point y{0.25, 4.0, -1.0};
  CHECK(interpolate(x, y, 0.0) == x);
  CHECK(interpolate(x, y, 1.0) == y);
  CHECK(interpolate(Point{0.0, 0.0}, Point{2.0, 2.0}, 0.5) == Point{1.0, 1.0});
  CHECK_THROWS_AS(interpolate(x, y, 1.5), InvalidArgument);
  CHECK_THROWS_AS(interpolate(x, y, -0.1), InvalidArgument);
  CHECK_THROWS_AS(interpolate(x, Point{1.0}, 0.5), DimensionMismatch);
}

TEST_CASE("interpolated points are at proportional distances") {
  Rng rng(1);
  for (int k = 0; k < 200; ++k) {
    const Point x = random_point(rng, 3, -5, 5);
    const Point y = random_point(rng, 3, -5, 5);
    const double s = static_cast<double>(rng() % 1000) / 999.0;
    const double t = static_cast<double>(rng() % 1000) / 999.0;
    CHECK(distance(interpolate(x, y, s), interpolate(x, y, t)) ==
          doctest::Approx(std::abs(s - t) * distance(x, y)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("ray_point") {
  const AmbientRay ray{Point{0.0, 0.0}, Point{1.0, 0.0}};
  CHECK(ray_point(ray, 0.0) == ray.origin);
  CHECK(ray_point(ray, 7.0) == Point{7.0, 0.0});
  CHECK_THROWS_AS(ray_point(ray, -1.0), InvalidArgument);
}

TEST_CASE("property: rays satisfy the speed identity") {
  Rng rng(2);
  for (int k = 0; k < 1000; ++k) {
    const AmbientRay ray{random_point(rng, 2, -10, 10), random_point(rng, 2, -3, 3)};
    const double s = 100.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double t = 100.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double expected = std::abs(t - s) * ray.speed();
    CHECK(std::abs(distance(ray_point(ray, s), ray_point(ray, t)) - expected) <= 1e-12 * (1.0 + 100.0 * ray.speed()));
  }
  const AmbientRay ray{random_point(rng, 3, -1, 1), random_point(rng, 3, -1, 1)};
  CHECK(distance(ray_point(ray, 2.0), ray_point(ray, 5.0)) == doctest::Approx(3.0 * ray.speed()));
}

TEST_CASE("polyline_length") {
  CHECK(polyline_length(std::vector{Point{0.0, 0.0}, Point{3.0, 4.0}}) == 5.0);
  CHECK(polyline_length(std::vector{Point{0.0}, Point{1.0}, Point{2.0}}) == 2.0);
  CHECK(polyline_length(std::vector{Point{0.0, 0.0}, Point{3.0, 0.0}, Point{3.0, 4.0}}) == 7.0);
  CHECK_THROWS_AS(polyline_length(std::vector{Point{0.0}}), InvalidArgument);
}

TEST_CASE("property: sampled segments have length equal to their chord") {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const Point x = random_point(rng, 4, -5, 5);
    const Point y = random_point(rng, 4, -5, 5);
    std::vector<Point> pts;
    for (int i = 0; i <= 10; ++i) pts.push_back(interpolate(x, y, i / 10.0));
    CHECK(std::abs(polyline_length(pts) - distance(x, y)) <= 1e-12 * std::max(1.0, distance(x, y)));
  }
}
