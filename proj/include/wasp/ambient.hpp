#pragma once

#include <concepts>
#include <span>

#include "wasp/point.hpp"

namespace wasp {

/// A ray t -> origin + t * velocity in R^d; its speed is |velocity|.
struct AmbientRay {
  Point origin;
  Point velocity;

  double speed() const { return norm(velocity); }

  friend bool operator==(const AmbientRay&, const AmbientRay&) = default;
};

/// Constant-speed minimizing segment: (1 - t) x + t y, t in [0, 1].
Point interpolate(const Point& x, const Point& y, double t);

/// Position of the ray at time t >= 0.
Point ray_point(const AmbientRay& ray, double t);

/// Length of the polyline through `points` (at least two).
double polyline_length(std::span<const Point> points);

/// Operations the path-measure layer needs from an ambient length space.
template <typename Space>
concept AmbientSpace = requires(const Point& x, const Point& y, const AmbientRay& r, double t) {
  { Space::distance(x, y) } -> std::same_as<double>;
  { Space::interpolate(x, y, t) } -> std::same_as<Point>;
  { Space::ray_point(r, t) } -> std::same_as<Point>;
};

/// Euclidean R^d: complete, locally compact, non-branching. The only shipped
/// instance of AmbientSpace.
struct Euclidean {
  static double distance(const Point& x, const Point& y) { return wasp::distance(x, y); }
  static Point interpolate(const Point& x, const Point& y, double t) {
    return wasp::interpolate(x, y, t);
  }
  static Point ray_point(const AmbientRay& r, double t) { return wasp::ray_point(r, t); }
};

static_assert(AmbientSpace<Euclidean>);

}  // namespace wasp
