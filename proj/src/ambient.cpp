#include "wasp/ambient.hpp"

#include <cmath>
#include <vector>

#include "wasp/errors.hpp"

namespace wasp {

Point interpolate(const Point& x, const Point& y, double t) {
  require_same_dim(x, y);
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("interpolation parameter must lie in [0, 1]");
  std::vector<double> out(x.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (1.0 - t) * x[i] + t * y[i];
  return Point(std::move(out));
}

Point ray_point(const AmbientRay& ray, double t) {
  require_same_dim(ray.origin, ray.velocity);
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("ray time must be finite and >= 0");
  std::vector<double> out(ray.origin.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ray.origin[i] + t * ray.velocity[i];
  return Point(std::move(out));
}

double polyline_length(std::span<const Point> points) {
  if (points.size() < 2) throw InvalidArgument("polyline needs at least two points");
  double length = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) length += distance(points[i - 1], points[i]);
  return length;
}

}  // namespace wasp
