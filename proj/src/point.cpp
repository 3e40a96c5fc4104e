#include "wasp/point.hpp"

#include <cmath>
#include <string>

#include "wasp/errors.hpp"

namespace wasp {

namespace {

void validate(const std::vector<double>& coords) {
  if (coords.empty()) throw InvalidArgument("point must have dimension >= 1");
  for (double c : coords) {
    if (!std::isfinite(c)) throw InvalidArgument("point coordinates must be finite");
  }
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) { validate(coords_); }

Point::Point(std::initializer_list<double> coords) : coords_(coords) { validate(coords_); }

Point Point::zero(std::size_t dim) { return Point(std::vector<double>(dim, 0.0)); }

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}

Point operator+(const Point& a, const Point& b) {
  require_same_dim(a, b);
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return Point(std::move(out));
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(a, b);
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return Point(std::move(out));
}

Point operator*(double s, const Point& a) {
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * a[i];
  return Point(std::move(out));
}

double dot(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm(const Point& a) {
  double acc = 0.0;
  for (double c : a.coords()) acc += c * c;
  return std::sqrt(acc);
}

double distance(const Point& a, const Point& b) {
  require_same_dim(a, b);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double diff = a[i] - b[i];
    acc += diff * diff;
  }
  return std::sqrt(acc);
}

}  // namespace wasp
