#include "wasp/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace wasp::io {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text << '\n';
}

Point point_from(const json& j, std::size_t dim, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<double> coords;
  for (const auto& c : j) {
    if (!c.is_number()) throw ParseError(std::string(what) + " coordinates must be numbers");
    coords.push_back(c.get<double>());
  }
  if (coords.size() != dim) throw ParseError(std::string(what) + " has the wrong dimension");
  return Point(std::move(coords));
}

json point_to(const Point& x) { return json(std::vector<double>(x.coords().begin(), x.coords().end())); }

std::size_t dimension_of(const json& doc) {
  if (!doc.is_object() || !doc.contains("dimension") || !doc["dimension"].is_number_unsigned()) {
    throw ParseError("missing or invalid \"dimension\"");
  }
  const auto d = doc["dimension"].get<std::size_t>();
  if (d == 0) throw ParseError("dimension must be >= 1");
  return d;
}

json measure_to(const DiscreteMeasure& mu) {
  json atoms = json::array();
  for (const Point& x : mu.atoms()) atoms.push_back(point_to(x));
  return {{"dimension", mu.dim()},
          {"atoms", atoms},
          {"weights", std::vector<double>(mu.weights().begin(), mu.weights().end())}};
}

// Rethrows library validation failures as parse errors with context.
template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

DiscreteMeasure parse_measure(const std::string& text) {
  return guarded("measure file", [&] {
    const json doc = parse_json(text);
    const std::size_t d = dimension_of(doc);
    if (!doc.contains("atoms") || !doc["atoms"].is_array()) throw ParseError("missing \"atoms\" array");
    if (!doc.contains("weights") || !doc["weights"].is_array()) throw ParseError("missing \"weights\" array");
    std::vector<Point> atoms;
    for (const auto& a : doc["atoms"]) atoms.push_back(point_from(a, d, "atom"));
    std::vector<double> weights;
    for (const auto& w : doc["weights"]) {
      if (!w.is_number()) throw ParseError("weights must be numbers");
      weights.push_back(w.get<double>());
    }
    return DiscreteMeasure(std::move(atoms), std::move(weights));
  });
}

std::string dump_measure(const DiscreteMeasure& mu) { return measure_to(mu).dump(); }

DiscreteMeasure read_measure(const std::filesystem::path& path) { return parse_measure(slurp(path)); }

void write_measure(const std::filesystem::path& path, const DiscreteMeasure& mu) {
  spill(path, dump_measure(mu));
}

RayMeasure parse_ray(const std::string& text) {
  return guarded("ray file", [&] {
    const json doc = parse_json(text);
    const std::size_t d = dimension_of(doc);
    if (!doc.contains("p") || !doc["p"].is_number()) throw ParseError("missing exponent \"p\"");
    if (!doc.contains("rays") || !doc["rays"].is_array()) throw ParseError("missing \"rays\" array");
    std::vector<AmbientRay> rays;
    std::vector<double> weights;
    for (const auto& r : doc["rays"]) {
      if (!r.is_object() || !r.contains("weight") || !r["weight"].is_number()) {
        throw ParseError("each ray needs origin, velocity and weight");
      }
      rays.push_back({point_from(r.value("origin", json()), d, "origin"),
                      point_from(r.value("velocity", json()), d, "velocity")});
      weights.push_back(r["weight"].get<double>());
    }
    return make_ray_measure(std::move(rays), std::move(weights), doc["p"].get<double>());
  });
}

std::string dump_ray(const RayMeasure& ray) {
  json rays = json::array();
  for (std::size_t i = 0; i < ray.rays.size(); ++i) {
    rays.push_back({{"origin", point_to(ray.rays[i].origin)},
                    {"velocity", point_to(ray.rays[i].velocity)},
                    {"weight", ray.weights[i]}});
  }
  return json{{"dimension", ray.rays.front().origin.dim()}, {"p", ray.p}, {"rays", rays}}.dump();
}

RayMeasure read_ray(const std::filesystem::path& path) { return parse_ray(slurp(path)); }

void write_ray(const std::filesystem::path& path, const RayMeasure& ray) { spill(path, dump_ray(ray)); }

std::string dump_coupling(const Coupling& pi) {
  json entries = json::array();
  for (const auto& e : pi.entries) entries.push_back(json::array({e.left, e.right, e.mass}));
  return json{{"p", pi.p},
              {"cost", pi.cost},
              {"left", measure_to(pi.left_marginal)},
              {"right", measure_to(pi.right_marginal)},
              {"entries", entries}}
      .dump();
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  std::string s(buf);
  if (std::isfinite(x) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

}  // namespace wasp::io
