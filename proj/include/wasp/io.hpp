#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "wasp/errors.hpp"
#include "wasp/measure.hpp"
#include "wasp/ot.hpp"
#include "wasp/path_measures.hpp"

namespace wasp::io {

/// Malformed or unreadable input file.
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Measure files:  {"dimension": d, "atoms": [[x, ...], ...], "weights": [w, ...]}
// Ray files:      {"dimension": d, "p": p,
//                  "rays": [{"origin": [...], "velocity": [...], "weight": w}, ...]}
// Doubles are written in shortest round-trip form, so write-then-read is
// value-identical.

DiscreteMeasure parse_measure(const std::string& text);
std::string dump_measure(const DiscreteMeasure& mu);
DiscreteMeasure read_measure(const std::filesystem::path& path);
void write_measure(const std::filesystem::path& path, const DiscreteMeasure& mu);

RayMeasure parse_ray(const std::string& text);
std::string dump_ray(const RayMeasure& ray);
RayMeasure read_ray(const std::filesystem::path& path);
void write_ray(const std::filesystem::path& path, const RayMeasure& ray);

/// {"p": p, "cost": W, "left": <measure>, "right": <measure>,
///  "entries": [[i, j, mass], ...]}
std::string dump_coupling(const Coupling& pi);

/// 12 significant digits; integral values keep a trailing ".0".
std::string format_number(double x);

}  // namespace wasp::io
