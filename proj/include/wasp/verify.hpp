#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wasp {

struct VerifyCheck {
  std::string suite;
  std::string name;
  std::string property;  // the identity or inequality being checked
  bool pass;
  std::string detail;
};

struct VerifyReport {
  std::uint64_t seed;
  std::vector<VerifyCheck> checks;

  bool pass() const;
  /// One line per check; byte-identical for identical seed and suite.
  std::string text() const;
};

/// "ot", "geodesic", "ray", "busemann", "coray", "all".
const std::vector<std::string>& verify_suites();

/// Throws InvalidArgument for an unknown suite name.
VerifyReport run_verify(const std::string& suite, std::uint64_t seed, unsigned threads = 1);

}  // namespace wasp
