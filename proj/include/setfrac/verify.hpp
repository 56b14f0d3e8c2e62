#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setfrac/fixtures.hpp"

namespace setfrac {

/// One measured-versus-bound comparison. `pass` is measured <= bound +
/// tolerance, except for skipped checks (hypothesis not met; measured and
/// bound are empty) and informational ones (recorded, never failing), which
/// always pass.
struct CheckEntry {
  std::string theorem;   // "3.1" .. "3.8"
  std::string check;     // what was compared, e.g. "sup_bound"
  std::string fixture;
  double rho = 0.0;
  std::optional<double> measured;
  std::optional<double> bound;
  double tolerance = 0.0;
  std::string status;    // "pass", "fail", "skipped (...)" or "informational (...)"
  bool pass = true;
};

struct VerifyConfig {
  std::vector<double> rhos{0.5, 1.0, 1.5, 2.7};
  int segments = 256;
  int samples = 2000;
  int pairs = 100;
  std::uint64_t seed = 42;
  std::vector<NamedMap> fixtures;  // empty: default_fixtures(segments)
};

/// Runs every theorem check over fixtures x rhos. Deterministic in the config.
std::vector<CheckEntry> run_verification(const VerifyConfig& config);

bool all_pass(const std::vector<CheckEntry>& entries) noexcept;

/// Point where the modulus decay sequence starts: the midpoint of [a, b],
/// moved left so that u + 1/2 stays inside the domain.
double modulus_anchor(const GridMap& f);

}  // namespace setfrac
