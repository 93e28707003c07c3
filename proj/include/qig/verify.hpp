#pragma once

// Seeded verification suites. Each suite runs a fixed family of numerical
// checks and reports them as expected/actual/tolerance rows.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qig/linalg.hpp"

namespace qig {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 20030101;

/// Empty n_values / zero trials select the suite defaults.
struct SuiteConfig {
  std::string suite;
  std::vector<Index> n_values;
  int trials = 0;
  std::uint64_t seed = kDefaultSeed;
  /// Keyed by full check name or by its family (the part before the first '/').
  std::map<std::string, double> tolerances;
};

/// "eq": |actual - expected| <= tolerance·scale.
/// "ge": actual >= expected - tolerance.  "le": actual <= expected + tolerance.
struct Check {
  std::string name;
  std::string relation = "eq";
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  double scale = 1.0;  // "eq" only
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;  // with defaults filled in
  bool passed = false;
  std::vector<Check> checks;
  double wall_time = 0.0;  // seconds
};

/// Report JSON. wall_time is only included when `timing` is set, so that
/// reports for identical configs are byte-identical by default.
nlohmann::json to_json(const SuiteReport& r, bool timing = false);

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite or an invalid config
/// (trials < 0, n outside [2, 16]).
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace qig
