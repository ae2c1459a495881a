#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncstar/geometry.hpp"
#include "ncstar/grid.hpp"
#include "ncstar/theta.hpp"

namespace ncstar {

struct Tolerances {
  double trace = 1e-10;
  double associativity = 1e-10;
  double fd_relative = 1e-6;
  /// Negative selects 1e-6 |theta|^2.
  double delta_constancy = -1.0;
};

/// Random potentials used by the eom, stress and deformed suites.
struct FieldSettings {
  int cutoff = 2;
  double amplitude = 0.3;
  int configurations = 3;
};

/// Run configuration. Parsed strictly: unknown keys, wrong types and
/// out-of-range values raise ConfigError with the offending JSON path.
///
/// {
///   "grid":   {"d": 2, "n": 32 | [32, 32], "len": [..]?},
///   "theta":  {"case": "space_space" | "time_space",
///              "entries": [{"mu": 0, "nu": 1, "value": 0.1}] | "matrix": [[..]]},
///   "metric": {"preset": "minkowski" | "conformal" | "diag_wave",
///              "epsilon": 0.01, "k": [0, 1], "axis": 1, "manual_delta": [0.01, 0]},
///   "coupling": 1.0, "seed": 7,
///   "tolerances": {"trace": .., "associativity": .., "fd_relative": .., "delta_constancy": ..},
///   "fields": {"cutoff": 2, "amplitude": 0.3, "configurations": 3},
///   "suites": ["identities", "ordering", "geometry", "eom", "stress", "deformed"],
///   "output": "out/dir"
/// }
struct Scenario {
  std::string name;
  GridSpec grid = GridSpec::cube(2, 32);
  ThetaMatrix theta = ThetaMatrix(2);
  NcCase nc_case = NcCase::SpaceSpace;
  MetricPreset metric;
  std::optional<std::vector<double>> manual_delta;
  double coupling = 1.0;
  std::uint64_t seed = 0;
  Tolerances tolerances;
  FieldSettings fields;
  std::vector<std::string> suites;
  std::filesystem::path output;
  /// Normalized JSON echo of the parsed configuration.
  std::string echo;
};

const std::vector<std::string>& suite_names();

Scenario parse_scenario(std::string_view json_text, std::string name = "scenario");
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace ncstar
