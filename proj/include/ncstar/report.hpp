#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ncstar/scenario.hpp"

namespace ncstar {

/// One verification record. A record without a tolerance is informational
/// and always passes.
struct CheckRecord {
  std::string suite;
  std::string name;
  std::string anchor;
  double value = 0.0;
  std::optional<double> tol;
  bool pass = true;
};

CheckRecord check_below(std::string name, std::string anchor, double value, double tol);
CheckRecord info(std::string name, std::string anchor, double value);

struct SuiteTiming {
  std::string suite;
  double seconds = 0.0;
};

struct Report {
  std::string scenario_echo;
  std::string scenario_name;
  std::vector<CheckRecord> checks;
  std::vector<SuiteTiming> timings;

  bool passed() const;
  /// Records that failed, in order.
  std::vector<CheckRecord> failures() const;
};

/// {scenario, checks: [{suite, name, anchor, value, tol, pass}], status, timings, environment}.
/// Everything except `timings` depends only on the scenario.
std::string report_json(const Report& report);
void write_report(const std::filesystem::path& path, const Report& report);

}  // namespace ncstar
