#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ncstar/report.hpp"
#include "ncstar/scenario.hpp"

namespace ncstar {

/// Runs one named suite. CSV dumps go to `dump_dir` when it is non-empty.
/// Throws ConfigError for an unknown suite name.
std::vector<CheckRecord> run_suite(const std::string& suite, const Scenario& scenario,
                                   const std::filesystem::path& dump_dir = {});

/// Runs the given suites in order (the scenario's own list when empty).
Report run_scenario(const Scenario& scenario, const std::vector<std::string>& suites = {},
                    const std::filesystem::path& dump_dir = {});

struct BenchRow {
  std::string operation;
  double seconds_per_call = 0.0;
  int calls = 0;
};

/// Wall-clock per call of the main kernels on the scenario grid.
std::vector<BenchRow> bench(const Scenario& scenario);
std::string bench_csv(const Scenario& scenario, const std::vector<BenchRow>& rows);

}  // namespace ncstar
