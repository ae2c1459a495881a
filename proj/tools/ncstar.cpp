// Scenario runner: `ncstar run --scenario s.json` and `ncstar bench --scenario s.json`.
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ncstar/error.hpp"
#include "ncstar/report.hpp"
#include "ncstar/scenario.hpp"
#include "ncstar/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

int run(const std::string& path, const std::string& out_dir, const std::vector<std::string>& suites,
        const std::optional<std::uint64_t>& seed) {
  ncstar::Scenario s = ncstar::load_scenario(path);
  if (seed) s.seed = *seed;
  if (!out_dir.empty()) s.output = out_dir;
  for (const auto& name : suites) {
    const auto& all = ncstar::suite_names();
    if (std::find(all.begin(), all.end(), name) == all.end()) {
      throw ncstar::ConfigError("--suite: unknown suite '" + name + "'");
    }
  }
  const ncstar::Report report = ncstar::run_scenario(s, suites, s.output);
  if (!s.output.empty()) {
    ncstar::write_report(s.output / "report.json", report);
  } else {
    std::cout << ncstar::report_json(report);
  }
  for (const auto& c : report.checks) {
    std::fprintf(stderr, "%-4s %-10s %-32s %.3e%s\n", c.pass ? "ok" : "FAIL", c.suite.c_str(),
                 c.name.c_str(), c.value, c.tol ? "" : "  (info)");
  }
  if (!report.passed()) {
    for (const auto& c : report.failures()) {
      std::fprintf(stderr, "failed: %s/%s value %.6e tol %.6e [%s]\n", c.suite.c_str(),
                   c.name.c_str(), c.value, c.tol.value_or(0.0), c.anchor.c_str());
    }
    return kExitFail;
  }
  return kExitPass;
}

int bench(const std::string& path, const std::string& out_file) {
  const ncstar::Scenario s = ncstar::load_scenario(path);
  if (s.suites.empty()) throw ncstar::ConfigError("no suites selected");
  const std::string csv = ncstar::bench_csv(s, ncstar::bench(s));
  if (out_file.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_file);
    if (!out) throw ncstar::Error("cannot write " + out_file);
    out << csv;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative star-product workbench"};
  app.require_subcommand(1);

  std::string scenario, out_dir, bench_out;
  std::vector<std::string> suites;
  std::optional<std::uint64_t> seed;

  CLI::App* run_cmd = app.add_subcommand("run", "Run verification suites from a scenario file");
  run_cmd->add_option("--scenario", scenario, "Scenario JSON")->required();
  run_cmd->add_option("--out", out_dir, "Output directory (overrides the scenario)");
  run_cmd->add_option("--suite", suites, "Suite to run (repeatable)");
  run_cmd->add_option("--seed", seed, "Override the scenario seed");

  CLI::App* bench_cmd = app.add_subcommand("bench", "Time the main kernels on the scenario grid");
  bench_cmd->add_option("--scenario", scenario, "Scenario JSON")->required();
  bench_cmd->add_option("--out", bench_out, "CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run_cmd) return run(scenario, out_dir, suites, seed);
    return bench(scenario, bench_out);
  } catch (const ncstar::ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kExitConfig;
  } catch (const ncstar::CaseMismatch& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFail;
  }
}
