#include "ncstar/report.hpp"

#include <cmath>
#include <fstream>

#include <fftw3.h>
#include <json.hpp>

#include "ncstar/error.hpp"

namespace ncstar {

using nlohmann::ordered_json;

CheckRecord check_below(std::string name, std::string anchor, double value, double tol) {
  // NaN never passes.
  const bool pass = value <= tol;
  return CheckRecord{"", std::move(name), std::move(anchor), value, tol, pass};
}

CheckRecord info(std::string name, std::string anchor, double value) {
  return CheckRecord{"", std::move(name), std::move(anchor), value, std::nullopt, true};
}

bool Report::passed() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::vector<CheckRecord> Report::failures() const {
  std::vector<CheckRecord> out;
  for (const auto& c : checks) {
    if (!c.pass) out.push_back(c);
  }
  return out;
}

namespace {

ordered_json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

std::string report_json(const Report& report) {
  ordered_json j;
  ordered_json echo = ordered_json::parse(report.scenario_echo.empty() ? "{}" : report.scenario_echo);
  j["scenario"] = {{"name", report.scenario_name}, {"config", echo}};
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json r;
    r["suite"] = c.suite;
    r["name"] = c.name;
    r["anchor"] = c.anchor;
    r["value"] = finite_or_null(c.value);
    r["tol"] = c.tol ? ordered_json(*c.tol) : ordered_json(nullptr);
    r["pass"] = c.pass;
    checks.push_back(std::move(r));
  }
  j["checks"] = std::move(checks);
  j["status"] = report.passed() ? "pass" : "fail";
  ordered_json timings = ordered_json::object();
  for (const auto& t : report.timings) timings[t.suite] = t.seconds;
  j["timings"] = std::move(timings);
  ordered_json env;
  env["library"] = "ncstar 0.1.0";
  env["compiler"] = __VERSION__;
  env["cxx_standard"] = static_cast<long>(__cplusplus);
  env["fftw"] = std::string(fftw_version);
  j["environment"] = std::move(env);
  return j.dump(2) + "\n";
}

void write_report(const std::filesystem::path& path, const Report& report) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error("cannot write report " + path.string());
  out << report_json(report);
}

}  // namespace ncstar
