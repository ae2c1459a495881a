#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <json.hpp>

#include "ncstar/error.hpp"
#include "ncstar/report.hpp"
#include "ncstar/scenario.hpp"
#include "ncstar/suites.hpp"

using namespace ncstar;
using nlohmann::json;

namespace {

const std::filesystem::path kScenarios = NCSTAR_SCENARIO_DIR;

std::string config_error(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

const char* kMinimal = R"({
  "grid": {"d": 2, "n": 16},
  "theta": {"case": "time_space", "entries": [{"mu": 0, "nu": 1, "value": 0.1}]},
  "metric": {"preset": "minkowski", "manual_delta": [0.01, 0.0]},
  "seed": 3,
  "suites": ["identities", "deformed"]
})";

}  // namespace

TEST_CASE("every shipped scenario parses") {
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kScenarios)) {
    if (entry.path().extension() != ".json") continue;
    ++count;
    if (entry.path().stem() == "case_mismatch") {
      CHECK_THROWS_AS(load_scenario(entry.path()), CaseMismatch);
      continue;
    }
    const Scenario s = load_scenario(entry.path());
    CHECK(s.name == entry.path().stem().string());
    CHECK_FALSE(s.suites.empty());
  }
  CHECK(count >= 5);
}

TEST_CASE("scenario fields") {
  const Scenario s = parse_scenario(kMinimal, "mini");
  CHECK(s.name == "mini");
  CHECK(s.grid.d() == 2);
  CHECK(s.grid.size() == 256);
  CHECK(s.nc_case == NcCase::TimeSpace);
  CHECK(s.theta(0, 1) == 0.1);
  CHECK(s.theta(1, 0) == -0.1);
  REQUIRE(s.manual_delta);
  CHECK((*s.manual_delta)[0] == 0.01);
  CHECK(s.seed == 3);
  CHECK(s.coupling == 1.0);
  CHECK(s.tolerances.trace == 1e-10);
  CHECK(s.suites == std::vector<std::string>{"identities", "deformed"});

  json j = json::parse(kMinimal);
  j.erase("suites");
  CHECK(parse_scenario(j.dump()).suites == suite_names());
  j["theta"] = {{"case", "space_space"}, {"matrix", {{0.0, 0.0}, {0.0, 0.0}}}};
  CHECK(parse_scenario(j.dump()).nc_case == NcCase::SpaceSpace);
}

TEST_CASE("configuration errors carry the JSON path") {
  json j = json::parse(kMinimal);
  j["grid"]["n"] = 12;
  CHECK(config_error(j.dump()).find("grid") != std::string::npos);

  j = json::parse(kMinimal);
  j["bogus"] = 1;
  CHECK(config_error(j.dump()).find("bogus") != std::string::npos);

  j = json::parse(kMinimal);
  j["theta"]["entries"][0]["value"] = "big";
  CHECK(config_error(j.dump()).find("/theta/entries/0/value") != std::string::npos);

  j = json::parse(kMinimal);
  j["metric"]["preset"] = "schwarzschild";
  CHECK(config_error(j.dump()).find("/metric/preset") != std::string::npos);

  j = json::parse(kMinimal);
  j["suites"] = json::array();
  CHECK_FALSE(config_error(j.dump()).empty());

  j = json::parse(kMinimal);
  j["suites"] = {"identities", "nonsense"};
  CHECK(config_error(j.dump()).find("suites") != std::string::npos);

  CHECK_FALSE(config_error("{ not json").empty());

  j = json::parse(kMinimal);
  j["theta"]["case"] = "space_space";
  CHECK_THROWS_AS(parse_scenario(j.dump()), CaseMismatch);
  try {
    parse_scenario(j.dump());
  } catch (const CaseMismatch& e) {
    CHECK(std::string(e.what()).find("case mismatch") != std::string::npos);
  }

  CHECK_THROWS_AS(run_suite("nonsense", parse_scenario(kMinimal)), ConfigError);
}

TEST_CASE("reports are deterministic apart from timings") {
  const Scenario s = parse_scenario(kMinimal, "mini");
  auto strip = [](const Report& r) {
    json j = json::parse(report_json(r));
    j.erase("timings");
    return j.dump();
  };
  const Report a = run_scenario(s);
  const Report b = run_scenario(s);
  CHECK(strip(a) == strip(b));
  CHECK(a.passed());

  const json j = json::parse(report_json(a));
  CHECK(j["status"] == "pass");
  CHECK(j["scenario"]["name"] == "mini");
  CHECK(j["scenario"]["config"]["seed"] == 3);
  CHECK(j["timings"].size() == 2);
  CHECK(j["environment"].contains("compiler"));
  bool seen_deformed = false;
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("suite"));
    CHECK(c.contains("anchor"));
    CHECK(c.contains("pass"));
    if (c["name"] == "deformed_integral") {
      seen_deformed = true;
      CHECK(c["suite"] == "deformed");
      CHECK(c["tol"].is_number());
    }
  }
  CHECK(seen_deformed);
}

TEST_CASE("failing records set the status") {
  Report r;
  r.scenario_name = "x";
  r.scenario_echo = "{}";
  r.checks.push_back(check_below("a", "tag", 2.0, 1.0));
  r.checks.push_back(info("b", "tag", std::nan("")));
  CHECK_FALSE(r.passed());
  CHECK(r.failures().size() == 1);
  const json j = json::parse(report_json(r));
  CHECK(j["status"] == "fail");
  CHECK(j["checks"][1]["value"].is_null());
  CHECK(j["checks"][1]["tol"].is_null());
  CHECK(j["checks"][1]["pass"] == true);
}

TEST_CASE("dumps and bench output") {
  const auto dir = std::filesystem::temp_directory_path() / "ncstar_cli_dumps";
  std::filesystem::remove_all(dir);
  json j = json::parse(kMinimal);
  j["suites"] = {"eom"};
  const Scenario s = parse_scenario(j.dump());
  run_scenario(s, {}, dir);
  CHECK(std::filesystem::exists(dir / "A_0.csv"));
  CHECK(std::filesystem::exists(dir / "residual_1.csv"));
  std::filesystem::remove_all(dir);

  const std::string csv = bench_csv(s, bench(s));
  CHECK(csv.rfind("operation,", 0) == 0);
  CHECK(csv.find("star_spectral") != std::string::npos);
}
