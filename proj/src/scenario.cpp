#include "ncstar/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ncstar/error.hpp"

namespace ncstar {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

void only_keys(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object()) fail(path, "expected an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) fail(path + "/" + key, "unknown key");
  }
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

double positive(const json& j, const std::string& path) {
  const double v = number(j, path);
  if (!(v > 0.0)) fail(path, "must be > 0");
  return v;
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::vector<int> int_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer(j[i], path + "/" + std::to_string(i)));
  return out;
}

std::vector<double> number_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], path + "/" + std::to_string(i)));
  return out;
}

GridSpec parse_grid(const json& j) {
  only_keys(j, "/grid", {"d", "n", "len"});
  if (!j.contains("d")) fail("/grid/d", "required");
  const int d = integer(j["d"], "/grid/d");
  if (d < 2 || d > 4) fail("/grid/d", "must be 2, 3 or 4");
  std::vector<int> n(d, 32);
  if (j.contains("n")) {
    if (j["n"].is_array()) {
      n = int_list(j["n"], "/grid/n");
    } else {
      n.assign(d, integer(j["n"], "/grid/n"));
    }
  }
  std::vector<double> len;
  if (j.contains("len")) {
    if (j["len"].is_array()) {
      len = number_list(j["len"], "/grid/len");
    } else {
      len.assign(d, number(j["len"], "/grid/len"));
    }
  }
  try {
    return GridSpec(n, len);
  } catch (const std::invalid_argument& e) {
    fail("/grid", e.what());
  }
}

ThetaMatrix parse_theta(const json& j, int d, NcCase& nc_case) {
  only_keys(j, "/theta", {"case", "entries", "matrix"});
  if (!j.contains("case") || !j["case"].is_string()) fail("/theta/case", "required string");
  try {
    nc_case = nc_case_from_string(j["case"].get<std::string>());
  } catch (const ConfigError& e) {
    fail("/theta/case", e.what());
  }
  if (j.contains("entries") && j.contains("matrix")) {
    fail("/theta", "give either entries or matrix, not both");
  }
  ThetaMatrix theta(d);
  if (j.contains("matrix")) {
    const json& m = j["matrix"];
    if (!m.is_array() || static_cast<int>(m.size()) != d) fail("/theta/matrix", "expected d rows");
    std::vector<std::vector<double>> rows;
    for (int r = 0; r < d; ++r) {
      rows.push_back(number_list(m[r], "/theta/matrix/" + std::to_string(r)));
      if (static_cast<int>(rows.back().size()) != d) {
        fail("/theta/matrix/" + std::to_string(r), "expected d entries");
      }
    }
    try {
      theta = ThetaMatrix(rows);
    } catch (const std::invalid_argument& e) {
      fail("/theta/matrix", e.what());
    }
  } else if (j.contains("entries")) {
    const json& e = j["entries"];
    if (!e.is_array()) fail("/theta/entries", "expected an array");
    for (std::size_t i = 0; i < e.size(); ++i) {
      const std::string p = "/theta/entries/" + std::to_string(i);
      only_keys(e[i], p, {"mu", "nu", "value"});
      if (!e[i].contains("mu") || !e[i].contains("nu") || !e[i].contains("value")) {
        fail(p, "mu, nu and value are required");
      }
      const int mu = integer(e[i]["mu"], p + "/mu");
      const int nu = integer(e[i]["nu"], p + "/nu");
      if (mu < 0 || nu < 0 || mu >= d || nu >= d || mu == nu) fail(p, "invalid index pair");
      theta.set(mu, nu, number(e[i]["value"], p + "/value"));
    }
  }
  if (nc_case == NcCase::SpaceSpace && !theta.is_space_space()) {
    throw CaseMismatch("/theta: case mismatch: space_space requires theta^{0i} = 0");
  }
  return theta;
}

MetricPreset parse_metric(const json& j, int d, std::optional<std::vector<double>>& manual) {
  only_keys(j, "/metric", {"preset", "epsilon", "k", "axis", "manual_delta"});
  if (!j.contains("preset") || !j["preset"].is_string()) fail("/metric/preset", "required string");
  const std::string name = j["preset"].get<std::string>();
  MetricPreset p;
  if (name == "minkowski") {
    p = MetricPreset::minkowski();
  } else if (name == "conformal" || name == "diag_wave") {
    const double eps = j.contains("epsilon") ? number(j["epsilon"], "/metric/epsilon") : 0.01;
    std::vector<int> k(d, 0);
    k[std::min(1, d - 1)] = 1;
    if (j.contains("k")) k = int_list(j["k"], "/metric/k");
    if (static_cast<int>(k.size()) != d) fail("/metric/k", "expected d components");
    if (name == "conformal") {
      p = MetricPreset::conformal(eps, k);
    } else {
      const int axis = j.contains("axis") ? integer(j["axis"], "/metric/axis") : 1;
      if (axis < 0 || axis >= d) fail("/metric/axis", "out of range");
      p = MetricPreset::diag_wave(eps, k, axis);
    }
  } else {
    fail("/metric/preset", "unknown preset '" + name + "'");
  }
  if (j.contains("manual_delta")) {
    manual = number_list(j["manual_delta"], "/metric/manual_delta");
    if (static_cast<int>(manual->size()) != d) fail("/metric/manual_delta", "expected d components");
  }
  return p;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"identities", "ordering", "geometry",
                                                 "eom",        "stress",   "deformed"};
  return names;
}

Scenario parse_scenario(std::string_view text, std::string name) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("parse error: ") + e.what());
  }
  only_keys(j, "", {"grid", "theta", "metric", "coupling", "seed", "tolerances", "fields",
                    "suites", "output"});
  Scenario s;
  s.name = std::move(name);
  if (!j.contains("grid")) fail("/grid", "required");
  s.grid = parse_grid(j["grid"]);
  const int d = s.grid.d();
  s.theta = ThetaMatrix(d);
  if (j.contains("theta")) s.theta = parse_theta(j["theta"], d, s.nc_case);
  if (j.contains("metric")) s.metric = parse_metric(j["metric"], d, s.manual_delta);
  if (j.contains("coupling")) s.coupling = number(j["coupling"], "/coupling");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) fail("/seed", "expected a non-negative integer");
    s.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("tolerances")) {
    const json& t = j["tolerances"];
    only_keys(t, "/tolerances", {"trace", "associativity", "fd_relative", "delta_constancy"});
    if (t.contains("trace")) s.tolerances.trace = positive(t["trace"], "/tolerances/trace");
    if (t.contains("associativity")) {
      s.tolerances.associativity = positive(t["associativity"], "/tolerances/associativity");
    }
    if (t.contains("fd_relative")) {
      s.tolerances.fd_relative = positive(t["fd_relative"], "/tolerances/fd_relative");
    }
    if (t.contains("delta_constancy")) {
      s.tolerances.delta_constancy = positive(t["delta_constancy"], "/tolerances/delta_constancy");
    }
  }
  if (j.contains("fields")) {
    const json& f = j["fields"];
    only_keys(f, "/fields", {"cutoff", "amplitude", "configurations"});
    if (f.contains("cutoff")) s.fields.cutoff = integer(f["cutoff"], "/fields/cutoff");
    if (f.contains("amplitude")) s.fields.amplitude = positive(f["amplitude"], "/fields/amplitude");
    if (f.contains("configurations")) {
      s.fields.configurations = integer(f["configurations"], "/fields/configurations");
    }
    if (s.fields.cutoff < 1) fail("/fields/cutoff", "must be >= 1");
    if (s.fields.configurations < 1) fail("/fields/configurations", "must be >= 1");
  }
  if (j.contains("suites")) {
    const json& su = j["suites"];
    if (!su.is_array()) fail("/suites", "expected an array of suite names");
    for (std::size_t i = 0; i < su.size(); ++i) {
      const std::string p = "/suites/" + std::to_string(i);
      if (!su[i].is_string()) fail(p, "expected a string");
      const std::string n = su[i].get<std::string>();
      const auto& all = suite_names();
      if (std::find(all.begin(), all.end(), n) == all.end()) fail(p, "unknown suite '" + n + "'");
      s.suites.push_back(n);
    }
    if (s.suites.empty()) fail("/suites", "no suites selected");
  } else {
    s.suites = suite_names();
  }
  if (j.contains("output")) {
    if (!j["output"].is_string()) fail("/output", "expected a string");
    s.output = j["output"].get<std::string>();
  }
  s.echo = j.dump();
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.stem().string());
}

}  // namespace ncstar
