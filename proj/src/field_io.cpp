#include "ncstar/field_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncstar/error.hpp"

namespace ncstar {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_header(std::ostream& out, int d) {
  for (int mu = 0; mu < d; ++mu) out << "axis" << mu << ',';
  out << "re,im\n";
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

void write_field_csv(std::ostream& out, const ScalarField& f) {
  const GridSpec& grid = f.grid();
  write_header(out, grid.d());
  const auto v = f.values();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (int mu = 0; mu < grid.d(); ++mu) out << fmt(grid.coordinate(i, mu)) << ',';
    out << fmt(v[i].real()) << ',' << fmt(v[i].imag()) << '\n';
  }
}

void write_field_csv(const std::filesystem::path& path, const ScalarField& f) {
  auto out = open_out(path);
  write_field_csv(out, f);
}

void write_modes_csv(std::ostream& out, const ScalarField& f) {
  const GridSpec& grid = f.grid();
  write_header(out, grid.d());
  const auto m = f.modes();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (int mu = 0; mu < grid.d(); ++mu) out << grid.wave(i, mu) << ',';
    out << fmt(m[i].real()) << ',' << fmt(m[i].imag()) << '\n';
  }
}

void write_modes_csv(const std::filesystem::path& path, const ScalarField& f) {
  auto out = open_out(path);
  write_modes_csv(out, f);
}

ScalarField read_field_csv(std::istream& in, const GridSpec& grid, bool real) {
  std::string line;
  if (!std::getline(in, line)) throw Error("field csv: empty input");
  std::ostringstream expected;
  write_header(expected, grid.d());
  std::string want = expected.str();
  want.pop_back();
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != want) throw Error("field csv: header '" + line + "' does not match '" + want + "'");

  std::vector<cplx> values;
  values.reserve(grid.size());
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    if (row >= grid.size()) throw Error("field csv: more rows than grid sites");
    std::vector<double> cols;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        cols.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw Error("field csv: row " + std::to_string(row + 2) + ": bad number '" + cell + "'");
      }
    }
    if (static_cast<int>(cols.size()) != grid.d() + 2) {
      throw Error("field csv: row " + std::to_string(row + 2) + " has " +
                  std::to_string(cols.size()) + " columns");
    }
    for (int mu = 0; mu < grid.d(); ++mu) {
      const double want_x = grid.coordinate(row, mu);
      if (std::abs(cols[mu] - want_x) > 1e-9 * std::max(1.0, grid.len(mu))) {
        throw Error("field csv: row " + std::to_string(row + 2) + " axis" + std::to_string(mu) +
                    " coordinate does not match the grid");
      }
    }
    values.emplace_back(cols[grid.d()], cols[grid.d() + 1]);
    ++row;
  }
  if (row != grid.size()) {
    throw Error("field csv: " + std::to_string(row) + " rows for " +
                std::to_string(grid.size()) + " sites");
  }
  return ScalarField::from_values(grid, values, real);
}

ScalarField read_field_csv(const std::filesystem::path& path, const GridSpec& grid, bool real) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_field_csv(in, grid, real);
}

}  // namespace ncstar
