#include "ncstar/field.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

#include "fft.hpp"

namespace ncstar {

struct ScalarField::Data {
  std::vector<cplx> modes;
  bool real = false;
  bool truncated = false;
  mutable std::once_flag once;
  mutable std::vector<cplx> values;
};

namespace {

void symmetrize(const GridSpec& grid, std::vector<cplx>& modes) {
  std::vector<int> k(grid.d());
  for (std::size_t i = 0; i < modes.size(); ++i) {
    for (int mu = 0; mu < grid.d(); ++mu) k[mu] = -grid.wave(i, mu);
    const std::size_t j = grid.mode_index(k);
    if (j < i) continue;
    const cplx avg = 0.5 * (modes[i] + std::conj(modes[j]));
    modes[i] = avg;
    modes[j] = std::conj(avg);
  }
}

void drop_roundoff(std::vector<cplx>& modes, double rel) {
  if (rel <= 0.0) return;
  double peak = 0.0;
  for (const cplx& c : modes) peak = std::max(peak, std::abs(c));
  const double cut = rel * peak;
  for (cplx& c : modes) {
    if (std::abs(c) <= cut) c = 0.0;
  }
}

}  // namespace

std::shared_ptr<ScalarField::Data> ScalarField::make_data(std::vector<cplx> modes, bool real,
                                                          bool truncated) {
  auto d = std::make_shared<Data>();
  d->modes = std::move(modes);
  d->real = real;
  d->truncated = truncated;
  return d;
}

ScalarField::ScalarField(GridSpec grid)
    : grid_(std::move(grid)),
      data_(make_data(std::vector<cplx>(grid_.size(), cplx{}), true, false)) {}

ScalarField::ScalarField(GridSpec grid, std::shared_ptr<const Data> data)
    : grid_(std::move(grid)), data_(std::move(data)) {}

ScalarField ScalarField::from_modes(GridSpec grid, std::vector<cplx> modes, bool real,
                                    bool truncated) {
  if (modes.size() != grid.size()) {
    throw std::invalid_argument("field: mode count " + std::to_string(modes.size()) +
                                " does not match grid size " + std::to_string(grid.size()));
  }
  if (real) symmetrize(grid, modes);
  auto data = make_data(std::move(modes), real, truncated);
  return ScalarField(std::move(grid), std::move(data));
}

ScalarField ScalarField::from_values(GridSpec grid, std::span<const cplx> values, bool real,
                                     double drop_below) {
  if (values.size() != grid.size()) {
    throw std::invalid_argument("field: value count does not match grid size");
  }
  std::vector<cplx> modes(grid.size());
  if (real) {
    std::vector<cplx> re(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) re[i] = values[i].real();
    detail::forward_transform(grid, re, modes);
  } else {
    detail::forward_transform(grid, values, modes);
  }
  drop_roundoff(modes, drop_below);
  return from_modes(std::move(grid), std::move(modes), real);
}

ScalarField ScalarField::from_real_values(GridSpec grid, std::span<const double> values,
                                          double drop_below) {
  std::vector<cplx> v(values.begin(), values.end());
  return from_values(std::move(grid), v, true, drop_below);
}

ScalarField ScalarField::constant(GridSpec grid, cplx c) {
  std::vector<cplx> modes(grid.size(), cplx{});
  modes[0] = c;
  const bool real = c.imag() == 0.0;
  return from_modes(std::move(grid), std::move(modes), real);
}

std::span<const cplx> ScalarField::modes() const { return data_->modes; }
bool ScalarField::is_real() const { return data_->real; }
bool ScalarField::truncated() const { return data_->truncated; }

std::span<const cplx> ScalarField::values() const {
  std::call_once(data_->once, [this] {
    data_->values.resize(grid_.size());
    detail::inverse_transform(grid_, data_->modes, data_->values);
    if (data_->real) {
      for (cplx& v : data_->values) v = v.real();
    }
  });
  return data_->values;
}

cplx ScalarField::mode(const std::vector<int>& k) const {
  if (static_cast<int>(k.size()) != grid_.d()) {
    throw std::invalid_argument("field: wave vector has wrong dimension");
  }
  return data_->modes[grid_.mode_index(k)];
}

bool ScalarField::is_zero() const {
  return std::all_of(data_->modes.begin(), data_->modes.end(),
                     [](const cplx& c) { return c == cplx{}; });
}

int ScalarField::bandwidth() const {
  int band = -1;
  const auto& m = data_->modes;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == cplx{}) continue;
    for (int mu = 0; mu < grid_.d(); ++mu) band = std::max(band, std::abs(grid_.wave(i, mu)));
    band = std::max(band, 0);
  }
  return band;
}

ScalarField ScalarField::operator-() const {
  std::vector<cplx> m(data_->modes);
  for (cplx& c : m) c = -c;
  return ScalarField(grid_, make_data(std::move(m), data_->real, data_->truncated));
}

ScalarField& ScalarField::operator+=(const ScalarField& other) {
  require_same_grid(*this, other, "addition");
  std::vector<cplx> m(data_->modes);
  const auto& o = other.data_->modes;
  for (std::size_t i = 0; i < m.size(); ++i) m[i] += o[i];
  data_ = make_data(std::move(m), data_->real && other.data_->real,
                    data_->truncated || other.data_->truncated);
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& other) {
  require_same_grid(*this, other, "subtraction");
  std::vector<cplx> m(data_->modes);
  const auto& o = other.data_->modes;
  for (std::size_t i = 0; i < m.size(); ++i) m[i] -= o[i];
  data_ = make_data(std::move(m), data_->real && other.data_->real,
                    data_->truncated || other.data_->truncated);
  return *this;
}

ScalarField& ScalarField::operator*=(double s) {
  std::vector<cplx> m(data_->modes);
  for (cplx& c : m) c *= s;
  data_ = make_data(std::move(m), data_->real, data_->truncated);
  return *this;
}

ScalarField& ScalarField::operator*=(cplx s) {
  if (s.imag() == 0.0) return *this *= s.real();
  std::vector<cplx> m(data_->modes);
  for (cplx& c : m) c *= s;
  data_ = make_data(std::move(m), false, data_->truncated);
  return *this;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double s, ScalarField f) { return f *= s; }
ScalarField operator*(cplx s, ScalarField f) { return f *= s; }

ScalarField conj(const ScalarField& f) {
  const GridSpec& grid = f.grid();
  const auto m = f.modes();
  std::vector<cplx> out(m.size());
  std::vector<int> k(grid.d());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (int mu = 0; mu < grid.d(); ++mu) k[mu] = -grid.wave(i, mu);
    out[grid.mode_index(k)] = std::conj(m[i]);
  }
  return ScalarField::from_modes(grid, std::move(out), f.is_real(), f.truncated());
}

ScalarField real_part(const ScalarField& f) {
  std::vector<cplx> m(f.modes().begin(), f.modes().end());
  return ScalarField::from_modes(f.grid(), std::move(m), true, f.truncated());
}

double max_abs(const ScalarField& f) {
  double best = 0.0;
  for (const cplx& v : f.values()) best = std::max(best, std::abs(v));
  return best;
}

double max_abs_diff(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a, b, "comparison");
  const auto va = a.values();
  const auto vb = b.values();
  double best = 0.0;
  for (std::size_t i = 0; i < va.size(); ++i) best = std::max(best, std::abs(va[i] - vb[i]));
  return best;
}

double max_imag(const ScalarField& f) {
  double best = 0.0;
  for (const cplx& v : f.values()) best = std::max(best, std::abs(v.imag()));
  return best;
}

void require_same_grid(const ScalarField& a, const ScalarField& b, const char* what) {
  if (a.grid() != b.grid()) {
    throw std::invalid_argument(std::string("grid mismatch in ") + what);
  }
}

}  // namespace ncstar
