#include "ncstar/lattice.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "convolve.hpp"
#include "fft.hpp"

namespace ncstar {

ScalarField make_field(const GridSpec& grid, const ModeList& modes, bool real) {
  std::vector<cplx> m(grid.size(), cplx{});
  for (const auto& [k, amp] : modes) {
    if (static_cast<int>(k.size()) != grid.d()) {
      throw std::invalid_argument("make_field: wave vector has " + std::to_string(k.size()) +
                                  " components, grid has d = " + std::to_string(grid.d()));
    }
    for (int mu = 0; mu < grid.d(); ++mu) {
      const int half = grid.n(mu) / 2;
      if (k[mu] < -half || k[mu] >= half) {
        throw std::invalid_argument("make_field: wave number " + std::to_string(k[mu]) +
                                    " on axis " + std::to_string(mu) + " outside [" +
                                    std::to_string(-half) + ", " + std::to_string(half) + ")");
      }
    }
    m[grid.mode_index(k)] += amp;
  }
  return ScalarField::from_modes(grid, std::move(m), real);
}

ScalarField make_field(const GridSpec& grid,
                       const std::function<cplx(std::span<const double>)>& sampler, bool real) {
  std::vector<cplx> values(grid.size());
  std::vector<double> x(grid.d());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (int mu = 0; mu < grid.d(); ++mu) x[mu] = grid.coordinate(i, mu);
    values[i] = sampler(x);
  }
  return ScalarField::from_values(grid, values, real);
}

ScalarField random_band_limited(const GridSpec& grid, std::uint64_t seed,
                                const RandomFieldOptions& options) {
  std::mt19937_64 gen(seed);
  auto uniform = [&gen] {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  };
  std::vector<cplx> m(grid.size(), cplx{});
  std::size_t count = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    bool inside = true;
    for (int mu = 0; mu < grid.d(); ++mu) {
      const int cutoff = options.cutoff > 0 ? options.cutoff : grid.n(mu) / 4;
      inside = inside && std::abs(grid.wave(i, mu)) < cutoff;
    }
    if (!inside) continue;
    const double re = uniform();
    const double im = uniform();
    m[i] = cplx(re, im);
    ++count;
  }
  const double scale = options.amplitude / std::sqrt(static_cast<double>(count));
  for (cplx& c : m) c *= scale;
  return ScalarField::from_modes(grid, std::move(m), options.real);
}

ScalarField partial_derivative(const ScalarField& f, int axis) {
  const GridSpec& grid = f.grid();
  if (axis < 0 || axis >= grid.d()) {
    throw std::invalid_argument("partial_derivative: axis " + std::to_string(axis) +
                                " out of range for d = " + std::to_string(grid.d()));
  }
  const auto m = f.modes();
  std::vector<cplx> out(m.size());
  const int nyquist = -grid.n(axis) / 2;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const int k = grid.wave(i, axis);
    out[i] = k == nyquist ? cplx{} : m[i] * cplx(0.0, grid.wavenumber(axis, k));
  }
  return ScalarField::from_modes(grid, std::move(out), f.is_real(), f.truncated());
}

cplx integrate(const ScalarField& f) {
  cplx sum{};
  for (const cplx& v : f.values()) sum += v;
  return sum * f.grid().cell_volume();
}

ScalarField translate(const ScalarField& f, std::span<const double> delta) {
  const GridSpec& grid = f.grid();
  if (static_cast<int>(delta.size()) != grid.d()) {
    throw std::invalid_argument("translate: shift vector has wrong dimension");
  }
  bool identity = true;
  for (double s : delta) identity = identity && s == 0.0;
  if (identity) return f;
  const auto m = f.modes();
  std::vector<cplx> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == cplx{}) {
      out[i] = cplx{};
      continue;
    }
    double phase = 0.0;
    for (int mu = 0; mu < grid.d(); ++mu) phase += grid.wavenumber(mu, grid.wave(i, mu)) * delta[mu];
    out[i] = m[i] * std::polar(1.0, phase);
  }
  return ScalarField::from_modes(grid, std::move(out), f.is_real(), f.truncated());
}

ScalarField multiply(const ScalarField& f, const ScalarField& g) {
  return detail::twisted_convolution(f, g, nullptr);
}

}  // namespace ncstar
