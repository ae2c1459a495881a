#include "convolve.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace ncstar::detail {

namespace {

struct Support {
  std::vector<cplx> value;
  std::vector<std::array<int, 4>> k;
};

Support support_of(const ScalarField& f) {
  const GridSpec& grid = f.grid();
  Support s;
  const auto m = f.modes();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == cplx{}) continue;
    std::array<int, 4> k{};
    for (int mu = 0; mu < grid.d(); ++mu) k[mu] = grid.wave(i, mu);
    s.value.push_back(m[i]);
    s.k.push_back(k);
  }
  return s;
}

}  // namespace

ScalarField twisted_convolution(const ScalarField& f, const ScalarField& g,
                                const double* theta) {
  require_same_grid(f, g, "product");
  const GridSpec& grid = f.grid();
  const int d = grid.d();
  std::vector<cplx> out(grid.size(), cplx{});
  const Support sf = support_of(f);
  const Support sg = support_of(g);

  std::array<int, 4> half{};
  for (int mu = 0; mu < d; ++mu) half[mu] = grid.n(mu) / 2;

  bool phased = false;
  if (theta != nullptr) {
    for (int i = 0; i < d * d; ++i) phased = phased || theta[i] != 0.0;
  }

  // phase(k, q) = prod_nu w_nu(k)^{q_nu} with w_nu(k) = exp(-(i/2) v_nu(k) 2pi/L_nu)
  // and v_nu(k) = sum_mu theta^{mu nu} kappa_mu; powers are tabulated per k.
  std::array<std::vector<cplx>, 4> table;
  std::array<bool, 4> active{};
  for (int nu = 0; nu < d; ++nu) table[nu].assign(grid.n(nu), cplx{1.0, 0.0});

  bool overflow = false;
  std::array<int, 4> r{};
  for (std::size_t a = 0; a < sf.value.size(); ++a) {
    const auto& ka = sf.k[a];
    if (phased) {
      for (int nu = 0; nu < d; ++nu) {
        double v = 0.0;
        for (int mu = 0; mu < d; ++mu) v += theta[mu * d + nu] * grid.wavenumber(mu, ka[mu]);
        active[nu] = v != 0.0;
        if (!active[nu]) continue;
        const double base = -0.5 * v * grid.wavenumber(nu, 1);
        for (int q = -half[nu]; q < half[nu]; ++q) {
          table[nu][q + half[nu]] = std::polar(1.0, base * q);
        }
      }
    }
    for (std::size_t b = 0; b < sg.value.size(); ++b) {
      const auto& kb = sg.k[b];
      bool inside = true;
      for (int mu = 0; mu < d; ++mu) {
        r[mu] = ka[mu] + kb[mu];
        inside = inside && r[mu] < half[mu] && r[mu] > -half[mu];
      }
      if (!inside) {
        overflow = true;
        continue;
      }
      cplx term = sf.value[a] * sg.value[b];
      if (phased) {
        for (int nu = 0; nu < d; ++nu) {
          if (active[nu]) term *= table[nu][kb[nu] + half[nu]];
        }
      }
      out[grid.mode_index(r.data())] += term;
    }
  }
  const bool real = !phased && f.is_real() && g.is_real();
  return ScalarField::from_modes(grid, std::move(out), real, overflow || f.truncated() ||
                                                                 g.truncated());
}

}  // namespace ncstar::detail
