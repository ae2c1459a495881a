#pragma once
// Reference implementations used only by the tests. Each one is computed a
// different way from the library code it checks (dense sums, closed forms,
// brute-force enumeration, finite differences of analytic functions).

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "ncstar/field.hpp"
#include "ncstar/grid.hpp"
#include "ncstar/lattice.hpp"
#include "ncstar/star.hpp"
#include "ncstar/theta.hpp"

namespace oracle {

using ncstar::cplx;
using ncstar::GridSpec;
using ncstar::ScalarField;
using ncstar::ThetaMatrix;

inline std::vector<double> site_coords(const GridSpec& grid, std::size_t s) {
  std::vector<double> x(grid.d());
  for (int mu = 0; mu < grid.d(); ++mu) x[mu] = grid.coordinate(s, mu);
  return x;
}

/// Samples fn on the lattice.
inline ScalarField sample(const GridSpec& grid,
                          const std::function<cplx(const std::vector<double>&)>& fn,
                          bool real = false) {
  std::vector<cplx> v(grid.size());
  for (std::size_t s = 0; s < grid.size(); ++s) v[s] = fn(site_coords(grid, s));
  return ScalarField::from_values(grid, v, real, 0.0);
}

/// e^{i k.x} sampled in position space.
inline ScalarField plane_wave(const GridSpec& grid, const std::vector<int>& k) {
  return sample(grid, [&](const std::vector<double>& x) {
    double ph = 0.0;
    for (int mu = 0; mu < grid.d(); ++mu) ph += grid.wavenumber(mu, k[mu]) * x[mu];
    return std::polar(1.0, ph);
  });
}

/// exp(-(i/2) theta^{mu nu} kappa_mu q_nu) for integer wave vectors.
inline cplx moyal_phase(const GridSpec& grid, const ThetaMatrix& theta, const std::vector<int>& k,
                        const std::vector<int>& q) {
  double ph = 0.0;
  for (int mu = 0; mu < grid.d(); ++mu) {
    for (int nu = 0; nu < grid.d(); ++nu) {
      ph += theta(mu, nu) * grid.wavenumber(mu, k[mu]) * grid.wavenumber(nu, q[nu]);
    }
  }
  return std::polar(1.0, -0.5 * ph);
}

/// Dense O(N^2) twisted convolution over every pair of modes, without
/// support or band bookkeeping. Sums that leave the band are discarded.
inline ScalarField dense_star(const ScalarField& f, const ScalarField& g, const ThetaMatrix& theta) {
  const GridSpec& grid = f.grid();
  const int d = grid.d();
  std::vector<cplx> out(grid.size(), cplx{});
  const auto fm = f.modes();
  const auto gm = g.modes();
  std::vector<int> k(d), q(d), r(d);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (fm[i] == cplx{}) continue;
    for (int mu = 0; mu < d; ++mu) k[mu] = grid.wave(i, mu);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      if (gm[j] == cplx{}) continue;
      bool inside = true;
      for (int mu = 0; mu < d; ++mu) {
        q[mu] = grid.wave(j, mu);
        r[mu] = k[mu] + q[mu];
        if (std::abs(r[mu]) >= grid.n(mu) / 2) inside = false;
      }
      if (!inside) continue;
      out[grid.mode_index(r)] += fm[i] * gm[j] * moyal_phase(grid, theta, k, q);
    }
  }
  return ScalarField::from_modes(grid, out);
}

/// sum_k f~(k) g~(-k) times the box volume.
inline cplx parseval_pairing(const ScalarField& f, const ScalarField& g) {
  const GridSpec& grid = f.grid();
  cplx acc{};
  std::vector<int> k(grid.d());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (int mu = 0; mu < grid.d(); ++mu) k[mu] = -grid.wave(i, mu);
    acc += f.modes()[i] * g.modes()[grid.mode_index(k)];
  }
  return acc * grid.volume();
}

/// (1/n!) sum over all n! left-associated chains, by std::next_permutation.
inline ScalarField brute_symmetric(const std::vector<ScalarField>& ops, const ThetaMatrix& theta) {
  std::vector<int> p(ops.size());
  std::iota(p.begin(), p.end(), 0);
  ScalarField acc(ops.front().grid());
  double count = 0.0;
  do {
    ScalarField chain = ops[p[0]];
    for (std::size_t i = 1; i < p.size(); ++i) chain = dense_star(chain, ops[p[i]], theta);
    acc += chain;
    count += 1.0;
  } while (std::next_permutation(p.begin(), p.end()));
  return (1.0 / count) * acc;
}

// ---------------------------------------------------------------------------
// Geometry from analytic metric functions by nested finite differences.

using Point = std::vector<double>;
using Matrix = Eigen::MatrixXd;
using MetricFn = std::function<Matrix(const Point&)>;

/// 4th-order central difference of a vector-valued function along axis mu.
template <class Fn>
auto central(const Fn& fn, const Point& x, int mu, double h) {
  Point a = x, b = x, c = x, e = x;
  a[mu] += 2 * h;
  b[mu] += h;
  c[mu] -= h;
  e[mu] -= 2 * h;
  using T = decltype(fn(x));
  const T fa = fn(a), fb = fn(b), fc = fn(c), fe = fn(e);
  T out = (fe - fa + 8.0 * (fb - fc)) / (12.0 * h);
  return out;
}

/// Gamma^l_{mn} flattened as [(l*d + m)*d + n].
inline Eigen::VectorXd christoffel_fd(const MetricFn& g, const Point& x, double h) {
  const int d = static_cast<int>(x.size());
  const Matrix gi = g(x).inverse();
  std::vector<Matrix> dg(d);
  for (int s = 0; s < d; ++s) dg[s] = central(g, x, s, h);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(d * d * d);
  for (int l = 0; l < d; ++l)
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) {
        double acc = 0.0;
        for (int s = 0; s < d; ++s) acc += gi(l, s) * (dg[m](s, n) + dg[n](s, m) - dg[s](m, n));
        out[(l * d + m) * d + n] = 0.5 * acc;
      }
  return out;
}

/// R^m_{a al be} flattened as [((m*d + a)*d + al)*d + be].
inline Eigen::VectorXd riemann_fd(const MetricFn& g, const Point& x, double h) {
  const int d = static_cast<int>(x.size());
  auto gamma = [&](const Point& p) { return christoffel_fd(g, p, h); };
  const Eigen::VectorXd G = gamma(x);
  std::vector<Eigen::VectorXd> dG(d);
  for (int s = 0; s < d; ++s) dG[s] = central(gamma, x, s, h);
  auto at = [d](const Eigen::VectorXd& v, int l, int m, int n) { return v[(l * d + m) * d + n]; };
  Eigen::VectorXd out = Eigen::VectorXd::Zero(d * d * d * d);
  for (int m = 0; m < d; ++m)
    for (int a = 0; a < d; ++a)
      for (int al = 0; al < d; ++al)
        for (int be = 0; be < d; ++be) {
          double v = at(dG[al], m, be, a) - at(dG[be], m, al, a);
          for (int s = 0; s < d; ++s) v += at(G, m, al, s) * at(G, s, be, a) - at(G, m, be, s) * at(G, s, al, a);
          out[((m * d + a) * d + al) * d + be] = v;
        }
  return out;
}

/// Delta^m = -(1/(2 sqrt(-g))) theta^{ab} theta^{al be} d_b R^m_{a al be}.
inline Eigen::VectorXd delta_fd(const MetricFn& g, const ThetaMatrix& theta, const Point& x,
                                double h_outer, double h_inner) {
  const int d = static_cast<int>(x.size());
  auto riem = [&](const Point& p) { return riemann_fd(g, p, h_inner); };
  std::vector<Eigen::VectorXd> dR(d);
  for (int b = 0; b < d; ++b) dR[b] = central(riem, x, b, h_outer);
  const double sqrt_mg = std::sqrt(-g(x).determinant());
  Eigen::VectorXd out = Eigen::VectorXd::Zero(d);
  for (int m = 0; m < d; ++m) {
    double acc = 0.0;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int al = 0; al < d; ++al)
          for (int be = 0; be < d; ++be) {
            const double t = theta(a, b) * theta(al, be);
            if (t != 0.0) acc += t * dR[b][((m * d + a) * d + al) * d + be];
          }
    out[m] = -acc / (2.0 * sqrt_mg);
  }
  return out;
}

inline MetricFn conformal_metric(double eps, std::vector<int> k, const GridSpec& grid) {
  return [eps, k, grid](const Point& x) {
    const int d = static_cast<int>(x.size());
    double arg = 0.0;
    for (int mu = 0; mu < d; ++mu) arg += grid.wavenumber(mu, k[mu]) * x[mu];
    Matrix g = Matrix::Zero(d, d);
    for (int mu = 0; mu < d; ++mu) g(mu, mu) = (mu == 0 ? -1.0 : 1.0) * std::exp(2.0 * eps * std::cos(arg));
    return g;
  };
}

inline MetricFn diag_wave_metric(double eps, std::vector<int> k, int axis, const GridSpec& grid) {
  return [eps, k, axis, grid](const Point& x) {
    const int d = static_cast<int>(x.size());
    double arg = 0.0;
    for (int mu = 0; mu < d; ++mu) arg += grid.wavenumber(mu, k[mu]) * x[mu];
    Matrix g = Matrix::Identity(d, d);
    g(0, 0) = -1.0;
    g(axis, axis) *= 1.0 + eps * std::cos(arg);
    return g;
  };
}

}  // namespace oracle
