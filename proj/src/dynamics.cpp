#include "ncstar/dynamics.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ncstar/error.hpp"
#include "ncstar/lattice.hpp"
#include "ncstar/ordering.hpp"

namespace ncstar {

namespace {

void require_space_space(const ThetaMatrix& theta, const char* what) {
  if (!theta.is_space_space()) {
    throw CaseMismatch(std::string(what) +
                       ": theta has time-space entries; use the time_space case");
  }
}

void require_dims(const GaugeField& A, const MetricBundle& bundle, const ThetaMatrix& theta) {
  if (A.d() != bundle.d() || theta.d() != bundle.d()) {
    throw std::invalid_argument("dimension mismatch between potential, metric and theta");
  }
  if (A.grid() != bundle.grid) throw std::invalid_argument("potential and metric grids differ");
}

ScalarField sym(std::initializer_list<ScalarField> fields, const ThetaMatrix& theta) {
  std::vector<ScalarField> v(fields);
  return symmetric_star(std::span<const ScalarField>(v), theta);
}

// sum_mu (d_mu X^{k mu} - i e [A_mu, X^{k mu}]_*) for an antisymmetric X.
std::vector<ScalarField> covariant_divergence(const GaugeField& A,
                                              const std::vector<ScalarField>& X,
                                              const ThetaMatrix& theta) {
  const int d = A.d();
  const cplx ie(0.0, A.coupling);
  std::vector<ScalarField> out;
  for (int k = 0; k < d; ++k) {
    ScalarField acc(A.grid());
    for (int mu = 0; mu < d; ++mu) {
      const ScalarField& x = X[k * d + mu];
      if (x.is_zero()) continue;
      acc += partial_derivative(x, mu);
      if (A.coupling != 0.0 && !theta.is_zero()) {
        ScalarField term = ie * star_commutator(A[mu], x, theta);
        if (A[mu].is_real() && x.is_real()) term = real_part(term);
        acc -= term;
      }
    }
    out.push_back(std::move(acc));
  }
  return out;
}

double action_value(const GaugeField& A, const MetricBundle& bundle, const ThetaMatrix& theta,
                    NcCase nc_case) {
  return action(A, bundle, theta, nc_case).value;
}

template <class Eval>
FdEstimate richardson(Eval eval, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  const double sp = eval(h), sm = eval(-h);
  const double hp = eval(0.5 * h), hm = eval(-0.5 * h);
  FdEstimate e;
  e.step = h;
  e.coarse = (sp - sm) / (2.0 * h);
  e.fine = (hp - hm) / h;
  e.value = (4.0 * e.fine - e.coarse) / 3.0;
  const double scale = std::max({std::abs(sp), std::abs(sm), std::abs(hp), std::abs(hm)});
  e.noise_floor = 64.0 * DBL_EPSILON * scale / h;
  e.consistent = std::abs(e.coarse - e.fine) <= 1e-2 * std::abs(e.value) + 10.0 * e.noise_floor;
  return e;
}

}  // namespace

ScalarField lagrangian_space_space(const FieldStrength& F, const MetricBundle& bundle,
                                   const ThetaMatrix& theta) {
  require_space_space(theta, "space-space Lagrangian");
  const int d = bundle.d();
  ScalarField acc(bundle.grid);
  // The (a,b,m,n) and (b,a,n,m) terms coincide, so a < b is summed twice.
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      if (F(a, b).is_zero()) continue;
      for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
          if (m == n) continue;
          const ScalarField& g1 = bundle.ginv(a, m);
          const ScalarField& g2 = bundle.ginv(b, n);
          if (g1.is_zero() || g2.is_zero() || F(m, n).is_zero()) continue;
          acc += sym({F(a, b), g1, g2, F(m, n)}, theta);
        }
      }
    }
  }
  return -0.5 * acc;
}

ScalarField lagrangian_time_space(const FieldStrength& F, const MetricBundle& bundle,
                                  const ThetaMatrix& theta) {
  const int d = bundle.d();
  ScalarField acc(bundle.grid);
  for (int m = 0; m < d; ++m) {
    for (int n = m + 1; n < d; ++n) {
      if (F(m, n).is_zero()) continue;
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
          if (a == b) continue;
          const ScalarField& g1 = bundle.ginv(m, a);
          const ScalarField& g2 = bundle.ginv(n, b);
          if (g1.is_zero() || g2.is_zero() || F(a, b).is_zero()) continue;
          acc += multiply(multiply(g1, g2), star_spectral(F(m, n), F(a, b), theta));
        }
      }
    }
  }
  return -0.5 * acc;
}

ActionValue action(const GaugeField& A, const MetricBundle& bundle, const ThetaMatrix& theta,
                   NcCase nc_case) {
  require_dims(A, bundle, theta);
  const FieldStrength F = field_strength(A, theta);
  cplx s;
  if (nc_case == NcCase::SpaceSpace) {
    const ScalarField L = lagrangian_space_space(F, bundle, theta);
    s = integrate(star_spectral(bundle.sqrt_mg, L, theta));
  } else {
    const ScalarField L = lagrangian_time_space(F, bundle, theta);
    s = integrate(multiply(bundle.sqrt_mg, L));
  }
  return ActionValue{s.real(), nc_case, std::abs(s.imag())};
}

MetricBundle translate_metric(const MetricBundle& bundle, std::span<const double> delta) {
  MetricBundle out{bundle.grid, {}, {}, translate(bundle.sqrt_mg, delta), {}, {}};
  for (const auto& g : bundle.lower) out.lower.push_back(translate(g, delta));
  for (const auto& g : bundle.upper) out.upper.push_back(translate(g, delta));
  return out;
}

ActionValue action_deformed(const GaugeField& A, const MetricBundle& bundle,
                            const ThetaMatrix& theta, NcCase nc_case,
                            const DeltaShift& delta) {
  require_constant(delta);
  if (static_cast<int>(delta.constant.size()) != bundle.d()) {
    throw std::invalid_argument("deformed action: shift has wrong dimension");
  }
  GaugeField shifted{{}, A.coupling};
  for (const auto& a : A.A) shifted.A.push_back(translate(a, delta.constant));
  return action(shifted, translate_metric(bundle, delta.constant), theta, nc_case);
}

std::vector<ScalarField> script_F(const GaugeField& A, const MetricBundle& bundle,
                                  const ThetaMatrix& theta) {
  require_dims(A, bundle, theta);
  const int d = bundle.d();
  const FieldStrength F = field_strength(A, theta);
  const ScalarField& s = bundle.sqrt_mg;
  std::vector<ScalarField> out(d * d, ScalarField(bundle.grid));
  for (int k = 0; k < d; ++k) {
    for (int mu = 0; mu < d; ++mu) {
      if (k == mu) continue;
      ScalarField acc(bundle.grid);
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
          if (a == b || F(a, b).is_zero()) continue;
          const ScalarField& g1 = bundle.ginv(k, b);
          const ScalarField& g2 = bundle.ginv(mu, a);
          if (g1.is_zero() || g2.is_zero()) continue;
          const ScalarField x = star_anticommutator(g1, g2, theta);
          const ScalarField left[] = {x, F(a, b), s};
          const ScalarField right[] = {s, F(a, b), x};
          acc += star_chain(left, theta);
          acc += star_chain(right, theta);
        }
      }
      out[k * d + mu] = std::move(acc);
    }
  }
  return out;
}

std::vector<ScalarField> eom_residual_sym(const GaugeField& A, const MetricBundle& bundle,
                                          const ThetaMatrix& theta) {
  require_space_space(theta, "symmetric-ordering residual");
  require_dims(A, bundle, theta);
  const int d = bundle.d();
  const FieldStrength F = field_strength(A, theta);
  std::vector<ScalarField> G(d * d, ScalarField(bundle.grid));
  for (int k = 0; k < d; ++k) {
    for (int mu = k + 1; mu < d; ++mu) {
      ScalarField acc(bundle.grid);
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
          if (a == b || F(a, b).is_zero()) continue;
          const ScalarField& g1 = bundle.ginv(k, a);
          const ScalarField& g2 = bundle.ginv(mu, b);
          if (g1.is_zero() || g2.is_zero()) continue;
          acc += sym({bundle.sqrt_mg, g1, g2, F(a, b)}, theta);
        }
      }
      G[mu * d + k] = -acc;
      G[k * d + mu] = std::move(acc);
    }
  }
  auto out = covariant_divergence(A, G, theta);
  for (auto& r : out) r = -r;
  return out;
}

std::vector<ScalarField> eom_residual_time_space(const GaugeField& A, const MetricBundle& bundle,
                                                 const ThetaMatrix& theta) {
  require_dims(A, bundle, theta);
  const int d = bundle.d();
  const FieldStrength F = field_strength(A, theta);
  std::vector<ScalarField> H(d * d, ScalarField(bundle.grid));
  for (int k = 0; k < d; ++k) {
    for (int mu = k + 1; mu < d; ++mu) {
      ScalarField acc(bundle.grid);
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
          if (a == b || F(a, b).is_zero()) continue;
          const ScalarField& g1 = bundle.ginv(k, a);
          const ScalarField& g2 = bundle.ginv(mu, b);
          if (g1.is_zero() || g2.is_zero()) continue;
          const ScalarField w = multiply(bundle.sqrt_mg, multiply(g1, g2));
          acc += star_anticommutator(F(a, b), w, theta);
        }
      }
      H[mu * d + k] = -acc;
      H[k * d + mu] = std::move(acc);
    }
  }
  auto out = covariant_divergence(A, H, theta);
  for (auto& r : out) r *= -0.5;
  return out;
}

std::vector<ScalarField> eom_residual(const GaugeField& A, const MetricBundle& bundle,
                                      const ThetaMatrix& theta, NcCase nc_case) {
  return nc_case == NcCase::SpaceSpace ? eom_residual_sym(A, bundle, theta)
                                       : eom_residual_time_space(A, bundle, theta);
}

std::vector<ScalarField> eom_residual_scriptF(const GaugeField& A, const MetricBundle& bundle,
                                              const ThetaMatrix& theta) {
  return covariant_divergence(A, script_F(A, bundle, theta), theta);
}

double pair_with_probe(const std::vector<ScalarField>& residual, const GaugeField& probe,
                       const ThetaMatrix& theta) {
  if (residual.size() != probe.A.size()) {
    throw std::invalid_argument("pair_with_probe: component count mismatch");
  }
  cplx acc;
  for (std::size_t k = 0; k < residual.size(); ++k) {
    acc += integrate(star_spectral(residual[k], probe[k], theta));
  }
  return acc.real();
}

FdEstimate fd_action_gradient(const GaugeField& A, const GaugeField& probe,
                              const MetricBundle& bundle, const ThetaMatrix& theta,
                              NcCase nc_case, double step) {
  return richardson(
      [&](double e) { return action_value(A.axpy(e, probe), bundle, theta, nc_case); }, step);
}

FdEstimate fd_metric_gradient(const GaugeField& A, const MetricBundle& bundle,
                              const std::vector<ScalarField>& dg_upper, const ThetaMatrix& theta,
                              NcCase nc_case, double step) {
  if (dg_upper.size() != bundle.upper.size()) {
    throw std::invalid_argument("fd_metric_gradient: dg must have d*d components");
  }
  return richardson(
      [&](double e) {
        std::vector<ScalarField> upper;
        for (std::size_t i = 0; i < dg_upper.size(); ++i) {
          upper.push_back(bundle.upper[i] + e * dg_upper[i]);
        }
        return action_value(A, metric_from_upper(bundle.grid, std::move(upper)), theta,
                            nc_case);
      },
      step);
}

double stress_pairing(const StressTensor& T, const MetricBundle& bundle,
                      const std::vector<ScalarField>& dg_upper) {
  const int d = bundle.d();
  ScalarField acc(bundle.grid);
  for (int l = 0; l < d; ++l) {
    for (int k = 0; k < d; ++k) {
      const ScalarField& dg = dg_upper[l * d + k];
      if (dg.is_zero()) continue;
      acc += multiply(T(l, k), dg);
    }
  }
  return -0.5 * integrate(multiply(bundle.sqrt_mg, acc)).real();
}

StressTensor stress_time_space(const GaugeField& A, const MetricBundle& bundle,
                               const ThetaMatrix& theta) {
  require_dims(A, bundle, theta);
  const int d = bundle.d();
  const FieldStrength F = field_strength(A, theta);
  const ScalarField L = lagrangian_time_space(F, bundle, theta);
  StressTensor out{d, NcCase::TimeSpace, {}};
  for (int l = 0; l < d; ++l) {
    for (int k = 0; k < d; ++k) {
      ScalarField acc(bundle.grid);
      if (!bundle.g(l, k).is_zero()) acc += sym({bundle.g(l, k), L}, theta);
      for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
          const ScalarField& gi = bundle.ginv(m, n);
          if (gi.is_zero() || F(m, k).is_zero() || F(n, l).is_zero()) continue;
          acc += multiply(gi, sym({F(m, k), F(n, l)}, theta));
        }
      }
      out.T.push_back(std::move(acc));
    }
  }
  return out;
}

StressTensor stress_space_space(const GaugeField& A, const MetricBundle& bundle,
                                const ThetaMatrix& theta) {
  require_space_space(theta, "space-space stress tensor");
  require_dims(A, bundle, theta);
  const int d = bundle.d();
  const FieldStrength F = field_strength(A, theta);
  const ScalarField L = lagrangian_space_space(F, bundle, theta);
  StressTensor out{d, NcCase::SpaceSpace, {}};
  for (int l = 0; l < d; ++l) {
    for (int k = 0; k < d; ++k) {
      ScalarField acc(bundle.grid);
      if (!bundle.g(l, k).is_zero()) acc += sym({bundle.g(l, k), L}, theta);
      for (int n = 0; n < d; ++n) {
        for (int b = 0; b < d; ++b) {
          const ScalarField& gi = bundle.ginv(n, b);
          if (gi.is_zero() || F(l, n).is_zero() || F(k, b).is_zero()) continue;
          acc += sym({gi, F(l, n), F(k, b)}, theta);
        }
      }
      out.T.push_back(std::move(acc));
    }
  }
  return out;
}

StressTensor stress_tensor(const GaugeField& A, const MetricBundle& bundle,
                           const ThetaMatrix& theta, NcCase nc_case) {
  return nc_case == NcCase::SpaceSpace ? stress_space_space(A, bundle, theta)
                                       : stress_time_space(A, bundle, theta);
}

ScalarField delta_sqrt_g_variation(const MetricBundle& bundle,
                                   const std::vector<ScalarField>& dg_upper,
                                   const ThetaMatrix& theta) {
  const int d = bundle.d();
  if (static_cast<int>(dg_upper.size()) != d * d) {
    throw std::invalid_argument("delta_sqrt_g_variation: dg must have d*d components");
  }
  ScalarField acc(bundle.grid);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      const ScalarField& dg = dg_upper[m * d + n];
      if (dg.is_zero() || bundle.g(m, n).is_zero()) continue;
      acc += sym({bundle.sqrt_mg, bundle.g(m, n), dg}, theta);
    }
  }
  return -0.5 * acc;
}

}  // namespace ncstar
