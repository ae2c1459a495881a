#include "ncstar/gauge.hpp"

#include <stdexcept>

#include "ncstar/field_io.hpp"
#include "ncstar/lattice.hpp"
#include "ncstar/ordering.hpp"
#include "ncstar/star.hpp"

namespace ncstar {

GaugeField GaugeField::zero(const GridSpec& grid, double coupling) {
  return GaugeField{std::vector<ScalarField>(grid.d(), ScalarField(grid)), coupling};
}

GaugeField GaugeField::random(const GridSpec& grid, std::uint64_t seed, int cutoff,
                              double amplitude, double coupling) {
  GaugeField a{{}, coupling};
  RandomFieldOptions opts;
  opts.cutoff = cutoff;
  opts.amplitude = amplitude;
  for (int mu = 0; mu < grid.d(); ++mu) a.A.push_back(random_band_limited(grid, seed + mu, opts));
  return a;
}

GaugeField GaugeField::axpy(double s, const GaugeField& probe) const {
  if (probe.d() != d()) throw std::invalid_argument("gauge axpy: dimension mismatch");
  GaugeField out{{}, coupling};
  for (int mu = 0; mu < d(); ++mu) out.A.push_back(A[mu] + s * probe.A[mu]);
  return out;
}

GaugeField load_gauge_field(const std::vector<std::filesystem::path>& component_files,
                            const GridSpec& grid, double coupling) {
  if (static_cast<int>(component_files.size()) != grid.d()) {
    throw std::invalid_argument("load_gauge_field: need one file per component");
  }
  GaugeField a{{}, coupling};
  for (const auto& p : component_files) a.A.push_back(read_field_csv(p, grid, true));
  return a;
}

FieldStrength field_strength(const GaugeField& A, const ThetaMatrix& theta) {
  const int d = A.d();
  const GridSpec& grid = A.grid();
  FieldStrength out{d, std::vector<ScalarField>(d * d, ScalarField(grid))};
  const cplx ie(0.0, A.coupling);
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = mu + 1; nu < d; ++nu) {
      ScalarField f = partial_derivative(A[nu], mu) - partial_derivative(A[mu], nu);
      if (A.coupling != 0.0 && !theta.is_zero()) {
        ScalarField term = ie * star_commutator(A[mu], A[nu], theta);
        // [A_mu, A_nu] of real fields is imaginary, so the term is real.
        if (A[mu].is_real() && A[nu].is_real()) term = real_part(term);
        f = f - term;
      }
      out.F[nu * d + mu] = -f;
      out.F[mu * d + nu] = std::move(f);
    }
  }
  return out;
}

FieldStrength raise_indices(const FieldStrength& F, const MetricBundle& bundle, RaiseMode mode,
                            const ThetaMatrix& theta) {
  const int d = F.d();
  const GridSpec& grid = bundle.grid;
  FieldStrength out{d, std::vector<ScalarField>(d * d, ScalarField(grid))};
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = 0; nu < d; ++nu) {
      if (mu == nu) continue;
      ScalarField acc(grid);
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
          if (a == b) continue;
          const ScalarField& g1 = bundle.ginv(mu, a);
          const ScalarField& g2 = bundle.ginv(nu, b);
          if (g1.is_zero() || g2.is_zero()) continue;
          if (mode == RaiseMode::Pointwise) {
            acc += multiply(multiply(g1, g2), F(a, b));
          } else {
            const ScalarField ops[] = {g1, g2, F(a, b)};
            acc += symmetric_star(std::span<const ScalarField>(ops), theta);
          }
        }
      }
      out.F[mu * d + nu] = std::move(acc);
    }
  }
  return out;
}

GaugeField gauge_transform_infinitesimal(const GaugeField& A, const ScalarField& lambda,
                                         const ThetaMatrix& theta) {
  if (!lambda.is_real()) {
    throw std::invalid_argument("gauge transform: lambda must be a real field");
  }
  const cplx ie(0.0, A.coupling);
  GaugeField out{{}, A.coupling};
  for (int mu = 0; mu < A.d(); ++mu) {
    ScalarField a = A[mu] + partial_derivative(lambda, mu);
    if (A.coupling != 0.0 && !theta.is_zero()) {
      ScalarField term = ie * star_commutator(A[mu], lambda, theta);
      if (A[mu].is_real()) term = real_part(term);
      a = a - term;
    }
    out.A.push_back(std::move(a));
  }
  return out;
}

}  // namespace ncstar
