#pragma once

#include <array>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncstar/field.hpp"
#include "ncstar/lattice.hpp"
#include "ncstar/theta.hpp"

namespace ncstar {

// Sign convention, used everywhere:
//   f * g = f exp(+(i/2) theta^{mu nu} <d_mu (x) d_nu>) g
// so that plane waves obey
//   e^{ik.x} * e^{iq.x} = exp(-(i/2) theta^{mu nu} k_mu q_nu) e^{i(k+q).x}.

/// Exact Moyal product of band-limited fields (twisted convolution). Output
/// modes outside the representable band are dropped and flag the result
/// truncated(). Throws std::invalid_argument on grid mismatch.
ScalarField star_spectral(const ScalarField& f, const ScalarField& g, const ThetaMatrix& theta);

/// Partial sum of the bidifferential exponential through `order` (any
/// order >= 0; 0 gives the pointwise product).
ScalarField star_truncated(const ScalarField& f, const ScalarField& g, const ThetaMatrix& theta,
                           int order);

ScalarField star_commutator(const ScalarField& f, const ScalarField& g, const ThetaMatrix& theta);
ScalarField star_anticommutator(const ScalarField& f, const ScalarField& g,
                                const ThetaMatrix& theta);

/// Left-associated chain f1 * f2 * ... * fn. Throws on an empty list.
ScalarField star_chain(std::span<const ScalarField> fields, const ThetaMatrix& theta);

/// Constant translation Delta^mu of the deformed product, optionally with the
/// full Delta^mu(x) field it was extracted from.
struct DeltaShift {
  std::vector<double> constant;
  /// Delta^mu(x) per axis; empty for a manually specified shift.
  std::vector<ScalarField> field;
  /// max_{mu,x} |Delta^mu(x) - constant^mu|
  double residual = 0.0;
  double tolerance = 0.0;
  bool is_constant = true;

  static DeltaShift manual(std::vector<double> delta);
  /// Constant part is the lattice mean (zero mode); `is_constant` when residual < tolerance.
  static DeltaShift from_field(std::vector<ScalarField> field, double tolerance);
  static DeltaShift zero(int d) { return manual(std::vector<double>(d, 0.0)); }
};

/// Deformed product: translate(f * g, Delta). Requires a constant shift;
/// otherwise throws ncstar::Error carrying the constancy residual.
ScalarField deformed_star(const ScalarField& f, const ScalarField& g, const ThetaMatrix& theta,
                          const DeltaShift& delta);

/// Deformed product of several factors, read in shifted coordinates: the
/// whole chain is evaluated at x + Delta, i.e. translate(star_chain, Delta).
ScalarField deformed_chain(std::span<const ScalarField> fields, const ThetaMatrix& theta,
                           const DeltaShift& delta);

void require_constant(const DeltaShift& delta);

/// Truncated Moyal series over any differential algebra.
///
/// `deriv(f, mu)` differentiates, `mul(f, g)` multiplies pointwise; Field
/// must support `+=` and multiplication by cplx. Derivatives are cached per
/// multi-index; bidifferential terms are grouped so a term of order n costs
/// one product per distinct (alpha, beta) pair.
template <class Field, class Deriv, class Mul>
Field moyal_series(const Field& f, const Field& g, const ThetaMatrix& theta, int order,
                   Deriv deriv, Mul mul) {
  if (order < 0) throw std::invalid_argument("moyal_series: order must be >= 0");
  using Index = std::array<int, 4>;
  const int d = theta.d();
  Field result = mul(f, g);

  std::map<Index, Field> df;
  std::map<Index, Field> dg;
  df.emplace(Index{}, f);
  dg.emplace(Index{}, g);
  auto lookup = [&deriv](std::map<Index, Field>& cache, Index alpha, int mu) -> const Field& {
    Index parent = alpha;
    alpha[mu] += 1;
    auto it = cache.find(alpha);
    if (it != cache.end()) return it->second;
    const Field& base = cache.at(parent);
    return cache.emplace(alpha, deriv(base, mu)).first->second;
  };

  std::map<std::pair<Index, Index>, cplx> level{{{Index{}, Index{}}, cplx{1.0, 0.0}}};
  cplx prefactor{1.0, 0.0};
  for (int n = 1; n <= order; ++n) {
    std::map<std::pair<Index, Index>, cplx> next;
    for (const auto& [key, coef] : level) {
      for (int mu = 0; mu < d; ++mu) {
        for (int nu = 0; nu < d; ++nu) {
          const double t = theta(mu, nu);
          if (t == 0.0) continue;
          lookup(df, key.first, mu);
          lookup(dg, key.second, nu);
          Index a = key.first;
          Index b = key.second;
          a[mu] += 1;
          b[nu] += 1;
          next[{a, b}] += coef * t;
        }
      }
    }
    level = std::move(next);
    prefactor *= cplx(0.0, 0.5) / static_cast<double>(n);
    for (const auto& [key, coef] : level) {
      if (coef == cplx{}) continue;
      Field term = mul(df.at(key.first), dg.at(key.second));
      term *= prefactor * coef;
      result += term;
    }
  }
  return result;
}

}  // namespace ncstar
