#pragma once

#include <string>
#include <vector>

#include "ncstar/field.hpp"
#include "ncstar/grid.hpp"
#include "ncstar/star.hpp"
#include "ncstar/theta.hpp"

namespace ncstar {

/// Periodic background metrics.
///  - minkowski:        g = eta = diag(-1, 1, ..., 1)
///  - conformal(e, k):  g = exp(2 phi) eta,  phi = e cos(k.x)
///  - diag_wave(e, k):  eta with g_{aa} scaled by (1 + e cos(k.x)), a = axis
/// k is an integer wave vector; the physical phase is sum_mu 2 pi k_mu x^mu / len_mu.
struct MetricPreset {
  enum class Kind { Minkowski, Conformal, DiagWave };
  Kind kind = Kind::Minkowski;
  double epsilon = 0.0;
  std::vector<int> k;
  int axis = 1;

  static MetricPreset minkowski() { return {}; }
  static MetricPreset conformal(double epsilon, std::vector<int> k);
  static MetricPreset diag_wave(double epsilon, std::vector<int> k, int axis = 1);
  std::string name() const;
};

/// Background metric with its derived geometry. Tensor components are stored
/// flat in row-major index order: lower/upper [mu][nu], gamma [lambda][mu][nu]
/// (Gamma^lambda_{mu nu}), riemann [mu][a][alpha][beta] (R^mu_{a alpha beta}).
struct MetricBundle {
  GridSpec grid;
  std::vector<ScalarField> lower;
  std::vector<ScalarField> upper;
  ScalarField sqrt_mg;
  std::vector<ScalarField> gamma;
  std::vector<ScalarField> riemann;

  int d() const { return grid.d(); }
  const ScalarField& g(int mu, int nu) const { return lower[mu * d() + nu]; }
  const ScalarField& ginv(int mu, int nu) const { return upper[mu * d() + nu]; }
  const ScalarField& christoffel(int lambda, int mu, int nu) const {
    return gamma[(lambda * d() + mu) * d() + nu];
  }
  const ScalarField& curvature(int mu, int a, int alpha, int beta) const {
    return riemann[((mu * d() + a) * d() + alpha) * d() + beta];
  }
  bool has_christoffel() const { return !gamma.empty(); }
  bool has_riemann() const { return !riemann.empty(); }
  /// Every metric component is a lattice constant.
  bool is_constant() const;
};

/// Bundle from lower-index components. Computes the inverse and sqrt(-g)
/// pointwise and checks the Lorentzian signature (exactly one negative
/// eigenvalue, hence det g < 0) at every site; throws ncstar::Error naming
/// the offending site otherwise. Christoffel and Riemann are left empty.
MetricBundle metric_from_lower(const GridSpec& grid, std::vector<ScalarField> lower);
/// Same, from upper-index components.
MetricBundle metric_from_upper(const GridSpec& grid, std::vector<ScalarField> upper);

/// Fully populated bundle (metric, inverse, sqrt(-g), Christoffel, Riemann).
MetricBundle build_metric(const MetricPreset& preset, const GridSpec& grid);

/// Gamma^l_{mn} = 1/2 g^{ls} (d_m g_{sn} + d_n g_{sm} - d_s g_{mn}), spectral derivatives.
MetricBundle christoffel(MetricBundle bundle);

/// R^m_{a al be} = d_al G^m_{be a} - d_be G^m_{al a} + G^m_{al s} G^s_{be a} - G^m_{be s} G^s_{al a}.
/// Requires christoffel(); antisymmetry in the last pair is exact.
MetricBundle riemann(MetricBundle bundle);

/// R = g^{ab} R^m_{a m b}
ScalarField ricci_scalar(const MetricBundle& bundle);

/// Default constancy tolerance 1e-6 |theta|^2.
double default_delta_tolerance(const ThetaMatrix& theta);

/// Delta^mu(x) = i^2 theta^{ab} theta^{al be} / (2 sqrt(-g)) d_b R^mu_{a al be}
/// with i^2 = -1. The constant part is the lattice mean. A negative tolerance
/// selects default_delta_tolerance(theta).
DeltaShift delta_shift(const MetricBundle& bundle, const ThetaMatrix& theta,
                       double tolerance = -1.0);

}  // namespace ncstar
