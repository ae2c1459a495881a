#pragma once

#include <vector>

#include "ncstar/gauge.hpp"
#include "ncstar/geometry.hpp"
#include "ncstar/star.hpp"
#include "ncstar/theta.hpp"

namespace ncstar {

// Space-space operations require theta^{0i} = 0 and throw CaseMismatch
// otherwise. Time-space operations accept any theta.

struct ActionValue {
  double value = 0.0;
  NcCase nc_case = NcCase::SpaceSpace;
  /// |Im| of the integral; round-off for real inputs.
  double imag_residue = 0.0;
};

/// Symmetric tensor T_{lambda kappa}, stored flat [lambda][kappa]. Every
/// component is computed independently, so symmetry is a property of the
/// inputs rather than of the storage.
struct StressTensor {
  int dim = 0;
  NcCase nc_case = NcCase::SpaceSpace;
  std::vector<ScalarField> T;

  int d() const { return dim; }
  const ScalarField& operator()(int lambda, int kappa) const { return T[lambda * dim + kappa]; }
};

/// -1/4 sum S(F_{ab}, g^{am}, g^{bn}, F_{mn}).
ScalarField lagrangian_space_space(const FieldStrength& F, const MetricBundle& bundle,
                                   const ThetaMatrix& theta);
/// -1/4 g^{ma} g^{nb} (F_{mn} * F_{ab}), metric factors multiplied pointwise.
ScalarField lagrangian_time_space(const FieldStrength& F, const MetricBundle& bundle,
                                  const ThetaMatrix& theta);

/// Space-space: integral of sqrt(-g) * L. Time-space: integral of sqrt(-g) L
/// with the density multiplied pointwise.
ActionValue action(const GaugeField& A, const MetricBundle& bundle, const ThetaMatrix& theta,
                   NcCase nc_case);

/// Action with every star product replaced by the deformed product: all
/// ingredients (potential, metric, inverse, sqrt(-g)) are read at x + Delta.
/// Throws ncstar::Error if Delta is not constant.
ActionValue action_deformed(const GaugeField& A, const MetricBundle& bundle,
                            const ThetaMatrix& theta, NcCase nc_case,
                            const DeltaShift& delta);

/// Metric with every component (and sqrt(-g)) translated by Delta.
MetricBundle translate_metric(const MetricBundle& bundle, std::span<const double> delta);

/// Symmetrized current F^{kappa mu}, stored flat [kappa][mu]:
/// sum_{ab} ({g^{kb}, g^{ma}}_* * F_{ab} * sqrt(-g) + sqrt(-g) * F_{ab} * {g^{kb}, g^{ma}}_*).
std::vector<ScalarField> script_F(const GaugeField& A, const MetricBundle& bundle,
                                  const ThetaMatrix& theta);

/// dS/dA_kappa of the space-space action:
///   -(d_mu G^{k mu} - i e [A_mu, G^{k mu}]_*),  G^{k mu} = sum_{ab} S(sqrt(-g), g^{ka}, g^{mb}, F_{ab}).
/// Flat, commutative limit: -d_mu F^{k mu}.
std::vector<ScalarField> eom_residual_sym(const GaugeField& A, const MetricBundle& bundle,
                                          const ThetaMatrix& theta);

/// dS/dA_kappa of the time-space action:
///   -1/2 (d_mu H^{k mu} - i e [A_mu, H^{k mu}]_*),  H^{k mu} = sum_{ab} {F_{ab}, sqrt(-g) g^{ka} g^{mb}}_*.
std::vector<ScalarField> eom_residual_time_space(const GaugeField& A, const MetricBundle& bundle,
                                                 const ThetaMatrix& theta);

/// Dispatches on the noncommutativity case.
std::vector<ScalarField> eom_residual(const GaugeField& A, const MetricBundle& bundle,
                                      const ThetaMatrix& theta, NcCase nc_case);

/// d_mu F^{k mu} - i e [A_mu, F^{k mu}]_* with the symmetrized current.
std::vector<ScalarField> eom_residual_scriptF(const GaugeField& A, const MetricBundle& bundle,
                                              const ThetaMatrix& theta);

/// Integral of sum_k residual_k * probe_k (real part).
double pair_with_probe(const std::vector<ScalarField>& residual, const GaugeField& probe,
                       const ThetaMatrix& theta);

/// Central-difference directional derivative with one Richardson step.
struct FdEstimate {
  double value = 0.0;   ///< (4 D(h/2) - D(h)) / 3
  double coarse = 0.0;  ///< D(h)
  double fine = 0.0;    ///< D(h/2)
  double step = 0.0;
  /// Estimated round-off level of the difference quotients.
  double noise_floor = 0.0;
  /// The Richardson correction is small relative to the estimate or the
  /// estimate is below the noise floor.
  bool consistent = true;
};

/// d/de S[A + e probe] at e = 0.
FdEstimate fd_action_gradient(const GaugeField& A, const GaugeField& probe,
                              const MetricBundle& bundle, const ThetaMatrix& theta,
                              NcCase nc_case, double step = 1e-3);

/// d/de S[g^{-1} + e dg] at e = 0, with the perturbed metric rebuilt from its
/// upper-index components. `dg_upper` is flat [mu][nu] and symmetric.
FdEstimate fd_metric_gradient(const GaugeField& A, const MetricBundle& bundle,
                              const std::vector<ScalarField>& dg_upper, const ThetaMatrix& theta,
                              NcCase nc_case, double step = 1e-3);

/// -1/2 integral sqrt(-g) T_{lk} dg^{lk}: the first-order action change the
/// stress tensor predicts under the inverse-metric variation dg^{lk}.
double stress_pairing(const StressTensor& T, const MetricBundle& bundle,
                      const std::vector<ScalarField>& dg_upper);

/// T_{lk} = S(g_{lk}, L) + g^{mn} S(F_{mk}, F_{nl}) with L the time-space
/// density and metric factors multiplied pointwise.
StressTensor stress_time_space(const GaugeField& A, const MetricBundle& bundle,
                               const ThetaMatrix& theta);

/// T_{lk} = S(g_{lk}, L) + sum_{nb} S(g^{nb}, F_{ln}, F_{kb}).
StressTensor stress_space_space(const GaugeField& A, const MetricBundle& bundle,
                                const ThetaMatrix& theta);

StressTensor stress_tensor(const GaugeField& A, const MetricBundle& bundle,
                           const ThetaMatrix& theta, NcCase nc_case);

/// First-order change of sqrt(-g): -1/2 sum S(sqrt(-g), g_{mn}, dg^{mn}).
ScalarField delta_sqrt_g_variation(const MetricBundle& bundle,
                                   const std::vector<ScalarField>& dg_upper,
                                   const ThetaMatrix& theta);

}  // namespace ncstar
