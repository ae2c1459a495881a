#pragma once

#include <filesystem>
#include <vector>

#include "ncstar/field.hpp"
#include "ncstar/geometry.hpp"
#include "ncstar/theta.hpp"

namespace ncstar {

/// Noncommutative U(1) potential A_mu (lower index) with coupling e.
struct GaugeField {
  std::vector<ScalarField> A;
  double coupling = 1.0;

  int d() const { return static_cast<int>(A.size()); }
  const GridSpec& grid() const { return A.front().grid(); }
  const ScalarField& operator[](int mu) const { return A[mu]; }

  static GaugeField zero(const GridSpec& grid, double coupling = 1.0);
  /// Random real band-limited components seeded from `seed`, seed + 1, ...
  static GaugeField random(const GridSpec& grid, std::uint64_t seed, int cutoff,
                           double amplitude, double coupling = 1.0);
  /// A + s * probe, component-wise.
  GaugeField axpy(double s, const GaugeField& probe) const;
};

/// Antisymmetric F_{mu nu} stored flat [mu][nu].
struct FieldStrength {
  int dim = 0;
  std::vector<ScalarField> F;

  int d() const { return dim; }
  const ScalarField& operator()(int mu, int nu) const { return F[mu * dim + nu]; }
};

/// Loads one real component per file from the position CSV dump format.
GaugeField load_gauge_field(const std::vector<std::filesystem::path>& component_files,
                            const GridSpec& grid, double coupling = 1.0);

/// F_{mu nu} = d_mu A_nu - d_nu A_mu - i e [A_mu, A_nu]_*; computed for
/// mu < nu and mirrored, so antisymmetry is exact.
FieldStrength field_strength(const GaugeField& A, const ThetaMatrix& theta);

enum class RaiseMode { Pointwise, StarSymmetric };

/// F^{mu nu} from F_{ab} with g^{mu a} g^{nu b}; pointwise products or the
/// symmetric star ordering S(g^{mu a}, g^{nu b}, F_{ab}).
FieldStrength raise_indices(const FieldStrength& F, const MetricBundle& bundle, RaiseMode mode,
                            const ThetaMatrix& theta);

/// A_mu + d_mu lambda - i e [A_mu, lambda]_*. Throws std::invalid_argument
/// unless lambda is flagged real.
GaugeField gauge_transform_infinitesimal(const GaugeField& A, const ScalarField& lambda,
                                         const ThetaMatrix& theta);

}  // namespace ncstar
