#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "ncstar/field_io.hpp"
#include "ncstar/gauge.hpp"
#include "ncstar/lattice.hpp"
#include "ncstar/star.hpp"
#include "oracles.hpp"

using namespace ncstar;

namespace {

const GridSpec kGrid = GridSpec::cube(2, 32);
const ThetaMatrix kTheta = ThetaMatrix::single(2, 0, 1, 0.1);
const cplx I(0.0, 1.0);

double strength_gap(const FieldStrength& a, const FieldStrength& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.F.size(); ++i) m = std::max(m, max_abs_diff(a.F[i], b.F[i]));
  return m;
}

}  // namespace

TEST_CASE("abelian limits") {
  const GaugeField A = GaugeField::random(kGrid, 5, 4, 0.3, 0.0);
  const FieldStrength nc = field_strength(A, kTheta);
  const FieldStrength cl = field_strength(A, ThetaMatrix(2));
  CHECK(strength_gap(nc, cl) == 0.0);
  const GaugeField B = GaugeField::random(kGrid, 5, 4, 0.3, 1.0);
  CHECK(strength_gap(field_strength(B, ThetaMatrix(2)), cl) == 0.0);
  CHECK(nc(0, 1).is_real());
  CHECK(nc(0, 0).is_zero());
}

TEST_CASE("single-component potential") {
  const double a = 0.4;
  GaugeField A = GaugeField::zero(kGrid);
  A.A[1] = oracle::sample(kGrid, [&](const std::vector<double>& x) { return cplx(a * std::cos(x[0])); }, true);
  const ScalarField expected =
      oracle::sample(kGrid, [&](const std::vector<double>& x) { return cplx(-a * std::sin(x[0])); }, true);
  const FieldStrength F = field_strength(A, kTheta);
  CHECK(max_abs_diff(F(0, 1), expected) < 1e-13);
  CHECK(max_abs_diff(F(1, 0), -1.0 * expected) < 1e-13);
}

TEST_CASE("commutator term and antisymmetry") {
  const GaugeField A = GaugeField::random(kGrid, 11, 4, 0.3);
  const FieldStrength F = field_strength(A, kTheta);
  const FieldStrength F0 = field_strength(A, ThetaMatrix(2));
  const ScalarField expect = -I * A.coupling * star_commutator(A[0], A[1], kTheta);
  CHECK(max_abs_diff(F(0, 1) - F0(0, 1), expect) < 1e-13);
  CHECK(max_abs(expect) > 1e-4);
  CHECK(max_abs_diff(F(0, 1), -1.0 * F(1, 0)) == 0.0);
  CHECK(max_imag(F(0, 1)) < 1e-14);
}

TEST_CASE("bianchi identity in the abelian limit") {
  const GridSpec grid = GridSpec::cube(3, 16);
  const GaugeField A = GaugeField::random(grid, 21, 3, 0.3, 0.0);
  const FieldStrength F = field_strength(A, ThetaMatrix::single(3, 1, 2, 0.1));
  const ScalarField cyc = partial_derivative(F(1, 2), 0) + partial_derivative(F(2, 0), 1) +
                          partial_derivative(F(0, 1), 2);
  CHECK(max_abs(cyc) < 1e-12);
}

TEST_CASE("raising indices") {
  const GaugeField A = GaugeField::random(kGrid, 13, 4, 0.3);
  const FieldStrength F = field_strength(A, kTheta);
  const MetricBundle flat = build_metric(MetricPreset::minkowski(), kGrid);
  const FieldStrength up = raise_indices(F, flat, RaiseMode::Pointwise, kTheta);
  CHECK(max_abs_diff(up(0, 1), -1.0 * F(0, 1)) == 0.0);

  const double eps = 0.01;
  const MetricBundle conf = build_metric(MetricPreset::conformal(eps, {1, 1}), kGrid);
  const FieldStrength p = raise_indices(F, conf, RaiseMode::Pointwise, ThetaMatrix(2));
  const FieldStrength s = raise_indices(F, conf, RaiseMode::StarSymmetric, ThetaMatrix(2));
  CHECK(strength_gap(p, s) < 1e-13);
  const ScalarField e4 = oracle::sample(
      kGrid, [&](const std::vector<double>& x) { return cplx(-std::exp(-4 * eps * std::cos(x[0] + x[1]))); }, true);
  CHECK(max_abs_diff(p(0, 1), multiply(e4, F(0, 1))) < 1e-12);
  // With theta on, the two orderings differ.
  const FieldStrength sn = raise_indices(F, conf, RaiseMode::StarSymmetric, kTheta);
  CHECK(strength_gap(p, sn) > 1e-8);
  CHECK(max_imag(sn(0, 1)) < 1e-13);
}

TEST_CASE("infinitesimal gauge transformations") {
  const GaugeField A = GaugeField::random(kGrid, 31, 3, 0.3);
  const ScalarField c = ScalarField::constant(kGrid, 0.7);
  const GaugeField same = gauge_transform_infinitesimal(A, c, kTheta);
  for (int m = 0; m < 2; ++m) CHECK(max_abs_diff(same[m], A[m]) < 1e-15);

  RandomFieldOptions o;
  o.cutoff = 3;
  const ScalarField lambda = random_band_limited(kGrid, 77, o);
  RandomFieldOptions complex = o;
  complex.real = false;
  CHECK_THROWS_AS(gauge_transform_infinitesimal(A, random_band_limited(kGrid, 78, complex), kTheta),
                  std::invalid_argument);

  // e = 0: F is invariant under A -> A + d lambda.
  GaugeField A0 = A;
  A0.coupling = 0.0;
  CHECK(strength_gap(field_strength(gauge_transform_infinitesimal(A0, lambda, kTheta), kTheta),
                     field_strength(A0, kTheta)) < 1e-13);

  // Covariance at first order: F -> F - i e [F, s lambda]_* + O(s^2).
  const FieldStrength F = field_strength(A, kTheta);
  const ScalarField rot = -I * A.coupling * star_commutator(F(0, 1), lambda, kTheta);
  double prev = 0.0;
  for (double s : {1e-2, 5e-3}) {
    const FieldStrength Fs = field_strength(gauge_transform_infinitesimal(A, s * lambda, kTheta), kTheta);
    const double gap = max_abs_diff(Fs(0, 1), F(0, 1) + s * rot);
    if (prev > 0.0) CHECK(prev / gap == doctest::Approx(4.0).epsilon(0.05));
    prev = gap;
  }
  CHECK(max_abs(rot) > 1e-4);
}

TEST_CASE("loading components from dumps") {
  const auto dir = std::filesystem::temp_directory_path() / "ncstar_gauge_load";
  std::filesystem::create_directories(dir);
  const GaugeField A = GaugeField::random(kGrid, 3, 3, 0.3, 0.5);
  std::vector<std::filesystem::path> files;
  for (int m = 0; m < 2; ++m) {
    files.push_back(dir / ("A_" + std::to_string(m) + ".csv"));
    write_field_csv(files.back(), A[m]);
  }
  const GaugeField B = load_gauge_field(files, kGrid, 0.5);
  CHECK(B.coupling == 0.5);
  for (int m = 0; m < 2; ++m) {
    CHECK(max_abs_diff(A[m], B[m]) < 1e-14);
    CHECK(B[m].is_real());
  }
  CHECK_THROWS(load_gauge_field({files[0]}, kGrid));
  std::filesystem::remove_all(dir);
}
