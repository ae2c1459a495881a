#include "ncstar/star.hpp"

#include <cmath>
#include <string>

#include "convolve.hpp"
#include "ncstar/error.hpp"

namespace ncstar {

namespace {

void require_dimension(const ScalarField& f, const ThetaMatrix& theta) {
  if (f.grid().d() != theta.d()) {
    throw std::invalid_argument("theta dimension " + std::to_string(theta.d()) +
                                " does not match grid dimension " +
                                std::to_string(f.grid().d()));
  }
}

}  // namespace

ScalarField star_spectral(const ScalarField& f, const ScalarField& g, const ThetaMatrix& theta) {
  require_dimension(f, theta);
  return detail::twisted_convolution(f, g, theta.is_zero() ? nullptr : theta.data());
}

ScalarField star_truncated(const ScalarField& f, const ScalarField& g, const ThetaMatrix& theta,
                           int order) {
  require_dimension(f, theta);
  require_same_grid(f, g, "star_truncated");
  return moyal_series(
      f, g, theta, order, [](const ScalarField& h, int mu) { return partial_derivative(h, mu); },
      [](const ScalarField& a, const ScalarField& b) { return multiply(a, b); });
}

ScalarField star_commutator(const ScalarField& f, const ScalarField& g, const ThetaMatrix& theta) {
  return star_spectral(f, g, theta) - star_spectral(g, f, theta);
}

ScalarField star_anticommutator(const ScalarField& f, const ScalarField& g,
                                const ThetaMatrix& theta) {
  return star_spectral(f, g, theta) + star_spectral(g, f, theta);
}

ScalarField star_chain(std::span<const ScalarField> fields, const ThetaMatrix& theta) {
  if (fields.empty()) throw std::invalid_argument("star_chain: empty operand list");
  ScalarField acc = fields.front();
  for (std::size_t i = 1; i < fields.size(); ++i) acc = star_spectral(acc, fields[i], theta);
  return acc;
}

DeltaShift DeltaShift::manual(std::vector<double> delta) {
  DeltaShift s;
  s.constant = std::move(delta);
  s.is_constant = true;
  return s;
}

DeltaShift DeltaShift::from_field(std::vector<ScalarField> field, double tolerance) {
  DeltaShift s;
  s.tolerance = tolerance;
  s.constant.assign(field.size(), 0.0);
  for (std::size_t mu = 0; mu < field.size(); ++mu) {
    const auto v = field[mu].values();
    const double mean = field[mu].modes()[0].real();
    s.constant[mu] = mean;
    for (const cplx& x : v) s.residual = std::max(s.residual, std::abs(x - mean));
  }
  s.field = std::move(field);
  s.is_constant = s.residual < tolerance || s.residual == 0.0;
  return s;
}

void require_constant(const DeltaShift& delta) {
  if (!delta.is_constant) {
    throw Error("deformed product needs a constant shift; constancy residual " +
                std::to_string(delta.residual) + " exceeds tolerance " +
                std::to_string(delta.tolerance));
  }
}

ScalarField deformed_star(const ScalarField& f, const ScalarField& g, const ThetaMatrix& theta,
                          const DeltaShift& delta) {
  require_constant(delta);
  return translate(star_spectral(f, g, theta), delta.constant);
}

ScalarField deformed_chain(std::span<const ScalarField> fields, const ThetaMatrix& theta,
                           const DeltaShift& delta) {
  require_constant(delta);
  return translate(star_chain(fields, theta), delta.constant);
}

}  // namespace ncstar
