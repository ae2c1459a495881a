#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "ncstar/field.hpp"
#include "ncstar/grid.hpp"

namespace ncstar {

/// Sparse mode specification: (signed wave vector, amplitude) pairs.
using ModeList = std::vector<std::pair<std::vector<int>, cplx>>;

/// Field from a mode list. Repeated wave vectors accumulate. Throws
/// std::invalid_argument for wave vectors outside [-n/2, n/2).
ScalarField make_field(const GridSpec& grid, const ModeList& modes, bool real = false);

/// Field sampled from a closed-form function of the coordinates.
ScalarField make_field(const GridSpec& grid,
                       const std::function<cplx(std::span<const double>)>& sampler,
                       bool real = false);

struct RandomFieldOptions {
  /// Modes with |k_mu| < cutoff on every axis are populated. 0 selects n/4.
  int cutoff = 0;
  bool real = true;
  double amplitude = 1.0;
};

/// Deterministic band-limited random field. The same seed and options yield
/// bit-identical modes on every platform (the generator and the
/// integer-to-double mapping are fixed).
ScalarField random_band_limited(const GridSpec& grid, std::uint64_t seed,
                                const RandomFieldOptions& options = {});

/// Exact spectral derivative: mode k multiplied by i*k_mu. The Nyquist mode
/// is mapped to zero.
ScalarField partial_derivative(const ScalarField& f, int axis);

/// Volume-weighted sum of the position samples.
cplx integrate(const ScalarField& f);

/// f(x + delta), applied as the phase exp(i k.delta) on every mode.
ScalarField translate(const ScalarField& f, std::span<const double> delta);

/// Pointwise product computed as an exact mode convolution. Modes that fall
/// outside the representable band are dropped and flag the result truncated.
ScalarField multiply(const ScalarField& f, const ScalarField& g);

}  // namespace ncstar
