#pragma once

#include <complex>
#include <span>

#include "ncstar/grid.hpp"

namespace ncstar::detail {

/// modes[k] = (1/N) sum_x values[x] exp(-i k.x)
void forward_transform(const GridSpec& grid, std::span<const std::complex<double>> values,
                       std::span<std::complex<double>> modes);

/// values[x] = sum_k modes[k] exp(+i k.x)
void inverse_transform(const GridSpec& grid, std::span<const std::complex<double>> modes,
                       std::span<std::complex<double>> values);

}  // namespace ncstar::detail
