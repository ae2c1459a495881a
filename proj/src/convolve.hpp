#pragma once

#include "ncstar/field.hpp"

namespace ncstar::detail {

/// (f * g)~(r) = sum_{k+q=r} f~(k) g~(q) exp(-(i/2) theta^{mu nu} k_mu q_nu)
/// over the nonzero supports of f and g. `theta` is a row-major d x d array
/// of physical entries or nullptr for the plain product.
ScalarField twisted_convolution(const ScalarField& f, const ScalarField& g,
                                const double* theta);

}  // namespace ncstar::detail
