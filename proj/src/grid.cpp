#include "ncstar/grid.hpp"

#include <stdexcept>
#include <string>

namespace ncstar {

namespace {

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

GridSpec::GridSpec(std::vector<int> n, std::vector<double> len, Signature signature)
    : n_(std::move(n)), len_(std::move(len)), signature_(signature) {
  const int dim = static_cast<int>(n_.size());
  if (dim < 2 || dim > 4) {
    throw std::invalid_argument("grid dimension must be in [2, 4], got " + std::to_string(dim));
  }
  if (len_.empty()) len_.assign(dim, 2.0 * std::numbers::pi);
  if (static_cast<int>(len_.size()) != dim) {
    throw std::invalid_argument("grid: len has " + std::to_string(len_.size()) +
                                " entries for d = " + std::to_string(dim));
  }
  for (int mu = 0; mu < dim; ++mu) {
    if (n_[mu] < 8 || !is_power_of_two(n_[mu])) {
      throw std::invalid_argument("grid: n[" + std::to_string(mu) +
                                  "] must be a power of two >= 8, got " + std::to_string(n_[mu]));
    }
    if (!(len_[mu] > 0.0)) {
      throw std::invalid_argument("grid: len[" + std::to_string(mu) + "] must be positive");
    }
  }
  stride_.assign(dim, 1);
  for (int mu = dim - 2; mu >= 0; --mu) stride_[mu] = stride_[mu + 1] * n_[mu + 1];
  size_ = stride_[0] * n_[0];
}

GridSpec GridSpec::cube(int d, int n, double len) {
  return GridSpec(std::vector<int>(d, n), std::vector<double>(d, len));
}

double GridSpec::cell_volume() const {
  double v = 1.0;
  for (int mu = 0; mu < d(); ++mu) v *= spacing(mu);
  return v;
}

double GridSpec::volume() const {
  double v = 1.0;
  for (double l : len_) v *= l;
  return v;
}

bool GridSpec::representable(const int* k) const {
  for (int mu = 0; mu < d(); ++mu) {
    const int half = n_[mu] / 2;
    if (k[mu] >= half || k[mu] <= -half) return false;
  }
  return true;
}

std::size_t GridSpec::mode_index(const int* k) const {
  std::size_t idx = 0;
  for (int mu = 0; mu < d(); ++mu) {
    int i = k[mu] % n_[mu];
    if (i < 0) i += n_[mu];
    idx += static_cast<std::size_t>(i) * stride_[mu];
  }
  return idx;
}

}  // namespace ncstar
