#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

namespace ncstar {

/// Metric signature tag. Only the Lorentzian (-,+,...,+) form with axis 0
/// timelike is supported.
enum class Signature { Lorentzian };

/// A periodic d-dimensional lattice, 2 <= d <= 4.
///
/// Sites and Fourier modes share the same row-major linear index, axis 0
/// slowest. Mode index i on an axis of n points carries the signed wave
/// number k = i for i < n/2 and k = i - n otherwise; the physical wave
/// number is 2*pi*k / len.
class GridSpec {
 public:
  GridSpec(std::vector<int> n, std::vector<double> len = {},
           Signature signature = Signature::Lorentzian);

  static GridSpec cube(int d, int n, double len = 2.0 * std::numbers::pi);

  int d() const { return static_cast<int>(n_.size()); }
  int n(int axis) const { return n_[axis]; }
  double len(int axis) const { return len_[axis]; }
  const std::vector<int>& shape() const { return n_; }
  const std::vector<double>& lengths() const { return len_; }
  Signature signature() const { return signature_; }

  std::size_t size() const { return size_; }
  std::size_t stride(int axis) const { return stride_[axis]; }

  double spacing(int axis) const { return len_[axis] / n_[axis]; }
  double cell_volume() const;
  double volume() const;

  /// Lattice index of `linear` along `axis`.
  int index(std::size_t linear, int axis) const {
    return static_cast<int>((linear / stride_[axis]) % n_[axis]);
  }
  /// Signed integer wave number of mode `linear` along `axis`.
  int wave(std::size_t linear, int axis) const {
    const int i = index(linear, axis);
    return i < n_[axis] / 2 ? i : i - n_[axis];
  }
  /// Physical wave number 2*pi*k/len for signed integer k.
  double wavenumber(int axis, int k) const {
    return 2.0 * std::numbers::pi * k / len_[axis];
  }
  double coordinate(std::size_t linear, int axis) const {
    return index(linear, axis) * spacing(axis);
  }

  /// True when |k| < n/2 on every axis (Nyquist excluded).
  bool representable(const int* k) const;
  /// Linear index of the mode with signed wave vector k (any integers,
  /// reduced modulo n).
  std::size_t mode_index(const int* k) const;
  std::size_t mode_index(const std::vector<int>& k) const { return mode_index(k.data()); }

  bool operator==(const GridSpec& other) const {
    return n_ == other.n_ && len_ == other.len_ && signature_ == other.signature_;
  }
  bool operator!=(const GridSpec& other) const { return !(*this == other); }

 private:
  std::vector<int> n_;
  std::vector<double> len_;
  Signature signature_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
};

}  // namespace ncstar
