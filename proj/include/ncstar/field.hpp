#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "ncstar/grid.hpp"

namespace ncstar {

using cplx = std::complex<double>;

/// Relative magnitude below which transformed modes are treated as round-off
/// and zeroed. Keeps supports of smooth sampled fields sparse.
inline constexpr double kRoundoffFloor = 1e-15;

/// Complex samples of a function on a periodic lattice.
///
/// Fourier modes are the primary storage; position values are produced by an
/// inverse transform on first access and cached. Fields are immutable and
/// cheap to copy (shared storage), so they can be read from several threads.
///
/// A field flagged real has exactly conjugate-symmetric modes and position
/// values with zero imaginary part.
class ScalarField {
 public:
  /// Zero field.
  explicit ScalarField(GridSpec grid);

  static ScalarField from_modes(GridSpec grid, std::vector<cplx> modes, bool real = false,
                                bool truncated = false);
  /// Forward-transforms `values`; modes below kRoundoffFloor * max|mode| are
  /// dropped unless `drop_below` is 0.
  static ScalarField from_values(GridSpec grid, std::span<const cplx> values, bool real = false,
                                 double drop_below = kRoundoffFloor);
  static ScalarField from_real_values(GridSpec grid, std::span<const double> values,
                                      double drop_below = kRoundoffFloor);
  static ScalarField constant(GridSpec grid, cplx c);

  const GridSpec& grid() const { return grid_; }
  std::span<const cplx> modes() const;
  std::span<const cplx> values() const;

  /// Mode with signed integer wave vector k.
  cplx mode(const std::vector<int>& k) const;
  cplx value(std::size_t site) const { return values()[site]; }

  bool is_real() const;
  /// Set when a product dropped modes outside the representable band.
  bool truncated() const;
  /// Every mode is exactly zero.
  bool is_zero() const;
  /// Largest |k_mu| over axes among nonzero modes (0 for constants, -1 for zero).
  int bandwidth() const;

  ScalarField operator-() const;
  ScalarField& operator+=(const ScalarField& other);
  ScalarField& operator-=(const ScalarField& other);
  ScalarField& operator*=(double s);
  ScalarField& operator*=(cplx s);

 private:
  struct Data;
  ScalarField(GridSpec grid, std::shared_ptr<const Data> data);
  static std::shared_ptr<Data> make_data(std::vector<cplx> modes, bool real, bool truncated);

  GridSpec grid_;
  std::shared_ptr<const Data> data_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double s, ScalarField f);
ScalarField operator*(cplx s, ScalarField f);

/// Complex conjugate: modes c(k) -> conj(c(-k)).
ScalarField conj(const ScalarField& f);
/// Real part projection (result flagged real).
ScalarField real_part(const ScalarField& f);

double max_abs(const ScalarField& f);
double max_abs_diff(const ScalarField& a, const ScalarField& b);
double max_imag(const ScalarField& f);

void require_same_grid(const ScalarField& a, const ScalarField& b, const char* what);

}  // namespace ncstar
