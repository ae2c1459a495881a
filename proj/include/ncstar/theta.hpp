#pragma once

#include <string>
#include <vector>

namespace ncstar {

/// The two noncommutativity regimes: theta^{0i} = 0 for every i
/// (space-space) or some theta^{0i} != 0 (time-space).
enum class NcCase { SpaceSpace, TimeSpace };

const char* to_string(NcCase c);
NcCase nc_case_from_string(const std::string& name);

/// Constant antisymmetric noncommutativity matrix theta^{mu nu}.
class ThetaMatrix {
 public:
  /// Zero matrix.
  explicit ThetaMatrix(int d);
  /// Full matrix; throws std::invalid_argument unless it is exactly
  /// antisymmetric with zero diagonal.
  explicit ThetaMatrix(const std::vector<std::vector<double>>& matrix);

  /// Matrix whose only independent entry is theta^{mu nu} = value.
  static ThetaMatrix single(int d, int mu, int nu, double value);

  int d() const { return d_; }
  double operator()(int mu, int nu) const { return entries_[mu * d_ + nu]; }
  /// Row-major d*d entries.
  const double* data() const { return entries_.data(); }

  ThetaMatrix& set(int mu, int nu, double value);

  bool is_zero() const;
  bool is_space_space() const;
  NcCase nc_case() const { return is_space_space() ? NcCase::SpaceSpace : NcCase::TimeSpace; }
  /// max |theta^{mu nu}|
  double scale() const;

  ThetaMatrix scaled(double s) const;
  ThetaMatrix operator-() const { return scaled(-1.0); }

 private:
  int d_;
  std::vector<double> entries_;
};

}  // namespace ncstar
