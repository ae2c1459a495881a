#include "ncstar/theta.hpp"

#include <cmath>
#include <stdexcept>

#include "ncstar/error.hpp"

namespace ncstar {

const char* to_string(NcCase c) {
  return c == NcCase::SpaceSpace ? "space_space" : "time_space";
}

NcCase nc_case_from_string(const std::string& name) {
  if (name == "space_space") return NcCase::SpaceSpace;
  if (name == "time_space") return NcCase::TimeSpace;
  throw ConfigError("unknown noncommutativity case '" + name +
                    "' (expected space_space or time_space)");
}

ThetaMatrix::ThetaMatrix(int d) : d_(d), entries_(static_cast<std::size_t>(d * d), 0.0) {
  if (d < 2 || d > 4) throw std::invalid_argument("theta: dimension must be in [2, 4]");
}

ThetaMatrix::ThetaMatrix(const std::vector<std::vector<double>>& matrix)
    : ThetaMatrix(static_cast<int>(matrix.size())) {
  for (int mu = 0; mu < d_; ++mu) {
    if (static_cast<int>(matrix[mu].size()) != d_) {
      throw std::invalid_argument("theta: matrix is not square");
    }
    for (int nu = 0; nu < d_; ++nu) entries_[mu * d_ + nu] = matrix[mu][nu];
  }
  for (int mu = 0; mu < d_; ++mu) {
    for (int nu = 0; nu < d_; ++nu) {
      if ((*this)(mu, nu) != -(*this)(nu, mu)) {
        throw std::invalid_argument("theta: matrix is not antisymmetric at (" +
                                    std::to_string(mu) + "," + std::to_string(nu) + ")");
      }
    }
  }
}

ThetaMatrix ThetaMatrix::single(int d, int mu, int nu, double value) {
  ThetaMatrix t(d);
  t.set(mu, nu, value);
  return t;
}

ThetaMatrix& ThetaMatrix::set(int mu, int nu, double value) {
  if (mu < 0 || nu < 0 || mu >= d_ || nu >= d_ || mu == nu) {
    throw std::invalid_argument("theta: invalid index pair (" + std::to_string(mu) + "," +
                                std::to_string(nu) + ")");
  }
  entries_[mu * d_ + nu] = value;
  entries_[nu * d_ + mu] = -value;
  return *this;
}

bool ThetaMatrix::is_zero() const {
  for (double v : entries_) {
    if (v != 0.0) return false;
  }
  return true;
}

bool ThetaMatrix::is_space_space() const {
  for (int i = 1; i < d_; ++i) {
    if ((*this)(0, i) != 0.0) return false;
  }
  return true;
}

double ThetaMatrix::scale() const {
  double s = 0.0;
  for (double v : entries_) s = std::max(s, std::abs(v));
  return s;
}

ThetaMatrix ThetaMatrix::scaled(double s) const {
  ThetaMatrix t(*this);
  for (double& v : t.entries_) v *= s;
  // keep exact antisymmetry under -0.0
  for (int mu = 0; mu < d_; ++mu) t.entries_[mu * d_ + mu] = 0.0;
  return t;
}

}  // namespace ncstar
