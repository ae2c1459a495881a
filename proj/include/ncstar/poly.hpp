#pragma once

#include <array>
#include <map>
#include <span>
#include <vector>

#include "ncstar/field.hpp"
#include "ncstar/grid.hpp"
#include "ncstar/theta.hpp"

namespace ncstar {

inline constexpr int kMaxPolyDegree = 16;

/// Multivariate polynomial in the coordinates x^0..x^{d-1} with complex
/// coefficients. Zero coefficients are never stored.
class PolyField {
 public:
  using Exponent = std::array<int, 4>;

  explicit PolyField(int d);
  static PolyField constant(int d, cplx c);
  static PolyField coordinate(int d, int axis);
  static PolyField monomial(int d, const Exponent& e, cplx c = 1.0);

  int d() const { return d_; }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, cplx>& terms() const { return terms_; }
  cplx coefficient(const Exponent& e) const;

  cplx evaluate(std::span<const double> x) const;
  /// Values at every lattice site, row-major.
  std::vector<cplx> sample(const GridSpec& grid) const;

  PolyField& add_term(const Exponent& e, cplx c);
  PolyField& operator+=(const PolyField& other);
  PolyField& operator-=(const PolyField& other);
  PolyField& operator*=(cplx s);

  bool operator==(const PolyField& other) const {
    return d_ == other.d_ && terms_ == other.terms_;
  }

 private:
  int d_;
  std::map<Exponent, cplx> terms_;
};

PolyField operator+(PolyField a, const PolyField& b);
PolyField operator-(PolyField a, const PolyField& b);
PolyField operator*(cplx s, PolyField p);

PolyField derivative(const PolyField& p, int axis);
/// Commutative product. Throws std::invalid_argument above `max_degree`.
PolyField multiply(const PolyField& p, const PolyField& q, int max_degree = kMaxPolyDegree);

/// Exact Moyal product. The series terminates; it is evaluated by applying
/// (i/2) theta^{mu nu} d/dx^mu d/dy^nu to p(x) q(y) until it vanishes and
/// then setting y = x. Throws std::invalid_argument when deg p + deg q
/// exceeds `max_degree`.
PolyField star_poly(const PolyField& p, const PolyField& q, const ThetaMatrix& theta,
                    int max_degree = kMaxPolyDegree);

/// Truncated bidifferential series over polynomials (shares the generic
/// series with the lattice backend).
PolyField star_truncated(const PolyField& p, const PolyField& q, const ThetaMatrix& theta,
                         int order);

/// max |a - b| over coefficients.
double max_coefficient_diff(const PolyField& a, const PolyField& b);

}  // namespace ncstar
