#include "ncstar/poly.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ncstar/star.hpp"

namespace ncstar {

PolyField::PolyField(int d) : d_(d) {
  if (d < 2 || d > 4) throw std::invalid_argument("poly: dimension must be in [2, 4]");
}

PolyField PolyField::constant(int d, cplx c) { return monomial(d, Exponent{}, c); }

PolyField PolyField::coordinate(int d, int axis) {
  if (axis < 0 || axis >= d) throw std::invalid_argument("poly: coordinate axis out of range");
  Exponent e{};
  e[axis] = 1;
  return monomial(d, e);
}

PolyField PolyField::monomial(int d, const Exponent& e, cplx c) {
  PolyField p(d);
  p.add_term(e, c);
  return p;
}

int PolyField::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    deg = std::max(deg, s);
  }
  return deg;
}

cplx PolyField::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? cplx{} : it->second;
}

cplx PolyField::evaluate(std::span<const double> x) const {
  cplx sum{};
  for (const auto& [e, c] : terms_) {
    double mono = 1.0;
    for (int mu = 0; mu < d_; ++mu) mono *= std::pow(x[mu], e[mu]);
    sum += c * mono;
  }
  return sum;
}

std::vector<cplx> PolyField::sample(const GridSpec& grid) const {
  if (grid.d() != d_) throw std::invalid_argument("poly: grid dimension mismatch");
  std::vector<cplx> out(grid.size());
  std::vector<double> x(d_);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (int mu = 0; mu < d_; ++mu) x[mu] = grid.coordinate(i, mu);
    out[i] = evaluate(x);
  }
  return out;
}

PolyField& PolyField::add_term(const Exponent& e, cplx c) {
  for (int mu = d_; mu < 4; ++mu) {
    if (e[mu] != 0) throw std::invalid_argument("poly: exponent beyond dimension");
  }
  if (c == cplx{}) return *this;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cplx{}) terms_.erase(it);
  }
  return *this;
}

PolyField& PolyField::operator+=(const PolyField& other) {
  if (other.d_ != d_) throw std::invalid_argument("poly: dimension mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

PolyField& PolyField::operator-=(const PolyField& other) {
  if (other.d_ != d_) throw std::invalid_argument("poly: dimension mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

PolyField& PolyField::operator*=(cplx s) {
  if (s == cplx{}) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    if (it->second == cplx{}) it = terms_.erase(it);
    else ++it;
  }
  return *this;
}

PolyField operator+(PolyField a, const PolyField& b) { return a += b; }
PolyField operator-(PolyField a, const PolyField& b) { return a -= b; }
PolyField operator*(cplx s, PolyField p) { return p *= s; }

PolyField derivative(const PolyField& p, int axis) {
  PolyField out(p.d());
  for (const auto& [e, c] : p.terms()) {
    if (e[axis] == 0) continue;
    PolyField::Exponent f = e;
    f[axis] -= 1;
    out.add_term(f, c * static_cast<double>(e[axis]));
  }
  return out;
}

PolyField multiply(const PolyField& p, const PolyField& q, int max_degree) {
  if (p.d() != q.d()) throw std::invalid_argument("poly: dimension mismatch");
  if (p.degree() + q.degree() > max_degree) {
    throw std::invalid_argument("poly: product degree " + std::to_string(p.degree() + q.degree()) +
                                " exceeds bound " + std::to_string(max_degree));
  }
  PolyField out(p.d());
  for (const auto& [ea, ca] : p.terms()) {
    for (const auto& [eb, cb] : q.terms()) {
      PolyField::Exponent e{};
      for (int mu = 0; mu < 4; ++mu) e[mu] = ea[mu] + eb[mu];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

PolyField star_poly(const PolyField& p, const PolyField& q, const ThetaMatrix& theta,
                    int max_degree) {
  if (p.d() != q.d() || p.d() != theta.d()) {
    throw std::invalid_argument("star_poly: dimension mismatch");
  }
  if (p.degree() + q.degree() > max_degree) {
    throw std::invalid_argument("star_poly: degree " + std::to_string(p.degree() + q.degree()) +
                                " exceeds bound " + std::to_string(max_degree));
  }
  const int d = p.d();
  using Exponent = PolyField::Exponent;
  using BiKey = std::pair<Exponent, Exponent>;

  // current = D^n (p(x) q(y)) / n!, with D = (i/2) theta^{mu nu} dx_mu dy_nu
  std::map<BiKey, cplx> current;
  for (const auto& [ea, ca] : p.terms()) {
    for (const auto& [eb, cb] : q.terms()) current[{ea, eb}] += ca * cb;
  }
  PolyField out(d);
  for (int n = 0; !current.empty(); ++n) {
    for (const auto& [key, c] : current) {
      Exponent e{};
      for (int mu = 0; mu < 4; ++mu) e[mu] = key.first[mu] + key.second[mu];
      out.add_term(e, c);
    }
    std::map<BiKey, cplx> next;
    const cplx step = cplx(0.0, 0.5) / static_cast<double>(n + 1);
    for (const auto& [key, c] : current) {
      for (int mu = 0; mu < d; ++mu) {
        if (key.first[mu] == 0) continue;
        for (int nu = 0; nu < d; ++nu) {
          const double t = theta(mu, nu);
          if (t == 0.0 || key.second[nu] == 0) continue;
          BiKey k = key;
          k.first[mu] -= 1;
          k.second[nu] -= 1;
          next[k] += step * t * static_cast<double>(key.first[mu] * key.second[nu]) * c;
        }
      }
    }
    for (auto it = next.begin(); it != next.end();) {
      if (it->second == cplx{}) it = next.erase(it);
      else ++it;
    }
    current = std::move(next);
  }
  return out;
}

PolyField star_truncated(const PolyField& p, const PolyField& q, const ThetaMatrix& theta,
                         int order) {
  return moyal_series(
      p, q, theta, order, [](const PolyField& h, int mu) { return derivative(h, mu); },
      [](const PolyField& a, const PolyField& b) { return multiply(a, b); });
}

double max_coefficient_diff(const PolyField& a, const PolyField& b) {
  const PolyField diff = a - b;
  double best = 0.0;
  for (const auto& [e, c] : diff.terms()) best = std::max(best, std::abs(c));
  return best;
}

}  // namespace ncstar
