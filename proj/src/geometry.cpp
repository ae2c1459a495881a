#include "ncstar/geometry.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ncstar/error.hpp"
#include "ncstar/lattice.hpp"

namespace ncstar {

namespace {

using Values = std::vector<double>;

Values real_values(const ScalarField& f) {
  const auto v = f.values();
  Values out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].real();
  return out;
}

std::string site_name(const GridSpec& grid, std::size_t site) {
  std::ostringstream os;
  os << '(';
  for (int mu = 0; mu < grid.d(); ++mu) os << (mu ? "," : "") << grid.index(site, mu);
  os << ')';
  return os.str();
}

double eta(int mu) { return mu == 0 ? -1.0 : 1.0; }

double phase_at(const GridSpec& grid, const std::vector<int>& k, std::size_t site) {
  double p = 0.0;
  for (int mu = 0; mu < grid.d(); ++mu) {
    p += grid.wavenumber(mu, k[mu]) * grid.coordinate(site, mu);
  }
  return p;
}

// Pointwise inverse and square root of -det. `from` holds the given components.
MetricBundle complete(const GridSpec& grid, std::vector<ScalarField> from, bool from_lower) {
  const int d = grid.d();
  if (static_cast<int>(from.size()) != d * d) {
    throw std::invalid_argument("metric: expected " + std::to_string(d * d) + " components");
  }
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = mu + 1; nu < d; ++nu) {
      const auto a = from[mu * d + nu].modes();
      const auto b = from[nu * d + mu].modes();
      if (!std::equal(a.begin(), a.end(), b.begin())) {
        throw std::invalid_argument("metric: components are not symmetric");
      }
    }
  }
  std::vector<Values> vals(d * d);
  bool constant = true;
  for (int i = 0; i < d * d; ++i) {
    vals[i] = real_values(from[i]);
    const auto m = from[i].modes();
    for (std::size_t j = 1; j < m.size() && constant; ++j) constant = m[j] == cplx{};
  }
  const std::size_t sites = constant ? 1 : grid.size();
  std::vector<Values> inv(d * d, Values(sites));
  Values sqrt_mg(sites);
  Eigen::MatrixXd m(d, d);
  for (std::size_t s = 0; s < sites; ++s) {
    for (int i = 0; i < d * d; ++i) m(i / d, i % d) = vals[i][s];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m, Eigen::EigenvaluesOnly);
    int negative = 0;
    for (int i = 0; i < d; ++i) negative += eig.eigenvalues()(i) < 0.0 ? 1 : 0;
    const double det = m.determinant();
    if (negative != 1 || !(det < 0.0)) {
      throw Error("metric: signature violation (det g = " + std::to_string(det) +
                  ", negative eigenvalues = " + std::to_string(negative) + ") at site " +
                  site_name(grid, s));
    }
    const Eigen::MatrixXd mi = m.inverse();
    for (int i = 0; i < d * d; ++i) inv[i][s] = 0.5 * (mi(i / d, i % d) + mi(i % d, i / d));
    // sqrt(-det g_lower): det of the inverse is 1/det of the metric.
    sqrt_mg[s] = from_lower ? std::sqrt(-det) : 1.0 / std::sqrt(-det);
  }

  auto to_field = [&](const Values& v) {
    if (constant) return ScalarField::constant(grid, v[0]);
    return ScalarField::from_real_values(grid, v);
  };
  std::vector<ScalarField> other;
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = 0; nu < d; ++nu) {
      other.push_back(nu < mu ? other[nu * d + mu] : to_field(inv[mu * d + nu]));
    }
  }
  MetricBundle b{grid, {}, {}, to_field(sqrt_mg), {}, {}};
  if (from_lower) {
    b.lower = std::move(from);
    b.upper = std::move(other);
  } else {
    b.upper = std::move(from);
    b.lower = std::move(other);
  }
  return b;
}

}  // namespace

MetricPreset MetricPreset::conformal(double epsilon, std::vector<int> k) {
  MetricPreset p;
  p.kind = Kind::Conformal;
  p.epsilon = epsilon;
  p.k = std::move(k);
  return p;
}

MetricPreset MetricPreset::diag_wave(double epsilon, std::vector<int> k, int axis) {
  MetricPreset p;
  p.kind = Kind::DiagWave;
  p.epsilon = epsilon;
  p.k = std::move(k);
  p.axis = axis;
  return p;
}

std::string MetricPreset::name() const {
  switch (kind) {
    case Kind::Minkowski: return "minkowski";
    case Kind::Conformal: return "conformal";
    case Kind::DiagWave: return "diag_wave";
  }
  return "unknown";
}

bool MetricBundle::is_constant() const {
  for (const auto& f : lower) {
    const auto m = f.modes();
    for (std::size_t j = 1; j < m.size(); ++j) {
      if (m[j] != cplx{}) return false;
    }
  }
  return true;
}

MetricBundle metric_from_lower(const GridSpec& grid, std::vector<ScalarField> lower) {
  return complete(grid, std::move(lower), true);
}

MetricBundle metric_from_upper(const GridSpec& grid, std::vector<ScalarField> upper) {
  return complete(grid, std::move(upper), false);
}

MetricBundle build_metric(const MetricPreset& preset, const GridSpec& grid) {
  const int d = grid.d();
  if (preset.kind != MetricPreset::Kind::Minkowski &&
      static_cast<int>(preset.k.size()) != d) {
    throw std::invalid_argument("metric preset: wave vector must have d = " +
                                std::to_string(d) + " components");
  }
  if (preset.kind == MetricPreset::Kind::DiagWave && (preset.axis < 0 || preset.axis >= d)) {
    throw std::invalid_argument("metric preset: diag_wave axis out of range");
  }
  const ScalarField zero(grid);
  std::vector<ScalarField> lower(d * d, zero);
  switch (preset.kind) {
    case MetricPreset::Kind::Minkowski:
      for (int mu = 0; mu < d; ++mu) lower[mu * d + mu] = ScalarField::constant(grid, eta(mu));
      break;
    case MetricPreset::Kind::Conformal: {
      for (int mu = 0; mu < d; ++mu) {
        Values v(grid.size());
        for (std::size_t s = 0; s < grid.size(); ++s) {
          v[s] = eta(mu) * std::exp(2.0 * preset.epsilon * std::cos(phase_at(grid, preset.k, s)));
        }
        lower[mu * d + mu] = ScalarField::from_real_values(grid, v);
      }
      break;
    }
    case MetricPreset::Kind::DiagWave: {
      for (int mu = 0; mu < d; ++mu) lower[mu * d + mu] = ScalarField::constant(grid, eta(mu));
      Values v(grid.size());
      for (std::size_t s = 0; s < grid.size(); ++s) {
        v[s] = eta(preset.axis) *
               (1.0 + preset.epsilon * std::cos(phase_at(grid, preset.k, s)));
      }
      lower[preset.axis * d + preset.axis] = ScalarField::from_real_values(grid, v);
      break;
    }
  }
  return riemann(christoffel(metric_from_lower(grid, std::move(lower))));
}

MetricBundle christoffel(MetricBundle b) {
  const int d = b.d();
  const GridSpec& grid = b.grid;
  const std::size_t n = grid.size();
  b.gamma.assign(static_cast<std::size_t>(d * d * d), ScalarField(grid));
  if (b.is_constant()) return b;

  // dg[(s*d + m)*d + n] = d_s g_{mn}
  std::vector<Values> dg(d * d * d);
  for (int s = 0; s < d; ++s) {
    for (int m = 0; m < d; ++m) {
      for (int nn = m; nn < d; ++nn) {
        dg[(s * d + m) * d + nn] = real_values(partial_derivative(b.g(m, nn), s));
        dg[(s * d + nn) * d + m] = dg[(s * d + m) * d + nn];
      }
    }
  }
  std::vector<Values> ginv(d * d);
  for (int i = 0; i < d * d; ++i) ginv[i] = real_values(b.upper[i]);

  auto at = [&](int s, int m, int nn) -> const Values& { return dg[(s * d + m) * d + nn]; };
  for (int l = 0; l < d; ++l) {
    for (int m = 0; m < d; ++m) {
      for (int nn = m; nn < d; ++nn) {
        Values v(n, 0.0);
        for (int s = 0; s < d; ++s) {
          const Values& gi = ginv[l * d + s];
          const Values& a = at(m, s, nn);
          const Values& c = at(nn, s, m);
          const Values& e = at(s, m, nn);
          for (std::size_t x = 0; x < n; ++x) v[x] += 0.5 * gi[x] * (a[x] + c[x] - e[x]);
        }
        ScalarField f = ScalarField::from_real_values(grid, v);
        b.gamma[(l * d + m) * d + nn] = f;
        b.gamma[(l * d + nn) * d + m] = f;
      }
    }
  }
  return b;
}

MetricBundle riemann(MetricBundle b) {
  if (!b.has_christoffel()) {
    throw std::invalid_argument("riemann: christoffel symbols have not been computed");
  }
  const int d = b.d();
  const GridSpec& grid = b.grid;
  const std::size_t n = grid.size();
  b.riemann.assign(static_cast<std::size_t>(d * d * d * d), ScalarField(grid));
  if (b.is_constant()) return b;

  std::vector<Values> gam(d * d * d);
  for (int i = 0; i < d * d * d; ++i) gam[i] = real_values(b.gamma[i]);
  auto G = [&](int l, int m, int nn) -> const Values& { return gam[(l * d + m) * d + nn]; };
  // dgam[al][(l*d+m)*d+n] = d_al Gamma^l_{mn}
  std::vector<std::vector<Values>> dgam(d, std::vector<Values>(d * d * d));
  for (int al = 0; al < d; ++al) {
    for (int i = 0; i < d * d * d; ++i) dgam[al][i] = real_values(partial_derivative(b.gamma[i], al));
  }
  for (int m = 0; m < d; ++m) {
    for (int a = 0; a < d; ++a) {
      for (int al = 0; al < d; ++al) {
        for (int be = al + 1; be < d; ++be) {
          Values v(n);
          const Values& t1 = dgam[al][(m * d + be) * d + a];
          const Values& t2 = dgam[be][(m * d + al) * d + a];
          for (std::size_t x = 0; x < n; ++x) v[x] = t1[x] - t2[x];
          for (int s = 0; s < d; ++s) {
            const Values& p1 = G(m, al, s);
            const Values& q1 = G(s, be, a);
            const Values& p2 = G(m, be, s);
            const Values& q2 = G(s, al, a);
            for (std::size_t x = 0; x < n; ++x) v[x] += p1[x] * q1[x] - p2[x] * q2[x];
          }
          ScalarField f = ScalarField::from_real_values(grid, v);
          b.riemann[((m * d + a) * d + be) * d + al] = -f;
          b.riemann[((m * d + a) * d + al) * d + be] = std::move(f);
        }
      }
    }
  }
  return b;
}

ScalarField ricci_scalar(const MetricBundle& b) {
  if (!b.has_riemann()) throw std::invalid_argument("ricci_scalar: riemann not computed");
  const int d = b.d();
  const std::size_t n = b.grid.size();
  Values r(n, 0.0);
  for (int a = 0; a < d; ++a) {
    for (int be = 0; be < d; ++be) {
      const Values gi = real_values(b.ginv(a, be));
      for (int m = 0; m < d; ++m) {
        const Values ric = real_values(b.curvature(m, a, m, be));
        for (std::size_t x = 0; x < n; ++x) r[x] += gi[x] * ric[x];
      }
    }
  }
  return ScalarField::from_real_values(b.grid, r);
}

double default_delta_tolerance(const ThetaMatrix& theta) {
  const double s = theta.scale();
  return 1e-6 * s * s;
}

DeltaShift delta_shift(const MetricBundle& b, const ThetaMatrix& theta, double tolerance) {
  if (!b.has_riemann()) throw std::invalid_argument("delta_shift: riemann not computed");
  const int d = b.d();
  if (theta.d() != d) throw std::invalid_argument("delta_shift: theta dimension mismatch");
  if (tolerance < 0.0) tolerance = default_delta_tolerance(theta);
  const GridSpec& grid = b.grid;
  const std::size_t n = grid.size();
  std::vector<ScalarField> field;
  if (theta.is_zero() || b.is_constant()) {
    field.assign(d, ScalarField(grid));
    return DeltaShift::from_field(std::move(field), tolerance);
  }
  const Values sg = real_values(b.sqrt_mg);
  for (int m = 0; m < d; ++m) {
    Values v(n, 0.0);
    for (int a = 0; a < d; ++a) {
      for (int bb = 0; bb < d; ++bb) {
        const double t1 = theta(a, bb);
        if (t1 == 0.0) continue;
        for (int al = 0; al < d; ++al) {
          for (int be = 0; be < d; ++be) {
            const double t2 = theta(al, be);
            if (t2 == 0.0) continue;
            const Values dr = real_values(partial_derivative(b.curvature(m, a, al, be), bb));
            for (std::size_t x = 0; x < n; ++x) v[x] += t1 * t2 * dr[x];
          }
        }
      }
    }
    // i^2 = -1
    for (std::size_t x = 0; x < n; ++x) v[x] *= -1.0 / (2.0 * sg[x]);
    field.push_back(ScalarField::from_real_values(grid, v));
  }
  return DeltaShift::from_field(std::move(field), tolerance);
}

}  // namespace ncstar
