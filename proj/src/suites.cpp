#include "ncstar/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "ncstar/dynamics.hpp"
#include "ncstar/error.hpp"
#include "ncstar/field_io.hpp"
#include "ncstar/gauge.hpp"
#include "ncstar/geometry.hpp"
#include "ncstar/lattice.hpp"
#include "ncstar/ordering.hpp"
#include "ncstar/poly.hpp"
#include "ncstar/star.hpp"

namespace ncstar {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kRandomCases = 20;

int min_points(const GridSpec& grid) {
  return *std::min_element(grid.shape().begin(), grid.shape().end());
}

// Cutoff keeping `factors`-fold products inside the representable band.
int product_cutoff(const GridSpec& grid, int factors) {
  return std::max(2, (min_points(grid) / 2 - 1) / factors + 1);
}

ScalarField random_field(const GridSpec& grid, std::uint64_t seed, int cutoff,
                         double amplitude = 1.0) {
  RandomFieldOptions opts;
  opts.cutoff = cutoff;
  opts.amplitude = amplitude;
  return random_band_limited(grid, seed, opts);
}

double relative_gap(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

// Theta used where a suite needs a nonzero matrix and the scenario has none.
ThetaMatrix probe_theta(const Scenario& s) {
  if (!s.theta.is_zero()) return s.theta;
  const int d = s.grid.d();
  if (s.nc_case == NcCase::SpaceSpace && d >= 3) return ThetaMatrix::single(d, 1, 2, 0.1);
  return ThetaMatrix::single(d, 0, 1, 0.1);
}

void dump(const std::filesystem::path& dir, const std::string& name, const ScalarField& f) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  write_field_csv(dir / (name + ".csv"), f);
}

std::string idx(int a, int b) { return std::to_string(a) + std::to_string(b); }

std::vector<CheckRecord> identities(const Scenario& s) {
  const GridSpec& grid = s.grid;
  const ThetaMatrix& theta = s.theta;
  const int d = grid.d();
  std::vector<CheckRecord> out;

  double phase_err = 0.0;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      std::vector<int> k(d, 1), q(d, -1);
      k[0] = i - 2;
      q[0] = 1;
      q[1] = j - 2;
      const ScalarField fk = make_field(grid, ModeList{{k, 1.0}});
      const ScalarField fq = make_field(grid, ModeList{{q, 1.0}});
      double phase = 0.0;
      for (int mu = 0; mu < d; ++mu) {
        for (int nu = 0; nu < d; ++nu) {
          phase += theta(mu, nu) * grid.wavenumber(mu, k[mu]) * grid.wavenumber(nu, q[nu]);
        }
      }
      std::vector<int> r(d);
      for (int mu = 0; mu < d; ++mu) r[mu] = k[mu] + q[mu];
      const ScalarField expected = make_field(grid, ModeList{{r, std::polar(1.0, -0.5 * phase)}});
      phase_err = std::max(phase_err, max_abs_diff(star_spectral(fk, fq, theta), expected));
    }
  }
  out.push_back(check_below("plane_wave_phase", "star product: plane-wave phase", phase_err, 1e-12));

  const int c3 = product_cutoff(grid, 3);
  double trace = 0.0, cyclic = 0.0, reversal = 0.0, reversal_gap = 0.0, assoc = 0.0;
  for (int c = 0; c < kRandomCases; ++c) {
    const std::uint64_t base = s.seed + 1000 + 3 * c;
    const ScalarField f = random_field(grid, base, c3);
    const ScalarField g = random_field(grid, base + 1, c3);
    const ScalarField h = random_field(grid, base + 2, c3);
    trace = std::max(trace, std::abs(integrate(star_spectral(f, g, theta)) - integrate(multiply(f, g))));
    const cplx fgh = integrate(star_spectral(star_spectral(f, g, theta), h, theta));
    const cplx ghf = integrate(star_spectral(star_spectral(g, h, theta), f, theta));
    const cplx hfg = integrate(star_spectral(star_spectral(h, f, theta), g, theta));
    const cplx hgf = integrate(star_spectral(star_spectral(h, g, theta), f, theta));
    cyclic = std::max({cyclic, std::abs(fgh - ghf), std::abs(fgh - hfg)});
    reversal = std::max(reversal, std::abs(hgf - std::conj(fgh)));
    reversal_gap = std::max(reversal_gap, std::abs(hgf - fgh));
    const ScalarField left = star_spectral(star_spectral(f, g, theta), h, theta);
    const ScalarField right = star_spectral(f, star_spectral(g, h, theta), theta);
    assoc = std::max(assoc, max_abs_diff(left, right));
  }
  const double tt = s.tolerances.trace;
  out.push_back(check_below("trace", "trace property of the star product", trace, tt));
  out.push_back(check_below("cyclicity", "cyclic reordering under the integral", cyclic, tt));
  out.push_back(check_below("reversal_conjugate", "reversed chain is the complex conjugate",
                            reversal, tt));
  out.push_back(info("reversal_gap", "reversed chain versus original chain", reversal_gap));
  out.push_back(check_below("associativity", "associativity of the star product", assoc,
                            s.tolerances.associativity));

  const ThetaMatrix dir = probe_theta(s).scaled(1.0 / probe_theta(s).scale());
  const ScalarField f = random_field(grid, s.seed + 2000, 2);
  const ScalarField g = random_field(grid, s.seed + 2001, 2);
  const double scales[] = {0.1, 0.05, 0.025};
  for (int order = 0; order <= 2; ++order) {
    double lx[3], ly[3];
    for (int i = 0; i < 3; ++i) {
      const ThetaMatrix t = dir.scaled(scales[i]);
      lx[i] = std::log(scales[i]);
      ly[i] = std::log(max_abs_diff(star_truncated(f, g, t, order), star_spectral(f, g, t)));
    }
    const double mx = (lx[0] + lx[1] + lx[2]) / 3.0, my = (ly[0] + ly[1] + ly[2]) / 3.0;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 3; ++i) {
      num += (lx[i] - mx) * (ly[i] - my);
      den += (lx[i] - mx) * (lx[i] - mx);
    }
    const double slope = num / den;
    out.push_back(check_below("truncation_exponent_order" + std::to_string(order),
                              "convergence of the truncated bidifferential series",
                              std::abs(slope - (order + 1)), 0.2));
  }

  double comm = 0.0;
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = 0; nu < d; ++nu) {
      const PolyField x = PolyField::coordinate(d, mu), y = PolyField::coordinate(d, nu);
      const PolyField c = star_poly(x, y, theta) - star_poly(y, x, theta);
      comm = std::max(comm, max_coefficient_diff(c, PolyField::constant(d, cplx(0.0, theta(mu, nu)))));
    }
  }
  out.push_back(check_below("coordinate_commutator", "coordinate algebra [x^mu, x^nu] = i theta",
                            comm, 1e-14));
  return out;
}

// (1/n!) sum over every ordering, integrated, evaluated chain by chain.
cplx brute_symmetric_integral(const std::vector<ScalarField>& ops, const ThetaMatrix& theta) {
  std::vector<int> perm(ops.size());
  std::iota(perm.begin(), perm.end(), 0);
  cplx acc;
  double count = 0.0;
  do {
    std::vector<ScalarField> chain;
    for (int p : perm) chain.push_back(ops[p]);
    acc += integrate(star_chain(chain, theta));
    count += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc / count;
}

std::vector<CheckRecord> ordering_suite(const Scenario& s) {
  const GridSpec& grid = s.grid;
  const ThetaMatrix& theta = s.theta;
  std::vector<CheckRecord> out;
  const int c4 = product_cutoff(grid, 4);

  for (int n = 2; n <= 4; ++n) {
    double worst = 0.0;
    for (int c = 0; c < 3; ++c) {
      std::vector<ScalarField> fields;
      for (int i = 0; i < n; ++i) fields.push_back(random_field(grid, s.seed + 3000 + 10 * c + i, c4));
      const OperandList ops = OperandList::distinct(fields);
      const cplx sym = integrate(symmetric_star(ops, theta));
      const cplx brute = brute_symmetric_integral(fields, theta);
      worst = std::max(worst, std::abs(sym - brute));
      for (int p = 0; p < n; ++p) {
        worst = std::max(worst, std::abs(brute - integrate(reduced_symmetric_star(p, ops, theta))));
      }
    }
    out.push_back(check_below("reduction_n" + std::to_string(n),
                              "symmetric ordering reduces to one pivoted chain under the integral",
                              worst, s.tolerances.trace));
  }

  std::vector<ScalarField> fields;
  for (int i = 0; i < 4; ++i) fields.push_back(random_field(grid, s.seed + 3100 + i, c4));
  const ScalarField base = symmetric_star(std::span<const ScalarField>(fields), theta);
  double perm_diff = 0.0;
  std::vector<ScalarField> shuffled = fields;
  for (int r = 0; r < 3; ++r) {
    std::rotate(shuffled.begin(), shuffled.begin() + 1, shuffled.end());
    std::swap(shuffled[0], shuffled[2]);
    perm_diff = std::max(perm_diff,
                         max_abs_diff(base, symmetric_star(std::span<const ScalarField>(shuffled), theta)));
  }
  out.push_back(check_below("permutation_invariance", "symmetric ordering ignores operand order",
                            perm_diff, 0.0));
  out.push_back(check_below("hermiticity", "symmetric ordering of real fields is real",
                            max_imag(base), 1e-12));

  // d/de of the integral of S(B, A+e p, ...) against the coefficient rule.
  const int c3 = product_cutoff(grid, 4);
  for (int m = 1; m <= 3; ++m) {
    double worst = 0.0;
    for (int c = 0; c < 3; ++c) {
      const std::uint64_t seed = s.seed + 3200 + 10 * c;
      const ScalarField a = random_field(grid, seed, c3);
      const ScalarField b = random_field(grid, seed + 1, c3);
      const ScalarField p = random_field(grid, seed + 2, 2);
      auto list = [&](const ScalarField& av) {
        OperandList ops;
        ops.add(b, "B");
        for (int i = 0; i < m; ++i) ops.add(av, "A");
        return ops;
      };
      auto value = [&](double e) {
        return integrate(symmetric_star(list(a + e * p), theta)).real();
      };
      // The integral is polynomial of degree m in e, so one Richardson step is exact.
      const double h = 1e-2;
      const double coarse = (value(h) - value(-h)) / (2.0 * h);
      const double fine = (value(0.5 * h) - value(-0.5 * h)) / h;
      const double fd = (4.0 * fine - coarse) / 3.0;
      const double rule =
          integrate(star_spectral(variation_coefficient(list(a), "A", theta), p, theta)).real();
      worst = std::max(worst, relative_gap(fd, rule));
    }
    out.push_back(check_below("leibniz_m" + std::to_string(m),
                              "variation of the symmetric ordering counts occurrences", worst,
                              s.tolerances.fd_relative));
  }
  return out;
}

std::vector<CheckRecord> geometry_suite(const Scenario& s, const std::filesystem::path& dir) {
  const GridSpec& grid = s.grid;
  const int d = grid.d();
  std::vector<CheckRecord> out;
  const MetricBundle b = build_metric(s.metric, grid);

  double inverse = 0.0, symmetry = 0.0;
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = 0; nu < d; ++nu) {
      ScalarField acc(grid);
      for (int a = 0; a < d; ++a) acc += multiply(b.g(mu, a), b.ginv(a, nu));
      const ScalarField delta = ScalarField::constant(grid, mu == nu ? 1.0 : 0.0);
      inverse = std::max(inverse, max_abs_diff(acc, delta));
      symmetry = std::max({symmetry, max_abs_diff(b.g(mu, nu), b.g(nu, mu)),
                           max_abs_diff(b.ginv(mu, nu), b.ginv(nu, mu))});
    }
  }
  out.push_back(check_below("metric_inverse", "metric times inverse is the identity", inverse, 1e-10));
  out.push_back(check_below("metric_symmetry", "metric components are symmetric", symmetry, 0.0));

  double antisym = 0.0, bianchi = 0.0;
  for (int mu = 0; mu < d; ++mu) {
    for (int a = 0; a < d; ++a) {
      for (int al = 0; al < d; ++al) {
        for (int be = 0; be < d; ++be) {
          antisym = std::max(antisym, max_abs(b.curvature(mu, a, al, be) + b.curvature(mu, a, be, al)));
          bianchi = std::max(bianchi, max_abs(b.curvature(mu, a, al, be) + b.curvature(mu, al, be, a) +
                                              b.curvature(mu, be, a, al)));
        }
      }
    }
  }
  out.push_back(check_below("riemann_antisymmetry", "Riemann tensor: last-pair antisymmetry",
                            antisym, 1e-10));
  out.push_back(check_below("riemann_cyclic", "Riemann tensor: first Bianchi identity", bianchi, 1e-8));

  const ScalarField R = ricci_scalar(b);
  dump(dir, "ricci_scalar", R);
  switch (s.metric.kind) {
    case MetricPreset::Kind::Minkowski: {
      double peak = 0.0;
      for (const auto& r : b.riemann) peak = std::max(peak, max_abs(r));
      out.push_back(check_below("flat_riemann", "flat background has no curvature", peak, 0.0));
      break;
    }
    case MetricPreset::Kind::Conformal: {
      // R = -e^{-2 phi} (2 (d-1) box phi + (d-2)(d-1) (d phi)^2) for g = e^{2 phi} eta.
      std::vector<double> closed(grid.size());
      const double eps = s.metric.epsilon;
      for (std::size_t site = 0; site < grid.size(); ++site) {
        double arg = 0.0, box = 0.0, grad2 = 0.0;
        for (int mu = 0; mu < d; ++mu) arg += grid.wavenumber(mu, s.metric.k[mu]) * grid.coordinate(site, mu);
        const double phi = eps * std::cos(arg);
        for (int mu = 0; mu < d; ++mu) {
          const double kk = grid.wavenumber(mu, s.metric.k[mu]);
          const double eta = mu == 0 ? -1.0 : 1.0;
          box += eta * (-eps * kk * kk * std::cos(arg));
          grad2 += eta * (eps * kk * std::sin(arg)) * (eps * kk * std::sin(arg));
        }
        closed[site] = -std::exp(-2.0 * phi) * (2.0 * (d - 1) * box + (d - 2.0) * (d - 1) * grad2);
      }
      const ScalarField oracle = ScalarField::from_real_values(grid, closed);
      out.push_back(check_below("conformal_ricci_scalar", "curvature of a conformally flat background",
                                max_abs_diff(R, oracle), 1e-6));
      break;
    }
    case MetricPreset::Kind::DiagWave:
      out.push_back(info("ricci_scalar_max", "curvature of the background", max_abs(R)));
      break;
  }

  const ThetaMatrix theta = probe_theta(s);
  const DeltaShift one = delta_shift(b, theta, s.tolerances.delta_constancy);
  const DeltaShift two = delta_shift(b, theta.scaled(2.0), s.tolerances.delta_constancy);
  double peak = 0.0, gap = 0.0;
  for (int mu = 0; mu < d; ++mu) {
    peak = std::max(peak, max_abs(one.field[mu]));
    gap = std::max(gap, max_abs_diff(two.field[mu], 4.0 * one.field[mu]));
    dump(dir, "delta_" + std::to_string(mu), one.field[mu]);
  }
  if (s.metric.kind == MetricPreset::Kind::Minkowski) {
    out.push_back(check_below("flat_delta", "flat background has no shift", peak, 0.0));
  } else {
    out.push_back(info("delta_max", "curvature-induced shift of the product", peak));
    out.push_back(info("delta_constancy_residual", "curvature-induced shift: deviation from its mean",
                       one.residual));
    out.push_back(check_below("delta_quadratic_scaling", "shift is quadratic in theta",
                              peak > 0.0 ? gap / (4.0 * peak) : gap, 1e-6));
  }
  return out;
}

std::vector<CheckRecord> eom_suite(const Scenario& s, const std::filesystem::path& dir) {
  const GridSpec& grid = s.grid;
  const int d = grid.d();
  const ThetaMatrix& theta = s.theta;
  std::vector<CheckRecord> out;
  const MetricBundle b = build_metric(s.metric, grid);

  double worst = 0.0, imag_action = 0.0, imag_res = 0.0;
  bool consistent = true;
  double ratio = 0.0, spread = 0.0;
  for (int c = 0; c < s.fields.configurations; ++c) {
    const std::uint64_t seed = s.seed + 4000 + 100 * c;
    const GaugeField A = GaugeField::random(grid, seed, s.fields.cutoff, s.fields.amplitude, s.coupling);
    const GaugeField probe = GaugeField::random(grid, seed + 50, 2, 1.0, s.coupling);
    const auto residual = eom_residual(A, b, theta, s.nc_case);
    const FdEstimate fd = fd_action_gradient(A, probe, b, theta, s.nc_case);
    const double paired = pair_with_probe(residual, probe, theta);
    worst = std::max(worst, relative_gap(fd.value, paired));
    consistent = consistent && fd.consistent;
    imag_action = std::max(imag_action, action(A, b, theta, s.nc_case).imag_residue);
    for (const auto& r : residual) imag_res = std::max(imag_res, max_imag(r));
    if (c == 0) {
      for (int k = 0; k < d; ++k) {
        dump(dir, "A_" + std::to_string(k), A[k]);
        dump(dir, "residual_" + std::to_string(k), residual[k]);
      }
    }
    if (c == 0 && s.nc_case == NcCase::SpaceSpace) {
      const auto rf = eom_residual_scriptF(A, b, theta);
      double num = 0.0, den = 0.0, top = 0.0;
      for (int k = 0; k < d; ++k) {
        const auto x = residual[k].values();
        const auto y = rf[k].values();
        for (std::size_t i = 0; i < x.size(); ++i) {
          num += (std::conj(x[i]) * y[i]).real();
          den += std::norm(x[i]);
        }
      }
      ratio = den > 0.0 ? num / den : 0.0;
      for (int k = 0; k < d; ++k) {
        spread = std::max(spread, max_abs_diff(rf[k], ratio * residual[k]));
        top = std::max(top, max_abs(rf[k]));
      }
      if (top > 0.0) spread /= top;
    }
  }
  out.push_back(check_below("fd_gradient_vs_residual", "least-action principle: field equations",
                            worst, s.tolerances.fd_relative));
  out.push_back(info("fd_richardson_consistent", "finite-difference step check", consistent ? 1.0 : 0.0));
  out.push_back(check_below("action_imag_residue", "action of real fields is real", imag_action, 1e-10));
  out.push_back(check_below("residual_imag_residue", "field equations are real", imag_res, 1e-10));
  if (s.nc_case == NcCase::SpaceSpace) {
    out.push_back(info("scriptF_ratio", "symmetrized current against the ordered form", ratio));
    out.push_back(info("scriptF_ratio_spread", "symmetrized current: deviation from proportionality",
                       spread));
  }
  return out;
}

std::vector<CheckRecord> stress_suite(const Scenario& s, const std::filesystem::path& dir) {
  const GridSpec& grid = s.grid;
  const int d = grid.d();
  const ThetaMatrix& theta = s.theta;
  std::vector<CheckRecord> out;
  const MetricBundle b = build_metric(s.metric, grid);

  double sym = 0.0, imag = 0.0, ratio = 0.0;
  for (int c = 0; c < s.fields.configurations; ++c) {
    const std::uint64_t seed = s.seed + 5000 + 100 * c;
    const GaugeField A = GaugeField::random(grid, seed, s.fields.cutoff, s.fields.amplitude, s.coupling);
    const StressTensor T = stress_tensor(A, b, theta, s.nc_case);
    for (int l = 0; l < d; ++l) {
      for (int k = 0; k < d; ++k) {
        sym = std::max(sym, max_abs_diff(T(l, k), T(k, l)));
        imag = std::max(imag, max_imag(T(l, k)));
        if (c == 0) dump(dir, "T_" + idx(l, k), T(l, k));
      }
    }
    if (c == 0) {
      std::vector<ScalarField> dg(d * d, ScalarField(grid));
      for (int l = 0; l < d; ++l) {
        for (int k = l; k < d; ++k) {
          dg[l * d + k] = random_field(grid, seed + 60 + l * d + k, 2, 0.1);
          dg[k * d + l] = dg[l * d + k];
        }
      }
      const FdEstimate fd = fd_metric_gradient(A, b, dg, theta, s.nc_case);
      const double predicted = stress_pairing(T, b, dg);
      ratio = predicted != 0.0 ? fd.value / predicted : 0.0;
    }
  }
  out.push_back(check_below("stress_symmetry", "energy-momentum tensor is symmetric", sym, 1e-10));
  out.push_back(check_below("stress_imag_residue", "energy-momentum tensor is real", imag, 1e-10));
  out.push_back(info("metric_variation_prefactor",
                     "metric variation of the action against the energy-momentum tensor", ratio));
  return out;
}

std::vector<CheckRecord> deformed_suite(const Scenario& s) {
  const GridSpec& grid = s.grid;
  const ThetaMatrix& theta = s.theta;
  std::vector<CheckRecord> out;
  const MetricBundle b = build_metric(s.metric, grid);
  DeltaShift delta = s.manual_delta ? DeltaShift::manual(*s.manual_delta)
                                    : delta_shift(b, theta, s.tolerances.delta_constancy);
  out.push_back(check_below("delta_constant", "shift must be independent of position",
                            delta.residual, delta.tolerance));
  double shift = 0.0;
  for (double v : delta.constant) shift = std::max(shift, std::abs(v));
  out.push_back(info("delta_magnitude", "deformed product shift", shift));
  if (!delta.is_constant) return out;

  const int c3 = product_cutoff(grid, 3);
  double binary = 0.0, chain = 0.0;
  for (int c = 0; c < kRandomCases; ++c) {
    const std::uint64_t seed = s.seed + 6000 + 3 * c;
    const ScalarField f = random_field(grid, seed, c3);
    const ScalarField g = random_field(grid, seed + 1, c3);
    const ScalarField h = random_field(grid, seed + 2, c3);
    binary = std::max(binary, std::abs(integrate(deformed_star(f, g, theta, delta)) -
                                       integrate(star_spectral(f, g, theta))));
    const ScalarField fields[] = {f, g, h};
    chain = std::max(chain, std::abs(integrate(deformed_chain(fields, theta, delta)) -
                                     integrate(star_chain(fields, theta))));
  }
  out.push_back(check_below("deformed_integral", "deformed product: integral unchanged", binary,
                            s.tolerances.trace));
  out.push_back(check_below("deformed_chain_integral", "deformed chain: integral unchanged", chain,
                            s.tolerances.trace));

  double act = 0.0;
  for (int c = 0; c < s.fields.configurations; ++c) {
    const GaugeField A = GaugeField::random(grid, s.seed + 6500 + 100 * c, s.fields.cutoff,
                                            s.fields.amplitude, s.coupling);
    act = std::max(act, std::abs(action_deformed(A, b, theta, s.nc_case, delta).value -
                                 action(A, b, theta, s.nc_case).value));
  }
  out.push_back(check_below("deformed_action", "deformed action equals the plain action", act,
                            s.tolerances.trace));
  return out;
}

}  // namespace

std::vector<CheckRecord> run_suite(const std::string& suite, const Scenario& scenario,
                                   const std::filesystem::path& dump_dir) {
  std::vector<CheckRecord> out;
  if (suite == "identities") {
    out = identities(scenario);
  } else if (suite == "ordering") {
    out = ordering_suite(scenario);
  } else if (suite == "geometry") {
    out = geometry_suite(scenario, dump_dir);
  } else if (suite == "eom") {
    out = eom_suite(scenario, dump_dir);
  } else if (suite == "stress") {
    out = stress_suite(scenario, dump_dir);
  } else if (suite == "deformed") {
    out = deformed_suite(scenario);
  } else {
    throw ConfigError("unknown suite '" + suite + "'");
  }
  for (auto& c : out) c.suite = suite;
  return out;
}

Report run_scenario(const Scenario& scenario, const std::vector<std::string>& suites,
                    const std::filesystem::path& dump_dir) {
  const auto& list = suites.empty() ? scenario.suites : suites;
  if (list.empty()) throw ConfigError("no suites selected");
  Report report;
  report.scenario_echo = scenario.echo;
  report.scenario_name = scenario.name;
  for (const auto& name : list) {
    const auto t0 = Clock::now();
    auto checks = run_suite(name, scenario, dump_dir);
    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report.checks.insert(report.checks.end(), checks.begin(), checks.end());
    report.timings.push_back({name, dt});
  }
  return report;
}

std::vector<BenchRow> bench(const Scenario& s) {
  const GridSpec& grid = s.grid;
  const ThetaMatrix& theta = s.theta;
  const int c4 = product_cutoff(grid, 4);
  std::vector<ScalarField> f;
  for (int i = 0; i < 4; ++i) f.push_back(random_field(grid, s.seed + 7000 + i, c4));
  const MetricBundle b = build_metric(s.metric, grid);
  const GaugeField A = GaugeField::random(grid, s.seed + 7100, s.fields.cutoff, s.fields.amplitude,
                                          s.coupling);

  auto time = [](const std::string& name, const std::function<void()>& fn) {
    int calls = 0;
    const auto t0 = Clock::now();
    double elapsed = 0.0;
    do {
      fn();
      ++calls;
      elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    } while (elapsed < 0.2 && calls < 1000);
    return BenchRow{name, elapsed / calls, calls};
  };
  std::vector<BenchRow> rows;
  rows.push_back(time("star_spectral", [&] { (void)star_spectral(f[0], f[1], theta); }));
  rows.push_back(time("star_chain_4", [&] { (void)star_chain(f, theta); }));
  rows.push_back(time("symmetric_star_4", [&] {
    (void)symmetric_star(std::span<const ScalarField>(f), theta);
  }));
  rows.push_back(time("eom_residual", [&] { (void)eom_residual(A, b, theta, s.nc_case); }));
  return rows;
}

std::string bench_csv(const Scenario& s, const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  std::string shape;
  for (int mu = 0; mu < s.grid.d(); ++mu) shape += (mu ? "x" : "") + std::to_string(s.grid.n(mu));
  out << "operation,grid,seconds_per_call,calls\n";
  for (const auto& r : rows) {
    out << r.operation << ',' << shape << ',' << r.seconds_per_call << ',' << r.calls << '\n';
  }
  return out.str();
}

}  // namespace ncstar
