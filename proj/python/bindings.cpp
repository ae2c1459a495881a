#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "ncstar/dynamics.hpp"
#include "ncstar/error.hpp"
#include "ncstar/lattice.hpp"
#include "ncstar/ordering.hpp"
#include "ncstar/poly.hpp"
#include "ncstar/report.hpp"
#include "ncstar/scenario.hpp"
#include "ncstar/suites.hpp"

namespace py = pybind11;
using namespace ncstar;

namespace {

py::array_t<cplx> to_array(const GridSpec& grid, std::span<const cplx> data) {
  std::vector<py::ssize_t> shape(grid.shape().begin(), grid.shape().end());
  py::array_t<cplx> out(shape);
  std::copy(data.begin(), data.end(), out.mutable_data());
  return out;
}

ScalarField from_array(const GridSpec& grid, py::array_t<cplx, py::array::c_style | py::array::forcecast> a,
                       bool real) {
  if (static_cast<std::size_t>(a.size()) != grid.size()) {
    throw std::invalid_argument("array size does not match the grid");
  }
  return ScalarField::from_values(grid, std::span<const cplx>(a.data(), grid.size()), real);
}

NcCase parse_case(const std::string& name) { return nc_case_from_string(name); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Star products and noncommutative gauge dynamics on periodic lattices";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<CaseMismatch>(m, "CaseMismatch", error.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", error.ptr());

  py::class_<GridSpec>(m, "Grid")
      .def(py::init<std::vector<int>, std::vector<double>>(), py::arg("n"), py::arg("len") = std::vector<double>{})
      .def_static("cube", &GridSpec::cube, py::arg("d"), py::arg("n"), py::arg("len") = 2.0 * std::numbers::pi)
      .def_property_readonly("d", &GridSpec::d)
      .def_property_readonly("shape", &GridSpec::shape)
      .def_property_readonly("lengths", &GridSpec::lengths)
      .def_property_readonly("size", &GridSpec::size)
      .def("__eq__", &GridSpec::operator==);

  py::class_<ThetaMatrix>(m, "Theta")
      .def(py::init<int>())
      .def(py::init<const std::vector<std::vector<double>>&>())
      .def_static("single", &ThetaMatrix::single, py::arg("d"), py::arg("mu"), py::arg("nu"), py::arg("value"))
      .def_property_readonly("d", &ThetaMatrix::d)
      .def("__call__", &ThetaMatrix::operator())
      .def("scale", &ThetaMatrix::scale)
      .def("scaled", &ThetaMatrix::scaled)
      .def_property_readonly("case", [](const ThetaMatrix& t) { return std::string(to_string(t.nc_case())); });

  py::class_<ScalarField>(m, "Field")
      .def(py::init([](const GridSpec& g, py::array_t<cplx, py::array::c_style | py::array::forcecast> a, bool real) {
             return from_array(g, a, real);
           }),
           py::arg("grid"), py::arg("values"), py::arg("real") = false)
      .def_static("constant", [](const GridSpec& g, cplx c) { return ScalarField::constant(g, c); })
      .def_static("plane_wave", [](const GridSpec& g, const std::vector<int>& k) {
        return make_field(g, ModeList{{k, 1.0}});
      })
      .def_static(
          "random",
          [](const GridSpec& g, std::uint64_t seed, int cutoff, double amplitude, bool real) {
            RandomFieldOptions o;
            o.cutoff = cutoff;
            o.amplitude = amplitude;
            o.real = real;
            return random_band_limited(g, seed, o);
          },
          py::arg("grid"), py::arg("seed"), py::arg("cutoff") = 0, py::arg("amplitude") = 1.0,
          py::arg("real") = true)
      .def_property_readonly("grid", &ScalarField::grid)
      .def("values", [](const ScalarField& f) { return to_array(f.grid(), f.values()); })
      .def("modes", [](const ScalarField& f) { return to_array(f.grid(), f.modes()); })
      .def("mode", &ScalarField::mode)
      .def_property_readonly("is_real", &ScalarField::is_real)
      .def_property_readonly("truncated", &ScalarField::truncated)
      .def("max_abs", [](const ScalarField& f) { return max_abs(f); })
      .def("__add__", [](const ScalarField& a, const ScalarField& b) { return a + b; })
      .def("__sub__", [](const ScalarField& a, const ScalarField& b) { return a - b; })
      .def("__neg__", [](const ScalarField& a) { return -a; })
      .def("__mul__", [](const ScalarField& a, cplx s) { return s * a; })
      .def("__rmul__", [](const ScalarField& a, cplx s) { return s * a; });

  m.def("integrate", &integrate);
  m.def("derivative", &partial_derivative, py::arg("field"), py::arg("axis"));
  m.def("translate", [](const ScalarField& f, const std::vector<double>& d) { return translate(f, d); });
  m.def("multiply", py::overload_cast<const ScalarField&, const ScalarField&>(&multiply));
  m.def("star", &star_spectral);
  m.def("star_truncated",
        py::overload_cast<const ScalarField&, const ScalarField&, const ThetaMatrix&, int>(&star_truncated),
        py::arg("f"), py::arg("g"), py::arg("theta"), py::arg("order"));
  m.def("commutator", &star_commutator);
  m.def("anticommutator", &star_anticommutator);
  m.def("star_chain", [](const std::vector<ScalarField>& f, const ThetaMatrix& t) { return star_chain(f, t); });
  m.def("symmetric_star", [](const std::vector<ScalarField>& f, const ThetaMatrix& t) {
    return symmetric_star(std::span<const ScalarField>(f), t);
  });
  m.def(
      "star_poly_commutator",
      [](const ThetaMatrix& t, int mu, int nu) {
        const PolyField a = PolyField::coordinate(t.d(), mu), b = PolyField::coordinate(t.d(), nu);
        const PolyField c = star_poly(a, b, t) - star_poly(b, a, t);
        return c.coefficient(PolyField::Exponent{});
      },
      "Constant term of x^mu * x^nu - x^nu * x^mu in the polynomial backend.");

  py::class_<MetricBundle>(m, "Metric")
      .def_property_readonly("d", &MetricBundle::d)
      .def("g", &MetricBundle::g)
      .def("ginv", &MetricBundle::ginv)
      .def_readonly("sqrt_minus_g", &MetricBundle::sqrt_mg)
      .def("christoffel", &MetricBundle::christoffel)
      .def("riemann", &MetricBundle::curvature)
      .def("ricci_scalar", [](const MetricBundle& b) { return ricci_scalar(b); });

  m.def(
      "build_metric",
      [](const GridSpec& grid, const std::string& preset, double epsilon, std::vector<int> k, int axis) {
        if (k.empty()) k.assign(grid.d(), 0);
        if (preset == "minkowski") return build_metric(MetricPreset::minkowski(), grid);
        if (preset == "conformal") return build_metric(MetricPreset::conformal(epsilon, k), grid);
        if (preset == "diag_wave") return build_metric(MetricPreset::diag_wave(epsilon, k, axis), grid);
        throw std::invalid_argument("unknown metric preset: " + preset);
      },
      py::arg("grid"), py::arg("preset") = "minkowski", py::arg("epsilon") = 0.0,
      py::arg("k") = std::vector<int>{}, py::arg("axis") = 1);

  m.def(
      "delta_shift",
      [](const MetricBundle& b, const ThetaMatrix& t) {
        const DeltaShift d = delta_shift(b, t);
        py::dict out;
        out["constant"] = d.constant;
        out["residual"] = d.residual;
        out["tolerance"] = d.tolerance;
        out["is_constant"] = d.is_constant;
        out["field"] = d.field;
        return out;
      },
      py::arg("metric"), py::arg("theta"));

  py::class_<GaugeField>(m, "GaugeField")
      .def(py::init([](std::vector<ScalarField> A, double e) { return GaugeField{std::move(A), e}; }),
           py::arg("components"), py::arg("coupling") = 1.0)
      .def_static("zero", &GaugeField::zero, py::arg("grid"), py::arg("coupling") = 1.0)
      .def_static("random", &GaugeField::random, py::arg("grid"), py::arg("seed"), py::arg("cutoff") = 2,
                  py::arg("amplitude") = 0.3, py::arg("coupling") = 1.0)
      .def_readonly("components", &GaugeField::A)
      .def_readonly("coupling", &GaugeField::coupling);

  m.def("field_strength", [](const GaugeField& A, const ThetaMatrix& t) {
    const FieldStrength F = field_strength(A, t);
    std::vector<std::vector<ScalarField>> out(F.d());
    for (int a = 0; a < F.d(); ++a)
      for (int b = 0; b < F.d(); ++b) out[a].push_back(F(a, b));
    return out;
  });
  m.def("action", [](const GaugeField& A, const MetricBundle& b, const ThetaMatrix& t, const std::string& c) {
    return action(A, b, t, parse_case(c)).value;
  });
  m.def("eom_residual", [](const GaugeField& A, const MetricBundle& b, const ThetaMatrix& t, const std::string& c) {
    return eom_residual(A, b, t, parse_case(c));
  });
  m.def("pair_with_probe", &pair_with_probe);
  m.def(
      "fd_action_gradient",
      [](const GaugeField& A, const GaugeField& p, const MetricBundle& b, const ThetaMatrix& t,
         const std::string& c, double step) { return fd_action_gradient(A, p, b, t, parse_case(c), step).value; },
      py::arg("A"), py::arg("probe"), py::arg("metric"), py::arg("theta"), py::arg("case"), py::arg("step") = 1e-3);
  m.def("stress_tensor", [](const GaugeField& A, const MetricBundle& b, const ThetaMatrix& t, const std::string& c) {
    const StressTensor T = stress_tensor(A, b, t, parse_case(c));
    std::vector<std::vector<ScalarField>> out(T.d());
    for (int l = 0; l < T.d(); ++l)
      for (int k = 0; k < T.d(); ++k) out[l].push_back(T(l, k));
    return out;
  });

  m.def("suite_names", &suite_names);
  m.def("run_scenario_json", [](const std::string& path, const std::vector<std::string>& suites) {
    const Scenario s = load_scenario(path);
    py::gil_scoped_release release;
    return report_json(run_scenario(s, suites));
  });
}
