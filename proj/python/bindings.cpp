#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include "dirac_shell/gauge.hpp"
#include "dirac_shell/nc_algebra.hpp"
#include "dirac_shell/param_maps.hpp"
#include "dirac_shell/report_json.hpp"
#include "dirac_shell/suites.hpp"

namespace py = pybind11;
using namespace dirac_shell;

namespace {

py::object to_py(const Json &j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

template <class F> py::object suite(F &&f) {
  SuiteResult s;
  {
    py::gil_scoped_release release;
    s = f();
  }
  return to_py(s.to_json());
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dirac shell interaction checks";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("algebra_suite", [] { return suite([] { return algebra_suite(); }); });
  m.def(
      "symbolic_suite",
      [](std::uint64_t seed, std::size_t samples) {
        return suite([=] { return symbolic_suite(seed, samples); });
      },
      py::arg("seed") = 7, py::arg("samples") = 100);
  m.def(
      "param_suite",
      [](std::uint64_t seed, std::size_t samples) {
        return suite([=] { return param_suite(seed, samples); });
      },
      py::arg("seed") = 7, py::arg("samples") = 100);
  m.def(
      "gauge_suite",
      [](std::uint64_t seed) { return suite([=] { return gauge_suite(seed); }); },
      py::arg("seed") = 7);
  m.def(
      "numeric_suite",
      [](std::vector<int> levels, double mass, int band_degree) {
        NumericConfig c;
        c.levels = std::move(levels);
        c.m = mass;
        c.band_degree = band_degree;
        return suite([&] { return numeric_suite(c); });
      },
      py::arg("levels") = std::vector<int>{2, 3, 4}, py::arg("m") = 1.0,
      py::arg("band_degree") = -1);
  m.def(
      "jump_suite",
      [](std::vector<int> levels, double mass) {
        return suite([&] { return jump_suite(mass, levels); });
      },
      py::arg("levels") = std::vector<int>{1, 2, 3}, py::arg("m") = 1.0);

  m.def(
      "transform",
      [](const std::string &le, const std::string &ln, const std::string &theta) {
        return to_py(transform_json(transform(parse_scalar(le), parse_scalar(ln), Angle::parse(theta))));
      },
      py::arg("lambda_e"), py::arg("lambda_n"), py::arg("theta"));
  m.def(
      "coro1",
      [](const std::string &le, const std::string &ln) {
        return to_py(pair_json(coro1_map(parse_scalar(le), parse_scalar(ln))));
      },
      py::arg("lambda_e"), py::arg("lambda_n"));
  m.def(
      "coro2",
      [](const std::string &le, const std::string &ln, int sign) {
        return to_py(pair_json(coro2_map(parse_scalar(le), parse_scalar(ln), sign)));
      },
      py::arg("lambda_e"), py::arg("lambda_n"), py::arg("sign") = 1);
  m.def(
      "coro3",
      [](const std::string &le, const std::string &ln) {
        return to_py(coro3_json(coro3_map(parse_scalar(le), parse_scalar(ln))));
      },
      py::arg("lambda_e"), py::arg("lambda_n"));
  m.def(
      "classify",
      [](const std::string &le, const std::string &ln) {
        return to_py(region_json(classify_region(parse_scalar(le), parse_scalar(ln))));
      },
      py::arg("lambda_e"), py::arg("lambda_n"));

  m.def(
      "check_intertwining",
      [](double le, double ln, double theta) {
        return to_py(identity_json(check_intertwining(le, ln, theta)));
      },
      py::arg("lambda_e"), py::arg("lambda_n"), py::arg("theta"));
  m.def(
      "check_factorization",
      [](double le, double ln) { return to_py(identity_json(check_factorization(le, ln))); },
      py::arg("lambda_e"), py::arg("lambda_n"));
  m.def(
      "rewrite_word",
      [](const std::string &w) {
        const auto [c, word] = rewrite_word(w);
        return py::make_tuple(c, word);
      },
      py::arg("word"));

  m.def("gauge_rhs", &gauge_rhs, py::arg("lambda_"), py::arg("M"));
  m.def("boundary_coeff_check", &boundary_coeff_check, py::arg("lambda_"), py::arg("M"));
  m.def(
      "theta_from_lambda",
      [](const std::vector<double> &lambda, double M) {
        const GaugeAngle g = theta_from_lambda(lambda, M);
        return py::make_tuple(g.theta, to_py(gauge_angle_json(g)));
      },
      py::arg("lambda_"), py::arg("M"));
}
