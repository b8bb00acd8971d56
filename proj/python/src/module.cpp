#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bandlimit/lids.hpp"
#include "bandlimit/monotone_l2.hpp"
#include "bandlimit/monotone_poly.hpp"
#include "bandlimit/parallel.hpp"
#include "bandlimit/represent.hpp"
#include "bandlimit/run.hpp"
#include "bandlimit/sharp_ineq.hpp"

namespace py = pybind11;
namespace bl = bandlimit;

namespace {

py::object band_call(const bl::BandFunction& f, py::object x) {
  return py::vectorize([&f](double v) { return f(v); })(x);
}

bl::WeightPoly weight(const std::vector<double>& coeffs) { return bl::WeightPoly(coeffs); }

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Band-limited extremal problems: numerical bounds and sharp constants";
  m.attr("__version__") = BANDLIMIT_VERSION;

  static py::exception<bl::NumericalError> numerical(m, "NumericalError", PyExc_ArithmeticError);
  static py::exception<bl::DomainError> domain(m, "DomainError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const bl::NumericalError& e) {
      py::set_error(numerical, e.what());
    } catch (const bl::DomainError& e) {
      py::set_error(domain, e.what());
    }
  });

  m.def("set_thread_count", &bl::set_thread_count, py::arg("n"));
  m.def("thread_count", &bl::thread_count);

  // special functions, vectorized over numpy input
  m.def("sinc_pw", py::vectorize(&bl::sinc_pw));
  m.def("fejer", py::vectorize(&bl::fejer));
  m.def("h0", py::vectorize(&bl::h0));
  m.def("h0_hat", py::vectorize(&bl::h0_hat));
  m.def("f0", py::vectorize(&bl::f0));
  m.def("f_half", py::vectorize(&bl::f_half));
  m.def("f_half_hat", py::vectorize(&bl::f_half_hat));
  m.def("hk", py::vectorize(&bl::hk), py::arg("k"), py::arg("x"));
  m.def("bessel_g", py::vectorize(&bl::bessel_g), py::arg("alpha"), py::arg("x"));

  py::class_<bl::BandFunction>(m, "BandFunction")
      .def("__call__", &band_call, py::arg("x"))
      .def_readonly("label", &bl::BandFunction::label)
      .def_readonly("type_bound", &bl::BandFunction::type_bound);

  py::class_<bl::MonotoneSolution>(m, "MonotoneSolution")
      .def_readonly("d", &bl::MonotoneSolution::d)
      .def_readonly("bound", &bl::MonotoneSolution::bound)
      .def_readonly("coeffs", &bl::MonotoneSolution::coeffs)
      .def_readonly("rayleigh", &bl::MonotoneSolution::rayleigh)
      .def_readonly("h", &bl::MonotoneSolution::h);

  m.def(
      "solve_poly",
      [](int d, double tol, const std::string& path) {
        if (path != "exact" && path != "quadrature")
          throw bl::DomainError("path must be 'exact' or 'quadrature'");
        return bl::solve_poly(d, tol, path == "exact" ? bl::DPath::exact : bl::DPath::quadrature);
      },
      py::arg("d"), py::arg("tol") = 1e-10, py::arg("path") = "exact");
  m.def("certify_d2_exact", [] {
    const auto r = bl::certify_d2_exact();
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::int_(py::str(numerator(r).str())), py::int_(py::str(denominator(r).str())));
  });

  py::class_<bl::L2Solution>(m, "L2Solution")
      .def_readonly("d", &bl::L2Solution::d)
      .def_readonly("lam", &bl::L2Solution::lambda)
      .def_readonly("bound", &bl::L2Solution::bound)
      .def_readonly("coeffs", &bl::L2Solution::coeffs)
      .def_readonly("rayleigh", &bl::L2Solution::rayleigh)
      .def_readonly("h", &bl::L2Solution::h);
  m.def(
      "solve_l2", [](int d, double tol) { return bl::solve_l2(d, tol); }, py::arg("d"),
      py::arg("tol") = 1e-10);
  m.def(
      "extremizer_zeros",
      [](const bl::BandFunction& h, int count, double tol) {
        return bl::extremizer_zeros(h, count, tol).zeros;
      },
      py::arg("h"), py::arg("count") = 10, py::arg("tol") = 1e-10);
  m.def("h0_function", &bl::make_h0);
  m.def(
      "quotient", [](const bl::BandFunction& h, double tol) { return bl::quotient(h, tol).value; },
      py::arg("h"), py::arg("tol") = 1e-10);
  m.def(
      "orthonormality_deviation",
      [](int kmax, double tol) { return bl::check_orthonormal(kmax, tol).max_deviation(); },
      py::arg("kmax") = 21, py::arg("tol") = 1e-9);

  m.def(
      "bessel_lid_ratio", [](double a, double tol) { return bl::bessel_lid_ratio(a, tol).value; },
      py::arg("alpha"), py::arg("tol") = 1e-10);
  m.def("bessel_lid_ratio_closed", &bl::bessel_lid_ratio_closed, py::arg("alpha"));
  py::class_<bl::AlphaMinimum>(m, "AlphaMinimum")
      .def_readonly("alpha", &bl::AlphaMinimum::alpha)
      .def_readonly("ratio", &bl::AlphaMinimum::ratio)
      .def_readonly("at_boundary", &bl::AlphaMinimum::at_boundary)
      .def_readonly("unimodal", &bl::AlphaMinimum::unimodal);
  m.def("minimize_alpha", &bl::minimize_alpha, py::arg("lo") = 0.3, py::arg("hi") = 2.0,
        py::arg("tol") = 1e-4, py::arg("quad_tol") = 1e-10);

  m.def(
      "sharp_constant",
      [](const std::vector<double>& p, double tol) { return bl::sharp_constant(weight(p), tol); },
      py::arg("coeffs"), py::arg("tol") = 1e-10);
  m.def(
      "extremal_g",
      [](const std::vector<double>& p, double x, double tol) { return bl::extremal_g(weight(p), x, tol); },
      py::arg("coeffs"), py::arg("x"), py::arg("tol") = 1e-10);
  m.def("log_corollary_constant", &bl::log_corollary_constant, py::arg("a"));
  m.def("arctan_corollary_constant", &bl::arctan_corollary_constant, py::arg("a"));
  m.def(
      "random_margin",
      [](const std::vector<double>& p, std::uint64_t seed, double tol) {
        const auto P = weight(p);
        return bl::functional(P, bl::random_profile(seed), tol) - bl::sharp_constant(P, tol);
      },
      py::arg("coeffs"), py::arg("seed"), py::arg("tol") = 1e-10);

  m.def(
      "run_json",
      [](const std::string& command, const py::dict& options) {
        bl::RunConfig c;
        c.command = command;
        for (auto [k, v] : options) {
          const auto key = py::cast<std::string>(k);
          if (key == "d") c.d = py::cast<int>(v);
          else if (key == "alpha") c.alpha = py::cast<double>(v);
          else if (key == "lo") c.lo = py::cast<double>(v);
          else if (key == "hi") c.hi = py::cast<double>(v);
          else if (key == "alpha_tol") c.alpha_tol = py::cast<double>(v);
          else if (key == "tol") c.tol = py::cast<double>(v);
          else if (key == "seed") c.seed = py::cast<std::uint64_t>(v);
          else if (key == "poly") c.poly = py::cast<std::string>(v);
          else if (key == "pipeline") c.pipeline = py::cast<std::string>(v);
          else if (key == "path") c.path = py::cast<std::string>(v);
          else if (key == "count") c.count = py::cast<int>(v);
          else if (key == "draws") c.draws = py::cast<int>(v);
          else if (key == "allow_large") c.allow_large = py::cast<bool>(v);
          else if (key == "out_dir") c.out_dir = py::cast<std::string>(v);
          else throw bl::DomainError("unknown option '" + key + "'");
        }
        return bl::format_json(bl::run(c));
      },
      py::arg("command"), py::arg("options") = py::dict());
}
