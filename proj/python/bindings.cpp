#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "robin/bessel.hpp"
#include "robin/errors.hpp"
#include "robin/radial.hpp"
#include "robin/shape.hpp"
#include "robin/suite.hpp"
#include "robin/theorems.hpp"

namespace py = pybind11;
using namespace robin;

namespace {

SolverConfig with_tol(double tol) {
  SolverConfig c;
  c.ode.abs = tol;
  c.ode.rel = tol;
  return c;
}

py::dict pair_dict(const Eigenpair& p) {
  py::dict d;
  d["lambda"] = p.lambda;
  d["ell"] = p.mode.ell;
  d["n"] = p.n;
  d["multiplicity"] = p.mode.multiplicity;
  d["radius"] = p.profile.radius;
  d["value"] = p.profile.value;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<DomainSpec>(m, "Domain")
      .def_static("ball", &DomainSpec::ball, py::arg("dim"), py::arg("radius"))
      .def_static("annulus", &DomainSpec::annulus, py::arg("dim"), py::arg("inner"), py::arg("outer"))
      .def_property_readonly("dim", &DomainSpec::dimension)
      .def_property_readonly("is_ball", &DomainSpec::is_ball)
      .def_property_readonly("inner_radius", &DomainSpec::inner_radius)
      .def_property_readonly("outer_radius", &DomainSpec::outer_radius)
      .def("__repr__", &DomainSpec::describe);

  m.def(
      "first_eigenvalue",
      [](const DomainSpec& d, double alpha, int ell, const std::string& engine, double tol) {
        const RobinProblem p(d, alpha);
        const auto mode = ModeSpec::make(d.dimension(), ell);
        if (engine == "shooting") return first_eigenpair(p, mode, with_tol(tol)).lambda;
        if (engine == "bessel") return eigenvalue_bessel(p, mode, with_tol(tol)).lambda;
        throw std::invalid_argument("engine must be 'shooting' or 'bessel'");
      },
      py::arg("domain"), py::arg("alpha"), py::arg("ell") = 0, py::arg("engine") = "shooting",
      py::arg("tol") = 1e-12);

  m.def(
      "eigenpairs",
      [](const DomainSpec& d, double alpha, int ell, std::size_t count, double tol) {
        py::list out;
        for (const auto& p : lowest_eigenpairs(RobinProblem(d, alpha), ModeSpec::make(d.dimension(), ell), count,
                                               with_tol(tol)))
          out.append(pair_dict(p));
        return out;
      },
      py::arg("domain"), py::arg("alpha"), py::arg("ell") = 0, py::arg("count") = 1, py::arg("tol") = 1e-12);

  m.def(
      "spectrum",
      [](const DomainSpec& d, double alpha, std::size_t count, int max_ell, double tol) {
        return assemble_spectrum(RobinProblem(d, alpha), max_ell < 0 ? static_cast<int>(count) : max_ell, count,
                                 with_tol(tol))
            .values();
      },
      py::arg("domain"), py::arg("alpha"), py::arg("count"), py::arg("max_ell") = -1, py::arg("tol") = 1e-12);

  m.def(
      "hadamard_outer",
      [](double r1, double r2, double alpha, double fd_step) {
        const RobinProblem p(DomainSpec::annulus(2, r1, r2), alpha);
        const auto rep = derivative_report(p, BoundaryField::outer_normal(), fd_step);
        py::dict d;
        d["hadamard"] = rep.hadamard_value;
        d["finite_difference"] = rep.fd_value;
        d["rel_discrepancy"] = rep.rel_discrepancy;
        return d;
      },
      py::arg("r1"), py::arg("r2"), py::arg("alpha"), py::arg("fd_step") = 1e-4);

  m.def(
      "stationarity_G",
      [](double r1, double r2, double alpha, double tol) { return stationarity_G(r1, r2, alpha, with_tol(tol)); },
      py::arg("r1"), py::arg("r2"), py::arg("alpha"), py::arg("tol") = 1e-12);
  m.def(
      "locate_stationary_alpha",
      [](double r1, double r2, double lo, double hi, double tol) {
        return locate_stationary_alpha(r1, r2, lo, hi, with_tol(tol));
      },
      py::arg("r1"), py::arg("r2"), py::arg("alpha_lo"), py::arg("alpha_hi"), py::arg("tol") = 1e-12);

  m.def("bessel_i", &bessel::bessel_i, py::arg("nu"), py::arg("x"));
  m.def("bessel_k", &bessel::bessel_k, py::arg("nu"), py::arg("x"));
  m.def("bessel_i_prime", &bessel::bessel_i_prime, py::arg("nu"), py::arg("x"));
  m.def("bessel_k_prime", &bessel::bessel_k_prime, py::arg("nu"), py::arg("x"));

  m.def("suite_names", &suite_names);
  m.def(
      "verify",
      [](const std::string& suite, const std::string& config_json) {
        const auto rc = parse_run_config(config_json);
        return summary_json(run_suite(suite, rc));
      },
      py::arg("suite") = "all", py::arg("config_json") = "{}",
      "Run a verification suite and return the summary as JSON text.");
}
