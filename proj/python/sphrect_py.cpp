#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sphrect/accessory.hpp"
#include "sphrect/belyi.hpp"
#include "sphrect/constants.hpp"
#include "sphrect/developing.hpp"
#include "sphrect/elliptic.hpp"
#include "sphrect/error.hpp"
#include "sphrect/modulus.hpp"

namespace py = pybind11;
using namespace sphrect;

namespace {

SolverTolerances tolerances(double quad, double root) {
  SolverTolerances tol;
  tol.quad = quad;
  tol.root = root;
  return tol;
}

py::object point(const std::optional<ComplexHP>& z) {
  if (!z) return py::str("inf");
  return py::cast(std::complex<double>(static_cast<double>(z->real()), static_cast<double>(z->imag())));
}

py::dict belyi_dict(int n, bool printed_t) {
  const RationalMap map =
      example_map(n, printed_t ? Example2Coefficient::Printed : Example2Coefficient::Corrected);
  const BelyiAnalysis a = analyze_belyi(map, 1e-10);
  py::list points;
  for (const auto& p : a.portrait.points) {
    points.append(py::dict(py::arg("point") = point(p.point), py::arg("local_degree") = p.local_degree,
                           py::arg("value") = to_string(p.value)));
  }
  py::dict d;
  d["name"] = map.name;
  d["degree"] = map.degree();
  d["portrait"] = points;
  d["riemann_hurwitz"] = a.portrait.riemann_hurwitz_holds();
  d["fibre_sums"] = a.portrait.fibre_sums_hold();
  d["max_deviation"] = a.max_deviation;
  d["belyi"] = a.belyi;
  if (n == 2) {
    py::dict conditions;
    for (const auto& c : example2_conditions(map, 1e-10)) conditions[py::str(c.name)] = c.residual;
    d["conditions"] = conditions;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_sphrect, m) {
  m.doc() = "Spherical rectangles with angles (3/2, 1/2, 3/2, 1/2)";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SingularPointError>(m, "SingularPointError", domain.ptr());
  py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_ArithmeticError);
  py::register_exception<BracketError>(m, "BracketError", PyExc_ArithmeticError);
  py::register_exception<BelyiViolation>(m, "BelyiViolation", PyExc_RuntimeError);

  m.def("agm", &agm, py::arg("a"), py::arg("b"));
  m.def("ellip_K", py::overload_cast<double>(&ellip_K), py::arg("kappa"));
  m.def("ellip_E", py::overload_cast<double>(&ellip_E), py::arg("kappa"));

  m.def("critical_constants", [] {
    const auto& cc = critical_constants();
    py::dict d;
    d["kappa_prime_crit"] = cc.kappa_prime_crit;
    d["kappa_crit"] = cc.kappa_crit;
    d["k_crit"] = cc.k_crit;
    d["K_crit"] = cc.K_crit;
    d["lambda"] = cc.lambda;
    d["b1"] = cc.b1;
    return d;
  });

  m.def("modulus_of_k", &modulus_of_k, py::arg("k"));
  m.def("modulus_oracle", &modulus_oracle, py::arg("k"), py::arg("tol") = 1e-12);
  m.def("k_of_modulus", &k_of_modulus, py::arg("modulus"));
  m.def("bethe_h", &bethe_h, py::arg("k"), py::arg("x"));

  py::class_<AccessorySolution>(m, "AccessorySolution")
      .def_property_readonly("k", [](const AccessorySolution& s) { return s.param.k(); })
      .def_property_readonly("family", [](const AccessorySolution& s) { return std::string(to_string(s.param.family())); })
      .def_readonly("c", &AccessorySolution::c)
      .def_property_readonly("d", &AccessorySolution::d)
      .def_readonly("amplitude", &AccessorySolution::amplitude)
      .def_readonly("alpha", &AccessorySolution::alpha)
      .def_readonly("alpha_orbit", &AccessorySolution::alpha_orbit)
      .def_readonly("alpha_ambiguous", &AccessorySolution::alpha_ambiguous)
      .def_readonly("modulus", &AccessorySolution::modulus)
      .def_readonly("residual", &AccessorySolution::residual)
      .def("__repr__", [](const AccessorySolution& s) {
        return "AccessorySolution(k=" + std::to_string(s.param.k()) + ", c=" + std::to_string(s.c) +
               ", alpha=" + std::to_string(s.alpha) + ")";
      });

  const auto quad = kDefaultQuadTolerance;
  m.def("solve", [](double k, double q, double r) { return solve(k, tolerances(q, r)); }, py::arg("k"),
        py::arg("tol_quad") = quad, py::arg("tol_root") = 1e-12);
  m.def("solve_family1", [](double k, double q, double r) { return solve_family1(k, tolerances(q, r)); },
        py::arg("k"), py::arg("tol_quad") = quad, py::arg("tol_root") = 1e-12);
  m.def("solve_family2", [](double k, double q, double r) { return solve_family2(k, tolerances(q, r)); },
        py::arg("k"), py::arg("tol_quad") = quad, py::arg("tol_root") = 1e-12);

  m.def("L_eval", &L_eval, py::arg("solution"), py::arg("z"), py::arg("tol") = quad);
  m.def("extract_alpha", &extract_alpha, py::arg("solution"), py::arg("tol") = quad);

  m.def(
      "boundary_check",
      [](const AccessorySolution& sol, int samples) {
        const auto r = boundary_check(sol, samples);
        py::list sides;
        for (const auto& s : r.sides) {
          sides.append(py::dict(py::arg("side") = std::string(to_string(s.side)),
                                py::arg("expected_circle") = std::string(to_string(s.expected)),
                                py::arg("max_distance") = s.max_distance));
        }
        py::dict d;
        d["alpha"] = r.alpha;
        d["sides"] = sides;
        d["unit_circle_pair_opposite"] = r.unit_circle_pair_opposite;
        d["two_circle_witness"] = r.two_circle_witness;
        d["max_distance"] = r.max_distance;
        return d;
      },
      py::arg("solution"), py::arg("samples") = 100);

  m.def("dihedral_invariant", &dihedral_invariant, py::arg("q"), py::arg("z"));
  m.def("belyi_report", &belyi_dict, py::arg("example"), py::arg("printed_t") = false);
}
