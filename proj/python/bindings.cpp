#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "polydom/axioms.hpp"
#include "polydom/bench.hpp"
#include "polydom/cli.hpp"
#include "polydom/groebner.hpp"
#include "polydom/textio.hpp"

namespace py = pybind11;
using namespace polydom;

namespace {

PolynomialRing make_ring(const std::vector<std::string>& vars, const std::string& domain,
                         const std::string& rep) {
  return PolynomialRing(domain_from_descriptor(domain), VariableBase(vars),
                        representation_from_name(rep));
}

py::list poly_terms(const Polynomial& p) {
  py::list terms;
  const CoefficientDomain& dom = p.ring().domain();
  for (std::size_t i = 1; i <= p.term_count(); ++i) {
    terms.append(py::make_tuple(p.monomial_at(i).exponents(), dom.render(p.coef_at(i))));
  }
  return terms;
}

py::dict report_to_dict(const AxiomReport& report) {
  py::dict out;
  out["domain"] = report.domain;
  out["kind"] = to_string(report.kind);
  out["samples"] = report.samples;
  out["seed"] = report.seed;
  py::list checks;
  for (const auto& check : report.checks) {
    py::dict c;
    c["axiom"] = check.axiom;
    c["structural"] = check.structural;
    c["passed"] = check.passed;
    c["counterexample"] = check.counterexample;
    checks.append(std::move(c));
  }
  out["checks"] = std::move(checks);
  out["all_passed"] = report.all_passed();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Parameterized polynomial domains with Buchberger's Groebner basis algorithms";

  py::register_exception<polydom::Error>(m, "AlgebraError");

  py::class_<Polynomial>(m, "Polynomial")
      .def("__str__", [](const Polynomial& p) { return render_polynomial(p); })
      .def("__repr__",
           [](const Polynomial& p) { return "Polynomial('" + render_polynomial(p) + "')"; })
      .def("__add__",
           [](const Polynomial& a, const Polynomial& b) { return a.ring().add(a, b); })
      .def("__sub__",
           [](const Polynomial& a, const Polynomial& b) { return a.ring().sub(a, b); })
      .def("__mul__",
           [](const Polynomial& a, const Polynomial& b) { return a.ring().mul(a, b); })
      .def("__eq__",
           [](const Polynomial& a, const Polynomial& b) { return a.ring().equal(a, b); })
      .def("is_null", &Polynomial::is_null)
      .def("term_count", &Polynomial::term_count)
      .def("terms", &poly_terms,
           "Ascending (exponents, coefficient-text) pairs; the leading term is last.")
      .def("leading_monomial",
           [](const Polynomial& p) { return p.leading_monomial().exponents(); })
      .def("leading_coef",
           [](const Polynomial& p) { return p.ring().domain().render(p.leading_coef()); });

  py::class_<PolynomialRing>(m, "Ring")
      .def(py::init(&make_ring), py::arg("vars"), py::arg("domain") = "z",
           py::arg("rep") = "sorted_pairs")
      .def_property_readonly("vars",
                             [](const PolynomialRing& r) { return r.base().names(); })
      .def_property_readonly("domain",
                             [](const PolynomialRing& r) { return r.domain().descriptor(); })
      .def_property_readonly(
          "rep", [](const PolynomialRing& r) { return to_string(r.representation()); })
      .def("zero", &PolynomialRing::zero)
      .def("parse",
           [](const PolynomialRing& r, const std::string& text) {
             return parse_polynomial(text, r);
           })
      .def("render", [](const PolynomialRing&, const Polynomial& p) {
        return render_polynomial(p);
      })
      .def("add", &PolynomialRing::add)
      .def("sub", &PolynomialRing::sub)
      .def("mul", &PolynomialRing::mul)
      .def("convert",
           [](const PolynomialRing& r, const Polynomial& p, const std::string& rep) {
             return r.convert(p, representation_from_name(rep));
           })
      .def("is_normal",
           [](const PolynomialRing& r, const PolynomialSet& F, const Polynomial& g) {
             return is_normal(r, F, g);
           })
      .def("normal_form",
           [](const PolynomialRing& r, const PolynomialSet& F, const Polynomial& p) {
             return normal_form(r, F, p);
           })
      .def("s_polynomial",
           [](const PolynomialRing& r, const Polynomial& a, const Polynomial& b) {
             return s_polynomial(r, a, b);
           })
      .def("groebner_basis",
           [](const PolynomialRing& r, const PolynomialSet& F) {
             return groebner_basis(r, F);
           })
      .def("reduced_groebner_basis", [](const PolynomialRing& r, const PolynomialSet& F) {
        return reduced_groebner_basis(r, F);
      });

  m.def(
      "axiom_report",
      [](const std::string& domain, const std::string& kind, std::size_t samples,
         std::uint64_t seed) {
        return report_to_dict(
            axiom_suite(*domain_from_descriptor(domain), structure_kind_from_name(kind),
                        samples, seed));
      },
      py::arg("domain"), py::arg("kind"), py::arg("samples") = 500, py::arg("seed") = 42);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Runs the command line front end in-process; returns (exit_code, stdout, stderr).");
}
