#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pinf/acceptance.hpp"
#include "pinf/certificate.hpp"
#include "pinf/cli.hpp"
#include "pinf/expr.hpp"
#include "pinf/json.hpp"

namespace py = pybind11;
using namespace pinf;

namespace {

Domain make_domain(std::size_t n, const std::string& field, int precision = 16) {
  Domain d{Field::parse(field), n, false};
  d.precision = precision;
  return d;
}

using Skew = SkewElem<LinRep>;

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rational series, skew extensions, Leavitt algebras, K0 and generator matrices.";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<MathError>(m, "MathError", error.ptr());
  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", input_error.ptr());
  py::register_exception<Mismatch>(m, "Mismatch", PyExc_ValueError);

  m.def("canonical", [](const std::string& text) { return parse_expr(text).to_string(); },
        "Parse an expression and print it back with minimal parentheses.", py::arg("text"));

  py::class_<LinRep>(m, "Series", "Rational series given by a minimal linear representation.")
      .def_static(
          "parse",
          [](const std::string& text, std::size_t n, const std::string& field) {
            return eval_series(parse_expr(text), make_domain(n, field));
          },
          py::arg("text"), py::arg("n") = 2, py::arg("field") = "q")
      .def_static("from_json", [](const std::string& s) { return linrep_from_json(Json::parse(s)); })
      .def("__add__", [](const LinRep& a, const LinRep& b) { return a + b; })
      .def("__sub__", [](const LinRep& a, const LinRep& b) { return a - b; })
      .def("__mul__", [](const LinRep& a, const LinRep& b) { return a * b; })
      .def("__neg__", [](const LinRep& a) { return -a; })
      .def("__eq__", [](const LinRep& a, const LinRep& b) { return a == b; })
      .def("inverse", &LinRep::inverse)
      .def("transduce", [](const LinRep& a, Letter i) { return a.transduce(i); }, py::arg("letter"))
      .def("coefficient",
           [](const LinRep& a, const std::vector<Letter>& w) { return a.coefficient(Word(w)).to_string(); },
           py::arg("word"))
      .def("truncation", [](const LinRep& a, std::size_t len) { return a.truncation(len).to_string(); },
           py::arg("length"))
      .def_property_readonly("dim", &LinRep::dim)
      .def("is_zero", &LinRep::is_zero)
      .def("to_json", [](const LinRep& a) { return to_json(a).dump(); })
      .def("__str__", &LinRep::to_string)
      .def("__repr__", [](const LinRep& a) { return "<Series " + a.to_string() + ">"; });

  py::class_<Skew>(m, "SkewElement", "Element of S = R<Y; tau, delta> over rational series.")
      .def_static(
          "parse",
          [](const std::string& text, std::size_t n, const std::string& field) {
            return eval_skew(parse_expr(text), make_domain(n, field));
          },
          py::arg("text"), py::arg("n") = 2, py::arg("field") = "q")
      .def("__add__", [](const Skew& a, const Skew& b) { return a + b; })
      .def("__sub__", [](const Skew& a, const Skew& b) { return a - b; })
      .def("__mul__", [](const Skew& a, const Skew& b) { return a * b; })
      .def("__neg__", [](const Skew& a) { return -a; })
      .def("__eq__", [](const Skew& a, const Skew& b) { return a.equals(b); })
      .def("in_ideal", [](const Skew& a) { return ideal_member(a).value; },
           "Membership in the ideal generated by e.")
      .def("equal_in_quotient", [](const Skew& a, const Skew& b) { return t_equal(a, b).value; })
      .def("to_json", [](const Skew& a) { return to_json(a).dump(); })
      .def("__str__", &Skew::to_string)
      .def("__repr__", [](const Skew& a) { return "<SkewElement " + a.to_string() + ">"; });

  py::class_<UElem>(m, "LeavittElement", "Element of U_{1,n} in the monoword basis, letters from 1.")
      .def_static(
          "parse",
          [](const std::string& text, std::size_t n, const std::string& field, bool dynamic) {
            return eval_leavitt(parse_expr(text), Field::parse(field), n, dynamic);
          },
          py::arg("text"), py::arg("n") = 2, py::arg("field") = "q", py::arg("dynamic") = false)
      .def("__add__", [](const UElem& a, const UElem& b) { return a + b; })
      .def("__sub__", [](const UElem& a, const UElem& b) { return a - b; })
      .def("__mul__", [](const UElem& a, const UElem& b) { return a * b; })
      .def("__neg__", [](const UElem& a) { return -a; })
      .def("__eq__", [](const UElem& a, const UElem& b) { return (a - b).is_zero(); })
      .def("normal_form", [](const UElem& a) { return v_normal_form(a); }, "Normal form in V_{1,n}.")
      .def("is_zero", &UElem::is_zero)
      .def_property_readonly("n", &UElem::n)
      .def("__str__", &UElem::to_string)
      .def("__repr__", [](const UElem& a) { return "<LeavittElement " + a.to_string() + ">"; });

  m.def("t_certificate", [](const std::string& alpha, std::size_t n, const std::string& field) {
    return t_certificate(alpha, make_domain(n, field)).dump();
  }, py::arg("alpha"), py::arg("n") = 2, py::arg("field") = "q");
  m.def("v_certificate", [](const std::string& alpha, std::size_t n, const std::string& field, bool infinite) {
    return (infinite ? uinf_certificate(alpha, Field::parse(field), n) : v_certificate(alpha, Field::parse(field), n))
        .dump();
  }, py::arg("alpha"), py::arg("n") = 2, py::arg("field") = "q", py::arg("infinite") = false);
  m.def("verify_certificate", [](const std::string& cert) {
    CertificateCheck c = verify_certificate(Json::parse(cert));
    return py::make_tuple(c.valid, c.detail);
  }, py::arg("certificate"));

  m.def("k0", [](const std::string& presentation, std::size_t bound) {
    MonoidPresentation p = MonoidPresentation::parse(presentation);
    AbGroup g = grothendieck_group(p);
    Json j = to_json(g);
    Json gens = Json::object();
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
      Json v = Json::array();
      for (const auto& z : g.images[i]) v.push_back(z.get_si());
      gens[p.generators[i]] = v;
    }
    j["generators"] = gens;
    if (bound > 0) j["shape_report"] = to_json(analyze_pisr_shape(p, bound));
    return j.dump();
  }, py::arg("presentation"), py::arg("bound") = 64);

  m.def("realize", [](long n, long target, long mult, bool tamper) {
    HomSpec spec{n, target, mult};
    spec.validate();
    GeneratorMatrices g = build_generators(spec);
    if (tamper) g = tampered(g);
    return Json{{"generators", to_json(g)}, {"report", to_json(verify_generators(g))}}.dump();
  }, py::arg("source"), py::arg("target"), py::arg("mult"), py::arg("tamper") = false);

  m.def("acceptance", [](std::uint64_t seed, const std::vector<int>& only) {
    py::list out;
    for (const auto& r : run_acceptance(seed, only)) {
      py::dict d;
      d["id"] = r.id;
      d["name"] = r.name;
      d["pass"] = r.pass;
      d["seconds"] = r.seconds;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  }, py::arg("seed") = kDefaultSeed, py::arg("only") = std::vector<int>{});

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    std::istringstream in;
    int code = run_command(args, out, err, &in);
    return py::make_tuple(code, out.str(), err.str());
  }, "Run a command line as the pinf tool would; returns (exit code, stdout, stderr).", py::arg("args"));
}
