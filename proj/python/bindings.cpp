#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qplane/ansatz.hpp"
#include "qplane/coalgebra.hpp"
#include "qplane/covariance.hpp"
#include "qplane/parser.hpp"
#include "qplane/presentations.hpp"
#include "qplane/series_oracle.hpp"
#include "qplane/suites.hpp"
#include "qplane/term_engine.hpp"

namespace py = pybind11;
using namespace qplane;

namespace {

std::string normalize_text(const std::string& presentation, const std::string& text) {
  auto p = get_presentation(presentation);
  ParsedExpr e = parse(text, *p);
  if (auto* a = std::get_if<AlgElement>(&e)) return format(p->normalize(*a), *p);
  return format(tensor_normalize(std::get<TensorElement>(e), slot_algebra(p)), *p);
}

PhiVariant phi_variant(const std::string& name) {
  if (name == "printed") return PhiVariant::Printed;
  if (name == "derived") return PhiVariant::Derived;
  throw std::invalid_argument("phiL must be 'printed' or 'derived'");
}

void raise_parse_error(PyObject* type, const char* what, std::size_t offset, std::size_t length) {
  py::object err = py::reinterpret_borrow<py::object>(type)(what);
  err.attr("offset") = offset;
  err.attr("length") = length;
  PyErr_SetObject(type, err.ptr());
}

}  // namespace

PYBIND11_MODULE(_qplane, m) {
  m.doc() = "Exact verification engine for the differential calculus on [X, Y] = hY";

  py::register_exception<UnknownPresentation>(m, "UnknownPresentation", PyExc_KeyError);
  // Leaked on purpose: the translator may run until interpreter shutdown.
  static PyObject* parse_error = py::exception<ParseError>(m, "ParseError", PyExc_ValueError).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      raise_parse_error(parse_error, e.what(), e.offset, e.length);
    } catch (const ForeignSymbol& e) {
      raise_parse_error(parse_error, e.what(), e.offset, e.length);
    }
  });

  py::enum_<Status>(m, "Status").value("PASS", Status::Pass).value("FAIL", Status::Fail).value("FINDING", Status::Finding);

  py::class_<CheckRecord>(m, "CheckRecord")
      .def_readonly("id", &CheckRecord::id)
      .def_readonly("status", &CheckRecord::status)
      .def_readonly("witness", &CheckRecord::witness)
      .def_readonly("residual", &CheckRecord::residual)
      .def("__repr__", [](const CheckRecord& c) { return "<" + to_string(c.status) + " " + c.id + ">"; });

  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("suite", &CheckReport::suite)
      .def_readonly("checks", &CheckReport::checks)
      .def_readonly("timing_ms", &CheckReport::timing_ms)
      .def("ok", &CheckReport::ok)
      .def("count", &CheckReport::count)
      .def("find", [](const CheckReport& r, const std::string& id) -> std::optional<CheckRecord> {
        const auto* c = r.find(id);
        return c ? std::optional<CheckRecord>(*c) : std::nullopt;
      })
      .def("to_json", &CheckReport::to_json, py::arg("with_timing") = false)
      .def("to_text", &CheckReport::to_text, py::arg("verbose") = false)
      .def("__repr__", [](const CheckReport& r) {
        return "<CheckReport " + r.suite + ": " + std::to_string(r.count(Status::Pass)) + " passed, " +
               std::to_string(r.count(Status::Fail)) + " failed, " + std::to_string(r.count(Status::Finding)) +
               " findings>";
      });

  m.def("presentations", [] { return Catalog::instance().names(); }, "names of the catalog presentations");
  m.def("catalog_table", &catalog_table, "alphabets and rules of every presentation");
  m.def("normalize", &normalize_text, py::arg("presentation"), py::arg("expr"),
        "normal form of an element or '@'-separated tensor");

  m.def(
      "check_all",
      [](std::uint64_t seed) {
        CheckAllOptions opts;
        opts.seed = seed;
        return check_all(opts);
      },
      py::arg("seed") = 42);
  m.def("relation_suite", &relation_suite);
  m.def("confluence", [](const std::string& p, int max_degree) { return check_confluence(*get_presentation(p), max_degree); },
        py::arg("presentation"), py::arg("max_degree") = 4);
  m.def("hopf", [](const std::string& p, int samples, std::uint64_t seed) { return hopf_suite(p, samples, seed); },
        py::arg("presentation"), py::arg("samples") = 100, py::arg("seed") = 42);
  m.def("gamma_hopf", [](std::uint64_t seed) { return graded_hopf_gamma(true, 40, seed); }, py::arg("seed") = 42);
  m.def(
      "covariance",
      [](const std::string& phiL, int samples, std::uint64_t seed) {
        if (phiL == "both") return covariance_suite(true, true, samples, seed);
        return check_bicovariance(phi_variant(phiL), samples, seed);
      },
      py::arg("phiL") = "both", py::arg("samples") = 40, py::arg("seed") = 42);
  m.def("consistency", &consistency_derivation);
  m.def("ansatz", &ansatz_suite, "generate the coefficient constraints and verify the solution");
  m.def(
      "ansatz_system",
      [](bool with_covariance) {
        auto s = generate_consistency_system();
        return (with_covariance ? generate_covariance_system(s, PhiVariant::Derived) : s).to_text();
      },
      py::arg("with_covariance") = true);
  m.def("oracle", &run_oracle_suite, py::arg("cutoff") = 6);
  m.def("parser_suite", &parser_suite, py::arg("per_presentation") = 1000, py::arg("seed") = 42);
}
