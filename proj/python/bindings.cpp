// Python bindings. Rationals cross the boundary as (numerator, denominator)
// string pairs; the pure-Python layer turns them into fractions.Fraction.
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bch/census.hpp"
#include "bch/errors.hpp"
#include "bch/goldberg.hpp"
#include "bch/lie.hpp"
#include "bch/reinsch.hpp"
#include "bch/report.hpp"
#include "bch/verify.hpp"

namespace py = pybind11;

namespace {

using RationalPair = std::pair<std::string, std::string>;
using TermList = std::vector<std::pair<std::string, RationalPair>>;

RationalPair to_pair(const bch::Rational& r) { return {r.numerator().get_str(), r.denominator().get_str()}; }

TermList to_terms(const bch::FreePoly& p) {
  TermList out;
  for (const bch::Term& t : p) out.emplace_back(t.word.to_string(), to_pair(t.coeff));
  return out;
}

bch::EngineOptions options(unsigned threads, bool full_matrix) {
  bch::EngineOptions o;
  o.threads = threads;
  if (full_matrix) o.mode = bch::EngineOptions::Mode::full_matrix;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Baker-Campbell-Hausdorff series terms";

  py::register_exception<bch::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<bch::ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("variants", [] {
    std::vector<std::string> out;
    for (bch::Variant v : bch::kAllVariants) out.emplace_back(bch::variant_name(v));
    return out;
  });

  m.def(
      "series_terms",
      [](const std::string& variant, std::size_t order, unsigned threads, bool full_matrix) {
        std::vector<std::pair<std::size_t, TermList>> out;
        const auto terms = bch::series_terms(bch::preset(variant), order, options(threads, full_matrix));
        for (const auto& t : terms) out.emplace_back(t.degree, to_terms(t.body));
        return out;
      },
      py::arg("variant"), py::arg("order"), py::arg("threads") = 1, py::arg("full_matrix") = false,
      py::call_guard<py::gil_scoped_release>());

  m.def("engine_coefficient", [](const std::string& w) { return to_pair(bch::engine_coefficient(bch::Word::parse(w))); },
        py::arg("word"));
  m.def("goldberg_direct", [](const std::string& w) { return to_pair(bch::goldberg_direct(bch::Word::parse(w))); },
        py::arg("word"));
  m.def("goldberg_xy", [](int a, int b) { return to_pair(bch::goldberg_xy(a, b)); }, py::arg("a"), py::arg("b"));
  m.def("bernoulli", [](int n) { return to_pair(bch::bernoulli(n)); }, py::arg("n"));

  m.def(
      "census",
      [](std::size_t n_min, std::size_t n_max, const std::string& variant, unsigned threads) {
        return bch::report::dump(bch::report::census_json(
            bch::census_table(n_min, n_max, bch::preset(variant), options(threads, false))));
      },
      py::arg("n_min"), py::arg("n_max"), py::arg("variant") = "standard", py::arg("threads") = 1,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "expand_commutators",
      [](const std::string& text) { return to_terms(bch::expand_comm_poly(bch::CommPoly::parse(text))); },
      py::arg("text"));

  m.def(
      "dynkin_series", [](std::size_t n) { return bch::dynkin_series(n).to_string(); }, py::arg("n"));

  m.def(
      "is_lie_element", [](const std::string& poly) { return bch::lie_element_check(bch::FreePoly::parse(poly)).is_lie; },
      py::arg("poly"));

  m.def(
      "verify",
      [](const std::string& suite, std::size_t max_n) {
        return bch::report::dump(bch::run_suite(bch::parse_suite(suite), max_n).to_json());
      },
      py::arg("suite"), py::arg("max_n"), py::call_guard<py::gil_scoped_release>());
}
