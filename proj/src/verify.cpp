#include "bch/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bch/census.hpp"
#include "bch/errors.hpp"
#include "bch/goldberg.hpp"
#include "bch/lie.hpp"

namespace bch {

namespace {

constexpr std::size_t kEnumerationLimit = 6;

std::vector<SuiteLine> properties_lines(std::size_t max_n, const EngineOptions& options) {
  if (max_n < 2) throw DomainError("properties suite needs --max >= 2");
  const auto terms = series_terms(preset(Variant::standard), max_n, options);
  std::vector<SuiteLine> lines;
  for (std::size_t n = 2; n <= max_n; ++n) {
    const PropertyReport rep = property_suite(n, terms[n - 1].body);
    for (const auto& [name, result] : rep.checks) {
      std::string detail = result.witness ? "witness " + result.witness->to_string() : "";
      lines.push_back({"n=" + std::to_string(n) + " " + name, result.pass, std::move(detail)});
    }
  }
  return lines;
}

std::vector<SuiteLine> bounds_lines(std::size_t max_n, const EngineOptions& options) {
  std::vector<SuiteLine> lines;
  for (const BoundRow& r : bound_checks(max_n, options).rows) {
    std::ostringstream detail;
    detail << "#=" << r.count << " limit=" << r.limit << (r.saturated ? " saturated" : " strict");
    if (r.expect_saturated) detail << " (saturation expected)";
    lines.push_back({"n=" + std::to_string(r.n), r.pass, detail.str()});
  }
  return lines;
}

std::vector<SuiteLine> dynkin_lines(std::size_t max_n, const EngineOptions& options) {
  const auto terms = series_terms(preset(Variant::standard), max_n, options);
  std::vector<SuiteLine> lines;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const FreePoly& zn = terms[n - 1].body;
    const auto check = verify_commutator_form(dynkin_series(n, zn), zn);
    lines.push_back({"n=" + std::to_string(n), check.matches,
                     check.matches ? "" : "difference " + check.difference.to_string()});
  }
  return lines;
}

std::vector<SuiteLine> oracle_lines(std::size_t max_n, const EngineOptions& options) {
  const auto terms = series_terms(preset(Variant::standard), max_n, options);
  std::vector<SuiteLine> lines;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::size_t mismatches = 0;
    std::optional<Word> first;
    for (const Word& w : all_words(n)) {
      bool ok = goldberg_direct(w) == terms[n - 1].body.coeff(w);
      if (n <= kEnumerationLimit) ok = ok && goldberg_enumerated(w) == terms[n - 1].body.coeff(w);
      if (!ok) {
        ++mismatches;
        if (!first) first = w;
      }
    }
    std::string detail = std::to_string(std::size_t{1} << n) + " words";
    if (n <= kEnumerationLimit) detail += ", brute-force enumeration included";
    if (first) detail += ", first mismatch " + first->to_string();
    lines.push_back({"n=" + std::to_string(n), mismatches == 0, std::move(detail)});
  }
  return lines;
}

std::vector<SuiteLine> commutator_form_lines(std::size_t max_n, const EngineOptions& options) {
  std::map<Variant, std::vector<SeriesTerm>> cache;
  auto term = [&](Variant v, std::size_t degree) -> const FreePoly& {
    auto& terms = cache[v];
    if (terms.size() < max_n) terms = series_terms(preset(v), max_n, options);
    return terms[degree - 1].body;
  };

  std::vector<SuiteLine> lines;
  for (const PublishedForm& form : published_commutator_forms()) {
    if (form.degree > max_n) continue;
    const FreePoly& engine = term(form.variant, form.degree);
    const LieCheck lie = lie_element_check(engine);
    const auto check = verify_commutator_form(CommPoly::parse(form.commutator_text), engine);

    std::string detail = check.matches ? "matches engine word form" : "MISMATCH, claimed - engine = " + check.difference.to_string();
    if (!check.matches && form.disputed) detail += " (disputed form, reported only)";
    if (!lie.is_lie) detail += "; engine term fails the Lie-element test";
    detail += "; engine " + form.label + " = " + engine.to_string();
    const bool pass = lie.is_lie && (check.matches || form.disputed);
    lines.push_back({form.label, pass, std::move(detail)});
  }
  return lines;
}

}  // namespace

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::properties: return "properties";
    case Suite::bounds: return "bounds";
    case Suite::dynkin: return "dynkin";
    case Suite::oracle: return "oracle";
    case Suite::commutator_forms: return "commutator-forms";
  }
  return "?";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::properties, Suite::bounds, Suite::dynkin, Suite::oracle, Suite::commutator_forms})
    if (suite_name(s) == name) return s;
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

bool SuiteResult::passed() const {
  return std::all_of(lines.begin(), lines.end(), [](const SuiteLine& l) { return l.pass; });
}

std::string SuiteResult::to_text() const {
  std::ostringstream os;
  for (const SuiteLine& l : lines) {
    os << (l.pass ? "PASS " : "FAIL ") << suite_name(suite) << " " << l.label;
    if (!l.detail.empty()) os << ": " << l.detail;
    os << "\n";
  }
  os << (passed() ? "PASS" : "FAIL") << " " << suite_name(suite) << " (max " << max_n << ")\n";
  return os.str();
}

report::Json SuiteResult::to_json() const {
  report::Json results = report::Json::array();
  for (const SuiteLine& l : lines) results.push_back({{"label", l.label}, {"pass", l.pass}, {"detail", l.detail}});
  return {{"suite", std::string(suite_name(suite))}, {"max", max_n}, {"pass", passed()}, {"results", std::move(results)}};
}

SuiteResult run_suite(Suite suite, std::size_t max_n, const EngineOptions& options) {
  if (max_n < 1) throw DomainError("--max must be at least 1");
  SuiteResult out{suite, max_n, {}};
  switch (suite) {
    case Suite::properties: out.lines = properties_lines(max_n, options); break;
    case Suite::bounds: out.lines = bounds_lines(max_n, options); break;
    case Suite::dynkin: out.lines = dynkin_lines(max_n, options); break;
    case Suite::oracle: out.lines = oracle_lines(max_n, options); break;
    case Suite::commutator_forms: out.lines = commutator_form_lines(max_n, options); break;
  }
  return out;
}

}  // namespace bch
