#include "bch/report.hpp"

#include <sstream>

namespace bch::report {

namespace {

std::string series_symbol(Variant v) {
  switch (v) {
    case Variant::standard: return "z";
    case Variant::symmetric: return "s";
    case Variant::loop: return "l";
    case Variant::triangular: return "t";
    case Variant::sum_difference: return "sd";
    case Variant::highly_symmetrized: return "ss";
    case Variant::symmetric_sum_difference: return "ssd";
    case Variant::highly_symmetrized_sum_difference: return "sssd";
  }
  return "?";
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json terms_json(Variant variant, const std::vector<SeriesTerm>& terms) {
  Json out;
  out["variant"] = std::string(variant_name(variant));
  out["terms"] = Json::array();
  for (const SeriesTerm& t : terms) {
    Json words = Json::array();
    for (const Term& term : t.body)
      words.push_back({{"word", term.word.to_string()},
                       {"num", term.coeff.numerator().get_str()},
                       {"den", term.coeff.denominator().get_str()}});
    out["terms"].push_back({{"degree", t.degree}, {"words", std::move(words)}});
  }
  return out;
}

std::string terms_text(Variant variant, const std::vector<SeriesTerm>& terms, bool quiet) {
  std::ostringstream os;
  const std::string sym = series_symbol(variant);
  for (const SeriesTerm& t : terms) {
    os << sym << t.degree;
    if (quiet)
      os << ": " << t.body.size() << " terms\n";
    else
      os << " = " << t.body.to_string() << "\n";
  }
  return os.str();
}

std::string census_csv(const std::vector<CensusRecord>& records) {
  std::ostringstream os;
  os << kCensusCsvHeader << "\n";
  for (const CensusRecord& r : records) {
    os << r.n << "," << r.count << "," << r.bound << ",";
    if (r.ratio)
      os << r.ratio->numerator().get_str() << "," << r.ratio->denominator().get_str();
    else
      os << ",";
    os << "," << variant_name(r.variant) << "\n";
  }
  return os.str();
}

Json census_json(const std::vector<CensusRecord>& records) {
  Json rows = Json::array();
  for (const CensusRecord& r : records) {
    Json row;
    row["n"] = r.n;
    row["count"] = r.count;
    row["bound"] = r.bound;
    row["ratio_num"] = r.ratio ? Json(r.ratio->numerator().get_str()) : Json(nullptr);
    row["ratio_den"] = r.ratio ? Json(r.ratio->denominator().get_str()) : Json(nullptr);
    row["variant"] = std::string(variant_name(r.variant));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string census_text(const std::vector<CensusRecord>& records) {
  std::ostringstream os;
  for (const CensusRecord& r : records) {
    os << "n = " << r.n << "  #_n = " << r.count << "  2^n-2 = " << r.bound;
    if (r.ratio) os << "  ratio = " << r.ratio->to_string();
    os << "\n";
  }
  return os.str();
}

Json property_json(const PropertyReport& report) {
  Json checks = Json::object();
  for (const auto& [name, result] : report.checks)
    checks[name] = {{"pass", result.pass},
                    {"witness", result.witness ? Json(result.witness->to_string()) : Json(nullptr)}};
  return {{"n", report.n}, {"checks", std::move(checks)}};
}

Json bound_json(const BoundReport& report) {
  Json rows = Json::array();
  for (const BoundRow& r : report.rows)
    rows.push_back({{"n", r.n},
                    {"count", r.count},
                    {"limit", r.limit},
                    {"prime", r.prime},
                    {"saturated", r.saturated},
                    {"expect_saturated", r.expect_saturated},
                    {"pass", r.pass}});
  return rows;
}

Json profile_json(const OccurrenceProfile& p) {
  Json x_runs = Json::object();
  for (const auto& [k, c] : p.x_runs) x_runs[std::to_string(k)] = c;
  Json y_runs = Json::object();
  for (const auto& [k, c] : p.y_runs) y_runs[std::to_string(k)] = c;
  return {{"n", p.n},
          {"terms", p.terms},
          {"x_runs", std::move(x_runs)},
          {"y_runs", std::move(y_runs)},
          {"x_per_position", p.x_per_position},
          {"y_per_position", p.y_per_position}};
}

}  // namespace bch::report
