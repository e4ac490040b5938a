#include "bch/census.hpp"

#include <algorithm>
#include <functional>

#include "bch/errors.hpp"

namespace bch {

namespace {

std::uint64_t words_minus_constants(std::size_t n) { return (std::uint64_t{1} << n) - 2; }

Rational sign_for_length(std::size_t n) { return Rational(n % 2 == 1 ? 1 : -1); }  // (-1)^(n+1)

// Runs `predicate` over every word of length n and records the first failure.
CheckResult for_all_words(std::size_t n, const std::function<bool(const Word&)>& predicate) {
  for (const Word& w : all_words(n))
    if (!predicate(w)) return {false, w};
  return {};
}

CheckResult fixed_length_sum(std::size_t n, const FreePoly& zn) {
  Rational sum;
  for (const Term& t : zn) sum += t.coeff;
  if (sum.is_zero()) return {};
  return {false, Word::repeat(Letter::X, n)};
}

CheckResult fixed_content_sum(std::size_t n, const FreePoly& zn) {
  std::vector<Rational> sums(n + 1);
  for (const Term& t : zn) sums[t.word.count(Letter::Y)] += t.coeff;
  for (std::size_t ny = 0; ny <= n; ++ny)
    if (!sums[ny].is_zero())
      return {false, Word::repeat(Letter::X, n - ny).concat(Word::repeat(Letter::Y, ny))};
  return {};
}

CheckResult exponent_permutation(std::size_t n, const FreePoly& zn) {
  // Permuting run lengths keeps the first letter, the run count and the
  // multiset of run lengths, and reaches every word sharing those.
  std::map<std::pair<Letter, std::vector<std::size_t>>, Rational> seen;
  return for_all_words(n, [&](const Word& w) {
    const RunWord runs(w);
    std::vector<std::size_t> lengths;
    for (const Run& r : runs.runs()) lengths.push_back(r.multiplicity);
    std::sort(lengths.begin(), lengths.end());
    const Rational g = zn.coeff(w);
    auto [it, inserted] = seen.try_emplace({w[0], std::move(lengths)}, g);
    return inserted || it->second == g;
  });
}

CheckResult cyclic_shifts(std::size_t n, const FreePoly& zn) {
  return for_all_words(n, [&](const Word& w) { return cyclic_shift_sum(w, zn).is_zero(); });
}

CheckResult interchange_rule(std::size_t n, const FreePoly& zn) {
  const Rational s = sign_for_length(n);
  return for_all_words(n, [&](const Word& w) { return zn.coeff(interchange(w)) == s * zn.coeff(w); });
}

CheckResult reversal_rule(std::size_t n, const FreePoly& zn) {
  const Rational s = sign_for_length(n);
  return for_all_words(n, [&](const Word& w) {
    const Rational g = zn.coeff(w);
    return zn.coeff(reverse(interchange(w))) == g && zn.coeff(reverse(w)) == s * g;
  });
}

CheckResult palindromes(std::size_t n, const FreePoly& zn) {
  if (n % 2 != 0) return {};
  for (const Word& u : all_words(n / 2)) {
    const Word w = u.concat(reverse(u));
    if (!zn.coeff(w).is_zero()) return {false, w};
  }
  return {};
}

CheckResult odd_run_vanishing(std::size_t n, const FreePoly& zn) {
  if (n % 2 != 0) return {};
  return for_all_words(n, [&](const Word& w) { return RunWord(w).run_count() % 2 == 0 || zn.coeff(w).is_zero(); });
}

}  // namespace

CensusRecord census_record(std::size_t n, const FreePoly& term, Variant variant) {
  if (n < 1 || n >= 63) throw DomainError("census degree out of range");
  CensusRecord rec{n, 0, words_minus_constants(n), std::nullopt, variant};
  for (const Term& t : term)
    if (t.word.size() == n) ++rec.count;
  if (rec.bound > 0)
    rec.ratio = Rational(mpq_class(mpz_class(std::to_string(rec.count)), mpz_class(std::to_string(rec.bound))));
  return rec;
}

CensusRecord census(std::size_t n, const VariantPreset& preset, const EngineOptions& options) {
  return census_table(n, n, preset, options).front();
}

std::vector<CensusRecord> census_table(std::size_t n_min, std::size_t n_max, const VariantPreset& preset,
                                       const EngineOptions& options) {
  if (n_min < 1 || n_max < n_min) throw DomainError("census range must satisfy 1 <= n_min <= n_max");
  const auto terms = series_terms(preset, n_max, options);
  std::vector<CensusRecord> out;
  for (std::size_t n = n_min; n <= n_max; ++n) out.push_back(census_record(n, terms[n - 1].body, preset.variant));
  return out;
}

bool PropertyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second.pass; });
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {
      "fixed_length_sum", "fixed_content_sum", "exponent_permutation", "cyclic_shift_sum",
      "interchange",      "reversal",          "palindrome",           "odd_run_vanishing",
  };
  return names;
}

Rational cyclic_shift_sum(const Word& w, const FreePoly& zn) {
  Rational sum;
  Word shifted = w;
  for (std::size_t m = 0; m < w.size(); ++m) {
    sum += zn.coeff(shifted);
    shifted = cyclic_shift(shifted);
  }
  return sum;
}

PropertyReport property_suite(std::size_t n, const FreePoly& zn) {
  if (n < 2) throw DomainError("property suite needs n >= 2");
  const FreePoly g = zn.homogeneous(n);
  const auto& names = property_names();
  PropertyReport report{n, {}};
  report.checks = {
      {names[0], fixed_length_sum(n, g)},  {names[1], fixed_content_sum(n, g)},
      {names[2], exponent_permutation(n, g)}, {names[3], cyclic_shifts(n, g)},
      {names[4], interchange_rule(n, g)},  {names[5], reversal_rule(n, g)},
      {names[6], palindromes(n, g)},       {names[7], odd_run_vanishing(n, g)},
  };
  return report;
}

PropertyReport property_suite(std::size_t n) {
  if (n < 2) throw DomainError("property suite needs n >= 2");
  return property_suite(n, series_terms(preset(Variant::standard), n).back().body);
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool BoundReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.pass; });
}

BoundReport bound_checks(const std::vector<CensusRecord>& standard_census) {
  BoundReport report;
  for (const CensusRecord& rec : standard_census) {
    if (rec.n < 2) continue;
    BoundRow row{rec.n, rec.count, rec.bound, is_prime(rec.n), false, false, false};
    if (row.prime) {
      row.expect_saturated = true;
    } else if (rec.n % 2 == 0 && rec.n >= 4) {
      row.limit = (std::uint64_t{1} << (rec.n - 1)) - 4;
      row.expect_saturated = is_prime(rec.n - 1);
    }
    row.saturated = row.count == row.limit;
    row.pass = row.count <= row.limit;
    if (row.prime) row.pass = row.pass && row.saturated;
    if (rec.n % 2 == 0 && rec.n >= 4) row.pass = row.pass && row.saturated == row.expect_saturated;
    report.rows.push_back(row);
  }
  return report;
}

BoundReport bound_checks(std::size_t n_max, const EngineOptions& options) {
  if (n_max < 2) throw DomainError("bound checks need n_max >= 2");
  return bound_checks(census_table(2, n_max, preset(Variant::standard), options));
}

std::size_t OccurrenceProfile::x_letters() const {
  std::size_t total = 0;
  for (const auto& [k, count] : x_runs) total += k * count;
  return total;
}

bool OccurrenceProfile::uniform_positions() const {
  return std::adjacent_find(x_per_position.begin(), x_per_position.end(), std::not_equal_to<>()) ==
         x_per_position.end();
}

OccurrenceProfile letter_occurrence_profile(std::size_t n, const FreePoly& zn) {
  if (n < 1) throw DomainError("occurrence profile needs n >= 1");
  OccurrenceProfile p{n, 0, {}, {}, std::vector<std::size_t>(n), std::vector<std::size_t>(n)};
  for (const Term& t : zn) {
    if (t.word.size() != n) continue;
    ++p.terms;
    const RunWord runs(t.word);
    for (const Run& r : runs.runs()) ++(r.letter == Letter::X ? p.x_runs : p.y_runs)[r.multiplicity];
    for (std::size_t i = 0; i < n; ++i) ++(t.word[i] == Letter::X ? p.x_per_position : p.y_per_position)[i];
  }
  return p;
}

OccurrenceProfile letter_occurrence_profile(std::size_t n) {
  if (n < 1) throw DomainError("occurrence profile needs n >= 1");
  return letter_occurrence_profile(n, series_terms(preset(Variant::standard), n).back().body);
}

}  // namespace bch
