#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bch/free_poly.hpp"
#include "bch/reinsch.hpp"

namespace bch {

/// Number of non-zero coefficients among the words of length n.
struct CensusRecord {
  std::size_t n;
  std::uint64_t count;
  /// 2^n - 2, the count of words other than X^n and Y^n.
  std::uint64_t bound;
  /// count / bound; absent for n = 1 where the bound is zero.
  std::optional<Rational> ratio;
  Variant variant;
};

CensusRecord census_record(std::size_t n, const FreePoly& term, Variant variant);
CensusRecord census(std::size_t n, const VariantPreset& preset, const EngineOptions& options = {});
/// One engine run at order n_max, one record per degree in [n_min, n_max].
std::vector<CensusRecord> census_table(std::size_t n_min, std::size_t n_max, const VariantPreset& preset,
                                       const EngineOptions& options = {});

struct CheckResult {
  bool pass = true;
  std::optional<Word> witness;
};

/// Named pass/fail results; failures carry a witness word.
struct PropertyReport {
  std::size_t n;
  std::vector<std::pair<std::string, CheckResult>> checks;

  bool passed() const;
};

/// Property names in report order.
const std::vector<std::string>& property_names();

/// Runs every coefficient identity on the words of length n. `zn` holds the
/// degree-n coefficients g(w). Requires n >= 2.
PropertyReport property_suite(std::size_t n, const FreePoly& zn);
PropertyReport property_suite(std::size_t n);

/// Sum of g over the n rotations C^0 w .. C^(n-1) w.
Rational cyclic_shift_sum(const Word& w, const FreePoly& zn);

struct BoundRow {
  std::size_t n;
  std::uint64_t count;
  /// The upper bound being tested: 2^n - 2, or 2^(n-1) - 4 for even n >= 4.
  std::uint64_t limit;
  bool prime;
  bool saturated;
  /// Whether saturation is required (prime n, or even n with n - 1 prime).
  bool expect_saturated;
  bool pass;
};

struct BoundReport {
  std::vector<BoundRow> rows;
  bool passed() const;
};

BoundReport bound_checks(const std::vector<CensusRecord>& standard_census);
BoundReport bound_checks(std::size_t n_max, const EngineOptions& options = {});

bool is_prime(std::size_t n);

/// Bookkeeping of letters across the non-zero terms of z_n.
struct OccurrenceProfile {
  std::size_t n;
  std::size_t terms;
  /// Maximal runs X^k (key k) over all non-zero words.
  std::map<std::size_t, std::size_t> x_runs;
  std::map<std::size_t, std::size_t> y_runs;
  /// Words carrying X (resp. Y) at each position.
  std::vector<std::size_t> x_per_position;
  std::vector<std::size_t> y_per_position;

  /// sum_k k * x_runs[k], i.e. total X letters.
  std::size_t x_letters() const;
  /// Every position carries X in the same number of words.
  bool uniform_positions() const;
};

OccurrenceProfile letter_occurrence_profile(std::size_t n, const FreePoly& zn);
OccurrenceProfile letter_occurrence_profile(std::size_t n);

}  // namespace bch
