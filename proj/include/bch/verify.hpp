#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bch/reinsch.hpp"
#include "bch/report.hpp"

namespace bch {

enum class Suite { properties, bounds, dynkin, oracle, commutator_forms };

std::string_view suite_name(Suite s);
/// Accepts `properties`, `bounds`, `dynkin`, `oracle`, `commutator-forms`.
Suite parse_suite(std::string_view name);

struct SuiteLine {
  std::string label;
  bool pass;
  std::string detail;
};

struct SuiteResult {
  Suite suite;
  std::size_t max_n;
  std::vector<SuiteLine> lines;

  bool passed() const;
  std::string to_text() const;
  report::Json to_json() const;
};

/// Runs one invariant suite up to degree `max_n`.
///
/// `commutator-forms` compares every published commutator form of degree
/// <= max_n with the engine word form. A mismatch fails the suite unless
/// the form is marked disputed; the engine term itself must always pass
/// the Lie-element test.
SuiteResult run_suite(Suite suite, std::size_t max_n, const EngineOptions& options = {});

}  // namespace bch
