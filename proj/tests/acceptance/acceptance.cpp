// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "bch/census.hpp"
#include "bch/goldberg.hpp"
#include "bch/lie.hpp"
#include "bch/reinsch.hpp"

using namespace bch;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget_seconds) {
    o.pass = false;
    o.detail += " (over time budget)";
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d %s [%.2fs] %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
  std::fflush(stdout);
}

FreePoly P(const char* s) { return FreePoly::parse(s); }

std::string join_counts(const std::vector<CensusRecord>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) os << (r.n == rows.front().n ? "" : ",") << r.count;
  return os.str();
}

UTMatrix random_nilpotent(std::mt19937& rng, std::size_t order) {
  UTMatrix m(order);
  std::uniform_int_distribution<int> c(-6, 6), k(0, 2);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = i + 1; j < order; ++j) {
      const std::size_t d = j - i;
      std::vector<Term> terms;
      for (int t = k(rng); t > 0; --t) {
        const auto bits = std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << d) - 1)(rng);
        terms.push_back({Word::from_bits(bits, d), Rational(c(rng), t + 1)});
      }
      m(i, j) = FreePoly::from_terms(std::move(terms));
    }
  return m;
}

}  // namespace

int main() {
  criterion(1, "golden z1..z4", 1.0, [] {
    const auto z = series_terms(preset(Variant::standard), 4);
    const FreePoly expected[] = {
        P("X + Y"),
        P("1/2*XY - 1/2*YX"),
        P("1/12*X^2Y - 1/6*XYX + 1/12*XY^2 + 1/12*YX^2 - 1/6*YXY + 1/12*Y^2X"),
        P("1/24*X^2Y^2 - 1/12*XYXY + 1/12*YXYX - 1/24*Y^2X^2"),
    };
    for (int i = 0; i < 4; ++i)
      if (z[i].body != expected[i]) return Outcome{false, "z" + std::to_string(i + 1) + " = " + z[i].body.to_string()};
    return Outcome{true, "exact"};
  });

  std::vector<SeriesTerm> z8;
  criterion(2, "golden high-order coefficients", 30.0, [&] {
    z8 = series_terms(preset(Variant::standard), 8);
    const std::pair<const char*, Rational> checks[] = {
        {"X^4Y^4", Rational(23, 120960)}, {"XYXYX", Rational(1, 30)},
        {"X^4Y", Rational(-1, 720)},      {"X^6Y", Rational(1, 30240)}};
    for (const auto& [w, v] : checks) {
      const Word word = Word::parse(w);
      const Rational got = z8[word.size() - 1].body.coeff(word);
      if (got != v) return Outcome{false, std::string(w) + " -> " + got.to_string()};
    }
    if (engine_coefficient(Word::parse("X^4Y^4")) != Rational(23, 120960)) return Outcome{false, "engine_coefficient"};
    return Outcome{true, "g(X^4Y^4)=23/120960, g(XYXYX)=1/30, g(X^4Y)=-1/720, g(X^6Y)=1/30240"};
  });

  criterion(3, "term counts of z7 and z8", 30.0, [&] {
    const std::size_t c7 = z8[6].body.size(), c8 = z8[7].body.size();
    return Outcome{c7 == 126 && c8 == 124, "#7=" + std::to_string(c7) + " #8=" + std::to_string(c8)};
  });

  std::vector<CensusRecord> standard;
  criterion(4, "standard census n=2..13", 600.0, [&] {
    const std::vector<std::uint64_t> table = {2, 6, 4, 30, 28, 126, 124, 390, 388, 2046, 2044, 8190};
    standard = census_table(2, 13, preset(Variant::standard));
    bool ok = standard.size() == table.size();
    for (std::size_t i = 0; ok && i < table.size(); ++i) ok = standard[i].count == table[i];
    return Outcome{ok, join_counts(standard)};
  });

  criterion(5, "symmetric census n=2..13", 600.0, [] {
    const auto rows = census_table(2, 13, preset(Variant::symmetric));
    bool ok = true;
    for (const auto& r : rows) {
      if (r.n % 2 == 0) ok = ok && r.count == 0;
      if (r.n == 3) ok = ok && r.count == 6;
      if (r.n == 9) ok = ok && r.count == 435;
      if (r.n == 13) ok = ok && r.count == 8190;
      if (r.n % 2 == 1 && r.n != 9) ok = ok && r.count == r.bound;
    }
    return Outcome{ok, join_counts(rows)};
  });

  criterion(6, "oracle equals engine on every word of length <= 8", 120.0, [&] {
    std::size_t words = 0;
    for (std::size_t n = 1; n <= 8; ++n)
      for (const Word& w : all_words(n)) {
        ++words;
        if (goldberg_direct(w) != z8[n - 1].body.coeff(w)) return Outcome{false, "mismatch at " + w.to_string()};
      }
    return Outcome{true, std::to_string(words) + " words"};
  });

  criterion(7, "Dynkin form reproduces z1..z8", 120.0, [&] {
    for (std::size_t n = 1; n <= 8; ++n)
      if (expand_comm_poly(dynkin_series(n)) != z8[n - 1].body) return Outcome{false, "n=" + std::to_string(n)};
    return Outcome{true, "n<=8"};
  });

  criterion(8, "published commutator forms", 60.0, [] {
    const char* required[] = {"z2", "z3", "z4", "z5", "z6", "s3", "l2", "l3", "l4", "t2", "t3", "t4"};
    std::ostringstream detail;
    bool ok = true;
    for (const PublishedForm& f : published_commutator_forms()) {
      const FreePoly word = series_terms(preset(f.variant), f.degree).back().body;
      const auto check = verify_commutator_form(CommPoly::parse(f.commutator_text), word);
      const bool lie = lie_element_check(word).is_lie;
      const bool must_match = std::find(std::begin(required), std::end(required), f.label) != std::end(required);
      if (must_match && !check.matches) {
        ok = false;
        detail << f.label << " mismatch; ";
      }
      if (f.disputed) {
        if (!lie) ok = false;
        detail << f.label << (check.matches ? " agrees" : " differs (reported)") << (lie ? ", Lie" : ", NOT Lie") << "; ";
      }
    }
    for (const char* label : required) {
      bool found = false;
      for (const PublishedForm& f : published_commutator_forms()) found = found || f.label == label;
      if (!found) {
        ok = false;
        detail << label << " missing; ";
      }
    }
    return Outcome{ok, detail.str()};
  });

  criterion(9, "coefficient identities n=2..10", 120.0, [] {
    const auto z = series_terms(preset(Variant::standard), 10);
    for (std::size_t n = 2; n <= 10; ++n) {
      const PropertyReport r = property_suite(n, z[n - 1].body);
      for (const auto& [name, res] : r.checks)
        if (!res.pass) return Outcome{false, name + " at n=" + std::to_string(n)};
    }
    for (const char* w : {"XY^2X", "X^2YX", "XYX^2"})
      if (!z[3].body.coeff(Word::parse(w)).is_zero()) return Outcome{false, std::string("g(") + w + ") != 0"};
    return Outcome{true, "8 checks x 9 degrees"};
  });

  criterion(10, "census bounds n=2..13", 600.0, [&] {
    const BoundReport r = bound_checks(standard);
    std::ostringstream detail;
    bool ok = r.passed() && r.rows.size() == 12;
    for (const BoundRow& row : r.rows) {
      if (row.n == 10) ok = ok && row.count == 388 && row.limit == 508 && !row.saturated;
      if (row.n % 2 == 0 && row.n >= 4) {
        const bool should = row.n == 4 || row.n == 6 || row.n == 8 || row.n == 12;
        ok = ok && row.saturated == should;
        detail << "#" << row.n << (row.saturated ? "=" : "<") << row.limit << " ";
      }
    }
    return Outcome{ok, detail.str()};
  });

  criterion(11, "Bernoulli closed form", 10.0, [] {
    for (int m = 1; m <= 5; ++m) {
      const Rational expected = bernoulli(2 * m) / Rational(factorial(2 * m));
      const Word w = Word::repeat(Letter::X, 2 * m).concat(Word::letter(Letter::Y));
      if (goldberg_xy(2 * m, 1) != expected || goldberg_direct(w) != expected)
        return Outcome{false, "m=" + std::to_string(m)};
    }
    for (int m = 1; m <= 4; ++m) {
      const Word w = Word::repeat(Letter::X, 2 * m + 1).concat(Word::letter(Letter::Y));
      if (!goldberg_xy(2 * m + 1, 1).is_zero() || !goldberg_direct(w).is_zero())
        return Outcome{false, "odd m=" + std::to_string(m)};
    }
    return Outcome{true, "g(X^2mY)=B_2m/(2m)! for m<=5, g(X^(2m+1)Y)=0 for m<=4"};
  });

  criterion(12, "exp/log inverse and grading", 60.0, [] {
    std::mt19937 rng(12345);
    for (int i = 0; i < 100; ++i) {
      const std::size_t order = 2 + static_cast<std::size_t>(i % 5);
      const UTMatrix m = random_nilpotent(rng, order);
      if (nilpotent_log(nilpotent_exp(m)) != m) return Outcome{false, "case " + std::to_string(i)};
    }
    std::size_t intermediates = 0;
    bool graded = true;
    for (std::size_t n = 1; n <= 8; ++n) {
      EngineOptions opts;
      opts.mode = EngineOptions::Mode::full_matrix;
      opts.observer = [&](std::string_view, const UTMatrix& m) {
        ++intermediates;
        graded = graded && m.is_graded();
      };
      series_terms(preset(Variant::standard), n, opts);
    }
    return Outcome{graded, "100 random cases, " + std::to_string(intermediates) + " graded intermediates"};
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
