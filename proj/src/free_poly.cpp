#include "bch/free_poly.hpp"

#include <algorithm>
#include <ostream>

#include "bch/errors.hpp"
#include "linear_combination.hpp"

namespace bch {

FreePoly FreePoly::constant(const Rational& c) { return monomial(Word{}, c); }

FreePoly FreePoly::monomial(const Word& w, const Rational& c) {
  if (c.is_zero()) return {};
  return FreePoly(std::vector<Term>{{w, c}});
}

FreePoly FreePoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.word < b.word; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().word == t.word)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
  return FreePoly(std::move(merged));
}

FreePoly FreePoly::parse(std::string_view text) {
  std::vector<Term> terms;
  for (auto& [word, coeff] : detail::parse_linear_combination(text, false)) terms.push_back({word, coeff});
  return from_terms(std::move(terms));
}

Rational FreePoly::coeff(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w, [](const Term& t, const Word& key) { return t.word < key; });
  if (it != terms_.end() && it->word == w) return it->coeff;
  return Rational(0);
}

FreePoly FreePoly::homogeneous(std::size_t n) const {
  std::vector<Term> out;
  for (const Term& t : terms_)
    if (t.word.size() == n) out.push_back(t);
  return FreePoly(std::move(out));
}

bool FreePoly::is_homogeneous(std::size_t n) const {
  return std::all_of(terms_.begin(), terms_.end(), [n](const Term& t) { return t.word.size() == n; });
}

std::optional<std::size_t> FreePoly::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().word.size();
}

FreePoly FreePoly::map_words(const std::function<Word(const Word&)>& f) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back({f(t.word), t.coeff});
  return from_terms(std::move(out));
}

namespace {

template <typename Combine>
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, Combine combine) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->word < j->word)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->word < i->word) {
      out.push_back({j->word, combine(Rational(0), j->coeff)});
      ++j;
    } else {
      Rational c = combine(i->coeff, j->coeff);
      if (!c.is_zero()) out.push_back({i->word, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

FreePoly& FreePoly::operator+=(const FreePoly& rhs) {
  terms_ = merge(terms_, rhs.terms_, [](const Rational& x, const Rational& y) { return x + y; });
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& rhs) {
  terms_ = merge(terms_, rhs.terms_, [](const Rational& x, const Rational& y) { return x - y; });
  return *this;
}

FreePoly FreePoly::operator-() const {
  FreePoly out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

FreePoly operator*(const Rational& c, const FreePoly& p) {
  if (c.is_zero()) return {};
  FreePoly out = p;
  for (Term& t : out.terms_) t.coeff *= c;
  return out;
}

FreePoly FreePoly::multiply(const FreePoly& p, const FreePoly& q, std::size_t max_length) {
  PolyAccumulator acc;
  acc.add_product(p, q, max_length);
  return std::move(acc).finish();
}

std::string FreePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    const bool negative = t.coeff.sign() < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const Rational magnitude = negative ? -t.coeff : t.coeff;
    const bool unit = magnitude == Rational(1);
    if (t.word.empty()) {
      out += magnitude.to_string();
    } else {
      if (!unit) out += magnitude.to_string() + "*";
      out += t.word.to_string();
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FreePoly& p) { return os << p.to_string(); }

void PolyAccumulator::add(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) it->second += c;
}

void PolyAccumulator::add(const FreePoly& p, const Rational& scale) {
  if (scale.is_zero()) return;
  for (const Term& t : p) add(t.word, t.coeff * scale);
}

void PolyAccumulator::add_product(const FreePoly& p, const FreePoly& q, std::size_t max_length) {
  Rational c;
  for (const Term& a : p) {
    for (const Term& b : q) {
      if (a.word.size() + b.word.size() > max_length) continue;
      c = a.coeff;
      c *= b.coeff;
      add(a.word.concat(b.word), c);
    }
  }
}

FreePoly PolyAccumulator::finish() && {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& [w, c] : terms_)
    if (!c.is_zero()) out.push_back({w, std::move(c)});
  terms_.clear();
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.word < b.word; });
  return FreePoly(std::move(out));
}

}  // namespace bch
