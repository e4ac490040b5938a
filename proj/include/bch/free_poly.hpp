#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bch/rational.hpp"
#include "bch/word.hpp"

namespace bch {

struct Term {
  Word word;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of the free associative algebra Q<X, Y>.
///
/// Terms are stored sorted by word (length, then lexicographic with X < Y)
/// and no stored coefficient is zero.
class FreePoly {
 public:
  FreePoly() = default;
  /// The constant polynomial `c` (the empty word with coefficient c).
  static FreePoly constant(const Rational& c);
  static FreePoly monomial(const Word& w, const Rational& c = Rational(1));
  /// Takes arbitrary (possibly repeated, possibly zero) terms and normalizes.
  static FreePoly from_terms(std::vector<Term> terms);

  /// Parses a linear combination such as `1/2*XY - 1/2*YX + X^2`.
  static FreePoly parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coeff(const Word& w) const;
  /// Keeps exactly the words of length n.
  FreePoly homogeneous(std::size_t n) const;
  /// True when every stored word has length n (the zero polynomial qualifies).
  bool is_homogeneous(std::size_t n) const;
  std::optional<std::size_t> max_degree() const;

  /// Applies a length-preserving word map; images must be distinct per term.
  FreePoly map_words(const std::function<Word(const Word&)>& f) const;

  FreePoly& operator+=(const FreePoly& rhs);
  FreePoly& operator-=(const FreePoly& rhs);
  FreePoly operator-() const;

  friend FreePoly operator+(FreePoly lhs, const FreePoly& rhs) { return lhs += rhs; }
  friend FreePoly operator-(FreePoly lhs, const FreePoly& rhs) { return lhs -= rhs; }
  friend FreePoly operator*(const Rational& c, const FreePoly& p);
  friend FreePoly operator*(const FreePoly& p, const FreePoly& q) { return multiply(p, q); }

  /// Concatenation product; words longer than `max_length` are dropped.
  static FreePoly multiply(const FreePoly& p, const FreePoly& q,
                           std::size_t max_length = Word::kMaxLength);

  /// `1/2*XY - 1/2*YX`; "0" for the zero polynomial, "1" for the empty word.
  std::string to_string() const;

  friend bool operator==(const FreePoly&, const FreePoly&) = default;

 private:
  explicit FreePoly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  friend class PolyAccumulator;

  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const FreePoly& p);

inline FreePoly poly_add(const FreePoly& p, const FreePoly& q) { return p + q; }
inline FreePoly poly_scale(const Rational& c, const FreePoly& p) { return c * p; }
inline FreePoly poly_mul(const FreePoly& p, const FreePoly& q) { return p * q; }
inline Rational poly_coeff(const FreePoly& p, const Word& w) { return p.coeff(w); }
inline FreePoly poly_homogeneous(const FreePoly& p, std::size_t n) { return p.homogeneous(n); }

/// Hash-based sum of many terms, finalized into a canonical FreePoly.
class PolyAccumulator {
 public:
  void add(const Word& w, const Rational& c);
  void add(const FreePoly& p, const Rational& scale = Rational(1));
  /// Adds p*q term by term, dropping words longer than max_length.
  void add_product(const FreePoly& p, const FreePoly& q, std::size_t max_length = Word::kMaxLength);
  FreePoly finish() &&;

 private:
  std::unordered_map<Word, Rational> terms_;
};

}  // namespace bch
