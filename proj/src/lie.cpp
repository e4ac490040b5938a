#include "bch/lie.hpp"

#include <map>
#include <utility>

#include "bch/errors.hpp"
#include "linear_combination.hpp"

namespace bch {

namespace {

FreePoly letter_poly(Letter l) { return FreePoly::monomial(Word::letter(l)); }

// [L1, [L2, [..., inner]]] for the letters of `prefix`.
FreePoly wrap_left(const Word& prefix, FreePoly inner) {
  for (std::size_t i = prefix.size(); i-- > 0;) inner = commutator(letter_poly(prefix[i]), inner);
  return inner;
}

}  // namespace

CommPoly::CommPoly(FreePoly coefficients) : coeffs_(std::move(coefficients)) {
  if (!coeffs_.is_zero() && coeffs_.terms().front().word.empty())
    throw DomainError("commutator of the empty word");
}

CommPoly CommPoly::bracket(const Word& w, const Rational& c) { return CommPoly(FreePoly::monomial(w, c)); }

CommPoly CommPoly::parse(std::string_view text) {
  std::vector<Term> terms;
  for (auto& [word, coeff] : detail::parse_linear_combination(text, true)) terms.push_back({word, coeff});
  return CommPoly(FreePoly::from_terms(std::move(terms)));
}

std::string CommPoly::to_string() const {
  if (coeffs_.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : coeffs_) {
    const bool negative = t.coeff.sign() < 0;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    const Rational magnitude = negative ? -t.coeff : t.coeff;
    if (magnitude != Rational(1)) out += magnitude.to_string() + "*";
    out += "[" + t.word.to_string() + "]";
  }
  return out;
}

FreePoly commutator(const FreePoly& a, const FreePoly& b) { return a * b - b * a; }

FreePoly expand_nested(const Word& w) {
  if (w.empty()) throw DomainError("nested commutator of the empty word");
  return wrap_left(w.subword(0, w.size() - 1), letter_poly(w[w.size() - 1]));
}

FreePoly expand_comm_poly(const CommPoly& p) {
  PolyAccumulator acc;
  for (const Term& t : p.coefficients()) acc.add(expand_nested(t.word), t.coeff);
  return std::move(acc).finish();
}

bool rewrite_identity_check(const Word& w1, const Word& w2) {
  const Word xy = Word::letter(Letter::X).concat(Word::letter(Letter::Y));
  const Word yx = Word::letter(Letter::Y).concat(Word::letter(Letter::X));
  const FreePoly lhs = expand_nested(w1.concat(xy).concat(w2));
  const FreePoly swapped = expand_nested(w1.concat(yx).concat(w2));

  FreePoly middle;
  if (w2.empty()) {
    middle = expand_nested(w1.concat(xy)) - expand_nested(w1.concat(yx));
  } else {
    const FreePoly xy_bracket = commutator(letter_poly(Letter::X), letter_poly(Letter::Y));
    middle = wrap_left(w1, commutator(xy_bracket, expand_nested(w2)));
  }
  return lhs == swapped + middle;
}

CommPoly dynkin_series(std::size_t n, const FreePoly& zn) {
  if (n < 1) throw DomainError("dynkin_series needs n >= 1");
  return CommPoly(Rational(1, static_cast<long>(n)) * zn.homogeneous(n));
}

CommPoly dynkin_series(std::size_t n) {
  if (n < 1) throw DomainError("dynkin_series needs n >= 1");
  const auto terms = series_terms(preset(Variant::standard), n);
  return dynkin_series(n, terms.back().body);
}

CommutatorCheck verify_commutator_form(const CommPoly& claimed, const FreePoly& word_form) {
  FreePoly diff = expand_comm_poly(claimed) - word_form;
  const bool ok = diff.is_zero();
  return {ok, std::move(diff)};
}

LieCheck lie_element_check(const FreePoly& p) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>> by_content;
  for (const Term& t : p) by_content[{t.word.count(Letter::X), t.word.count(Letter::Y)}].push_back(t);

  LieCheck out{true, {}};
  for (auto& [content, terms] : by_content) {
    const std::size_t degree = content.first + content.second;
    bool ok = false;
    if (degree > 0) {
      const FreePoly part = FreePoly::from_terms(terms);
      ok = expand_comm_poly(CommPoly(part)) == Rational(static_cast<long>(degree)) * part;
    }
    out.contents.push_back({content.first, content.second, ok});
    out.is_lie = out.is_lie && ok;
  }
  return out;
}

const std::vector<PublishedForm>& published_commutator_forms() {
  static const std::vector<PublishedForm> forms = {
      {Variant::standard, 1, "z1", "[X] + [Y]", false},
      {Variant::standard, 2, "z2", "1/2*[XY]", false},
      {Variant::standard, 3, "z3", "1/12*[X^2Y] - 1/12*[YXY]", false},
      {Variant::standard, 4, "z4", "-1/24*[XYXY]", false},
      {Variant::standard, 4, "z4_alt", "1/24*[XYXY]", true},
      {Variant::standard, 5, "z5",
       "-1/720*[X^4Y] + 6/720*[XYXYX] + 2/720*[XY^3X] + 2/720*[YX^3Y] + 6/720*[YXYXY] - 1/720*[Y^4X]", false},
      {Variant::standard, 6, "z6",
       "-2/1440*[X^2Y^2XY] + 6/1440*[XYXYXY] - 1/1440*[XY^4X] + 1/1440*[YX^4Y]", false},
      {Variant::symmetric, 3, "s3", "-1/24*[X^2Y] - 2/24*[YXY]", false},
      {Variant::loop, 2, "l2", "[XY]", false},
      {Variant::loop, 3, "l3", "1/2*[X^2Y] + 1/2*[YXY]", false},
      {Variant::loop, 4, "l4", "2/12*[X^3Y] + 3/12*[XYXY] + 2/12*[Y^2XY]", false},
      {Variant::triangular, 2, "t2", "-1/2*[XY]", false},
      {Variant::triangular, 3, "t3", "1/6*[X^2Y] - 1/6*[YXY]", false},
      {Variant::triangular, 4, "t4", "-1/24*[X^3Y] + 1/24*[XYXY] - 1/24*[Y^2XY]", false},
      {Variant::sum_difference, 2, "sd2", "-[XY]", false},
      {Variant::sum_difference, 3, "sd3", "1/9*[Y^2X]", true},
      {Variant::sum_difference, 4, "sd4", "1/12*[X^3Y] - 1/12*[Y^2XY]", false},
      {Variant::highly_symmetrized, 3, "ss3", "-2/48*[X^2Y] + 3/48*[YXY]", true},
      {Variant::symmetric_sum_difference, 3, "ssd3", "-1/6*[X^2Y] - 1/6*[YXY]", true},
      {Variant::highly_symmetrized_sum_difference, 3, "sssd3", "-1/6*[X^2Y] - 1/6*[YXY]", true},
  };
  return forms;
}

}  // namespace bch
