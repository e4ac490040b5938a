#include "linear_combination.hpp"

#include <cctype>
#include <string>

#include "bch/errors.hpp"

namespace bch::detail {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  std::string_view take_while(auto pred) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && pred(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_word_char(char c) { return c == 'X' || c == 'Y' || c == '^' || is_digit(c); }

Word parse_word_at(Cursor& cur) {
  const std::size_t start = cur.pos();
  const std::string_view token = cur.take_while(is_word_char);
  try {
    return Word::parse(token);
  } catch (const ParseError& e) {
    throw ParseError("invalid word '" + std::string(token) + "'", start + e.position());
  }
}

}  // namespace

std::vector<std::pair<Word, Rational>> parse_linear_combination(std::string_view text, bool bracketed) {
  std::vector<std::pair<Word, Rational>> out;
  Cursor cur(text);
  bool first = true;
  while (!cur.done()) {
    bool negative = false;
    if (cur.peek() == '+' || cur.peek() == '-') {
      negative = cur.peek() == '-';
      cur.advance();
      cur.skip_space();
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;

    Rational coeff(1);
    bool has_coeff = false;
    if (is_digit(cur.peek())) {
      const std::string_view num = cur.take_while(is_digit);
      std::string literal(num);
      if (cur.peek() == '/') {
        cur.advance();
        const std::string_view den = cur.take_while(is_digit);
        if (den.empty()) cur.fail("missing denominator");
        literal += "/" + std::string(den);
      }
      coeff = Rational::parse(literal);
      has_coeff = true;
      cur.skip_space();
      if (cur.peek() == '*') {
        cur.advance();
        cur.skip_space();
      }
    }

    Word word;
    if (bracketed) {
      if (cur.peek() != '[') cur.fail("expected '['");
      cur.advance();
      word = parse_word_at(cur);
      if (word.empty()) cur.fail("empty commutator");
      if (cur.peek() != ']') cur.fail("expected ']'");
      cur.advance();
    } else if (cur.peek() == 'X' || cur.peek() == 'Y') {
      word = parse_word_at(cur);
    } else if (!has_coeff) {
      cur.fail("expected a term");
    }
    out.emplace_back(word, negative ? -coeff : coeff);
  }
  return out;
}

}  // namespace bch::detail
