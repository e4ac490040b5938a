#include "bch/word.hpp"

#include <cctype>
#include <ostream>

#include "bch/errors.hpp"

namespace bch {

namespace {

std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1); }

void check_length(std::size_t n) {
  if (n > Word::kMaxLength)
    throw DomainError("word length " + std::to_string(n) + " exceeds " + std::to_string(Word::kMaxLength));
}

}  // namespace

Word Word::repeat(Letter l, std::size_t count) {
  check_length(count);
  return Word(l == Letter::Y ? low_mask(count) : 0, static_cast<std::uint8_t>(count));
}

Word Word::from_bits(std::uint64_t bits, std::size_t length) {
  check_length(length);
  return Word(bits & low_mask(length), static_cast<std::uint8_t>(length));
}

Word Word::parse(std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c != 'X' && c != 'Y') throw ParseError(std::string("unexpected character '") + c + "'", i);
    const Letter l = c == 'X' ? Letter::X : Letter::Y;
    ++i;
    std::size_t power = 1;
    if (i < text.size() && text[i] == '^') {
      const std::size_t caret = i++;
      const std::size_t start = i;
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > kMaxLength) throw ParseError("exponent too large", start);
        ++i;
      }
      if (i == start) throw ParseError("missing exponent after '^'", caret + 1);
      if (value == 0) throw ParseError("zero exponent", start);
      power = value;
    }
    if (w.size() + power > kMaxLength) throw ParseError("word too long", i);
    for (std::size_t k = 0; k < power; ++k) w.push_back(l);
  }
  return w;
}

std::size_t Word::count(Letter l) const {
  const auto ones = static_cast<std::size_t>(__builtin_popcountll(bits_));
  return l == Letter::Y ? ones : length_ - ones;
}

Word& Word::push_back(Letter l) {
  check_length(length_ + 1U);
  bits_ = (length_ == 0 ? 0 : bits_ << 1) | static_cast<std::uint64_t>(l);
  ++length_;
  return *this;
}

Word Word::concat(const Word& tail) const {
  const std::size_t n = length_ + tail.length_;
  check_length(n);
  const std::uint64_t head = tail.length_ >= 64 ? 0 : bits_ << tail.length_;
  return Word(head | tail.bits_, static_cast<std::uint8_t>(n));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos + len > length_) throw DomainError("subword out of range");
  const std::size_t shift = length_ - pos - len;
  return Word((shift >= 64 ? 0 : bits_ >> shift) & low_mask(len), static_cast<std::uint8_t>(len));
}

std::string Word::to_string() const {
  std::string out;
  const RunWord runs(*this);
  for (const Run& r : runs.runs()) {
    out += letter_char(r.letter);
    if (r.multiplicity > 1) out += "^" + std::to_string(r.multiplicity);
  }
  return out;
}

std::string Word::to_letters() const {
  std::string out;
  out.reserve(length_);
  for (std::size_t i = 0; i < length_; ++i) out += letter_char((*this)[i]);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

Word interchange(const Word& w) { return Word::from_bits(~w.bits(), w.size()); }

Word reverse(const Word& w) {
  Word out;
  for (std::size_t i = w.size(); i-- > 0;) out.push_back(w[i]);
  return out;
}

Word cyclic_shift(const Word& w) {
  if (w.empty()) throw DomainError("cyclic shift of the empty word");
  return w.subword(1, w.size() - 1).push_back(w[0]);
}

std::vector<Word> all_words(std::size_t n) {
  if (n >= 32) throw DomainError("refusing to enumerate 2^" + std::to_string(n) + " words");
  std::vector<Word> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.push_back(Word::from_bits(b, n));
  return out;
}

RunWord::RunWord(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!runs_.empty() && runs_.back().letter == w[i])
      ++runs_.back().multiplicity;
    else
      runs_.push_back({w[i], 1});
  }
}

RunWord::RunWord(std::vector<Run> runs) : runs_(std::move(runs)) {
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (runs_[i].multiplicity == 0) throw DomainError("run multiplicity must be positive");
    if (i > 0 && runs_[i].letter == runs_[i - 1].letter) throw DomainError("adjacent runs share a letter");
  }
}

std::size_t RunWord::length() const {
  std::size_t n = 0;
  for (const Run& r : runs_) n += r.multiplicity;
  return n;
}

Word RunWord::expand() const {
  Word w;
  for (const Run& r : runs_)
    for (std::size_t k = 0; k < r.multiplicity; ++k) w.push_back(r.letter);
  return w;
}

}  // namespace bch
