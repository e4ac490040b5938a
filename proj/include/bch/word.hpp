#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bch {

enum class Letter : std::uint8_t { X = 0, Y = 1 };

inline constexpr Letter flip(Letter l) { return l == Letter::X ? Letter::Y : Letter::X; }
inline constexpr char letter_char(Letter l) { return l == Letter::X ? 'X' : 'Y'; }

/// A word over {X, Y}, bit-packed with X = 0 and Y = 1.
///
/// The first letter sits in the most significant used bit, so for words of
/// equal length the integer order of `bits()` is the lexicographic order
/// with X < Y. Words are ordered by (length, bits).
class Word {
 public:
  static constexpr std::size_t kMaxLength = 64;

  constexpr Word() = default;

  static Word letter(Letter l) { return Word(static_cast<std::uint64_t>(l), 1); }
  static Word repeat(Letter l, std::size_t count);
  static Word from_bits(std::uint64_t bits, std::size_t length);

  /// Parses the `X^2Y`-style grammar. Throws ParseError on bad input.
  static Word parse(std::string_view text);

  constexpr std::size_t size() const { return length_; }
  constexpr bool empty() const { return length_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  Letter operator[](std::size_t i) const {
    return static_cast<Letter>((bits_ >> (length_ - 1 - i)) & 1U);
  }

  std::size_t count(Letter l) const;

  Word& push_back(Letter l);
  Word concat(const Word& tail) const;
  Word subword(std::size_t pos, std::size_t len) const;

  /// Run-length form, e.g. `X^2YX`. The empty word renders as "".
  std::string to_string() const;
  /// One character per letter, e.g. `XXYX`.
  std::string to_letters() const;

  friend constexpr bool operator==(const Word&, const Word&) = default;
  friend constexpr std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  constexpr Word(std::uint64_t bits, std::uint8_t length) : bits_(bits), length_(length) {}

  std::uint64_t bits_ = 0;
  std::uint8_t length_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Swaps X and Y in every position.
Word interchange(const Word& w);
/// Letters in reverse order.
Word reverse(const Word& w);
/// L1 L2 ... Ln -> L2 ... Ln L1. Throws DomainError on the empty word.
Word cyclic_shift(const Word& w);

/// All 2^n words of length n in canonical order.
std::vector<Word> all_words(std::size_t n);

struct Run {
  Letter letter;
  std::size_t multiplicity;

  friend bool operator==(const Run&, const Run&) = default;
};

/// Run-length view L1^m1 L2^m2 ... Lq^mq with adjacent letters distinct.
class RunWord {
 public:
  RunWord() = default;
  explicit RunWord(const Word& w);
  /// Throws DomainError if adjacent runs repeat a letter or a multiplicity is 0.
  explicit RunWord(std::vector<Run> runs);

  const std::vector<Run>& runs() const { return runs_; }
  std::size_t run_count() const { return runs_.size(); }
  std::size_t length() const;
  Word expand() const;

  friend bool operator==(const RunWord&, const RunWord&) = default;

 private:
  std::vector<Run> runs_;
};

}  // namespace bch

template <>
struct std::hash<bch::Word> {
  std::size_t operator()(const bch::Word& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.bits() * 0x9E3779B97F4A7C15ULL ^ w.size());
  }
};
