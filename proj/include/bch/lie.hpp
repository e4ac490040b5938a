#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bch/free_poly.hpp"
#include "bch/reinsch.hpp"

namespace bch {

/// Linear combination of right-nested commutators sum c_w [w], where
/// [L1 L2 ... Ln] = [L1, [L2, [..., Ln]]] and [L] = L.
///
/// Kept in the redundant spanning set of all words; two CommPolys are equal
/// as Lie elements exactly when their expansions agree.
class CommPoly {
 public:
  CommPoly() = default;
  /// Terms on the empty word are rejected with DomainError.
  explicit CommPoly(FreePoly coefficients);
  static CommPoly bracket(const Word& w, const Rational& c = Rational(1));

  /// Parses `-1/720*[X^4Y] + 6/720*[XYXYX]`.
  static CommPoly parse(std::string_view text);

  const FreePoly& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.is_zero(); }

  /// `-1/720*[X^4Y] + 1/120*[XYXYX]`; "0" when empty.
  std::string to_string() const;

  friend bool operator==(const CommPoly&, const CommPoly&) = default;

 private:
  FreePoly coeffs_;
};

/// [w] expanded in the free algebra. Throws DomainError on the empty word.
FreePoly expand_nested(const Word& w);
FreePoly expand_comm_poly(const CommPoly& p);

/// Checks [w1 X Y w2] = [w1 Y X w2] + [w1 [X,Y] w2] by expansion. For a
/// non-empty w2 the middle bracket is a genuine Lie bracket,
/// [w1 [X,Y] w2] = [w1, [[X,Y], [w2]]]; for an empty w2 it is read as the
/// splice [w1 X Y] - [w1 Y X].
bool rewrite_identity_check(const Word& w1, const Word& w2);

/// [a, b] = ab - ba.
FreePoly commutator(const FreePoly& a, const FreePoly& b);

/// (1/n) sum_{|w|=n} g(w) [w] with engine coefficients.
CommPoly dynkin_series(std::size_t n);
/// The same from an already computed z_n.
CommPoly dynkin_series(std::size_t n, const FreePoly& zn);

struct CommutatorCheck {
  bool matches;
  /// expand(claimed) - word_form; zero when the forms agree.
  FreePoly difference;
};

CommutatorCheck verify_commutator_form(const CommPoly& claimed, const FreePoly& word_form);

/// Result of the Dynkin-Specht-Wever test on one multidegree.
struct ContentCheck {
  std::size_t x_count;
  std::size_t y_count;
  bool is_lie;
};

struct LieCheck {
  bool is_lie;
  std::vector<ContentCheck> contents;
};

/// A homogeneous part P of degree n is a Lie element iff expanding
/// sum c_w [w] over its own terms gives n * P. Applied to each
/// (count of X, count of Y) component separately.
LieCheck lie_element_check(const FreePoly& p);

/// A commutator form printed for one of the series, checked against the engine.
struct PublishedForm {
  Variant variant;
  std::size_t degree;
  std::string label;
  std::string commutator_text;
  /// The printed word and commutator forms disagree with each other, so a
  /// mismatch is reported but is not an engine failure.
  bool disputed;
};

const std::vector<PublishedForm>& published_commutator_forms();

}  // namespace bch
