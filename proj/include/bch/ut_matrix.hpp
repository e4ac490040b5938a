#pragma once

#include <cstddef>
#include <vector>

#include "bch/free_poly.hpp"

namespace bch {

/// Square matrix of FreePoly entries used as the nilpotent workspace.
///
/// An order-(N+1) matrix carries truncation degree N: products drop every
/// word longer than N, matching the nilpotency of the generators.
class UTMatrix {
 public:
  UTMatrix() = default;
  explicit UTMatrix(std::size_t order) : order_(order), entries_(order * order) {}

  static UTMatrix identity(std::size_t order);

  std::size_t order() const { return order_; }
  std::size_t truncation() const { return order_ == 0 ? 0 : order_ - 1; }

  const FreePoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
  FreePoly& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }

  /// Entry (i, j) is zero for every j <= i.
  bool is_strictly_upper() const;
  /// Strictly upper off the diagonal, constant 1 on it.
  bool is_unipotent() const;
  /// Entry (i, j) is homogeneous of degree j - i wherever it is non-zero
  /// above and on the diagonal, and zero below it.
  bool is_graded() const;
  bool is_zero() const;

  UTMatrix& operator+=(const UTMatrix& rhs);
  UTMatrix& operator-=(const UTMatrix& rhs);
  friend UTMatrix operator+(UTMatrix a, const UTMatrix& b) { return a += b; }
  friend UTMatrix operator-(UTMatrix a, const UTMatrix& b) { return a -= b; }
  friend UTMatrix operator*(const Rational& c, const UTMatrix& m);

  /// Matrix product with truncation at degree `truncation()`. `threads` > 1
  /// splits the output rows across worker threads; each entry is still
  /// computed by a single thread so the result is identical.
  static UTMatrix multiply(const UTMatrix& a, const UTMatrix& b, unsigned threads = 1);
  friend UTMatrix operator*(const UTMatrix& a, const UTMatrix& b) { return multiply(a, b); }

  friend bool operator==(const UTMatrix&, const UTMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<FreePoly> entries_;
};

using RowVector = std::vector<FreePoly>;

/// row * m, truncated at m.truncation().
RowVector row_times(const RowVector& row, const UTMatrix& m);

}  // namespace bch
