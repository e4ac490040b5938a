#include "bch/ut_matrix.hpp"

#include <algorithm>
#include <thread>

#include "bch/errors.hpp"

namespace bch {

UTMatrix UTMatrix::identity(std::size_t order) {
  UTMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = FreePoly::constant(Rational(1));
  return m;
}

bool UTMatrix::is_strictly_upper() const {
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool UTMatrix::is_unipotent() const {
  const FreePoly one = FreePoly::constant(Rational(1));
  for (std::size_t i = 0; i < order_; ++i) {
    if ((*this)(i, i) != one) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  }
  return true;
}

bool UTMatrix::is_graded() const {
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) {
      const FreePoly& e = (*this)(i, j);
      if (j < i ? !e.is_zero() : !e.is_homogeneous(j - i)) return false;
    }
  return true;
}

bool UTMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const FreePoly& p) { return p.is_zero(); });
}

UTMatrix& UTMatrix::operator+=(const UTMatrix& rhs) {
  if (order_ != rhs.order_) throw DomainError("matrix order mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

UTMatrix& UTMatrix::operator-=(const UTMatrix& rhs) {
  if (order_ != rhs.order_) throw DomainError("matrix order mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

UTMatrix operator*(const Rational& c, const UTMatrix& m) {
  UTMatrix out = m;
  for (FreePoly& e : out.entries_) e = c * e;
  return out;
}

UTMatrix UTMatrix::multiply(const UTMatrix& a, const UTMatrix& b, unsigned threads) {
  if (a.order_ != b.order_) throw DomainError("matrix order mismatch");
  const std::size_t n = a.order_;
  const std::size_t max_len = a.truncation();
  UTMatrix out(n);

  auto compute_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      PolyAccumulator acc;
      bool any = false;
      for (std::size_t k = 0; k < n; ++k) {
        const FreePoly& lhs = a(i, k);
        const FreePoly& rhs = b(k, j);
        if (lhs.is_zero() || rhs.is_zero()) continue;
        acc.add_product(lhs, rhs, max_len);
        any = true;
      }
      if (any) out(i, j) = std::move(acc).finish();
    }
  };

  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) compute_row(i);
    return out;
  }
  const std::size_t workers = std::min<std::size_t>(threads, n);
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) compute_row(i);
    });
  pool.clear();
  return out;
}

RowVector row_times(const RowVector& row, const UTMatrix& m) {
  const std::size_t n = m.order();
  if (row.size() != n) throw DomainError("row length does not match matrix order");
  RowVector out(n);
  for (std::size_t j = 0; j < n; ++j) {
    PolyAccumulator acc;
    for (std::size_t k = 0; k < n; ++k)
      if (!row[k].is_zero() && !m(k, j).is_zero()) acc.add_product(row[k], m(k, j), m.truncation());
    out[j] = std::move(acc).finish();
  }
  return out;
}

}  // namespace bch
