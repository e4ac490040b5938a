#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "bch/free_poly.hpp"
#include "bch/ut_matrix.hpp"

namespace bch {

/// exp(x_coeff * X + y_coeff * Y).
struct ExpFactor {
  Rational x_coeff;
  Rational y_coeff;

  friend bool operator==(const ExpFactor&, const ExpFactor&) = default;
};

enum class Variant {
  standard,
  symmetric,
  loop,
  triangular,
  sum_difference,
  highly_symmetrized,
  symmetric_sum_difference,
  highly_symmetrized_sum_difference,
};

inline constexpr std::array<Variant, 8> kAllVariants = {
    Variant::standard,
    Variant::symmetric,
    Variant::loop,
    Variant::triangular,
    Variant::sum_difference,
    Variant::highly_symmetrized,
    Variant::symmetric_sum_difference,
    Variant::highly_symmetrized_sum_difference,
};

std::string_view variant_name(Variant v);
/// Throws DomainError for an unknown name.
Variant parse_variant(std::string_view name);

/// An ordered product of exponentials whose logarithm defines a series.
struct VariantPreset {
  Variant variant;
  std::vector<ExpFactor> factors;
};

VariantPreset preset(Variant v);
VariantPreset preset(std::string_view name);

/// The degree-n homogeneous part of a series.
struct SeriesTerm {
  std::size_t degree;
  FreePoly body;
};

/// Order-(N+1) matrix with the given letter on the first super-diagonal.
UTMatrix build_generator(Letter letter, std::size_t truncation);

/// I + M + M^2/2! + ... + M^N/N!. Requires M strictly upper triangular.
UTMatrix nilpotent_exp(const UTMatrix& m, unsigned threads = 1);
/// exp(a*X_N + b*Y_N).
UTMatrix nilpotent_exp(const ExpFactor& factor, std::size_t truncation, unsigned threads = 1);
/// sum_{k=1..N} (-1)^(k-1) A^k / k for P = I + A. Requires P unipotent.
UTMatrix nilpotent_log(const UTMatrix& p, unsigned threads = 1);

struct EngineOptions {
  enum class Mode {
    /// Full matrices throughout; every intermediate is observable.
    full_matrix,
    /// Only the first row of the logarithm is propagated (row <- row * A).
    first_row,
  };
  Mode mode = Mode::first_row;
  unsigned threads = 1;
  /// Called with a stage label and every intermediate matrix in full mode.
  std::function<void(std::string_view stage, const UTMatrix&)> observer;
};

/// Terms of degree 1..N of log(prod exp(factor)), read off the first row.
std::vector<SeriesTerm> series_terms(const VariantPreset& preset, std::size_t truncation,
                                     const EngineOptions& options = {});

/// Goldberg coefficient g(w) through the matrix engine.
Rational engine_coefficient(const Word& w);

}  // namespace bch
