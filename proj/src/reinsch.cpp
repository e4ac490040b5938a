#include "bch/reinsch.hpp"

#include <string>
#include <thread>

#include "bch/errors.hpp"

namespace bch {

namespace {

struct VariantInfo {
  Variant variant;
  std::string_view name;
};

constexpr std::array<VariantInfo, 8> kVariantNames = {{
    {Variant::standard, "standard"},
    {Variant::symmetric, "symmetric"},
    {Variant::loop, "loop"},
    {Variant::triangular, "triangular"},
    {Variant::sum_difference, "sum_difference"},
    {Variant::highly_symmetrized, "highly_symmetrized"},
    {Variant::symmetric_sum_difference, "symmetric_sum_difference"},
    {Variant::highly_symmetrized_sum_difference, "highly_symmetrized_sum_difference"},
}};

ExpFactor factor(long xn, long xd, long yn, long yd) { return {Rational(xn, xd), Rational(yn, yd)}; }

void emit(const EngineOptions& options, std::string_view stage, const UTMatrix& m) {
  if (options.observer) options.observer(stage, m);
}

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, n);
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
}

// Toeplitz upper-triangular matrices are determined by their first row;
// products of them stay Toeplitz, so the first row of a product is the
// truncated convolution of the two rows.
RowVector convolve(const RowVector& a, const RowVector& b, unsigned threads) {
  const std::size_t n = a.size();
  const std::size_t max_len = n - 1;
  RowVector out(n);
  parallel_for(n, threads, [&](std::size_t j) {
    PolyAccumulator acc;
    for (std::size_t k = 0; k <= j; ++k)
      if (!a[k].is_zero() && !b[j - k].is_zero()) acc.add_product(a[k], b[j - k], max_len);
    out[j] = std::move(acc).finish();
  });
  return out;
}

// First row of exp(a*X_N + b*Y_N): entry d is (aX + bY)^d / d!.
RowVector exp_factor_row(const ExpFactor& f, std::size_t truncation) {
  FreePoly linear = FreePoly::monomial(Word::letter(Letter::X), f.x_coeff) +
                    FreePoly::monomial(Word::letter(Letter::Y), f.y_coeff);
  RowVector row(truncation + 1);
  row[0] = FreePoly::constant(Rational(1));
  for (std::size_t d = 1; d <= truncation; ++d)
    row[d] = Rational(1, static_cast<long>(d)) * FreePoly::multiply(row[d - 1], linear, truncation);
  return row;
}

std::vector<SeriesTerm> first_row_terms(const VariantPreset& preset, std::size_t truncation,
                                        const EngineOptions& options) {
  RowVector product(truncation + 1);
  product[0] = FreePoly::constant(Rational(1));
  for (const ExpFactor& f : preset.factors) product = convolve(product, exp_factor_row(f, truncation), options.threads);

  RowVector a = product;
  a[0] = FreePoly{};
  RowVector power = a;
  RowVector log = a;
  for (std::size_t k = 2; k <= truncation; ++k) {
    power = convolve(power, a, options.threads);
    const Rational c((k % 2 == 0) ? -1 : 1, static_cast<long>(k));
    for (std::size_t j = 0; j <= truncation; ++j)
      if (!power[j].is_zero()) log[j] += c * power[j];
  }

  std::vector<SeriesTerm> out;
  out.reserve(truncation);
  for (std::size_t n = 1; n <= truncation; ++n) out.push_back({n, std::move(log[n])});
  return out;
}

std::vector<SeriesTerm> full_matrix_terms(const VariantPreset& preset, std::size_t truncation,
                                          const EngineOptions& options) {
  const UTMatrix x = build_generator(Letter::X, truncation);
  const UTMatrix y = build_generator(Letter::Y, truncation);
  emit(options, "generator X", x);
  emit(options, "generator Y", y);

  UTMatrix product = UTMatrix::identity(truncation + 1);
  for (const ExpFactor& f : preset.factors) {
    const UTMatrix e = nilpotent_exp(f.x_coeff * x + f.y_coeff * y, options.threads);
    emit(options, "factor exponential", e);
    product = UTMatrix::multiply(product, e, options.threads);
    emit(options, "partial product", product);
  }

  const UTMatrix log = nilpotent_log(product, options.threads);
  emit(options, "logarithm", log);

  std::vector<SeriesTerm> out;
  out.reserve(truncation);
  for (std::size_t n = 1; n <= truncation; ++n) out.push_back({n, log(0, n)});
  return out;
}

}  // namespace

std::string_view variant_name(Variant v) {
  for (const auto& info : kVariantNames)
    if (info.variant == v) return info.name;
  throw DomainError("unknown variant");
}

Variant parse_variant(std::string_view name) {
  for (const auto& info : kVariantNames)
    if (info.name == name) return info.variant;
  throw DomainError("unknown variant '" + std::string(name) + "'");
}

VariantPreset preset(Variant v) {
  switch (v) {
    case Variant::standard:
      return {v, {factor(1, 1, 0, 1), factor(0, 1, 1, 1)}};
    case Variant::symmetric:
      return {v, {factor(1, 2, 0, 1), factor(0, 1, 1, 1), factor(1, 2, 0, 1)}};
    case Variant::loop:
      return {v, {factor(1, 1, 0, 1), factor(0, 1, 1, 1), factor(-1, 1, 0, 1), factor(0, 1, -1, 1)}};
    case Variant::triangular:
      return {v, {factor(-1, 1, 0, 1), factor(1, 1, 1, 1), factor(0, 1, -1, 1)}};
    case Variant::sum_difference:
      return {v, {factor(1, 1, 1, 1), factor(1, 1, -1, 1)}};
    case Variant::highly_symmetrized:
      return {v,
              {factor(-1, 2, -1, 2), factor(1, 2, 0, 1), factor(0, 1, 1, 1), factor(1, 2, 0, 1),
               factor(-1, 2, -1, 2)}};
    case Variant::symmetric_sum_difference:
      return {v, {factor(1, 2, -1, 2), factor(1, 1, 1, 1), factor(1, 2, -1, 2)}};
    case Variant::highly_symmetrized_sum_difference:
      return {v,
              {factor(-1, 1, 0, 1), factor(1, 2, -1, 2), factor(1, 1, 1, 1), factor(1, 2, -1, 2),
               factor(-1, 1, 0, 1)}};
  }
  throw DomainError("unknown variant");
}

VariantPreset preset(std::string_view name) { return preset(parse_variant(name)); }

UTMatrix build_generator(Letter letter, std::size_t truncation) {
  if (truncation < 1) throw DomainError("generator truncation must be at least 1");
  UTMatrix m(truncation + 1);
  for (std::size_t i = 0; i < truncation; ++i) m(i, i + 1) = FreePoly::monomial(Word::letter(letter));
  return m;
}

UTMatrix nilpotent_exp(const UTMatrix& m, unsigned threads) {
  if (!m.is_strictly_upper()) throw DomainError("nilpotent_exp requires a strictly upper-triangular matrix");
  UTMatrix result = UTMatrix::identity(m.order());
  UTMatrix term = result;
  for (std::size_t k = 1; k <= m.truncation(); ++k) {
    term = Rational(1, static_cast<long>(k)) * UTMatrix::multiply(term, m, threads);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

UTMatrix nilpotent_exp(const ExpFactor& factor, std::size_t truncation, unsigned threads) {
  return nilpotent_exp(factor.x_coeff * build_generator(Letter::X, truncation) +
                           factor.y_coeff * build_generator(Letter::Y, truncation),
                       threads);
}

UTMatrix nilpotent_log(const UTMatrix& p, unsigned threads) {
  if (!p.is_unipotent()) throw DomainError("nilpotent_log requires unit diagonal and zero lower triangle");
  const UTMatrix a = p - UTMatrix::identity(p.order());
  UTMatrix result = a;
  UTMatrix power = a;
  for (std::size_t k = 2; k <= p.truncation(); ++k) {
    power = UTMatrix::multiply(power, a, threads);
    if (power.is_zero()) break;
    result += Rational((k % 2 == 0) ? -1 : 1, static_cast<long>(k)) * power;
  }
  return result;
}

std::vector<SeriesTerm> series_terms(const VariantPreset& preset, std::size_t truncation,
                                     const EngineOptions& options) {
  if (truncation < 1) throw DomainError("series truncation order must be at least 1");
  if (options.mode == EngineOptions::Mode::full_matrix) return full_matrix_terms(preset, truncation, options);
  return first_row_terms(preset, truncation, options);
}

Rational engine_coefficient(const Word& w) {
  if (w.empty()) throw DomainError("engine_coefficient needs a non-empty word");
  const auto terms = series_terms(preset(Variant::standard), w.size());
  return terms.back().body.coeff(w);
}

}  // namespace bch
