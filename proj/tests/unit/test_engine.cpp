#include <random>

#include <gtest/gtest.h>

#include "bch/errors.hpp"
#include "bch/reinsch.hpp"

using namespace bch;

namespace {

FreePoly body(Variant v, std::size_t n, std::size_t order) {
  return series_terms(preset(v), order)[n - 1].body;
}

// Strictly upper triangular, entries with at most two words of the graded degree.
UTMatrix random_nilpotent(std::mt19937& rng, std::size_t order) {
  UTMatrix m(order);
  std::uniform_int_distribution<int> c(-4, 4), k(0, 2);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = i + 1; j < order; ++j) {
      const std::size_t d = j - i;
      std::vector<Term> terms;
      for (int t = k(rng); t > 0; --t) {
        const auto bits = std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << d) - 1)(rng);
        terms.push_back({Word::from_bits(bits, d), Rational(c(rng), 1 + t)});
      }
      m(i, j) = FreePoly::from_terms(std::move(terms));
    }
  return m;
}

}  // namespace

TEST(Engine, GeneratorShape) {
  const UTMatrix x = build_generator(Letter::X, 3);
  EXPECT_EQ(x.order(), 4U);
  EXPECT_EQ(x(0, 1), FreePoly::parse("X"));
  EXPECT_EQ(x(2, 3), FreePoly::parse("X"));
  EXPECT_TRUE(x(0, 2).is_zero());
  EXPECT_THROW(build_generator(Letter::X, 0), DomainError);
  EXPECT_THROW(series_terms(preset(Variant::standard), 0), DomainError);
}

TEST(Engine, ExpOfGeneratorHasPowersOverFactorials) {
  const UTMatrix e = nilpotent_exp(build_generator(Letter::Y, 4));
  EXPECT_EQ(e(0, 4), FreePoly::parse("1/24*Y^4"));
  EXPECT_EQ(e(1, 3), FreePoly::parse("1/2*Y^2"));
}

TEST(Engine, ExpLogAreInverse) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const std::size_t order = 2 + i % 5;
    const UTMatrix m = random_nilpotent(rng, order);
    const UTMatrix e = nilpotent_exp(m);
    ASSERT_TRUE(e.is_unipotent());
    EXPECT_EQ(nilpotent_log(e), m) << "case " << i;
  }
}

TEST(Engine, LogRejectsNonUnipotent) {
  UTMatrix m(3);
  EXPECT_THROW(nilpotent_log(m), DomainError);
  EXPECT_THROW(nilpotent_exp(UTMatrix::identity(3)), DomainError);
}

TEST(Engine, GradingHoldsOnEveryIntermediate) {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::size_t seen = 0;
    EngineOptions opts;
    opts.mode = EngineOptions::Mode::full_matrix;
    opts.observer = [&](std::string_view stage, const UTMatrix& m) {
      ++seen;
      EXPECT_TRUE(m.is_graded()) << stage << " at N=" << n;
    };
    series_terms(preset(Variant::standard), n, opts);
    EXPECT_GT(seen, 0U);
  }
}

TEST(Engine, FullMatrixAgreesWithFirstRow) {
  for (Variant v : kAllVariants) {
    EngineOptions full;
    full.mode = EngineOptions::Mode::full_matrix;
    const auto a = series_terms(preset(v), 6, full);
    const auto b = series_terms(preset(v), 6);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].body, b[i].body) << variant_name(v);
  }
}

TEST(Engine, ThreadCountDoesNotChangeResults) {
  EngineOptions many;
  many.threads = 4;
  const auto a = series_terms(preset(Variant::standard), 9, many);
  const auto b = series_terms(preset(Variant::standard), 9);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].body, b[i].body);
}

TEST(Engine, LowOrderStandardTerms) {
  const auto t = series_terms(preset(Variant::standard), 4);
  ASSERT_EQ(t.size(), 4U);
  EXPECT_EQ(t[0].body, FreePoly::parse("X + Y"));
  EXPECT_EQ(t[1].body, FreePoly::parse("1/2*XY - 1/2*YX"));
  EXPECT_EQ(t[2].body, FreePoly::parse("1/12*X^2Y - 1/6*XYX + 1/12*XY^2 + 1/12*YX^2 - 1/6*YXY + 1/12*Y^2X"));
  EXPECT_EQ(t[3].body, FreePoly::parse("1/24*X^2Y^2 - 1/12*XYXY + 1/12*YXYX - 1/24*Y^2X^2"));
}

TEST(Engine, TermsAreHomogeneousAndTruncationConsistent) {
  const auto big = series_terms(preset(Variant::standard), 9);
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto small = series_terms(preset(Variant::standard), n);
    for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(small[k].body, big[k].body);
  }
  for (const SeriesTerm& t : big) EXPECT_TRUE(t.body.is_homogeneous(t.degree));
}

TEST(Engine, Antisymmetry) {
  // log(e^Y e^X) = -log(e^-X e^-Y), i.e. z_n(Y,X) = (-1)^(n+1) z_n(X,Y).
  const auto z = series_terms(preset(Variant::standard), 8);
  for (const SeriesTerm& t : z) {
    const Rational s(t.degree % 2 == 1 ? 1 : -1);
    EXPECT_EQ(t.body.map_words(interchange), s * t.body) << t.degree;
  }
}

TEST(Engine, SymmetricEvenTermsVanish) {
  const auto s = series_terms(preset(Variant::symmetric), 12);
  for (const SeriesTerm& t : s)
    if (t.degree % 2 == 0) EXPECT_TRUE(t.body.is_zero()) << t.degree;
}

TEST(Engine, PresetIdentities) {
  EXPECT_TRUE(body(Variant::loop, 1, 4).is_zero());
  EXPECT_TRUE(body(Variant::triangular, 1, 4).is_zero());
  EXPECT_EQ(body(Variant::sum_difference, 1, 4), FreePoly::parse("2*X"));
  EXPECT_EQ(body(Variant::symmetric_sum_difference, 1, 4), FreePoly::parse("2*X"));
  EXPECT_TRUE(body(Variant::symmetric_sum_difference, 2, 4).is_zero());
  EXPECT_TRUE(body(Variant::symmetric_sum_difference, 4, 4).is_zero());
  for (std::size_t n : {1, 2, 4}) EXPECT_TRUE(body(Variant::highly_symmetrized, n, 4).is_zero()) << n;
  EXPECT_EQ(body(Variant::loop, 2, 4), FreePoly::parse("XY - YX"));
  EXPECT_EQ(body(Variant::triangular, 2, 4), FreePoly::parse("-1/2*XY + 1/2*YX"));
}

TEST(Engine, VariantNames) {
  for (Variant v : kAllVariants) EXPECT_EQ(parse_variant(variant_name(v)), v);
  EXPECT_THROW(parse_variant("nope"), DomainError);
}

TEST(Engine, SingleCoefficients) {
  EXPECT_EQ(engine_coefficient(Word::parse("X^4Y^4")), Rational(23, 120960));
  EXPECT_EQ(engine_coefficient(Word::parse("XYXYX")), Rational(1, 30));
  EXPECT_EQ(engine_coefficient(Word::parse("X^4Y")), Rational(-1, 720));
  EXPECT_EQ(engine_coefficient(Word::parse("X")), Rational(1));
  EXPECT_THROW(engine_coefficient(Word()), DomainError);
}
