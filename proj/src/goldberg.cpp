#include "bch/goldberg.hpp"

#include "bch/errors.hpp"

namespace bch {

namespace {

std::vector<mpz_class> factorials(std::size_t n) {
  std::vector<mpz_class> out(n + 1);
  out[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) out[i] = out[i - 1] * static_cast<unsigned long>(i);
  return out;
}

Rational signed_reciprocal(std::size_t k) { return Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k)); }

void extend(std::size_t n, std::size_t k, BlockSeq& prefix, std::vector<BlockSeq>& out) {
  if (k == 0) {
    if (n == 0) out.push_back(prefix);
    return;
  }
  if (n < k) return;
  // Leave at least one letter for each remaining block.
  for (std::size_t d = 1; d + (k - 1) <= n; ++d) {
    for (std::size_t r = 0; r <= d; ++r) {
      prefix.push_back({r, d - r});
      extend(n - d, k - 1, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

Word collapse(const BlockSeq& blocks) {
  Word w;
  for (const Block& b : blocks) {
    if (b.x_power + b.y_power == 0) throw DomainError("block sequence contains an empty block");
    for (std::size_t i = 0; i < b.x_power; ++i) w.push_back(Letter::X);
    for (std::size_t i = 0; i < b.y_power; ++i) w.push_back(Letter::Y);
  }
  return w;
}

std::size_t block_count(const Word& w) {
  std::size_t descents = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == Letter::Y && w[i + 1] == Letter::X) ++descents;
  return descents + 1;
}

Rational goldberg_direct(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw DomainError("goldberg_direct needs a non-empty word");
  const auto fact = factorials(n);

  // weight[s][e]: 1/(r! s!) when w[s..e) has the shape X^r Y^s, else zero.
  std::vector<std::vector<Rational>> weight(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t xs = 0;
    std::size_t ys = 0;
    for (std::size_t e = s + 1; e <= n; ++e) {
      if (w[e - 1] == Letter::X) {
        if (ys > 0) break;  // a Y followed by an X cannot sit inside one block
        ++xs;
      } else {
        ++ys;
      }
      weight[s][e] = Rational(mpq_class(1, fact[xs] * fact[ys]));
    }
  }

  // ways[e]: sum over cuttings of w[0..e) into exactly k blocks of the
  // product of block weights; advanced one k at a time.
  std::vector<Rational> ways(n + 1);
  ways[0] = Rational(1);
  Rational total;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Rational> next(n + 1);
    for (std::size_t e = k; e <= n; ++e)
      for (std::size_t s = k - 1; s < e; ++s)
        if (!ways[s].is_zero() && !weight[s][e].is_zero()) next[e] += ways[s] * weight[s][e];
    ways = std::move(next);
    if (!ways[n].is_zero()) total += signed_reciprocal(k) * ways[n];
  }
  return total;
}

GoldbergValue goldberg_value(const Word& w) { return {w, goldberg_direct(w), block_count(w)}; }

std::vector<BlockSeq> block_sequences(std::size_t n, std::size_t k) {
  std::vector<BlockSeq> out;
  BlockSeq prefix;
  extend(n, k, prefix, out);
  return out;
}

Rational goldberg_enumerated(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw DomainError("goldberg_enumerated needs a non-empty word");
  if (n > 10) throw DomainError("goldberg_enumerated is limited to words of length <= 10");
  const auto fact = factorials(n);
  Rational total;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational inner;
    for (const BlockSeq& seq : block_sequences(n, k)) {
      if (collapse(seq) != w) continue;
      mpz_class den = 1;
      for (const Block& b : seq) den *= fact[b.x_power] * fact[b.y_power];
      inner += Rational(mpq_class(1, den));
    }
    total += signed_reciprocal(k) * inner;
  }
  return total;
}

std::vector<Rational> bernoulli_table(int n) {
  if (n < 0) throw DomainError("Bernoulli index must be non-negative");
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = Rational(1);
  for (int m = 1; m <= n; ++m) {
    Rational sum;
    for (int j = 0; j < m; ++j)
      sum += Rational(binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(j))) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(m)] = -sum / Rational(m + 1);
  }
  return b;
}

Rational bernoulli(int n) { return bernoulli_table(n).back(); }

Rational goldberg_xy(int a, int b) {
  if (a < 0 || b < 0 || a + b < 1) throw DomainError("goldberg_xy needs a, b >= 0 and a + b >= 1");
  if (a + b == 1) return Rational(1);  // z_1 = X + Y; the Bernoulli sum only covers mixed words
  const auto bern = bernoulli_table(a + b);
  Rational sum;
  for (int i = 1; i <= b; ++i)
    sum += Rational(binomial(static_cast<unsigned>(b), static_cast<unsigned>(i))) *
           bern[static_cast<std::size_t>(a + b - i)];
  const mpz_class den = factorial(static_cast<unsigned>(a)) * factorial(static_cast<unsigned>(b));
  return Rational(mpq_class(a % 2 == 0 ? 1 : -1, den)) * sum;
}

XYSymmetryImages goldberg_xy_images(int a, int b) {
  const Rational g = goldberg_xy(a, b);
  const Rational flipped = (a + b) % 2 == 0 ? -g : g;
  return {g, g, flipped, flipped};
}

}  // namespace bch
