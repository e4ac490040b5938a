#pragma once

#include <cstddef>
#include <vector>

#include "bch/rational.hpp"
#include "bch/word.hpp"

namespace bch {

/// One factor X^x_power Y^y_power of a block sequence.
struct Block {
  std::size_t x_power = 0;
  std::size_t y_power = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

/// X^r1 Y^s1 X^r2 Y^s2 ... X^rk Y^sk with every r_i + s_i > 0.
using BlockSeq = std::vector<Block>;

/// Expands a block sequence literally into its word; zero exponents vanish
/// and adjacent runs of the same letter merge. Throws DomainError on an
/// empty block.
Word collapse(const BlockSeq& blocks);

/// K: the number of blocks in the X-first normal form
/// X^rho1 Y^sigma1 ... X^rhoK Y^sigmaK of w (rho1 or sigmaK may be zero).
std::size_t block_count(const Word& w);

struct GoldbergValue {
  Word word;
  Rational value;
  std::size_t block_count;
};

/// g(w) from the explicit block-sum formula, organized as a sum over the
/// ways of cutting w into consecutive X^r Y^s pieces. Requires |w| >= 1.
Rational goldberg_direct(const Word& w);
GoldbergValue goldberg_value(const Word& w);

/// The same sum by brute force: every block sequence of total degree |w| is
/// generated and kept only if it collapses to w. Exponential; |w| <= 10.
Rational goldberg_enumerated(const Word& w);

/// Every block sequence with k blocks and total degree n.
std::vector<BlockSeq> block_sequences(std::size_t n, std::size_t k);

/// Bernoulli number B_n with B_1 = -1/2.
Rational bernoulli(int n);
/// B_0 .. B_n.
std::vector<Rational> bernoulli_table(int n);

/// g(X^a Y^b) in closed form via Bernoulli numbers. Requires a + b >= 1.
Rational goldberg_xy(int a, int b);

/// The four words tied to X^a Y^b by the closed form and the value each
/// must carry.
struct XYSymmetryImages {
  Rational xa_yb;        ///< g(X^a Y^b)
  Rational xb_ya;        ///< g(X^b Y^a), equal to g(X^a Y^b)
  Rational ya_xb;        ///< g(Y^a X^b) = (-1)^(a+b+1) g(X^a Y^b)
  Rational yb_xa;        ///< g(Y^b X^a) = (-1)^(a+b+1) g(X^a Y^b)
};
XYSymmetryImages goldberg_xy_images(int a, int b);

}  // namespace bch
