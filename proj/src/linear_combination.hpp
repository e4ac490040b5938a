#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "bch/rational.hpp"
#include "bch/word.hpp"

namespace bch::detail {

/// Parses `c1*atom1 + c2*atom2 - ...`. With `bracketed` every atom must be
/// a `[word]` token, otherwise atoms are bare words (and a bare number is a
/// constant term on the empty word). Coefficients are optional and may be
/// written as `n` or `n/d`, separated from the atom by `*` or spaces.
std::vector<std::pair<Word, Rational>> parse_linear_combination(std::string_view text, bool bracketed);

}  // namespace bch::detail
