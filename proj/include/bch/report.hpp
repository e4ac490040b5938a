#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bch/census.hpp"
#include "bch/lie.hpp"
#include "bch/reinsch.hpp"

namespace bch::report {

using Json = nlohmann::ordered_json;

/// Two-space indented JSON followed by a newline.
std::string dump(const Json& j);

/// {"variant": ..., "terms": [{"degree": n, "words": [{"word","num","den"}]}]}
Json terms_json(Variant variant, const std::vector<SeriesTerm>& terms);
/// One line per degree, e.g. `z2 = 1/2*XY - 1/2*YX`; `quiet` prints term counts only.
std::string terms_text(Variant variant, const std::vector<SeriesTerm>& terms, bool quiet);

inline constexpr const char* kCensusCsvHeader = "n,count,bound,ratio_num,ratio_den,variant";
std::string census_csv(const std::vector<CensusRecord>& records);
Json census_json(const std::vector<CensusRecord>& records);
std::string census_text(const std::vector<CensusRecord>& records);

/// {"n": int, "checks": {name: {"pass": bool, "witness": word-or-null}}}
Json property_json(const PropertyReport& report);

Json bound_json(const BoundReport& report);

Json profile_json(const OccurrenceProfile& profile);

}  // namespace bch::report
