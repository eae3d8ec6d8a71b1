#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "affgk/formulas.hpp"
#include "affgk/oracle.hpp"

namespace affgk::io {

using Json = nlohmann::ordered_json;

/// {"<v-exp>": "<int>"} with keys in ascending numeric order.
Json poly_json(const QLaurent& p);

/// Same keyed by q-exponent; requires a polynomial in q.
Json qpoly_json(const QLaurent& p);

/// Compact polynomial-in-q rendering, descending exponents: "2*q^2 - 3*q + 1".
std::string qpoly_str(const QLaurent& p);

std::string rat_str(const Rat& r);

/// {"H": h, "terms": [{"gamma": [...], "poly": {...}}]}, terms in
/// lexicographic gamma order.
Json series_json(const GradedSeries& s);

Json roots_json(const std::vector<CorootWithMult>& roots);
std::string roots_csv(const std::vector<CorootWithMult>& roots);

Json report_json(const GKReport& r, const std::optional<Int>& evalQ);
std::string report_csv(const GKReport& r, const std::optional<Int>& evalQ);

Json zseries_json(const ZSeries& s, const std::optional<Int>& evalQ);

Json wspace_json(const PrincipalInvariantSpace& W);

Json oracle_json(const OrbitCount& c);

Json consistency_json(const ConsistencyReport& r);

} // namespace affgk::io
