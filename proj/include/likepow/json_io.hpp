#pragma once

// JSON interchange. Big integers travel as decimal strings; set elements
// and indices as plain numbers. Readers throw Error(parse_error) on schema
// violations.

#include <string>
#include <string_view>

#include "json.hpp"

#include "likepow/moments.hpp"
#include "likepow/oracle.hpp"
#include "likepow/pseq.hpp"
#include "likepow/pte.hpp"

namespace likepow::json {

using nlohmann::json;

json to_json(const PSeq& seq);
json to_json(const MomentVector& mv);
json to_json(const IntPolynomial& poly);
json to_json(const PtePair& pair);
json to_json(const VerificationReport& report);
json to_json(const oracle::SearchResult& result);
json to_json(const oracle::ComparisonReport& report);

json parse(std::string_view text);

PSeq pseq_from_json(const json& j);
MomentVector moments_from_json(const json& j);
IntPolynomial poly_from_json(const json& j);
PtePair pair_from_json(const json& j);
VerificationReport report_from_json(const json& j);

/// Compact, key-sorted serialization; the byte-stable form used on output.
std::string dump(const json& j);

}  // namespace likepow::json
