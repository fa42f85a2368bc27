#pragma once

// Human-readable text forms used by the CLI.

#include <string>

#include "likepow/moments.hpp"
#include "likepow/oracle.hpp"
#include "likepow/pte.hpp"

namespace likepow::text {

std::string render(const MomentVector& mv);
std::string render(const IntPolynomial& poly);
std::string render(const PtePair& pair);
std::string render(const VerificationReport& report);
std::string render(const oracle::SearchResult& result);
std::string render(const oracle::ComparisonReport& report);

}  // namespace likepow::text
