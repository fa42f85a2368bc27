#pragma once

// Ground truth for the pte module: a verifier sharing no arithmetic with
// it, an exhaustive pair search, and a method (A) / method (B) comparison.

#include <cstdint>
#include <vector>

#include "likepow/pte.hpp"

namespace likepow::oracle {

inline constexpr std::uint64_t default_work_budget = 100'000'000;

/// Same contract as verify_pair, computed with schoolbook repeated
/// multiplication on a private limb integer.
VerificationReport naive_verify(const PtePair& pair);

/// Both sets sorted; the set holding min(U u V) comes first.
PtePair canonicalize(PtePair pair);

struct SearchSpec {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    unsigned set_size = 1;
    unsigned min_degree = 0;
};

struct SearchStats {
    std::uint64_t examined = 0;  // candidate pairs compared inside buckets
    std::uint64_t found = 0;
    std::uint64_t work_units = 0;  // subsets enumerated + pairs examined
};

struct SearchResult {
    std::vector<PtePair> pairs;  // canonical, sorted by (u, v)
    SearchStats stats;
};

/// C(N, m)^2 for N = hi - lo + 1, saturating at UINT64_MAX.
std::uint64_t search_work_estimate(const SearchSpec& spec);

/// Every unordered pair of disjoint m-subsets of [lo, hi] whose power sums
/// agree for s = 1..d. Subsets are bucketed by (p_1, p_2) first. Throws
/// budget_exceeded when the estimate exceeds `budget`.
SearchResult exhaustive_search(const SearchSpec& spec, std::uint64_t budget = default_work_budget,
                               unsigned threads = 1);

struct DifferenceMatch {
    std::uint32_t m;
    PtePair b_pair;
    std::vector<AffineProvenance> witnesses;  // affine maps reproducing b_pair
};

struct ComparisonReport {
    std::uint32_t m_max = 0;
    std::int64_t p_bound = 0;
    std::int64_t l_bound = 0;
    std::vector<DifferenceMatch> difference_pairs;
    std::vector<AffineProvenance> affine_unmatched;  // A-pairs equal to no B-pair
    std::uint64_t affine_total = 0;
};

/// Descriptive, not a pass/fail check: which method (B) pairs for m = 1..m_max
/// are affine images of P_{2m+1} with 0 < |p| <= p_bound, |l| <= l_bound.
ComparisonReport compare_methods(std::uint32_t m_max, std::int64_t p_bound, std::int64_t l_bound,
                                 std::uint64_t budget = default_work_budget);

}  // namespace likepow::oracle
