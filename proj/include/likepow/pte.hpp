#pragma once

// Prouhet-Tarry-Escott pairs: disjoint equal-size integer sets U, V with
// sum u^s = sum v^s for s < n and a difference at s = n.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "likepow/moments.hpp"
#include "likepow/pseq.hpp"

namespace likepow {

struct AffineMap {
    std::int64_t p;
    std::int64_t l;

    AffineMap(std::int64_t scale, std::int64_t offset);
};

struct AffineProvenance {
    std::uint32_t seq_index;
    std::int64_t p;
    std::int64_t l;
    friend bool operator==(const AffineProvenance&, const AffineProvenance&) = default;
};
struct DifferenceProvenance {
    std::uint32_t m;
    friend bool operator==(const DifferenceProvenance&, const DifferenceProvenance&) = default;
};
struct ExternalProvenance {
    friend bool operator==(const ExternalProvenance&, const ExternalProvenance&) = default;
};
using Provenance = std::variant<AffineProvenance, DifferenceProvenance, ExternalProvenance>;

struct PtePair {
    std::vector<std::int64_t> u_set;  // sorted, no duplicates
    std::vector<std::int64_t> v_set;  // sorted, no duplicates
    std::uint32_t claimed_n = 0;
    Provenance provenance = ExternalProvenance{};

    friend bool operator==(const PtePair&, const PtePair&) = default;
};

/// Sorts both sets. Throws invalid_argument on duplicates within a set;
/// overlap and size mismatch are left for verification.
PtePair make_pair(std::vector<std::int64_t> u, std::vector<std::int64_t> v, std::uint32_t claimed_n,
                  Provenance provenance = ExternalProvenance{});

enum class FailureReason { overlap, cardinality_mismatch, early_difference, no_difference_at_n };

std::string_view to_string(FailureReason r) noexcept;
std::optional<FailureReason> failure_reason_from_string(std::string_view s) noexcept;

struct SumsRow {
    unsigned s;
    BigInt u_sum;
    BigInt v_sum;
    friend bool operator==(const SumsRow&, const SumsRow&) = default;
};

struct VerificationReport {
    bool is_valid = false;
    std::uint32_t claimed_n = 0;
    unsigned checked_through = 0;
    std::optional<unsigned> first_difference;
    std::vector<SumsRow> sums_table;
    std::optional<FailureReason> failure_reason;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// sum x^s over the set with 0^0 = 1.
BigInt power_sum(std::span<const std::int64_t> set, unsigned s);

/// Method (A): u = {p i + l : a_i = -1}, v = {p i + l : a_i = +1} over P_n.
PtePair pair_from_affine(std::uint32_t n, AffineMap map, SourceOptions source = {});

/// Method (B): u = X_{2m+2} \ X_{2m+1}, v = Y_{2m+2} \ Y_{2m+1}; equal power
/// sums for s = 0..2m. claimed_n = 2m+1 is an equality range, not a claim of
/// difference at 2m+1.
PtePair pair_from_difference(std::uint32_t m, SourceOptions source = {});

/// Checks disjointness, cardinality, equality for s < claimed_n and a
/// difference at claimed_n. Scans past claimed_n until the first difference
/// (at most |U|), so first_difference is always measured. Never throws on
/// malformed pairs.
VerificationReport verify_pair(const PtePair& pair);

/// Largest d with equal power sums for s = 0..d. Throws invalid_argument for
/// overlapping, size-mismatched, or empty sets.
unsigned pair_degree(std::span<const std::int64_t> u, std::span<const std::int64_t> v);

}  // namespace likepow
