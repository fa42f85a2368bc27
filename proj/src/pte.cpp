#include "likepow/pte.hpp"

#include <algorithm>
#include <iterator>

#include "likepow/error.hpp"

namespace likepow {

AffineMap::AffineMap(std::int64_t scale, std::int64_t offset) : p(scale), l(offset) {
    if (p == 0) fail(ErrorCode::invalid_argument, "affine scale p must be nonzero");
}

PtePair make_pair(std::vector<std::int64_t> u, std::vector<std::int64_t> v, std::uint32_t claimed_n,
                  Provenance provenance) {
    for (auto* set : {&u, &v}) {
        std::sort(set->begin(), set->end());
        if (std::adjacent_find(set->begin(), set->end()) != set->end())
            fail(ErrorCode::invalid_argument, "duplicate element in a pair set");
    }
    return PtePair{std::move(u), std::move(v), claimed_n, provenance};
}

std::string_view to_string(FailureReason r) noexcept {
    switch (r) {
        case FailureReason::overlap: return "overlap";
        case FailureReason::cardinality_mismatch: return "cardinality-mismatch";
        case FailureReason::early_difference: return "early-difference";
        case FailureReason::no_difference_at_n: return "no-difference-at-n";
    }
    return "unknown";
}

std::optional<FailureReason> failure_reason_from_string(std::string_view s) noexcept {
    for (auto r : {FailureReason::overlap, FailureReason::cardinality_mismatch, FailureReason::early_difference,
                   FailureReason::no_difference_at_n})
        if (to_string(r) == s) return r;
    return std::nullopt;
}

BigInt power_sum(std::span<const std::int64_t> set, unsigned s) {
    BigInt sum = 0;
    BigInt term;
    for (const std::int64_t x : set) {
        mpz_set_si(term.get_mpz_t(), static_cast<long>(x));
        mpz_pow_ui(term.get_mpz_t(), term.get_mpz_t(), s);
        sum += term;
    }
    return sum;
}

namespace {

std::int64_t affine_image(std::int64_t p, std::uint64_t i, std::int64_t l) {
    std::int64_t scaled;
    std::int64_t out;
    if (i > static_cast<std::uint64_t>(INT64_MAX) || __builtin_mul_overflow(p, static_cast<std::int64_t>(i), &scaled) ||
        __builtin_add_overflow(scaled, l, &out))
        fail(ErrorCode::overflow, "affine image p*i+l overflows 64 bits");
    return out;
}

template <class Source>
PtePair affine_pair(const Source& seq, AffineMap map) {
    std::vector<std::int64_t> u;
    std::vector<std::int64_t> v;
    for (std::uint64_t i = 0; i < seq.size(); ++i) {
        const Sign s = seq[i];
        if (s == Sign::minus)
            u.push_back(affine_image(map.p, i, map.l));
        else if (s == Sign::plus)
            v.push_back(affine_image(map.p, i, map.l));
    }
    return make_pair(std::move(u), std::move(v), seq.index(), AffineProvenance{seq.index(), map.p, map.l});
}

void check_cap(std::uint32_t n, const SourceOptions& source) {
    const std::uint64_t len = length_of(n);
    if (len > source.cap)
        fail(ErrorCode::cap_exceeded, "P_" + std::to_string(n) + " has " + std::to_string(len) +
                                          " elements, above the cap " + std::to_string(source.cap));
}

SupportSets supports_for(std::uint32_t n, const SourceOptions& source) {
    check_cap(n, source);
    if (source.force_virtual) return support_sets(VirtualPSeq(n));
    return support_sets(generate(n, source.cap));
}

std::vector<std::int64_t> difference(const std::vector<std::uint64_t>& outer, const std::vector<std::uint64_t>& inner) {
    if (!std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()))
        fail(ErrorCode::malformed_sequence, "odd-index support set is not contained in its successor's");
    std::vector<std::uint64_t> diff;
    std::set_difference(outer.begin(), outer.end(), inner.begin(), inner.end(), std::back_inserter(diff));
    return {diff.begin(), diff.end()};
}

bool sorted_sets_intersect(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return true;
    }
    return false;
}

std::vector<std::int64_t> sorted_copy(std::span<const std::int64_t> s) {
    std::vector<std::int64_t> out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

PtePair pair_from_affine(std::uint32_t n, AffineMap map, SourceOptions source) {
    if (n < 2) fail(ErrorCode::invalid_argument, "PTE pairs are defined for n > 1");
    check_cap(n, source);
    if (source.force_virtual) return affine_pair(VirtualPSeq(n), map);
    return affine_pair(generate(n, source.cap), map);
}

PtePair pair_from_difference(std::uint32_t m, SourceOptions source) {
    if (m >= max_index / 2) fail(ErrorCode::out_of_range, "difference index m too large");
    const SupportSets odd = supports_for(2 * m + 1, source);
    const SupportSets even = supports_for(2 * m + 2, source);
    return make_pair(difference(even.x_set, odd.x_set), difference(even.y_set, odd.y_set), 2 * m + 1,
                     DifferenceProvenance{m});
}

VerificationReport verify_pair(const PtePair& pair) {
    VerificationReport report;
    report.claimed_n = pair.claimed_n;
    const auto u = sorted_copy(pair.u_set);
    const auto v = sorted_copy(pair.v_set);
    if (sorted_sets_intersect(u, v)) {
        report.failure_reason = FailureReason::overlap;
        return report;
    }
    if (u.size() != v.size()) {
        report.failure_reason = FailureReason::cardinality_mismatch;
        return report;
    }
    // Equal p_0..p_m for disjoint m-sets is impossible, so the scan ends by
    // s = |U| unless both sets are empty.
    const unsigned last = std::max<unsigned>(pair.claimed_n, static_cast<unsigned>(u.size()));
    for (unsigned s = 0; s <= last; ++s) {
        SumsRow row{s, power_sum(u, s), power_sum(v, s)};
        const bool differ = row.u_sum != row.v_sum;
        report.sums_table.push_back(std::move(row));
        report.checked_through = s;
        if (differ) {
            report.first_difference = s;
            break;
        }
        if (s >= pair.claimed_n && u.empty()) break;
    }
    if (!report.first_difference || *report.first_difference > pair.claimed_n)
        report.failure_reason = FailureReason::no_difference_at_n;
    else if (*report.first_difference < pair.claimed_n)
        report.failure_reason = FailureReason::early_difference;
    report.is_valid = !report.failure_reason;
    return report;
}

unsigned pair_degree(std::span<const std::int64_t> u_in, std::span<const std::int64_t> v_in) {
    const auto u = sorted_copy(u_in);
    const auto v = sorted_copy(v_in);
    if (u.empty() || v.empty()) fail(ErrorCode::invalid_argument, "empty");
    if (sorted_sets_intersect(u, v)) fail(ErrorCode::invalid_argument, "overlap");
    if (u.size() != v.size()) fail(ErrorCode::invalid_argument, "cardinality-mismatch");
    for (unsigned s = 1; s <= u.size(); ++s)
        if (power_sum(u, s) != power_sum(v, s)) return s - 1;
    // Unreachable for disjoint nonempty sets.
    fail(ErrorCode::invalid_argument, "power sums agree beyond |U|");
}

}  // namespace likepow
