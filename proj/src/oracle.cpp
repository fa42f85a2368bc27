#include "likepow/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>
#include <tuple>
#include <utility>

#include "likepow/error.hpp"

namespace likepow::oracle {

namespace {

// Signed magnitude integer on base-2^32 limbs. Only what the naive power
// sums need: multiply by a machine word, add, compare, print.
class SchoolInt {
public:
    SchoolInt() = default;
    explicit SchoolInt(std::int64_t x) : negative_(x < 0) {
        std::uint64_t mag = x < 0 ? ~static_cast<std::uint64_t>(x) + 1 : static_cast<std::uint64_t>(x);
        while (mag != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(mag));
            mag >>= 32;
        }
    }

    bool is_zero() const noexcept { return limbs_.empty(); }

    void multiply(std::int64_t x) {
        if (x == 0 || is_zero()) {
            *this = SchoolInt{};
            return;
        }
        const std::uint64_t mag = x < 0 ? ~static_cast<std::uint64_t>(x) + 1 : static_cast<std::uint64_t>(x);
        const std::uint32_t lo = static_cast<std::uint32_t>(mag);
        const std::uint32_t hi = static_cast<std::uint32_t>(mag >> 32);
        std::vector<std::uint32_t> out(limbs_.size() + 2, 0);
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < 2; ++j) {
                const std::uint64_t w = j == 0 ? lo : hi;
                const std::uint64_t cur = out[i + j] + static_cast<std::uint64_t>(limbs_[i]) * w + carry;
                out[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            for (std::size_t k = i + 2; carry != 0; ++k) {
                const std::uint64_t cur = out[k] + carry;
                out[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
        }
        limbs_ = std::move(out);
        trim();
        negative_ = negative_ != (x < 0);
    }

    void add(const SchoolInt& other) {
        if (other.is_zero()) return;
        if (negative_ == other.negative_ || is_zero()) {
            if (is_zero()) negative_ = other.negative_;
            add_magnitude(other.limbs_);
            return;
        }
        if (compare_magnitude(limbs_, other.limbs_) >= 0) {
            subtract_magnitude(limbs_, other.limbs_);
        } else {
            auto big = other.limbs_;
            subtract_magnitude(big, limbs_);
            limbs_ = std::move(big);
            negative_ = other.negative_;
        }
        trim();
    }

    friend bool operator==(const SchoolInt& a, const SchoolInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }

    std::string decimal() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> mag = limbs_;
        std::vector<std::uint32_t> groups;  // base 10^9, least significant first
        while (!mag.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = mag.size(); i-- > 0;) {
                const std::uint64_t cur = (rem << 32) | mag[i];
                mag[i] = static_cast<std::uint32_t>(cur / 1'000'000'000);
                rem = cur % 1'000'000'000;
            }
            groups.push_back(static_cast<std::uint32_t>(rem));
            while (!mag.empty() && mag.back() == 0) mag.pop_back();
        }
        std::string out = negative_ ? "-" : "";
        out += std::to_string(groups.back());
        for (std::size_t i = groups.size() - 1; i-- > 0;) {
            const std::string g = std::to_string(groups[i]);
            out += std::string(9 - g.size(), '0') + g;
        }
        return out;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) negative_ = false;
    }

    void add_magnitude(const std::vector<std::uint32_t>& other) {
        if (limbs_.size() < other.size()) limbs_.resize(other.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            const std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) + (i < other.size() ? other[i] : 0u) + carry;
            limbs_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            if (carry == 0 && i >= other.size()) break;
        }
        if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }

    static int compare_magnitude(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    // a -= b, requires |a| >= |b|.
    static void subtract_magnitude(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
            borrow = cur < 0 ? 1 : 0;
            if (cur < 0) cur += std::int64_t{1} << 32;
            a[i] = static_cast<std::uint32_t>(cur);
        }
    }

    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;
};

SchoolInt schoolbook_power_sum(const std::vector<std::int64_t>& set, unsigned s) {
    SchoolInt sum;
    for (const std::int64_t x : set) {
        SchoolInt term(1);
        for (unsigned e = 0; e < s; ++e) term.multiply(x);
        sum.add(term);
    }
    return sum;
}

}  // namespace

VerificationReport naive_verify(const PtePair& pair) {
    VerificationReport report;
    report.claimed_n = pair.claimed_n;

    const std::set<std::int64_t> u_lookup(pair.u_set.begin(), pair.u_set.end());
    for (const std::int64_t x : pair.v_set) {
        if (u_lookup.count(x) != 0) {
            report.failure_reason = FailureReason::overlap;
            return report;
        }
    }
    if (pair.u_set.size() != pair.v_set.size()) {
        report.failure_reason = FailureReason::cardinality_mismatch;
        return report;
    }

    const unsigned size = static_cast<unsigned>(pair.u_set.size());
    unsigned s = 0;
    while (true) {
        const SchoolInt us = schoolbook_power_sum(pair.u_set, s);
        const SchoolInt vs = schoolbook_power_sum(pair.v_set, s);
        report.sums_table.push_back(SumsRow{s, BigInt(us.decimal()), BigInt(vs.decimal())});
        report.checked_through = s;
        if (!(us == vs)) {
            report.first_difference = s;
            break;
        }
        if (s >= pair.claimed_n && (size == 0 || s >= size)) break;
        ++s;
    }

    if (!report.first_difference) {
        report.failure_reason = FailureReason::no_difference_at_n;
    } else if (*report.first_difference < pair.claimed_n) {
        report.failure_reason = FailureReason::early_difference;
    } else if (*report.first_difference > pair.claimed_n) {
        report.failure_reason = FailureReason::no_difference_at_n;
    }
    report.is_valid = !report.failure_reason.has_value();
    return report;
}

PtePair canonicalize(PtePair pair) {
    std::sort(pair.u_set.begin(), pair.u_set.end());
    std::sort(pair.v_set.begin(), pair.v_set.end());
    const bool v_holds_min =
        !pair.v_set.empty() && (pair.u_set.empty() || pair.v_set.front() < pair.u_set.front());
    if (v_holds_min) std::swap(pair.u_set, pair.v_set);
    return pair;
}

namespace {

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(c);
}

using Subset = std::vector<std::int64_t>;
using Key = std::pair<__int128, __int128>;

constexpr std::int64_t coordinate_limit = std::int64_t{1} << 40;

BigInt sum_of_powers(const Subset& set, unsigned s) {
    BigInt sum = 0;
    BigInt term;
    for (const std::int64_t x : set) {
        mpz_set_si(term.get_mpz_t(), static_cast<long>(x));
        mpz_pow_ui(term.get_mpz_t(), term.get_mpz_t(), s);
        sum += term;
    }
    return sum;
}

bool disjoint(const Subset& a, const Subset& b) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return true;
}

std::vector<Subset> all_subsets(std::int64_t lo, std::int64_t hi, unsigned m) {
    std::vector<Subset> out;
    const std::int64_t count = hi - lo + 1;
    if (static_cast<std::int64_t>(m) > count) return out;
    Subset cur(m);
    for (unsigned i = 0; i < m; ++i) cur[i] = lo + i;
    while (true) {
        out.push_back(cur);
        int pos = static_cast<int>(m) - 1;
        while (pos >= 0 && cur[pos] == hi - (static_cast<std::int64_t>(m) - 1 - pos)) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (unsigned j = pos + 1; j < m; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace

std::uint64_t search_work_estimate(const SearchSpec& spec) {
    if (spec.hi < spec.lo) return 0;
    const auto width = static_cast<std::uint64_t>(spec.hi - spec.lo) + 1;
    const unsigned __int128 c = saturating_binomial(width, spec.set_size);
    const unsigned __int128 sq = c * c;
    return sq > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(sq);
}

SearchResult exhaustive_search(const SearchSpec& spec, std::uint64_t budget, unsigned threads) {
    if (spec.lo > spec.hi) fail(ErrorCode::invalid_argument, "search range has lo > hi");
    if (spec.set_size < 1) fail(ErrorCode::invalid_argument, "set size must be at least 1");
    if (spec.lo < -coordinate_limit || spec.hi > coordinate_limit)
        fail(ErrorCode::out_of_range, "search range must lie within +-2^40");
    const std::uint64_t estimate = search_work_estimate(spec);
    if (estimate > budget)
        fail(ErrorCode::budget_exceeded, "estimated work " + std::to_string(estimate) + " exceeds budget " +
                                             std::to_string(budget));

    const unsigned d = spec.min_degree;
    const std::vector<Subset> subsets = all_subsets(spec.lo, spec.hi, spec.set_size);

    std::map<Key, std::vector<std::size_t>> buckets;
    for (std::size_t idx = 0; idx < subsets.size(); ++idx) {
        __int128 p1 = 0;
        __int128 p2 = 0;
        for (const std::int64_t x : subsets[idx]) {
            p1 += x;
            p2 += static_cast<__int128>(x) * x;
        }
        buckets[Key{d >= 1 ? p1 : 0, d >= 2 ? p2 : 0}].push_back(idx);
    }
    std::vector<const std::vector<std::size_t>*> work;
    for (const auto& [key, members] : buckets)
        if (members.size() >= 2) work.push_back(&members);

    std::atomic<std::uint64_t> examined{0};
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(work.size(), 1))));
    std::vector<std::vector<PtePair>> found(threads);

    const auto process = [&](unsigned worker) {
        std::uint64_t local_examined = 0;
        for (std::size_t b = worker; b < work.size(); b += threads) {
            const auto& members = *work[b];
            // Higher power sums for every member of the bucket, s = 3..d.
            std::vector<std::vector<BigInt>> higher(members.size());
            for (std::size_t i = 0; i < members.size(); ++i)
                for (unsigned s = 3; s <= d; ++s) higher[i].push_back(sum_of_powers(subsets[members[i]], s));
            for (std::size_t i = 0; i < members.size(); ++i) {
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    ++local_examined;
                    const Subset& a = subsets[members[i]];
                    const Subset& b2 = subsets[members[j]];
                    if (higher[i] != higher[j] || !disjoint(a, b2)) continue;
                    unsigned first_diff = d + 1;
                    while (first_diff <= spec.set_size && sum_of_powers(a, first_diff) == sum_of_powers(b2, first_diff))
                        ++first_diff;
                    found[worker].push_back(canonicalize(PtePair{a, b2, first_diff, ExternalProvenance{}}));
                }
            }
        }
        examined += local_examined;
    };

    if (threads == 1) {
        process(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(process, w);
        for (auto& t : pool) t.join();
    }

    SearchResult result;
    for (auto& part : found)
        for (auto& p : part) result.pairs.push_back(std::move(p));
    std::sort(result.pairs.begin(), result.pairs.end(), [](const PtePair& x, const PtePair& y) {
        return std::tie(x.u_set, x.v_set) < std::tie(y.u_set, y.v_set);
    });
    result.stats.examined = examined.load();
    result.stats.found = result.pairs.size();
    result.stats.work_units = subsets.size() + result.stats.examined;
    return result;
}

ComparisonReport compare_methods(std::uint32_t m_max, std::int64_t p_bound, std::int64_t l_bound,
                                 std::uint64_t budget) {
    if (m_max < 1) fail(ErrorCode::invalid_argument, "m_max must be at least 1");
    if (p_bound < 1) fail(ErrorCode::invalid_argument, "p_bound must be at least 1");
    if (l_bound < 0) fail(ErrorCode::invalid_argument, "l_bound must be nonnegative");
    if (m_max >= max_index / 2) fail(ErrorCode::out_of_range, "m_max too large");

    const unsigned __int128 maps = static_cast<unsigned __int128>(2 * p_bound) * (2 * l_bound + 1);
    unsigned __int128 estimate = 0;
    for (std::uint32_t m = 1; m <= m_max; ++m)
        estimate += maps * length_of(2 * m + 1) + length_of(2 * m + 2);
    if (estimate > budget)
        fail(ErrorCode::budget_exceeded,
             "estimated work " + std::to_string(static_cast<std::uint64_t>(std::min<unsigned __int128>(estimate, UINT64_MAX))) +
                 " exceeds budget " + std::to_string(budget));

    ComparisonReport report;
    report.m_max = m_max;
    report.p_bound = p_bound;
    report.l_bound = l_bound;

    std::set<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> b_keys;
    for (std::uint32_t m = 1; m <= m_max; ++m) {
        PtePair b = pair_from_difference(m);
        const PtePair canon = canonicalize(b);
        b_keys.emplace(canon.u_set, canon.v_set);
        report.difference_pairs.push_back(DifferenceMatch{m, std::move(b), {}});
    }

    for (auto& entry : report.difference_pairs) {
        const std::uint32_t n = 2 * entry.m + 1;
        const PSeq seq = generate(n);
        const PtePair b_canon = canonicalize(entry.b_pair);
        for (std::int64_t p = -p_bound; p <= p_bound; ++p) {
            if (p == 0) continue;
            for (std::int64_t l = -l_bound; l <= l_bound; ++l) {
                std::vector<std::int64_t> u;
                std::vector<std::int64_t> v;
                for (std::uint64_t i = 0; i < seq.size(); ++i) {
                    const std::int64_t image = p * static_cast<std::int64_t>(i) + l;
                    if (seq[i] == Sign::minus)
                        u.push_back(image);
                    else if (seq[i] == Sign::plus)
                        v.push_back(image);
                }
                const PtePair a = canonicalize(PtePair{std::move(u), std::move(v), n, ExternalProvenance{}});
                ++report.affine_total;
                const AffineProvenance prov{n, p, l};
                if (a.u_set == b_canon.u_set && a.v_set == b_canon.v_set) entry.witnesses.push_back(prov);
                if (b_keys.count({a.u_set, a.v_set}) == 0) report.affine_unmatched.push_back(prov);
            }
        }
    }
    return report;
}

}  // namespace likepow::oracle
