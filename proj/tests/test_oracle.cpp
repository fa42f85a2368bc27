#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "likepow/error.hpp"
#include "likepow/oracle.hpp"
#include "reference.hpp"

using namespace likepow;
using namespace likepow::oracle;
using Set = std::vector<std::int64_t>;

namespace {

bool contains(const SearchResult& r, const Set& u, const Set& v) {
    return std::any_of(r.pairs.begin(), r.pairs.end(), [&](const PtePair& p) {
        return (p.u_set == u && p.v_set == v) || (p.u_set == v && p.v_set == u);
    });
}

// All 3-subset pairs, no bucketing: the slow route for cross-checking.
std::set<std::pair<Set, Set>> brute_pairs(std::int64_t lo, std::int64_t hi, unsigned m, unsigned d) {
    std::vector<Set> subsets;
    Set cur;
    auto rec = [&](auto&& self, std::int64_t next) -> void {
        if (cur.size() == m) {
            subsets.push_back(cur);
            return;
        }
        for (std::int64_t x = next; x <= hi; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, lo);
    std::set<std::pair<Set, Set>> out;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
            const Set& a = subsets[i];
            const Set& b = subsets[j];
            bool shared = false;
            for (auto x : a) shared = shared || std::find(b.begin(), b.end(), x) != b.end();
            if (shared) continue;
            bool equal = true;
            for (unsigned s = 1; s <= d && equal; ++s) equal = reference::power_sum(a, s) == reference::power_sum(b, s);
            if (!equal) continue;
            if (a.front() < b.front())
                out.emplace(a, b);
            else
                out.emplace(b, a);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("naive_verify examples") {
    CHECK(naive_verify(make_pair({7, 11, 12}, {8, 9, 13}, 3)).is_valid);
    CHECK(naive_verify(make_pair({1, 2}, {0, 3}, 2)).is_valid);
    const VerificationReport r = naive_verify(make_pair({1, 2, 6}, {0, 4, 5}, 3));
    CHECK(r.is_valid);
    CHECK(r.sums_table[1].u_sum == 9);
    CHECK(r.sums_table[2].u_sum == 41);
    CHECK(r.sums_table[3].u_sum == 225);
    CHECK(r.sums_table[3].v_sum == 189);
    CHECK(naive_verify(make_pair({1, 2}, {2, 5}, 2)).failure_reason == FailureReason::overlap);
    CHECK(naive_verify(make_pair({1, 2}, {0, 3}, 3)).failure_reason == FailureReason::early_difference);
}

TEST_CASE("naive_verify handles large and negative values") {
    const PtePair big = make_pair({-4'000'000'000'000LL, 3, 9'000'000'000'000'000LL},
                                  {-9'000'000'000'000'000LL, 5, INT64_MIN}, 7);
    CHECK(naive_verify(big) == verify_pair(big));
}

TEST_CASE("naive_verify agrees with verify_pair field for field") {
    for (unsigned n = 2; n <= 6; ++n)
        for (std::int64_t p = -3; p <= 3; ++p) {
            if (p == 0) continue;
            for (std::int64_t l = -10; l <= 10; ++l) {
                const PtePair pair = pair_from_affine(n, AffineMap(p, l));
                REQUIRE(naive_verify(pair) == verify_pair(pair));
            }
        }
    for (unsigned m = 0; m <= 4; ++m) {
        const PtePair pair = pair_from_difference(m);
        REQUIRE(naive_verify(pair) == verify_pair(pair));
    }
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coord(-30, 30);
    std::uniform_int_distribution<int> len(0, 5);
    for (int trial = 0; trial < 500; ++trial) {
        std::set<std::int64_t> u;
        std::set<std::int64_t> v;
        const int lu = len(rng);
        const int lv = trial % 3 == 0 ? len(rng) : lu;
        while (static_cast<int>(u.size()) < lu) u.insert(coord(rng));
        while (static_cast<int>(v.size()) < lv) v.insert(coord(rng));
        PtePair pair{{u.begin(), u.end()}, {v.begin(), v.end()}, static_cast<std::uint32_t>(trial % 6),
                     ExternalProvenance{}};
        REQUIRE(naive_verify(pair) == verify_pair(pair));
    }
}

TEST_CASE("exhaustive_search examples") {
    const SearchResult r = exhaustive_search({0, 13, 3, 2});
    CHECK(contains(r, {1, 2, 6}, {0, 4, 5}));
    CHECK(contains(r, {7, 11, 12}, {8, 9, 13}));
    CHECK(r.stats.found == r.pairs.size());

    CHECK(contains(exhaustive_search({0, 3, 2, 1}), {0, 3}, {1, 2}));
    CHECK(exhaustive_search({-10, 10, 2, 2}).pairs.empty());
    CHECK(exhaustive_search({0, 20, 2, 2}).pairs.empty());
}

TEST_CASE("exhaustive_search equals unbucketed brute force") {
    for (auto [lo, hi, m, d] : {std::tuple{0, 13, 3u, 2u}, std::tuple{-4, 9, 3u, 1u}, std::tuple{0, 14, 4u, 3u},
                                std::tuple{0, 7, 2u, 1u}, std::tuple{0, 6, 2u, 0u}}) {
        const SearchResult r = exhaustive_search({lo, hi, m, d});
        std::set<std::pair<Set, Set>> got;
        for (const auto& p : r.pairs) got.emplace(p.u_set, p.v_set);
        CHECK(got.size() == r.pairs.size());
        CHECK(got == brute_pairs(lo, hi, m, d));
    }
}

TEST_CASE("search pairs pass naive_verify and are canonical") {
    const SearchResult r = exhaustive_search({0, 16, 4, 3});
    REQUIRE_FALSE(r.pairs.empty());
    for (const auto& p : r.pairs) {
        CHECK(naive_verify(p).is_valid);
        CHECK(canonicalize(p) == p);
        CHECK(p.u_set.front() < p.v_set.front());
    }
    CHECK(std::is_sorted(r.pairs.begin(), r.pairs.end(), [](const PtePair& a, const PtePair& b) {
        return std::tie(a.u_set, a.v_set) < std::tie(b.u_set, b.v_set);
    }));
}

TEST_CASE("search output is independent of worker count") {
    const SearchResult one = exhaustive_search({0, 18, 3, 2}, default_work_budget, 1);
    for (unsigned t : {2u, 5u, 32u}) {
        const SearchResult many = exhaustive_search({0, 18, 3, 2}, default_work_budget, t);
        CHECK(many.pairs == one.pairs);
        CHECK(many.stats.examined == one.stats.examined);
    }
}

TEST_CASE("generated pairs inside the range are found") {
    const SearchResult r = exhaustive_search({0, 13, 3, 2});
    int checked = 0;
    for (std::int64_t p = -6; p <= 6; ++p) {
        if (p == 0) continue;
        for (std::int64_t l = -80; l <= 80; ++l) {
            const PtePair a = canonicalize(pair_from_affine(3, AffineMap(p, l)));
            const bool inside = a.u_set.front() >= 0 && a.v_set.front() >= 0 && a.u_set.back() <= 13 && a.v_set.back() <= 13;
            if (!inside) continue;
            ++checked;
            CHECK(contains(r, a.u_set, a.v_set));
        }
    }
    const PtePair b = canonicalize(pair_from_difference(1));
    CHECK(contains(r, b.u_set, b.v_set));
    CHECK(checked > 0);
}

TEST_CASE("search budget") {
    CHECK(search_work_estimate({0, 13, 3, 2}) == 364u * 364u);
    try {
        exhaustive_search({0, 200, 5, 2});
        FAIL("expected budget error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::budget_exceeded);
    }
    CHECK_THROWS_AS(exhaustive_search({5, 4, 2, 1}), Error);
    CHECK_THROWS_AS(exhaustive_search({0, 4, 0, 1}), Error);
    CHECK(exhaustive_search({0, 2, 4, 1}).pairs.empty());
}

TEST_CASE("canonicalize is idempotent and order-independent") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coord(-20, 20);
    for (int trial = 0; trial < 200; ++trial) {
        std::set<std::int64_t> pool;
        while (pool.size() < 6) pool.insert(coord(rng));
        Set all(pool.begin(), pool.end());
        std::shuffle(all.begin(), all.end(), rng);
        PtePair p{{all[0], all[1], all[2]}, {all[3], all[4], all[5]}, 2, ExternalProvenance{}};
        PtePair swapped{p.v_set, p.u_set, 2, ExternalProvenance{}};
        std::reverse(swapped.u_set.begin(), swapped.u_set.end());
        const PtePair c = canonicalize(p);
        CHECK(canonicalize(c) == c);
        CHECK(canonicalize(swapped) == c);
    }
}

TEST_CASE("compare_methods examples") {
    const ComparisonReport r = compare_methods(1, 1, 13);
    REQUIRE(r.difference_pairs.size() == 1);
    const auto& w = r.difference_pairs[0].witnesses;
    CHECK(std::find(w.begin(), w.end(), AffineProvenance{3, -1, 13}) != w.end());

    const ComparisonReport tight = compare_methods(1, 1, 0);
    CHECK(tight.difference_pairs[0].witnesses.empty());
    CHECK(tight.affine_total == 2);
    CHECK(tight.affine_unmatched.size() == 2);

    const ComparisonReport wide = compare_methods(2, 3, 60);
    CHECK(wide.difference_pairs.size() == 2);
    CHECK(wide.affine_total == 2 * 6 * 121);
    for (const auto& entry : wide.difference_pairs)
        for (const auto& a : entry.witnesses) {
            const PtePair img = canonicalize(pair_from_affine(a.seq_index, AffineMap(a.p, a.l)));
            const PtePair b = canonicalize(entry.b_pair);
            CHECK(img.u_set == b.u_set);
            CHECK(img.v_set == b.v_set);
        }
    CHECK_THROWS_AS(compare_methods(3, 1000, 1000000, 1000), Error);
    CHECK_THROWS_AS(compare_methods(0, 1, 1), Error);
}

TEST_CASE("naive_verify agrees on multi-limb sums") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> coord(-(std::int64_t{1} << 41), std::int64_t{1} << 41);
    for (int trial = 0; trial < 200; ++trial) {
        std::set<std::int64_t> u;
        std::set<std::int64_t> v;
        while (u.size() < 4) u.insert(coord(rng));
        while (v.size() < 4) v.insert(coord(rng));
        PtePair pair{{u.begin(), u.end()}, {v.begin(), v.end()}, 6, ExternalProvenance{}};
        // Force a long scan by making the first sums agree: mirror u into v.
        if (trial % 2 == 0) {
            pair.v_set.clear();
            for (auto x : pair.u_set) pair.v_set.push_back(-x);
            std::sort(pair.v_set.begin(), pair.v_set.end());
        }
        REQUIRE(naive_verify(pair) == verify_pair(pair));
    }
}
