#include <algorithm>
#include <string>

#include "doctest.h"
#include "likepow/error.hpp"
#include "likepow/pseq.hpp"
#include "reference.hpp"

using namespace likepow;

namespace {

std::vector<int> as_ints(const PSeq& seq) {
    std::vector<int> out;
    for (std::uint64_t i = 0; i < seq.size(); ++i) out.push_back(to_int(seq[i]));
    return out;
}

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected likepow::Error");
    return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("generate reproduces the listed sequences") {
    CHECK(encode_text(generate(1)) == "+-");
    CHECK(encode_text(generate(2)) == "+--+");
    CHECK(encode_text(generate(3)) == "+--0++-");
    CHECK(encode_text(generate(4)) == "+--0++--++0--+");
}

TEST_CASE("generate matches the literal clause construction") {
    for (unsigned n = 1; n <= 16; ++n) {
        CAPTURE(n);
        CHECK(as_ints(generate(n)) == reference::pseq(n));
    }
}

TEST_CASE("next_pseq steps one index at a time") {
    CHECK(encode_text(next_pseq(generate(1))) == "+--+");
    CHECK(encode_text(next_pseq(generate(2))) == "+--0++-");
    CHECK(encode_text(next_pseq(generate(3))) == "+--0++--++0--+");
    for (unsigned n = 1; n < 18; ++n) {
        CAPTURE(n);
        const PSeq next = next_pseq(generate(n));
        CHECK(next.index() == n + 1);
        CHECK(next == generate(n + 1));
    }
}

TEST_CASE("next_pseq rejects corrupted input") {
    const auto signs = [](std::string_view text) {
        std::vector<Sign> out;
        for (char c : text) out.push_back(c == '+' ? Sign::plus : c == '-' ? Sign::minus : Sign::zero);
        return out;
    };
    // Last element zero: no clause applies.
    CHECK(code_of([&] { next_pseq(PSeq(2, signs("+--0"))); }) == ErrorCode::malformed_sequence);
    // Mirror clause would apply but the index is even.
    CHECK(code_of([&] { next_pseq(PSeq(2, signs("+-+-"))); }) == ErrorCode::malformed_sequence);
    // Centre-zero clause would apply but the index is odd.
    CHECK(code_of([&] { next_pseq(PSeq(1, signs("++"))); }) == ErrorCode::malformed_sequence);
    CHECK(code_of([&] { next_pseq(PSeq(1, signs("-+"))); }) == ErrorCode::malformed_sequence);
    CHECK(code_of([&] { next_pseq(PSeq(3, signs("+-"))); }) == ErrorCode::malformed_sequence);
}

TEST_CASE("length_of follows the recurrence") {
    CHECK(length_of(1) == 2);
    CHECK(length_of(2) == 4);
    CHECK(length_of(3) == 7);
    CHECK(length_of(4) == 14);
    CHECK(length_of(5) == 27);
    for (unsigned n = 1; n <= 20; ++n) CHECK(length_of(n) == generate(n).size());
    for (unsigned n = 1; n < max_index; ++n) CHECK(length_of(n + 1) == 2 * length_of(n) - (n % 2 == 0 ? 1 : 0));
    CHECK(code_of([] { length_of(0); }) == ErrorCode::out_of_range);
    CHECK(code_of([] { length_of(max_index + 1); }) == ErrorCode::out_of_range);
}

TEST_CASE("materialization cap") {
    CHECK(code_of([] { generate(5, 26); }) == ErrorCode::cap_exceeded);
    CHECK(generate(5, 27).size() == 27);
    CHECK(code_of([] { generate(30); }) == ErrorCode::cap_exceeded);
}

TEST_CASE("element_at agrees with materialized sequences") {
    CHECK(element_at(4, 0) == Sign::plus);
    CHECK(element_at(3, 6) == Sign::minus);
    CHECK(element_at(4, 3) == Sign::zero);
    for (unsigned n = 1; n <= 12; ++n) {
        const PSeq seq = generate(n);
        for (std::uint64_t i = 0; i < seq.size(); ++i) REQUIRE(element_at(n, i) == seq[i]);
    }
    CHECK(code_of([] { element_at(3, 7); }) == ErrorCode::out_of_range);
    // Deep indices work without materialization.
    CHECK(element_at(60, 0) == Sign::plus);
    CHECK(element_at(61, length_of(61) - 1) == Sign::minus);
    CHECK(element_at(64, length_of(64) - 1) == Sign::plus);
}

TEST_CASE("structural invariants hold for every generated sequence") {
    for (unsigned n = 1; n <= 18; ++n) {
        CAPTURE(n);
        const PSeq seq = generate(n);
        CHECK_FALSE(invariant_violation(seq).has_value());
        CHECK(seq[0] == Sign::plus);
        CHECK(seq[seq.size() - 1] == (n % 2 ? Sign::minus : Sign::plus));
        const auto v = as_ints(seq);
        CHECK(std::count(v.begin(), v.end(), 1) == std::count(v.begin(), v.end(), -1));
        std::vector<int> rev(v.rbegin(), v.rend());
        if (n % 2 == 1)
            for (auto& x : rev) x = -x;
        CHECK(rev == v);
    }
}

TEST_CASE("support sets") {
    const auto s4 = support_sets(generate(4));
    CHECK(s4.x_set == std::vector<std::uint64_t>{1, 2, 6, 7, 11, 12});
    CHECK(s4.y_set == std::vector<std::uint64_t>{4, 5, 8, 9, 13});
    const auto s3 = support_sets(generate(3));
    CHECK(s3.x_set == std::vector<std::uint64_t>{1, 2, 6});
    CHECK(s3.y_set == std::vector<std::uint64_t>{4, 5});
    const auto s1 = support_sets(generate(1));
    CHECK(s1.x_set == std::vector<std::uint64_t>{1});
    CHECK(s1.y_set.empty());

    for (unsigned n = 1; n <= 16; ++n) {
        const auto s = support_sets(generate(n));
        CHECK(s.x_set.size() == s.y_set.size() + 1);
        CHECK(support_sets(VirtualPSeq(n)) == s);
    }
    for (unsigned m = 1; m <= 7; ++m) {
        const auto odd = support_sets(generate(2 * m + 1));
        const auto even = support_sets(generate(2 * m + 2));
        CHECK(std::includes(even.x_set.begin(), even.x_set.end(), odd.x_set.begin(), odd.x_set.end()));
        CHECK(std::includes(even.y_set.begin(), even.y_set.end(), odd.y_set.begin(), odd.y_set.end()));
    }
}

TEST_CASE("text encoding") {
    CHECK(encode_text(generate(2)) == "+--+");
    CHECK(decode_text("+--0++-", 3) == generate(3));
    for (unsigned n = 1; n <= 14; ++n) CHECK(decode_text(encode_text(generate(n)), n) == generate(n));

    CHECK(code_of([] { decode_text("+-+", 1); }) == ErrorCode::malformed_sequence);
    CHECK(code_of([] { decode_text("+x", 1); }) == ErrorCode::parse_error);
    CHECK(code_of([] { decode_text("+- ", 1); }) == ErrorCode::parse_error);
    CHECK(code_of([] { decode_text("-+", 1); }) == ErrorCode::malformed_sequence);
    // Right length and shape for index 3, but not P_3.
    CHECK(code_of([] { decode_text("+-+0-+-", 3); }) == ErrorCode::malformed_sequence);
    CHECK(code_of([] { decode_text("+--+", 3); }) == ErrorCode::malformed_sequence);
}

TEST_CASE("packed storage round-trips every sign") {
    std::vector<Sign> pattern;
    for (int i = 0; i < 100; ++i) pattern.push_back(static_cast<Sign>(i % 3 - 1));
    const PSeq seq(1, pattern);
    CHECK(seq.to_vector() == pattern);
    CHECK(code_of([&] { seq.at(100); }) == ErrorCode::out_of_range);
}
