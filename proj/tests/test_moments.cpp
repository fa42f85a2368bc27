#include <random>

#include "doctest.h"
#include "likepow/error.hpp"
#include "likepow/moments.hpp"
#include "reference.hpp"

using namespace likepow;

TEST_CASE("moment examples") {
    CHECK(moment(generate(1), 1) == -1);
    CHECK(moment(generate(3), 2) == 0);
    CHECK(moment(generate(3), 3) == -36);
    CHECK(moment(generate(2), 2) == 4);
    CHECK(moment(VirtualPSeq(3), 3) == -36);
    // 0^0 = 1 makes M_0 the balance of signs.
    CHECK(moment(generate(1), 0) == 0);
}

TEST_CASE("moments vanish below the index and not at it") {
    for (unsigned n = 1; n <= 16; ++n) {
        CAPTURE(n);
        const MomentVector mv = moments_direct(generate(n), n);
        for (unsigned t = 0; t < n; ++t) CHECK(mv.values[t] == 0);
        CHECK(mv.values[n] != 0);
        CHECK_FALSE(vanishing_violation(mv).has_value());
    }
}

TEST_CASE("direct moments agree with the reference summation") {
    for (unsigned n = 1; n <= 10; ++n) {
        const auto ref = reference::pseq(n);
        const MomentVector mv = moments_direct(generate(n), 12);
        for (unsigned t = 0; t <= 12; ++t) CHECK(mv.values[t] == reference::moment(ref, t));
    }
}

TEST_CASE("moments_fast matches direct summation") {
    const MomentVector base = moments_fast(1, 1);
    CHECK(base.values == std::vector<BigInt>{0, -1});
    for (unsigned n = 1; n <= 14; ++n) {
        CAPTURE(n);
        const PSeq seq = generate(n);
        CHECK(moments_fast(n, 20) == moments_direct(seq, 20));
    }
    CHECK(moments_fast(4, 6) == moments_direct(generate(4), 6));
}

TEST_CASE("moments_fast reaches index 40") {
    const MomentVector mv = moments_fast(40, 40);
    for (unsigned t = 0; t < 40; ++t) REQUIRE(mv.values[t] == 0);
    CHECK(mv.values[40] != 0);
}

TEST_CASE("chunked and streamed summation are independent of the split") {
    const PSeq seq = generate(13);
    const MomentVector one = moments_direct(seq, 15, 1);
    for (unsigned threads : {2u, 3u, 7u, 16u}) {
        CHECK(moments_direct(seq, 15, threads) == one);
        CHECK(moments_direct(VirtualPSeq(13), 15, threads) == one);
    }
    // More workers than elements.
    CHECK(moments_direct(generate(1), 3, 8) == moments_direct(generate(1), 3, 1));
}

TEST_CASE("f_poly_coeffs examples") {
    const IntPolynomial f11 = f_poly_coeffs(1, 1);
    CHECK(f11.coefficients == std::vector<BigInt>{-1, 0});
    CHECK(f11.degree() == 0u);

    const IntPolynomial f23 = f_poly_coeffs(2, 3);
    CHECK(f23.coefficients == std::vector<BigInt>{18, 12, 0, 0});
    CHECK(f23.degree() == 1u);

    const IntPolynomial f53 = f_poly_coeffs(5, 3);
    CHECK_FALSE(f53.degree().has_value());
    for (const auto& c : f53.coefficients) CHECK(c == 0);
}

TEST_CASE("degree is exactly s - n") {
    for (unsigned n = 1; n <= 10; ++n) {
        for (unsigned s = 0; s <= n + 5; ++s) {
            CAPTURE(n);
            CAPTURE(s);
            const IntPolynomial poly = f_poly_coeffs(n, s);
            REQUIRE(poly.coefficients.size() == s + 1);
            if (s < n) {
                CHECK_FALSE(poly.degree().has_value());
            } else {
                CHECK(poly.degree() == s - n);
                CHECK(poly.coefficients[s - n] != 0);
            }
        }
    }
    CHECK(f_degree(2, 3) == 1u);
    CHECK(f_degree(4, 4) == 0u);
    CHECK_FALSE(f_degree(5, 2).has_value());
}

TEST_CASE("f_eval examples") {
    CHECK(f_eval(2, 3, make_rational(-3, 2)) == 0);
    for (const auto& q : {make_rational(0, 1), make_rational(7, 3), make_rational(-50, 17)})
        CHECK(f_eval(3, 3, q) == -36);
    for (unsigned n = 2; n <= 8; ++n)
        for (unsigned s = 0; s < n; ++s) CHECK(f_eval(n, s, make_rational(5, 7)) == 0);
}

TEST_CASE("f_eval agrees with direct summation at random rationals") {
    std::mt19937_64 rng(20261014);
    std::uniform_int_distribution<int> coord(-50, 50);
    for (unsigned n = 1; n <= 8; ++n) {
        const auto ref = reference::pseq(n);
        for (unsigned s = 0; s <= 10; ++s) {
            const IntPolynomial poly = f_poly_coeffs(n, s);
            for (int trial = 0; trial < 20; ++trial) {
                int den = 0;
                while (den == 0) den = coord(rng);
                const Rational x = make_rational(coord(rng), den);
                CAPTURE(x.get_str());
                REQUIRE(poly.evaluate(x) == reference::f_direct(ref, s, x));
            }
        }
    }
}

TEST_CASE("affine identity sum a_i (p i + l)^s = p^s F(l / p)") {
    for (unsigned n = 1; n <= 8; ++n) {
        const auto ref = reference::pseq(n);
        for (unsigned s = 0; s <= n; ++s) {
            const IntPolynomial poly = f_poly_coeffs(n, s);
            for (long p = -5; p <= 5; ++p) {
                if (p == 0) continue;
                BigInt p_pow;
                mpz_pow_ui(p_pow.get_mpz_t(), BigInt(p).get_mpz_t(), s);
                for (long l = -20; l <= 20; ++l) {
                    const Rational rhs = Rational(p_pow) * poly.evaluate(make_rational(l, p));
                    REQUIRE(Rational(reference::affine_sum(ref, s, p, l)) == rhs);
                }
            }
        }
    }
}

TEST_CASE("rationals are canonical") {
    const Rational q = make_rational(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(make_rational(0, -9).get_den() == 1);
    CHECK(parse_rational("-3/2") == q);
    CHECK(parse_rational("12") == 12);
    CHECK_THROWS_AS(make_rational(1, 0), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational("1/"), Error);
}
