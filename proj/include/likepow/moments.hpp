#pragma once

// Exact moments M_t = sum_i a_i i^t of P-sequences (0^0 = 1) and the
// polynomials F_{n,s}(x) = sum_i a_i (i + x)^s built from them.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "likepow/pseq.hpp"

namespace likepow {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Reduced num/den with positive denominator. Throws invalid_argument on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "a" or "a/b" into a canonical rational.
Rational parse_rational(const std::string& text);

struct MomentVector {
    std::uint32_t seq_index = 0;
    std::vector<BigInt> values;  // M_0 .. M_T

    friend bool operator==(const MomentVector&, const MomentVector&) = default;
};

struct IntPolynomial {
    std::uint32_t seq_index = 0;
    unsigned declared_s = 0;
    std::vector<BigInt> coefficients;  // c_j multiplies x^j, j = 0..s

    /// Index of the last nonzero coefficient; nullopt for the zero polynomial.
    std::optional<unsigned> degree() const;
    Rational evaluate(const Rational& x) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

BigInt moment(const PSeq& seq, unsigned t);
BigInt moment(const VirtualPSeq& seq, unsigned t);

/// Direct summation of M_0..M_T. The index range is split into `threads`
/// chunks; the result does not depend on the split.
MomentVector moments_direct(const PSeq& seq, unsigned max_t, unsigned threads = 1);
MomentVector moments_direct(const VirtualPSeq& seq, unsigned max_t, unsigned threads = 1);

/// M_0..M_T of P_n through the binomial transform of each construction
/// step, O(n T^2) big-integer operations and no sequence storage.
MomentVector moments_fast(std::uint32_t n, unsigned max_t);

/// Coefficients c_j = C(s, j) M_{s-j} of F_{n,s}.
IntPolynomial f_poly_coeffs(std::uint32_t n, unsigned s);

Rational f_eval(std::uint32_t n, unsigned s, const Rational& x);

/// s - n for s >= n, nullopt (identically zero) for s < n. Read off the
/// computed coefficients.
std::optional<unsigned> f_degree(std::uint32_t n, unsigned s);

/// Checks M_t = 0 for t < n and M_n != 0 over whatever range `mv` covers.
std::optional<std::string> vanishing_violation(const MomentVector& mv);

}  // namespace likepow
