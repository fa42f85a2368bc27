#include "likepow/moments.hpp"

#include <algorithm>
#include <thread>

#include "likepow/error.hpp"

namespace likepow {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) fail(ErrorCode::invalid_argument, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    BigInt num;
    BigInt den = 1;
    const auto parse_int = [&](const std::string& s, BigInt& out) {
        if (s.empty() || out.set_str(s, 10) != 0)
            fail(ErrorCode::parse_error, "not a rational number: '" + text + "'");
    };
    if (slash == std::string::npos) {
        parse_int(text, num);
    } else {
        parse_int(text.substr(0, slash), num);
        parse_int(text.substr(slash + 1), den);
    }
    return make_rational(num, den);
}

std::optional<unsigned> IntPolynomial::degree() const {
    for (std::size_t j = coefficients.size(); j-- > 0;)
        if (coefficients[j] != 0) return static_cast<unsigned>(j);
    return std::nullopt;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t j = coefficients.size(); j-- > 0;) {
        acc *= x;
        acc += Rational(coefficients[j]);
    }
    acc.canonicalize();
    return acc;
}

namespace {

template <class Source>
BigInt single_moment(const Source& seq, unsigned t) {
    BigInt sum = 0;
    BigInt power;
    for (std::uint64_t i = 0; i < seq.size(); ++i) {
        const Sign s = seq[i];
        if (s == Sign::zero) continue;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i), t);
        if (s == Sign::plus)
            sum += power;
        else
            sum -= power;
    }
    return sum;
}

template <class Source>
void accumulate_range(const Source& seq, std::uint64_t begin, std::uint64_t end, std::vector<BigInt>& acc) {
    BigInt power;
    BigInt base;
    for (std::uint64_t i = begin; i < end; ++i) {
        const Sign s = seq[i];
        if (s == Sign::zero) continue;
        power = 1;
        mpz_set_ui(base.get_mpz_t(), static_cast<unsigned long>(i));
        for (auto& m : acc) {
            if (s == Sign::plus)
                m += power;
            else
                m -= power;
            power *= base;
        }
    }
}

template <class Source>
MomentVector direct_moments(const Source& seq, unsigned max_t, unsigned threads) {
    const std::uint64_t len = seq.size();
    threads = std::max(1u, threads);
    const std::uint64_t chunks = std::min<std::uint64_t>(threads, std::max<std::uint64_t>(len, 1));
    std::vector<std::vector<BigInt>> partial(chunks, std::vector<BigInt>(max_t + 1, 0));
    const auto bounds = [&](std::uint64_t c) { return len / chunks * c + std::min(c, len % chunks); };
    if (chunks == 1) {
        accumulate_range(seq, 0, len, partial[0]);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(chunks);
        for (std::uint64_t c = 0; c < chunks; ++c)
            workers.emplace_back([&, c] { accumulate_range(seq, bounds(c), bounds(c + 1), partial[c]); });
        for (auto& w : workers) w.join();
    }
    MomentVector out{seq.index(), std::vector<BigInt>(max_t + 1, 0)};
    for (const auto& part : partial)
        for (unsigned t = 0; t <= max_t; ++t) out.values[t] += part[t];
    return out;
}

// Row t of Pascal's triangle, rows 0..max_t.
std::vector<std::vector<BigInt>> binomial_rows(unsigned max_t) {
    std::vector<std::vector<BigInt>> rows(max_t + 1);
    for (unsigned t = 0; t <= max_t; ++t) {
        rows[t].resize(t + 1);
        rows[t][0] = 1;
        for (unsigned j = 1; j <= t; ++j) rows[t][j] = rows[t][j - 1] * (t - j + 1) / j;
    }
    return rows;
}

}  // namespace

BigInt moment(const PSeq& seq, unsigned t) { return single_moment(seq, t); }
BigInt moment(const VirtualPSeq& seq, unsigned t) { return single_moment(seq, t); }

MomentVector moments_direct(const PSeq& seq, unsigned max_t, unsigned threads) {
    return direct_moments(seq, max_t, threads);
}
MomentVector moments_direct(const VirtualPSeq& seq, unsigned max_t, unsigned threads) {
    return direct_moments(seq, max_t, threads);
}

MomentVector moments_fast(std::uint32_t n, unsigned max_t) {
    static_cast<void>(length_of(n));  // range check on n
    const auto binom = binomial_rows(max_t);

    // P_1 = <1, -1>: M_0 = 1 - 1, M_t = -1 for t >= 1.
    std::vector<BigInt> m(max_t + 1, -1);
    m[0] = 0;

    std::vector<BigInt> shift_pow(max_t + 1);
    std::vector<BigInt> next(max_t + 1);
    for (std::uint32_t idx = 1; idx < n; ++idx) {
        const std::uint64_t k = length_of(idx) - 1;
        // Mirror (odd idx): a_i reappears at 2k+1-i, so
        //   M_t' = M_t + sum_j C(t,j) (2k+1)^{t-j} (-1)^j M_j.
        // Centre-zero (even idx, a_k = +1): -a_i reappears at 2k-i for i < k
        // and the a_k k^t terms cancel, so
        //   M_t' = M_t - sum_j C(t,j) (2k)^{t-j} (-1)^j M_j.
        const bool mirror = idx % 2 == 1;
        BigInt shift;
        mpz_set_ui(shift.get_mpz_t(), static_cast<unsigned long>(k));
        shift *= 2;
        if (mirror) shift += 1;
        shift_pow[0] = 1;
        for (unsigned e = 1; e <= max_t; ++e) shift_pow[e] = shift_pow[e - 1] * shift;

        for (unsigned t = 0; t <= max_t; ++t) {
            BigInt transform = 0;
            for (unsigned j = 0; j <= t; ++j) {
                BigInt term = binom[t][j] * shift_pow[t - j] * m[j];
                if (j % 2 == 0)
                    transform += term;
                else
                    transform -= term;
            }
            next[t] = m[t];
            if (mirror)
                next[t] += transform;
            else
                next[t] -= transform;
        }
        std::swap(m, next);
    }
    return MomentVector{n, std::move(m)};
}

IntPolynomial f_poly_coeffs(std::uint32_t n, unsigned s) {
    const MomentVector mv = moments_fast(n, s);
    const auto binom = binomial_rows(s);
    IntPolynomial poly{n, s, std::vector<BigInt>(s + 1)};
    for (unsigned j = 0; j <= s; ++j) poly.coefficients[j] = binom[s][j] * mv.values[s - j];
    return poly;
}

Rational f_eval(std::uint32_t n, unsigned s, const Rational& x) { return f_poly_coeffs(n, s).evaluate(x); }

std::optional<unsigned> f_degree(std::uint32_t n, unsigned s) { return f_poly_coeffs(n, s).degree(); }

std::optional<std::string> vanishing_violation(const MomentVector& mv) {
    const std::size_t n = mv.seq_index;
    for (std::size_t t = 0; t < mv.values.size(); ++t) {
        if (t < n && mv.values[t] != 0) return "M_" + std::to_string(t) + " = " + mv.values[t].get_str() + " != 0";
        if (t == n && mv.values[t] == 0) return "M_" + std::to_string(t) + " vanishes";
    }
    return std::nullopt;
}

}  // namespace likepow
