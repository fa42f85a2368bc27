#include "likepow/pseq.hpp"

#include <array>

#include "likepow/error.hpp"

namespace likepow {

namespace {

constexpr std::array<std::uint64_t, max_index + 1> make_length_table() {
    std::array<std::uint64_t, max_index + 1> t{};
    t[1] = 2;
    for (std::uint32_t n = 1; n < max_index; ++n) t[n + 1] = 2 * t[n] - (n % 2 == 0 ? 1 : 0);
    return t;
}

constexpr auto length_table = make_length_table();

void check_index(std::uint32_t n) {
    if (n < 1 || n > max_index)
        fail(ErrorCode::out_of_range, "sequence index " + std::to_string(n) + " outside [1, " +
                                          std::to_string(max_index) + "]");
}

// Writes the continuation of P_{n+1} into `signs`, whose first L_n entries
// already hold P_n. Odd n: mirror. Even n: zero at the centre, negated mirror.
void extend_in_place(PackedSigns& signs, std::uint32_t n) {
    const std::uint64_t len = signs.size();
    const std::uint64_t k = len - 1;
    if (n % 2 == 1) {
        signs.resize(2 * len);
        for (std::uint64_t j = 0; j < len; ++j) signs.set(len + j, signs.get(k - j));
    } else {
        signs.resize(2 * k + 1);
        signs.set(k, Sign::zero);
        for (std::uint64_t j = 1; j <= k; ++j) signs.set(k + j, negate(signs.get(k - j)));
    }
}

}  // namespace

std::uint64_t length_of(std::uint32_t n) {
    check_index(n);
    return length_table[n];
}

PackedSigns::PackedSigns(std::uint64_t size) { resize(size); }

void PackedSigns::resize(std::uint64_t size) {
    words_.resize((size + 31) / 32, 0);
    if (size < size_) {
        for (std::uint64_t i = size; i < size_ && i < words_.size() * 32; ++i) set(i, Sign::zero);
    }
    size_ = size;
}

PSeq::PSeq(std::uint32_t index, std::span<const Sign> elements) : index_(index), signs_(elements.size()) {
    for (std::uint64_t i = 0; i < elements.size(); ++i) signs_.set(i, elements[i]);
}

Sign PSeq::at(std::uint64_t i) const {
    if (i >= size())
        fail(ErrorCode::out_of_range, "position " + std::to_string(i) + " >= length " + std::to_string(size()));
    return signs_.get(i);
}

std::vector<Sign> PSeq::to_vector() const {
    std::vector<Sign> out(size());
    for (std::uint64_t i = 0; i < size(); ++i) out[i] = signs_.get(i);
    return out;
}

VirtualPSeq::VirtualPSeq(std::uint32_t n) : index_(n), size_(length_of(n)) {}

Sign VirtualPSeq::operator[](std::uint64_t i) const { return element_at(index_, i); }

PSeq generate(std::uint32_t n, std::uint64_t cap) {
    const std::uint64_t len = length_of(n);
    if (len > cap)
        fail(ErrorCode::cap_exceeded, "P_" + std::to_string(n) + " has " + std::to_string(len) +
                                          " elements, above the materialization cap " + std::to_string(cap));
    PackedSigns signs(2);
    signs.set(0, Sign::plus);
    signs.set(1, Sign::minus);
    for (std::uint32_t i = 1; i < n; ++i) extend_in_place(signs, i);
    return PSeq(n, std::move(signs));
}

PSeq next_pseq(const PSeq& seq) {
    const std::uint64_t len = seq.size();
    if (len < 2) fail(ErrorCode::malformed_sequence, "sequence shorter than 2 elements");
    if (seq.index() < 1 || seq.index() >= max_index)
        fail(ErrorCode::out_of_range, "cannot extend sequence with index " + std::to_string(seq.index()));
    if (len != length_of(seq.index()))
        fail(ErrorCode::malformed_sequence, "length " + std::to_string(len) + " does not match index " +
                                                std::to_string(seq.index()));
    const Sign first = seq[0];
    const Sign last = seq[len - 1];
    if (first != Sign::plus) fail(ErrorCode::malformed_sequence, "first element is not +1");
    if (last == Sign::zero) fail(ErrorCode::malformed_sequence, "last element is 0; no clause applies");

    const bool mirror = last == negate(first);
    const bool odd = seq.index() % 2 == 1;
    if (mirror != odd)
        fail(ErrorCode::malformed_sequence,
             std::string(mirror ? "mirror" : "centre-zero") + " clause selected for index " +
                 std::to_string(seq.index()) + " of the wrong parity");

    PackedSigns signs(len);
    for (std::uint64_t i = 0; i < len; ++i) signs.set(i, seq[i]);
    extend_in_place(signs, seq.index());
    return PSeq(seq.index() + 1, std::move(signs));
}

Sign element_at(std::uint32_t n, std::uint64_t i) {
    const std::uint64_t len = length_of(n);
    if (i >= len)
        fail(ErrorCode::out_of_range, "position " + std::to_string(i) + " >= L_" + std::to_string(n) + " = " +
                                          std::to_string(len));
    bool negated = false;
    for (; n > 1; --n) {
        const std::uint64_t prev = length_table[n - 1];
        const std::uint64_t k = prev - 1;
        if ((n - 1) % 2 == 1) {
            if (i >= prev) i = 2 * prev - 1 - i;
        } else {
            if (i == k) return Sign::zero;
            if (i > k) {
                i = 2 * k - i;
                negated = !negated;
            }
        }
    }
    const Sign base = i == 0 ? Sign::plus : Sign::minus;
    return negated ? negate(base) : base;
}

namespace {

template <class Source>
SupportSets collect_supports(const Source& seq) {
    SupportSets out;
    for (std::uint64_t i = 1; i < seq.size(); ++i) {
        const Sign s = seq[i];
        if (s == Sign::minus)
            out.x_set.push_back(i);
        else if (s == Sign::plus)
            out.y_set.push_back(i);
    }
    return out;
}

}  // namespace

SupportSets support_sets(const PSeq& seq) { return collect_supports(seq); }
SupportSets support_sets(const VirtualPSeq& seq) { return collect_supports(seq); }

char sign_char(Sign s) noexcept { return s == Sign::plus ? '+' : s == Sign::minus ? '-' : '0'; }

std::string encode_text(const PSeq& seq) {
    std::string out(seq.size(), '0');
    for (std::uint64_t i = 0; i < seq.size(); ++i) out[i] = sign_char(seq[i]);
    return out;
}

std::optional<std::string> invariant_violation(const PSeq& seq) {
    const std::uint64_t len = seq.size();
    if (seq.index() < 1 || seq.index() > max_index) return "index out of range";
    if (len != length_of(seq.index()))
        return "length " + std::to_string(len) + " != L_" + std::to_string(seq.index()) + " = " +
               std::to_string(length_of(seq.index()));
    if (seq[0] != Sign::plus) return "first element is not +1";
    const Sign expected_last = seq.index() % 2 == 1 ? Sign::minus : Sign::plus;
    if (seq[len - 1] != expected_last) return "last element has the wrong sign for the index parity";
    std::int64_t balance = 0;
    for (std::uint64_t i = 0; i < len; ++i) balance += to_int(seq[i]);
    if (balance != 0) return "unequal numbers of +1 and -1";
    const bool even = seq.index() % 2 == 0;
    for (std::uint64_t i = 0; i < len / 2; ++i) {
        const Sign mirrored = seq[len - 1 - i];
        if (seq[i] != (even ? mirrored : negate(mirrored)))
            return even ? "even-index sequence is not a palindrome" : "odd-index sequence is not an anti-palindrome";
    }
    return std::nullopt;
}

PSeq decode_text(std::string_view text, std::uint32_t n) {
    check_index(n);
    std::vector<Sign> signs;
    signs.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case '+': signs.push_back(Sign::plus); break;
            case '-': signs.push_back(Sign::minus); break;
            case '0': signs.push_back(Sign::zero); break;
            default:
                fail(ErrorCode::parse_error,
                     "unexpected character '" + std::string(1, text[i]) + "' at offset " + std::to_string(i));
        }
    }
    PSeq seq(n, signs);
    if (auto why = invariant_violation(seq)) fail(ErrorCode::malformed_sequence, *why);
    // Structurally plausible strings may still differ from the unique P_n.
    for (std::uint64_t i = 0; i < seq.size(); ++i) {
        if (seq[i] != element_at(n, i))
            fail(ErrorCode::malformed_sequence,
                 "element " + std::to_string(i) + " differs from P_" + std::to_string(n));
    }
    return seq;
}

}  // namespace likepow
