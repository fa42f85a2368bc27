#pragma once

// P-sequences: ternary sign sequences grown from <1,-1> by alternately
// appending the mirror image and inserting a zero before a negated mirror.
//
// Sequence indices are 1-based (P_1 = "+-"), element positions 0-based.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace likepow {

enum class Sign : std::int8_t { minus = -1, zero = 0, plus = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign negate(Sign s) noexcept { return static_cast<Sign>(-static_cast<int>(s)); }

// Largest index whose length fits in 64 bits.
inline constexpr std::uint32_t max_index = 64;
inline constexpr std::uint64_t default_cap = std::uint64_t{1} << 27;

/// Length L_n without materializing: L_1 = 2, L_{n+1} = 2 L_n - [n even].
std::uint64_t length_of(std::uint32_t n);

/// Two bits per sign, 32 signs per word.
class PackedSigns {
public:
    PackedSigns() = default;
    explicit PackedSigns(std::uint64_t size);

    std::uint64_t size() const noexcept { return size_; }
    Sign get(std::uint64_t i) const noexcept {
        const auto code = (words_[i >> 5] >> ((i & 31) * 2)) & 3u;
        return code == 1 ? Sign::plus : code == 3 ? Sign::minus : Sign::zero;
    }
    void set(std::uint64_t i, Sign s) noexcept {
        const std::uint64_t code = s == Sign::plus ? 1u : s == Sign::minus ? 3u : 0u;
        auto& w = words_[i >> 5];
        const auto shift = (i & 31) * 2;
        w = (w & ~(std::uint64_t{3} << shift)) | (code << shift);
    }
    void resize(std::uint64_t size);

    friend bool operator==(const PackedSigns&, const PackedSigns&) = default;

private:
    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// An immutable sign sequence tagged with its index. Construction does not
/// validate; generate/decode_text only produce genuine P-sequences and
/// next_pseq rejects corrupted input.
class PSeq {
public:
    PSeq(std::uint32_t index, std::span<const Sign> elements);
    PSeq(std::uint32_t index, PackedSigns elements) : index_(index), signs_(std::move(elements)) {}

    std::uint32_t index() const noexcept { return index_; }
    std::uint64_t size() const noexcept { return signs_.size(); }
    Sign operator[](std::uint64_t i) const noexcept { return signs_.get(i); }
    Sign at(std::uint64_t i) const;
    std::vector<Sign> to_vector() const;

    friend bool operator==(const PSeq&, const PSeq&) = default;

private:
    std::uint32_t index_;
    PackedSigns signs_;
};

/// Random-access view of P_n computed by recursive descent; never
/// materializes. Same read interface as PSeq.
class VirtualPSeq {
public:
    explicit VirtualPSeq(std::uint32_t n);

    std::uint32_t index() const noexcept { return index_; }
    std::uint64_t size() const noexcept { return size_; }
    Sign operator[](std::uint64_t i) const;

private:
    std::uint32_t index_;
    std::uint64_t size_;
};

struct SupportSets {
    std::vector<std::uint64_t> x_set;  // positive i with a_i = -1
    std::vector<std::uint64_t> y_set;  // positive i with a_i = +1

    friend bool operator==(const SupportSets&, const SupportSets&) = default;
};

/// How callers reach the elements of P_n.
struct SourceOptions {
    std::uint64_t cap = default_cap;
    bool force_virtual = false;
};

/// The n-th P-sequence. Throws cap_exceeded when L_n > cap.
PSeq generate(std::uint32_t n, std::uint64_t cap = default_cap);

/// Applies the single clause valid for seq's last element. Throws
/// malformed_sequence when a_0 != +1, the last element is zero, or the
/// clause disagrees with the index parity.
PSeq next_pseq(const PSeq& seq);

/// a_i of P_n in O(n) time. Throws out_of_range when i >= L_n.
Sign element_at(std::uint32_t n, std::uint64_t i);

SupportSets support_sets(const PSeq& seq);
SupportSets support_sets(const VirtualPSeq& seq);

std::string encode_text(const PSeq& seq);
char sign_char(Sign s) noexcept;

/// Parses the text form and checks it is P_n. Throws parse_error on foreign
/// characters, malformed_sequence on any invariant violation.
PSeq decode_text(std::string_view text, std::uint32_t n);

/// First violated P-sequence invariant, if any (structure only: first/last
/// element, balance, symmetry, length).
std::optional<std::string> invariant_violation(const PSeq& seq);

}  // namespace likepow
