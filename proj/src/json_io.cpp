#include "likepow/json_io.hpp"

#include <limits>

#include "likepow/error.hpp"

namespace likepow::json {

namespace {

[[noreturn]] void schema(const std::string& what) { fail(ErrorCode::parse_error, "schema violation: " + what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object()) schema("expected an object");
    const auto it = j.find(key);
    if (it == j.end()) schema(std::string("missing field '") + key + "'");
    return *it;
}

template <class Int>
Int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) schema(std::string(what) + " must be an integer");
    if constexpr (std::is_unsigned_v<Int>) {
        if (j.is_number_unsigned()) {
            const auto v = j.get<std::uint64_t>();
            if (v > std::numeric_limits<Int>::max()) schema(std::string(what) + " out of range");
            return static_cast<Int>(v);
        }
        const auto v = j.get<std::int64_t>();
        if (v < 0 || static_cast<std::uint64_t>(v) > std::numeric_limits<Int>::max())
            schema(std::string(what) + " out of range");
        return static_cast<Int>(v);
    } else {
        if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))
            schema(std::string(what) + " out of range");
        const auto v = j.get<std::int64_t>();
        if (v < std::numeric_limits<Int>::min() || v > std::numeric_limits<Int>::max())
            schema(std::string(what) + " out of range");
        return static_cast<Int>(v);
    }
}

BigInt as_bigint(const json& j, const char* what) {
    if (!j.is_string()) schema(std::string(what) + " must be a decimal string");
    const auto& s = j.get_ref<const std::string&>();
    const bool ok = !s.empty() && s.find_first_not_of("-0123456789") == std::string::npos &&
                    s.find('-', 1) == std::string::npos && s != "-";
    BigInt out;
    if (!ok || out.set_str(s, 10) != 0) schema(std::string(what) + " is not a decimal integer: '" + s + "'");
    return out;
}

json bigints(const std::vector<BigInt>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(v.get_str());
    return arr;
}

std::vector<BigInt> bigints_from(const json& j, const char* what) {
    if (!j.is_array()) schema(std::string(what) + " must be an array");
    std::vector<BigInt> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(as_bigint(e, what));
    return out;
}

std::vector<std::int64_t> int_set(const json& j, const char* what) {
    if (!j.is_array()) schema(std::string(what) + " must be an array of integers");
    std::vector<std::int64_t> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(as_int<std::int64_t>(e, what));
    return out;
}

json provenance_json(const Provenance& p) {
    return std::visit(
        [](const auto& prov) -> json {
            using T = std::decay_t<decltype(prov)>;
            if constexpr (std::is_same_v<T, AffineProvenance>)
                return {{"method", "affine"}, {"seq_index", prov.seq_index}, {"p", prov.p}, {"l", prov.l}};
            else if constexpr (std::is_same_v<T, DifferenceProvenance>)
                return {{"method", "difference"}, {"m", prov.m}};
            else
                return {{"method", "external"}};
        },
        p);
}

Provenance provenance_from(const json& j) {
    const json& method = field(j, "method");
    if (!method.is_string()) schema("provenance.method must be a string");
    const auto& name = method.get_ref<const std::string&>();
    if (name == "affine") {
        const auto p = as_int<std::int64_t>(field(j, "p"), "provenance.p");
        if (p == 0) schema("provenance.p must be nonzero");
        return AffineProvenance{as_int<std::uint32_t>(field(j, "seq_index"), "provenance.seq_index"), p,
                                as_int<std::int64_t>(field(j, "l"), "provenance.l")};
    }
    if (name == "difference") return DifferenceProvenance{as_int<std::uint32_t>(field(j, "m"), "provenance.m")};
    if (name == "external") return ExternalProvenance{};
    schema("unknown provenance method '" + name + "'");
}

json affine_json(const AffineProvenance& a) { return {{"seq_index", a.seq_index}, {"p", a.p}, {"l", a.l}}; }

}  // namespace

json to_json(const PSeq& seq) {
    return {{"n", seq.index()}, {"elements", encode_text(seq)}, {"length", seq.size()}};
}

json to_json(const MomentVector& mv) { return {{"n", mv.seq_index}, {"moments", bigints(mv.values)}}; }

json to_json(const IntPolynomial& poly) {
    return {{"n", poly.seq_index}, {"s", poly.declared_s}, {"coefficients", bigints(poly.coefficients)}};
}

json to_json(const PtePair& pair) {
    return {{"u", pair.u_set}, {"v", pair.v_set}, {"n", pair.claimed_n}, {"provenance", provenance_json(pair.provenance)}};
}

json to_json(const VerificationReport& report) {
    json sums = json::array();
    for (const auto& row : report.sums_table) sums.push_back({{"s", row.s}, {"u", row.u_sum.get_str()}, {"v", row.v_sum.get_str()}});
    json out{{"is_valid", report.is_valid},
             {"claimed_n", report.claimed_n},
             {"checked_through", report.checked_through},
             {"first_difference", nullptr},
             {"failure_reason", nullptr},
             {"sums", std::move(sums)}};
    if (report.first_difference) out["first_difference"] = *report.first_difference;
    if (report.failure_reason) out["failure_reason"] = std::string(to_string(*report.failure_reason));
    return out;
}

json to_json(const oracle::SearchResult& result) {
    json pairs = json::array();
    for (const auto& p : result.pairs) pairs.push_back(to_json(p));
    return {{"pairs", std::move(pairs)}, {"stats", {{"examined", result.stats.examined}, {"found", result.stats.found}}}};
}

json to_json(const oracle::ComparisonReport& report) {
    json matched = json::array();
    json unmatched = json::array();
    for (const auto& entry : report.difference_pairs) {
        json item{{"m", entry.m}, {"pair", to_json(entry.b_pair)}};
        if (entry.witnesses.empty()) {
            unmatched.push_back(std::move(item));
        } else {
            json w = json::array();
            for (const auto& a : entry.witnesses) w.push_back(affine_json(a));
            item["witnesses"] = std::move(w);
            matched.push_back(std::move(item));
        }
    }
    json affine = json::array();
    for (const auto& a : report.affine_unmatched) affine.push_back(affine_json(a));
    return {{"bounds", {{"m_max", report.m_max}, {"p_bound", report.p_bound}, {"l_bound", report.l_bound}}},
            {"matched", std::move(matched)},
            {"unmatched_difference", std::move(unmatched)},
            {"unmatched_affine", std::move(affine)},
            {"affine_total", report.affine_total}};
}

json parse(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        fail(ErrorCode::parse_error, std::string("malformed JSON: ") + e.what());
    }
}

PSeq pseq_from_json(const json& j) {
    const auto n = as_int<std::uint32_t>(field(j, "n"), "n");
    const json& elements = field(j, "elements");
    if (!elements.is_string()) schema("elements must be a string");
    PSeq seq = decode_text(elements.get_ref<const std::string&>(), n);
    if (j.contains("length") && as_int<std::uint64_t>(j["length"], "length") != seq.size())
        schema("length does not match elements");
    return seq;
}

MomentVector moments_from_json(const json& j) {
    return MomentVector{as_int<std::uint32_t>(field(j, "n"), "n"), bigints_from(field(j, "moments"), "moments")};
}

IntPolynomial poly_from_json(const json& j) {
    IntPolynomial poly{as_int<std::uint32_t>(field(j, "n"), "n"), as_int<unsigned>(field(j, "s"), "s"),
                       bigints_from(field(j, "coefficients"), "coefficients")};
    if (poly.coefficients.size() != poly.declared_s + std::size_t{1}) schema("coefficients must list c_0..c_s");
    return poly;
}

PtePair pair_from_json(const json& j) {
    auto u = int_set(field(j, "u"), "u");
    auto v = int_set(field(j, "v"), "v");
    const auto n = as_int<std::uint32_t>(field(j, "n"), "n");
    Provenance prov = ExternalProvenance{};
    if (j.contains("provenance")) prov = provenance_from(j["provenance"]);
    try {
        return make_pair(std::move(u), std::move(v), n, prov);
    } catch (const Error& e) {
        schema(e.what());
    }
}

VerificationReport report_from_json(const json& j) {
    VerificationReport r;
    const json& valid = field(j, "is_valid");
    if (!valid.is_boolean()) schema("is_valid must be a boolean");
    r.is_valid = valid.get<bool>();
    r.claimed_n = as_int<std::uint32_t>(field(j, "claimed_n"), "claimed_n");
    r.checked_through = as_int<unsigned>(field(j, "checked_through"), "checked_through");
    const json& fd = field(j, "first_difference");
    if (!fd.is_null()) r.first_difference = as_int<unsigned>(fd, "first_difference");
    const json& reason = field(j, "failure_reason");
    if (!reason.is_null()) {
        if (!reason.is_string()) schema("failure_reason must be a string or null");
        r.failure_reason = failure_reason_from_string(reason.get_ref<const std::string&>());
        if (!r.failure_reason) schema("unknown failure_reason");
    }
    const json& sums = field(j, "sums");
    if (!sums.is_array()) schema("sums must be an array");
    for (const auto& row : sums)
        r.sums_table.push_back(SumsRow{as_int<unsigned>(field(row, "s"), "sums.s"), as_bigint(field(row, "u"), "sums.u"),
                                       as_bigint(field(row, "v"), "sums.v")});
    return r;
}

std::string dump(const json& j) { return j.dump(); }

}  // namespace likepow::json
