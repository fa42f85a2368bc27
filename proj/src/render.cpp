#include "likepow/render.hpp"

#include <sstream>

namespace likepow::text {

namespace {

std::string set_text(const std::vector<std::int64_t>& set) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < set.size(); ++i) os << (i ? ", " : "") << set[i];
    os << '}';
    return os.str();
}

std::string provenance_text(const Provenance& p) {
    if (const auto* a = std::get_if<AffineProvenance>(&p))
        return "affine image of P_" + std::to_string(a->seq_index) + " under i -> " + std::to_string(a->p) + "*i + " +
               std::to_string(a->l);
    if (const auto* d = std::get_if<DifferenceProvenance>(&p))
        return "support difference of P_" + std::to_string(2 * d->m + 2) + " and P_" + std::to_string(2 * d->m + 1);
    return "external";
}

}  // namespace

std::string render(const MomentVector& mv) {
    std::ostringstream os;
    for (std::size_t t = 0; t < mv.values.size(); ++t) os << "M_" << t << " = " << mv.values[t].get_str() << '\n';
    return os.str();
}

std::string render(const IntPolynomial& poly) {
    std::ostringstream os;
    os << "F_{" << poly.seq_index << ',' << poly.declared_s << "}(x) = ";
    bool any = false;
    for (std::size_t j = 0; j < poly.coefficients.size(); ++j) {
        const BigInt& c = poly.coefficients[j];
        if (c == 0) continue;
        if (any) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        os << BigInt(abs(c)).get_str();
        if (j >= 1) os << "*x";
        if (j >= 2) os << '^' << j;
        any = true;
    }
    if (!any) os << '0';
    os << "\ndegree: ";
    if (const auto d = poly.degree())
        os << *d;
    else
        os << "identically zero";
    os << '\n';
    return os.str();
}

std::string render(const PtePair& pair) {
    std::ostringstream os;
    os << "U = " << set_text(pair.u_set) << '\n'
       << "V = " << set_text(pair.v_set) << '\n'
       << "n = " << pair.claimed_n << '\n'
       << "provenance: " << provenance_text(pair.provenance) << '\n';
    return os.str();
}

std::string render(const VerificationReport& report) {
    std::ostringstream os;
    os << (report.is_valid ? "valid" : "invalid") << " (claimed n = " << report.claimed_n << ")\n";
    if (report.failure_reason) os << "failure: " << to_string(*report.failure_reason) << '\n';
    for (const auto& row : report.sums_table)
        os << "s=" << row.s << ": " << row.u_sum.get_str() << (row.u_sum == row.v_sum ? " == " : " != ")
           << row.v_sum.get_str() << '\n';
    os << "first difference: ";
    if (report.first_difference)
        os << *report.first_difference;
    else
        os << "none";
    os << '\n';
    return os.str();
}

std::string render(const oracle::SearchResult& result) {
    std::ostringstream os;
    for (const auto& p : result.pairs)
        os << set_text(p.u_set) << ' ' << set_text(p.v_set) << " first difference " << p.claimed_n << '\n';
    os << result.stats.found << " pairs, " << result.stats.examined << " candidates examined\n";
    return os.str();
}

std::string render(const oracle::ComparisonReport& report) {
    std::ostringstream os;
    for (const auto& entry : report.difference_pairs) {
        os << "m=" << entry.m << ": " << set_text(entry.b_pair.u_set) << ' ' << set_text(entry.b_pair.v_set);
        if (entry.witnesses.empty()) {
            os << " not an affine image within bounds\n";
        } else {
            os << " = image of P_" << entry.witnesses.front().seq_index << " under";
            for (const auto& w : entry.witnesses) os << " (p=" << w.p << ", l=" << w.l << ')';
            os << '\n';
        }
    }
    os << report.affine_unmatched.size() << " of " << report.affine_total
       << " affine pairs are not produced by the difference method\n";
    return os.str();
}

}  // namespace likepow::text
