// likepow command-line frontend. Talks to the library only through the C API.
//
// Exit codes: 0 success / valid pair, 1 verification failed, 2 usage or
// input error, 3 resource guard (materialization cap or work budget).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "likepow/likepow.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;

struct CliFailure {
    int code;
    std::string message;
};

int exit_code_for(likepow_status status) {
    return status == LIKEPOW_E_CAP_EXCEEDED || status == LIKEPOW_E_BUDGET_EXCEEDED ? exit_resource : exit_usage;
}

void check(likepow_status status, const char* what) {
    if (status != LIKEPOW_OK)
        throw CliFailure{exit_code_for(status), std::string(what) + ": " + likepow_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
template <class T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, Deleter<T, Free>>;

using SeqHandle = Handle<likepow_seq, likepow_seq_free>;
using MomentsHandle = Handle<likepow_moments, likepow_moments_free>;
using PolyHandle = Handle<likepow_poly, likepow_poly_free>;
using PairHandle = Handle<likepow_pair, likepow_pair_free>;
using ReportHandle = Handle<likepow_report, likepow_report_free>;
using SearchHandle = Handle<likepow_search, likepow_search_free>;

std::string take(char* s) {
    std::string out(s);
    likepow_string_free(s);
    return out;
}

template <class T>
std::string render(likepow_status (*fn)(const T*, likepow_format, char**), const T* obj, likepow_format fmt) {
    char* out = nullptr;
    check(fn(obj, fmt, &out), "render");
    return take(out);
}

void emit(const std::string& s) {
    std::cout << s;
    if (s.empty() || s.back() != '\n') std::cout << '\n';
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliFailure{exit_usage, "cannot open '" + path + "'"};
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

PairHandle read_pair(const std::string& path) {
    const std::string doc = read_input(path);
    likepow_pair* pair = nullptr;
    check(likepow_pair_from_json(doc.c_str(), &pair), "read pair");
    return PairHandle(pair);
}

struct Common {
    std::string format = "text";
    unsigned threads = 1;
    std::optional<std::uint64_t> seed;
    std::uint64_t cap = likepow_default_cap();
    bool force_virtual = false;

    likepow_format fmt() const { return format == "json" ? LIKEPOW_FORMAT_JSON : LIKEPOW_FORMAT_TEXT; }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    cmd->add_option("--seed", c.seed, "Seed for sampled parameters");
    cmd->add_option("--cap", c.cap, "Materialization cap (elements)");
    cmd->add_flag("--virtual", c.force_virtual, "Use element_at access instead of materializing");
}

// splitmix64; portable, so seeded output is identical across platforms.
std::uint64_t next_random(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::string trim_line(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"P-sequences, vanishing moments and Prouhet-Tarry-Escott pairs"};
    app.require_subcommand(1);

    Common common;
    std::uint32_t n = 0;
    std::uint32_t max_t = 0;
    std::int64_t p = 0;
    std::int64_t l = 0;
    std::uint32_t m = 0;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::uint32_t size = 0;
    std::uint32_t degree = 0;
    std::string file;
    std::string at;
    std::uint64_t budget = likepow_default_budget();
    bool fast = false;
    bool naive = false;

    auto* seq = app.add_subcommand("seq", "Print P_n, or decode and check a sequence with --file");
    seq->add_option("-n", n, "Sequence index")->required();
    seq->add_option("--file", file, "Text sequence to decode ('-' for stdin)");
    add_common(seq, common);

    auto* moments = app.add_subcommand("moments", "Moments M_0..M_T of P_n");
    moments->add_option("-n", n, "Sequence index")->required();
    moments->add_option("-s,--max-t", max_t, "Highest exponent T")->required();
    moments->add_flag("--fast", fast, "Use the recurrence instead of direct summation");
    add_common(moments, common);

    auto* poly = app.add_subcommand("poly", "Coefficients of F_{n,s}");
    poly->add_option("-n", n, "Sequence index")->required();
    poly->add_option("-s,--max-t", max_t, "Exponent s")->required();
    poly->add_option("--at", at, "Evaluate at a rational point a or a/b");
    add_common(poly, common);

    auto* affine = app.add_subcommand("pte-affine", "PTE pair from the affine images of P_n");
    affine->add_option("-n", n, "Sequence index (>= 2)")->required();
    auto* p_opt = affine->add_option("-p", p, "Scale (nonzero)");
    auto* l_opt = affine->add_option("-l", l, "Offset");
    add_common(affine, common);

    auto* diff = app.add_subcommand("pte-diff", "PTE pair from support differences of P_{2m+2} and P_{2m+1}");
    diff->add_option("-m", m, "Difference index")->required();
    add_common(diff, common);

    auto* verify = app.add_subcommand("verify", "Verify a pair document");
    verify->add_option("--file", file, "Pair JSON ('-' or omitted for stdin)");
    verify->add_flag("--naive", naive, "Use the independent oracle verifier");
    add_common(verify, common);

    auto* deg = app.add_subcommand("degree", "Largest d with equal power sums through d");
    deg->add_option("--file", file, "Pair JSON ('-' or omitted for stdin)");
    add_common(deg, common);

    auto* search = app.add_subcommand("search", "Exhaustive search for equal-power-sum pairs");
    search->add_option("--lo", lo, "Range start")->required();
    search->add_option("--hi", hi, "Range end (inclusive)")->required();
    search->add_option("--size", size, "Set size")->required();
    search->add_option("--degree", degree, "Equal sums for s = 1..degree")->required();
    search->add_option("--budget", budget, "Work budget in candidate-pair evaluations");
    add_common(search, common);

    auto* compare = app.add_subcommand("compare", "Compare the affine and difference constructions");
    compare->add_option("-m", m, "Largest difference index")->required();
    compare->add_option("-p", p, "Bound on |p|")->required();
    compare->add_option("-l", l, "Bound on |l|")->required();
    compare->add_option("--budget", budget, "Work budget");
    add_common(compare, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "likepow: " << e.what() << '\n';
        return exit_usage;
    }

    const likepow_format fmt = common.fmt();
    try {
        if (seq->parsed()) {
            SeqHandle handle;
            likepow_seq* raw = nullptr;
            if (!file.empty()) {
                check(likepow_seq_decode(trim_line(read_input(file)).c_str(), n, &raw), "decode");
            } else if (common.force_virtual) {
                std::uint64_t len = 0;
                check(likepow_length_of(n, &len), "length");
                if (len > common.cap)
                    throw CliFailure{exit_resource, "seq: P_" + std::to_string(n) + " has " + std::to_string(len) +
                                                        " elements, above the cap"};
                std::string text(len, '0');
                for (std::uint64_t i = 0; i < len; ++i) {
                    int e = 0;
                    check(likepow_element_at(n, i, &e), "element_at");
                    text[i] = e > 0 ? '+' : e < 0 ? '-' : '0';
                }
                check(likepow_seq_decode(text.c_str(), n, &raw), "decode");
            } else {
                check(likepow_seq_generate(n, common.cap, &raw), "seq");
            }
            handle.reset(raw);
            emit(render(likepow_seq_render, handle.get(), fmt));
            return exit_ok;
        }
        if (moments->parsed()) {
            const likepow_strategy strategy = fast                  ? LIKEPOW_STRATEGY_RECURRENCE
                                              : common.force_virtual ? LIKEPOW_STRATEGY_VIRTUAL
                                                                     : LIKEPOW_STRATEGY_MATERIALIZED;
            likepow_moments* raw = nullptr;
            check(likepow_moments_compute(n, max_t, strategy, common.cap, common.threads, &raw), "moments");
            MomentsHandle handle(raw);
            emit(render(likepow_moments_render, handle.get(), fmt));
            return exit_ok;
        }
        if (poly->parsed()) {
            likepow_poly* raw = nullptr;
            check(likepow_poly_compute(n, max_t, &raw), "poly");
            PolyHandle handle(raw);
            if (!at.empty()) {
                char* value = nullptr;
                check(likepow_poly_eval(handle.get(), at.c_str(), &value), "evaluate");
                const std::string v = take(value);
                if (fmt == LIKEPOW_FORMAT_JSON)
                    emit("{\"n\":" + std::to_string(n) + ",\"s\":" + std::to_string(max_t) + ",\"value\":\"" + v +
                         "\",\"x\":\"" + at + "\"}");
                else
                    emit("F_{" + std::to_string(n) + "," + std::to_string(max_t) + "}(" + at + ") = " + v);
                return exit_ok;
            }
            emit(render(likepow_poly_render, handle.get(), fmt));
            return exit_ok;
        }
        if (affine->parsed()) {
            if (p_opt->count() == 0 || l_opt->count() == 0) {
                if (!common.seed)
                    throw CliFailure{exit_usage, "pte-affine: give -p and -l, or --seed to sample them"};
                std::uint64_t state = *common.seed;
                const auto r = static_cast<std::int64_t>(next_random(state) % 20);
                if (p_opt->count() == 0) p = r < 10 ? r - 10 : r - 9;
                const auto r2 = static_cast<std::int64_t>(next_random(state) % 201);
                if (l_opt->count() == 0) l = r2 - 100;
            }
            likepow_pair* raw = nullptr;
            check(likepow_pair_affine(n, p, l, common.cap, common.force_virtual, &raw), "pte-affine");
            PairHandle handle(raw);
            emit(render(likepow_pair_render, handle.get(), fmt));
            return exit_ok;
        }
        if (diff->parsed()) {
            likepow_pair* raw = nullptr;
            check(likepow_pair_difference(m, common.cap, common.force_virtual, &raw), "pte-diff");
            PairHandle handle(raw);
            emit(render(likepow_pair_render, handle.get(), fmt));
            return exit_ok;
        }
        if (verify->parsed()) {
            const PairHandle pair = read_pair(file);
            likepow_report* raw = nullptr;
            check(likepow_verify(pair.get(), naive ? 1 : 0, &raw), "verify");
            ReportHandle report(raw);
            emit(render(likepow_report_render, report.get(), fmt));
            if (!likepow_report_is_valid(report.get())) {
                std::cerr << "verify: invalid pair (" << likepow_report_failure_reason(report.get()) << ")\n";
                return exit_invalid;
            }
            return exit_ok;
        }
        if (deg->parsed()) {
            const PairHandle pair = read_pair(file);
            std::uint32_t d = 0;
            const likepow_status status = likepow_pair_degree(pair.get(), &d);
            if (status == LIKEPOW_E_INVALID_ARGUMENT) {
                const std::string reason = likepow_last_error();
                emit(fmt == LIKEPOW_FORMAT_JSON ? "{\"degree\":null,\"failure_reason\":\"" + reason + "\"}"
                                                : "no degree: " + reason);
                std::cerr << "degree: invalid pair (" << reason << ")\n";
                return exit_invalid;
            }
            check(status, "degree");
            emit(fmt == LIKEPOW_FORMAT_JSON ? "{\"degree\":" + std::to_string(d) + ",\"failure_reason\":null}"
                                            : "degree: " + std::to_string(d));
            return exit_ok;
        }
        if (search->parsed()) {
            likepow_search* raw = nullptr;
            check(likepow_search_run(lo, hi, size, degree, budget, common.threads, &raw), "search");
            SearchHandle handle(raw);
            emit(render(likepow_search_render, handle.get(), fmt));
            return exit_ok;
        }
        if (compare->parsed()) {
            char* out = nullptr;
            check(likepow_compare(m, p, l, budget, fmt, &out), "compare");
            emit(take(out));
            return exit_ok;
        }
    } catch (const CliFailure& f) {
        std::cerr << "likepow: " << f.message << '\n';
        return f.code;
    }
    return exit_usage;
}
