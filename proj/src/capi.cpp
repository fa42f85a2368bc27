#include "likepow/likepow.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "likepow/error.hpp"
#include "likepow/json_io.hpp"
#include "likepow/oracle.hpp"
#include "likepow/render.hpp"

struct likepow_seq {
    likepow::PSeq value;
};
struct likepow_moments {
    likepow::MomentVector value;
};
struct likepow_poly {
    likepow::IntPolynomial value;
};
struct likepow_pair {
    likepow::PtePair value;
};
struct likepow_report {
    likepow::VerificationReport value;
    std::string reason;
};
struct likepow_search {
    likepow::oracle::SearchResult value;
};

namespace {

thread_local std::string last_error;

likepow_status status_for(likepow::ErrorCode code) {
    using likepow::ErrorCode;
    switch (code) {
        case ErrorCode::invalid_argument: return LIKEPOW_E_INVALID_ARGUMENT;
        case ErrorCode::out_of_range: return LIKEPOW_E_OUT_OF_RANGE;
        case ErrorCode::parse_error: return LIKEPOW_E_PARSE;
        case ErrorCode::malformed_sequence: return LIKEPOW_E_MALFORMED;
        case ErrorCode::cap_exceeded: return LIKEPOW_E_CAP_EXCEEDED;
        case ErrorCode::budget_exceeded: return LIKEPOW_E_BUDGET_EXCEEDED;
        case ErrorCode::overflow: return LIKEPOW_E_OVERFLOW;
    }
    return LIKEPOW_E_INTERNAL;
}

likepow_status set_error(likepow_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

template <class F>
likepow_status guarded(F&& body) {
    try {
        body();
        return LIKEPOW_OK;
    } catch (const likepow::Error& e) {
        return set_error(status_for(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(LIKEPOW_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(LIKEPOW_E_INTERNAL, e.what());
    }
}

likepow_status null_arg(const char* name) {
    return set_error(LIKEPOW_E_INVALID_ARGUMENT, std::string("null argument: ") + name);
}

char* copy_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class T>
likepow_status render_to(const T& value, likepow_format format, char** out) {
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = copy_string(format == LIKEPOW_FORMAT_JSON ? likepow::json::dump(likepow::json::to_json(value))
                                                         : likepow::text::render(value));
    });
}

}  // namespace

extern "C" {

const char* likepow_status_string(likepow_status status) {
    switch (status) {
        case LIKEPOW_OK: return "ok";
        case LIKEPOW_E_INVALID_ARGUMENT: return "invalid argument";
        case LIKEPOW_E_OUT_OF_RANGE: return "out of range";
        case LIKEPOW_E_PARSE: return "parse error";
        case LIKEPOW_E_MALFORMED: return "malformed sequence";
        case LIKEPOW_E_CAP_EXCEEDED: return "materialization cap exceeded";
        case LIKEPOW_E_BUDGET_EXCEEDED: return "work budget exceeded";
        case LIKEPOW_E_OVERFLOW: return "integer overflow";
        case LIKEPOW_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* likepow_last_error(void) { return last_error.c_str(); }

void likepow_string_free(char* s) { std::free(s); }

uint64_t likepow_default_cap(void) { return likepow::default_cap; }
uint64_t likepow_default_budget(void) { return likepow::oracle::default_work_budget; }

likepow_status likepow_length_of(uint32_t n, uint64_t* out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = likepow::length_of(n); });
}

likepow_status likepow_element_at(uint32_t n, uint64_t i, int* out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = likepow::to_int(likepow::element_at(n, i)); });
}

likepow_status likepow_seq_generate(uint32_t n, uint64_t cap, likepow_seq** out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = new likepow_seq{likepow::generate(n, cap)}; });
}

likepow_status likepow_seq_next(const likepow_seq* seq, likepow_seq** out) {
    if (!seq) return null_arg("seq");
    if (!out) return null_arg("out");
    return guarded([&] { *out = new likepow_seq{likepow::next_pseq(seq->value)}; });
}

likepow_status likepow_seq_decode(const char* text, uint32_t n, likepow_seq** out) {
    if (!text) return null_arg("text");
    if (!out) return null_arg("out");
    return guarded([&] { *out = new likepow_seq{likepow::decode_text(text, n)}; });
}

likepow_status likepow_seq_from_json(const char* json, likepow_seq** out) {
    if (!json) return null_arg("json");
    if (!out) return null_arg("out");
    return guarded([&] { *out = new likepow_seq{likepow::json::pseq_from_json(likepow::json::parse(json))}; });
}

uint32_t likepow_seq_index(const likepow_seq* seq) { return seq ? seq->value.index() : 0; }
uint64_t likepow_seq_length(const likepow_seq* seq) { return seq ? seq->value.size() : 0; }

likepow_status likepow_seq_element(const likepow_seq* seq, uint64_t i, int* out) {
    if (!seq) return null_arg("seq");
    if (!out) return null_arg("out");
    return guarded([&] { *out = likepow::to_int(seq->value.at(i)); });
}

likepow_status likepow_seq_render(const likepow_seq* seq, likepow_format format, char** out) {
    if (!seq) return null_arg("seq");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = copy_string(format == LIKEPOW_FORMAT_JSON ? likepow::json::dump(likepow::json::to_json(seq->value))
                                                         : likepow::encode_text(seq->value));
    });
}

likepow_status likepow_seq_supports_json(const likepow_seq* seq, char** out) {
    if (!seq) return null_arg("seq");
    if (!out) return null_arg("out");
    return guarded([&] {
        const auto sets = likepow::support_sets(seq->value);
        *out = copy_string(likepow::json::dump({{"x", sets.x_set}, {"y", sets.y_set}}));
    });
}

void likepow_seq_free(likepow_seq* seq) { delete seq; }

likepow_status likepow_moments_compute(uint32_t n, uint32_t max_t, likepow_strategy strategy, uint64_t cap,
                                       uint32_t threads, likepow_moments** out) {
    if (!out) return null_arg("out");
    return guarded([&] {
        switch (strategy) {
            case LIKEPOW_STRATEGY_MATERIALIZED:
                *out = new likepow_moments{likepow::moments_direct(likepow::generate(n, cap), max_t, threads)};
                return;
            case LIKEPOW_STRATEGY_VIRTUAL:
                *out = new likepow_moments{likepow::moments_direct(likepow::VirtualPSeq(n), max_t, threads)};
                return;
            case LIKEPOW_STRATEGY_RECURRENCE:
                *out = new likepow_moments{likepow::moments_fast(n, max_t)};
                return;
        }
        likepow::fail(likepow::ErrorCode::invalid_argument, "unknown strategy");
    });
}

likepow_status likepow_moments_from_json(const char* json, likepow_moments** out) {
    if (!json) return null_arg("json");
    if (!out) return null_arg("out");
    return guarded([&] { *out = new likepow_moments{likepow::json::moments_from_json(likepow::json::parse(json))}; });
}

size_t likepow_moments_count(const likepow_moments* mv) { return mv ? mv->value.values.size() : 0; }

likepow_status likepow_moments_value(const likepow_moments* mv, size_t t, char** out) {
    if (!mv) return null_arg("mv");
    if (!out) return null_arg("out");
    if (t >= mv->value.values.size()) return set_error(LIKEPOW_E_OUT_OF_RANGE, "moment index out of range");
    return guarded([&] { *out = copy_string(mv->value.values[t].get_str()); });
}

likepow_status likepow_moments_render(const likepow_moments* mv, likepow_format format, char** out) {
    if (!mv) return null_arg("mv");
    return render_to(mv->value, format, out);
}

void likepow_moments_free(likepow_moments* mv) { delete mv; }

likepow_status likepow_poly_compute(uint32_t n, uint32_t s, likepow_poly** out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = new likepow_poly{likepow::f_poly_coeffs(n, s)}; });
}

likepow_status likepow_poly_from_json(const char* json, likepow_poly** out) {
    if (!json) return null_arg("json");
    if (!out) return null_arg("out");
    return guarded([&] { *out = new likepow_poly{likepow::json::poly_from_json(likepow::json::parse(json))}; });
}

int64_t likepow_poly_degree(const likepow_poly* poly) {
    if (!poly) return -1;
    const auto d = poly->value.degree();
    return d ? static_cast<int64_t>(*d) : -1;
}

likepow_status likepow_poly_coefficient(const likepow_poly* poly, size_t j, char** out) {
    if (!poly) return null_arg("poly");
    if (!out) return null_arg("out");
    if (j >= poly->value.coefficients.size()) return set_error(LIKEPOW_E_OUT_OF_RANGE, "coefficient index out of range");
    return guarded([&] { *out = copy_string(poly->value.coefficients[j].get_str()); });
}

likepow_status likepow_poly_eval(const likepow_poly* poly, const char* x, char** out) {
    if (!poly) return null_arg("poly");
    if (!x) return null_arg("x");
    if (!out) return null_arg("out");
    return guarded([&] { *out = copy_string(poly->value.evaluate(likepow::parse_rational(x)).get_str()); });
}

likepow_status likepow_poly_render(const likepow_poly* poly, likepow_format format, char** out) {
    if (!poly) return null_arg("poly");
    return render_to(poly->value, format, out);
}

void likepow_poly_free(likepow_poly* poly) { delete poly; }

likepow_status likepow_pair_affine(uint32_t n, int64_t p, int64_t l, uint64_t cap, int force_virtual,
                                   likepow_pair** out) {
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = new likepow_pair{likepow::pair_from_affine(n, likepow::AffineMap(p, l), {cap, force_virtual != 0})};
    });
}

likepow_status likepow_pair_difference(uint32_t m, uint64_t cap, int force_virtual, likepow_pair** out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = new likepow_pair{likepow::pair_from_difference(m, {cap, force_virtual != 0})}; });
}

likepow_status likepow_pair_create(const int64_t* u, size_t u_len, const int64_t* v, size_t v_len, uint32_t claimed_n,
                                   likepow_pair** out) {
    if ((!u && u_len) || (!v && v_len)) return null_arg("u/v");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = new likepow_pair{likepow::make_pair({u, u + u_len}, {v, v + v_len}, claimed_n)};
    });
}

likepow_status likepow_pair_from_json(const char* json, likepow_pair** out) {
    if (!json) return null_arg("json");
    if (!out) return null_arg("out");
    return guarded([&] { *out = new likepow_pair{likepow::json::pair_from_json(likepow::json::parse(json))}; });
}

size_t likepow_pair_u_size(const likepow_pair* pair) { return pair ? pair->value.u_set.size() : 0; }
size_t likepow_pair_v_size(const likepow_pair* pair) { return pair ? pair->value.v_set.size() : 0; }
const int64_t* likepow_pair_u_data(const likepow_pair* pair) { return pair ? pair->value.u_set.data() : nullptr; }
const int64_t* likepow_pair_v_data(const likepow_pair* pair) { return pair ? pair->value.v_set.data() : nullptr; }
uint32_t likepow_pair_claimed_n(const likepow_pair* pair) { return pair ? pair->value.claimed_n : 0; }

likepow_status likepow_pair_render(const likepow_pair* pair, likepow_format format, char** out) {
    if (!pair) return null_arg("pair");
    return render_to(pair->value, format, out);
}

likepow_status likepow_pair_degree(const likepow_pair* pair, uint32_t* out) {
    if (!pair) return null_arg("pair");
    if (!out) return null_arg("out");
    return guarded([&] { *out = likepow::pair_degree(pair->value.u_set, pair->value.v_set); });
}

void likepow_pair_free(likepow_pair* pair) { delete pair; }

likepow_status likepow_verify(const likepow_pair* pair, int naive, likepow_report** out) {
    if (!pair) return null_arg("pair");
    if (!out) return null_arg("out");
    return guarded([&] {
        auto report = naive ? likepow::oracle::naive_verify(pair->value) : likepow::verify_pair(pair->value);
        std::string reason = report.failure_reason ? std::string(likepow::to_string(*report.failure_reason)) : "";
        *out = new likepow_report{std::move(report), std::move(reason)};
    });
}

int likepow_report_is_valid(const likepow_report* report) { return report && report->value.is_valid ? 1 : 0; }

int64_t likepow_report_first_difference(const likepow_report* report) {
    if (!report || !report->value.first_difference) return -1;
    return *report->value.first_difference;
}

const char* likepow_report_failure_reason(const likepow_report* report) {
    if (!report || !report->value.failure_reason) return nullptr;
    return report->reason.c_str();
}

likepow_status likepow_report_render(const likepow_report* report, likepow_format format, char** out) {
    if (!report) return null_arg("report");
    return render_to(report->value, format, out);
}

void likepow_report_free(likepow_report* report) { delete report; }

likepow_status likepow_search_run(int64_t lo, int64_t hi, uint32_t set_size, uint32_t min_degree, uint64_t budget,
                                  uint32_t threads, likepow_search** out) {
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = new likepow_search{likepow::oracle::exhaustive_search({lo, hi, set_size, min_degree}, budget, threads)};
    });
}

size_t likepow_search_count(const likepow_search* result) { return result ? result->value.pairs.size() : 0; }
uint64_t likepow_search_examined(const likepow_search* result) { return result ? result->value.stats.examined : 0; }

likepow_status likepow_search_pair(const likepow_search* result, size_t i, likepow_pair** out) {
    if (!result) return null_arg("result");
    if (!out) return null_arg("out");
    if (i >= result->value.pairs.size()) return set_error(LIKEPOW_E_OUT_OF_RANGE, "pair index out of range");
    return guarded([&] { *out = new likepow_pair{result->value.pairs[i]}; });
}

likepow_status likepow_search_render(const likepow_search* result, likepow_format format, char** out) {
    if (!result) return null_arg("result");
    return render_to(result->value, format, out);
}

void likepow_search_free(likepow_search* result) { delete result; }

likepow_status likepow_compare(uint32_t m_max, int64_t p_bound, int64_t l_bound, uint64_t budget,
                               likepow_format format, char** out) {
    if (!out) return null_arg("out");
    return guarded([&] {
        const auto report = likepow::oracle::compare_methods(m_max, p_bound, l_bound, budget);
        *out = copy_string(format == LIKEPOW_FORMAT_JSON ? likepow::json::dump(likepow::json::to_json(report))
                                                         : likepow::text::render(report));
    });
}

}  // extern "C"
