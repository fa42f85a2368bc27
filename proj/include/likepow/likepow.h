/*
 * likepow C API.
 *
 * Every fallible call returns a likepow_status; on failure the message is
 * available from likepow_last_error() on the calling thread until the next
 * failing call. Objects are opaque handles released with the matching
 * *_free function. Strings returned through char** are owned by the caller
 * and released with likepow_string_free. Big integers cross the boundary
 * as decimal strings.
 */
#ifndef LIKEPOW_H
#define LIKEPOW_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LIKEPOW_API __declspec(dllexport)
#else
#define LIKEPOW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum likepow_status {
    LIKEPOW_OK = 0,
    LIKEPOW_E_INVALID_ARGUMENT = 1,
    LIKEPOW_E_OUT_OF_RANGE = 2,
    LIKEPOW_E_PARSE = 3,
    LIKEPOW_E_MALFORMED = 4,
    LIKEPOW_E_CAP_EXCEEDED = 5,
    LIKEPOW_E_BUDGET_EXCEEDED = 6,
    LIKEPOW_E_OVERFLOW = 7,
    LIKEPOW_E_INTERNAL = 8
} likepow_status;

typedef enum likepow_format { LIKEPOW_FORMAT_TEXT = 0, LIKEPOW_FORMAT_JSON = 1 } likepow_format;

typedef enum likepow_strategy {
    LIKEPOW_STRATEGY_MATERIALIZED = 0, /* direct summation over generate(n) */
    LIKEPOW_STRATEGY_VIRTUAL = 1,      /* direct summation through element_at */
    LIKEPOW_STRATEGY_RECURRENCE = 2    /* binomial-transform recurrence */
} likepow_strategy;

typedef struct likepow_seq likepow_seq;
typedef struct likepow_moments likepow_moments;
typedef struct likepow_poly likepow_poly;
typedef struct likepow_pair likepow_pair;
typedef struct likepow_report likepow_report;
typedef struct likepow_search likepow_search;

LIKEPOW_API const char* likepow_status_string(likepow_status status);
LIKEPOW_API const char* likepow_last_error(void);
LIKEPOW_API void likepow_string_free(char* s);
LIKEPOW_API uint64_t likepow_default_cap(void);
LIKEPOW_API uint64_t likepow_default_budget(void);

/* P-sequences */
LIKEPOW_API likepow_status likepow_length_of(uint32_t n, uint64_t* out);
LIKEPOW_API likepow_status likepow_element_at(uint32_t n, uint64_t i, int* out);
LIKEPOW_API likepow_status likepow_seq_generate(uint32_t n, uint64_t cap, likepow_seq** out);
LIKEPOW_API likepow_status likepow_seq_next(const likepow_seq* seq, likepow_seq** out);
LIKEPOW_API likepow_status likepow_seq_decode(const char* text, uint32_t n, likepow_seq** out);
LIKEPOW_API likepow_status likepow_seq_from_json(const char* json, likepow_seq** out);
LIKEPOW_API uint32_t likepow_seq_index(const likepow_seq* seq);
LIKEPOW_API uint64_t likepow_seq_length(const likepow_seq* seq);
LIKEPOW_API likepow_status likepow_seq_element(const likepow_seq* seq, uint64_t i, int* out);
/* Text form is the bare sign string; JSON is {"n","elements","length"}. */
LIKEPOW_API likepow_status likepow_seq_render(const likepow_seq* seq, likepow_format format, char** out);
/* Support sets as JSON {"x":[...],"y":[...]}. */
LIKEPOW_API likepow_status likepow_seq_supports_json(const likepow_seq* seq, char** out);
LIKEPOW_API void likepow_seq_free(likepow_seq* seq);

/* Moments M_0..M_max_t. cap applies to the materialized strategy only. */
LIKEPOW_API likepow_status likepow_moments_compute(uint32_t n, uint32_t max_t, likepow_strategy strategy,
                                                   uint64_t cap, uint32_t threads, likepow_moments** out);
LIKEPOW_API likepow_status likepow_moments_from_json(const char* json, likepow_moments** out);
LIKEPOW_API size_t likepow_moments_count(const likepow_moments* mv);
LIKEPOW_API likepow_status likepow_moments_value(const likepow_moments* mv, size_t t, char** out);
LIKEPOW_API likepow_status likepow_moments_render(const likepow_moments* mv, likepow_format format, char** out);
LIKEPOW_API void likepow_moments_free(likepow_moments* mv);

/* F_{n,s} */
LIKEPOW_API likepow_status likepow_poly_compute(uint32_t n, uint32_t s, likepow_poly** out);
LIKEPOW_API likepow_status likepow_poly_from_json(const char* json, likepow_poly** out);
/* -1 for the identically zero polynomial. */
LIKEPOW_API int64_t likepow_poly_degree(const likepow_poly* poly);
LIKEPOW_API likepow_status likepow_poly_coefficient(const likepow_poly* poly, size_t j, char** out);
/* x and the result are "a" or "a/b" strings in lowest terms. */
LIKEPOW_API likepow_status likepow_poly_eval(const likepow_poly* poly, const char* x, char** out);
LIKEPOW_API likepow_status likepow_poly_render(const likepow_poly* poly, likepow_format format, char** out);
LIKEPOW_API void likepow_poly_free(likepow_poly* poly);

/* PTE pairs */
LIKEPOW_API likepow_status likepow_pair_affine(uint32_t n, int64_t p, int64_t l, uint64_t cap, int force_virtual,
                                               likepow_pair** out);
LIKEPOW_API likepow_status likepow_pair_difference(uint32_t m, uint64_t cap, int force_virtual, likepow_pair** out);
LIKEPOW_API likepow_status likepow_pair_create(const int64_t* u, size_t u_len, const int64_t* v, size_t v_len,
                                               uint32_t claimed_n, likepow_pair** out);
LIKEPOW_API likepow_status likepow_pair_from_json(const char* json, likepow_pair** out);
LIKEPOW_API size_t likepow_pair_u_size(const likepow_pair* pair);
LIKEPOW_API size_t likepow_pair_v_size(const likepow_pair* pair);
LIKEPOW_API const int64_t* likepow_pair_u_data(const likepow_pair* pair);
LIKEPOW_API const int64_t* likepow_pair_v_data(const likepow_pair* pair);
LIKEPOW_API uint32_t likepow_pair_claimed_n(const likepow_pair* pair);
LIKEPOW_API likepow_status likepow_pair_render(const likepow_pair* pair, likepow_format format, char** out);
/* Fails with LIKEPOW_E_INVALID_ARGUMENT and last error "overlap",
   "cardinality-mismatch" or "empty" for pairs without a degree. */
LIKEPOW_API likepow_status likepow_pair_degree(const likepow_pair* pair, uint32_t* out);
LIKEPOW_API void likepow_pair_free(likepow_pair* pair);

/* Verification; naive != 0 routes through the independent oracle. */
LIKEPOW_API likepow_status likepow_verify(const likepow_pair* pair, int naive, likepow_report** out);
LIKEPOW_API int likepow_report_is_valid(const likepow_report* report);
/* -1 when no difference was found. */
LIKEPOW_API int64_t likepow_report_first_difference(const likepow_report* report);
/* NULL when valid. */
LIKEPOW_API const char* likepow_report_failure_reason(const likepow_report* report);
LIKEPOW_API likepow_status likepow_report_render(const likepow_report* report, likepow_format format, char** out);
LIKEPOW_API void likepow_report_free(likepow_report* report);

/* Exhaustive search and method comparison */
LIKEPOW_API likepow_status likepow_search_run(int64_t lo, int64_t hi, uint32_t set_size, uint32_t min_degree,
                                              uint64_t budget, uint32_t threads, likepow_search** out);
LIKEPOW_API size_t likepow_search_count(const likepow_search* result);
LIKEPOW_API uint64_t likepow_search_examined(const likepow_search* result);
LIKEPOW_API likepow_status likepow_search_pair(const likepow_search* result, size_t i, likepow_pair** out);
LIKEPOW_API likepow_status likepow_search_render(const likepow_search* result, likepow_format format, char** out);
LIKEPOW_API void likepow_search_free(likepow_search* result);

LIKEPOW_API likepow_status likepow_compare(uint32_t m_max, int64_t p_bound, int64_t l_bound, uint64_t budget,
                                           likepow_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LIKEPOW_H */
