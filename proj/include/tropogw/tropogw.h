/* C interface to the tropogw library.
 *
 * Every function returns a tgw_status.  On failure a description of the last
 * error on the calling thread is available through tgw_last_error().  Strings
 * handed out by the library are released with tgw_string_free().  Integers
 * that may exceed 64 bits are returned as decimal strings. */
#ifndef TROPOGW_H
#define TROPOGW_H

#include <stddef.h>
#include <stdint.h>

#if defined(TROPOGW_BUILDING_LIBRARY)
#define TGW_API __attribute__((visibility("default")))
#else
#define TGW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tgw_status {
    TGW_OK = 0,
    TGW_ORDERING_VIOLATION = 1,
    TGW_LENGTH_MISMATCH = 2,
    TGW_DEGENERATE_POLYGON = 3,
    TGW_INVALID_ARGUMENT = 4,
    TGW_ZERO_ENTRY = 5,
    TGW_NOT_IN_LAMBDA = 6,
    TGW_INCONSISTENT_DEGREES = 7,
    TGW_INFEASIBLE_DEGREE = 8,
    TGW_ON_WALL = 9,
    TGW_INSUFFICIENT_SAMPLES = 10,
    TGW_RANK_DEFICIENT = 11,
    TGW_INCONSISTENT_SAMPLES = 12,
    TGW_TRUNCATION_TOO_SMALL = 13,
    TGW_MASS_LIMIT_EXCEEDED = 14,
    TGW_INTERNAL = 100
} tgw_status;

/* Opaque polygon handle. */
typedef struct tgw_polygon tgw_polygon;

TGW_API const char* tgw_version(void);
TGW_API const char* tgw_status_name(tgw_status status);
/* Message of the most recent failure on this thread ("" if none). */
TGW_API const char* tgw_last_error(void);
TGW_API void tgw_string_free(char* s);

/* c_r strictly decreasing, c_l strictly increasing, positive lengths. */
TGW_API tgw_status tgw_polygon_create(const int64_t* c_r, const int64_t* d_r, size_t n, const int64_t* c_l,
                                      const int64_t* d_l, size_t m, int64_t d_t, tgw_polygon** out);
TGW_API void tgw_polygon_destroy(tgw_polygon* polygon);
TGW_API tgw_status tgw_polygon_info(const tgw_polygon* polygon, int64_t* d_b, int64_t* a, int64_t* lambda_constant);

/* Connected invariant N (tangency degrees checked against the polygon). */
TGW_API tgw_status tgw_connected_invariant(const tgw_polygon* polygon, int g, const int64_t* x, size_t n1,
                                           const int64_t* y, size_t n2, int threads, char** value);
/* F: the same sum without the top/bottom degree check. */
TGW_API tgw_status tgw_function_f(const tgw_polygon* polygon, int g, const int64_t* x, size_t n1, const int64_t* y,
                                  size_t n2, int threads, char** value);
/* N with disconnected diagrams allowed, by thickened diagrams. */
TGW_API tgw_status tgw_disconnected_invariant(const tgw_polygon* polygon, int g, const int64_t* x, size_t n1,
                                              const int64_t* y, size_t n2, char** value);
/* The same number as a Fock space matrix element. */
TGW_API tgw_status tgw_matrix_element_invariant(const tgw_polygon* polygon, int g, const int64_t* x, size_t n1,
                                                const int64_t* y, size_t n2, char** value);

TGW_API tgw_status tgw_gamma(int g, int64_t w, char** value);
TGW_API tgw_status tgw_gamma_shifted(int g, int64_t k, int64_t w, char** value);

/* Runs a JSON query (invariant, chamber, fit, fock-check, gamma,
 * reciprocity, preset) and returns the JSON result with sorted keys.
 * emit_diagrams and threads mirror the command line flags. */
TGW_API tgw_status tgw_run_json(const char* command, const char* payload, int threads, int emit_diagrams,
                                char** result);

#ifdef __cplusplus
}
#endif

#endif
