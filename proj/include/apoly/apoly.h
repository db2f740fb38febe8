/*
   Copyright 2026 The apoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * C interface to the apoly library: exact arithmetic over binary fields,
 * A-polynomials and their Q-transform iteration, closed-form counts and the
 * verification suites.
 *
 * Every fallible call returns an apoly_status; on failure a message for the
 * calling thread is available from apoly_last_error(). Objects are opaque and
 * owned by the caller once returned, and each has a matching _destroy.
 * Strings are returned through (buf, len, needed): *needed receives the size
 * including the terminating NUL; buf == NULL queries the size only, and a
 * buffer that is too small yields APOLY_E_BUFFER_TOO_SMALL.
 *
 * Field elements are unsigned integers whose bit i is the coefficient of z^i.
 * Polynomials use the text form "a0,a1,...,an" (constant term first).
 */

#ifndef APOLY_H
#define APOLY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(APOLY_BUILDING_LIBRARY)
#define APOLY_API __declspec(dllexport)
#else
#define APOLY_API __declspec(dllimport)
#endif
#else
#define APOLY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum apoly_status {
    APOLY_OK = 0,
    APOLY_E_INVALID_ARGUMENT = 1,
    APOLY_E_PARSE = 2,
    APOLY_E_DOMAIN = 3,
    APOLY_E_DIVISION_BY_ZERO = 4,
    APOLY_E_CAP_EXCEEDED = 5,
    APOLY_E_INVARIANT = 6,
    APOLY_E_VERIFICATION = 7,
    APOLY_E_BUFFER_TOO_SMALL = 8,
    APOLY_E_INTERNAL = 9
} apoly_status;

typedef enum apoly_method {
    APOLY_METHOD_FORMULA = 0,
    APOLY_METHOD_POLY_ORACLE = 1,
    APOLY_METHOD_ELEMENT_ORACLE = 2
} apoly_method;

typedef struct apoly_context apoly_context;
typedef struct apoly_field apoly_field;
typedef struct apoly_tower apoly_tower;
typedef struct apoly_poly apoly_poly;
typedef struct apoly_poly_list apoly_poly_list;
typedef struct apoly_report apoly_report;

APOLY_API const char* apoly_version(void);
APOLY_API const char* apoly_status_string(apoly_status status);
/* Message of the most recent failing call on this thread ("" if none). */
APOLY_API const char* apoly_last_error(void);

/* Context: carries the exhaustive-work cap (log2 of iterations, default 24). */
APOLY_API apoly_status apoly_context_create(apoly_context** out);
APOLY_API void apoly_context_destroy(apoly_context* ctx);
APOLY_API apoly_status apoly_context_set_cap(apoly_context* ctx, unsigned log2_cap);
APOLY_API unsigned apoly_context_cap(const apoly_context* ctx);

/* F_{2^m}, 1 <= m <= 63, with the smallest irreducible modulus. */
APOLY_API apoly_status apoly_field_create(unsigned m, apoly_field** out);
APOLY_API void apoly_field_destroy(apoly_field* field);
APOLY_API unsigned apoly_field_degree(const apoly_field* field);
/* Modulus bits including the leading 1 << m. */
APOLY_API uint64_t apoly_field_modulus(const apoly_field* field);
APOLY_API apoly_status apoly_field_add(const apoly_field* field, uint64_t a, uint64_t b, uint64_t* out);
APOLY_API apoly_status apoly_field_mul(const apoly_field* field, uint64_t a, uint64_t b, uint64_t* out);
APOLY_API apoly_status apoly_field_inv(const apoly_field* field, uint64_t a, uint64_t* out);
APOLY_API apoly_status apoly_field_trace(const apoly_field* field, uint64_t a, int* out);

/* F_{q^n} = F_q[w]/(g), q = 2^r. Elements are "c0,c1,...,c_{n-1}". */
APOLY_API apoly_status apoly_tower_create(const apoly_context* ctx, unsigned r, unsigned n, apoly_tower** out);
APOLY_API void apoly_tower_destroy(apoly_tower* tower);
APOLY_API apoly_status apoly_tower_modulus(const apoly_tower* tower, char* buf, size_t len, size_t* needed);
APOLY_API apoly_status apoly_tower_traces(const apoly_tower* tower, const char* element, uint64_t* relative,
                                          int* absolute);

/* Polynomials over a field. */
APOLY_API apoly_status apoly_poly_parse(const apoly_field* field, const char* text, apoly_poly** out);
APOLY_API void apoly_poly_destroy(apoly_poly* poly);
/* -1 for the zero polynomial. */
APOLY_API int apoly_poly_degree(const apoly_poly* poly);
APOLY_API apoly_status apoly_poly_format(const apoly_poly* poly, char* buf, size_t len, size_t* needed);
APOLY_API apoly_status apoly_poly_is_irreducible(const apoly_poly* poly, int* out);
APOLY_API apoly_status apoly_poly_is_self_reciprocal(const apoly_poly* poly, int* out);
APOLY_API apoly_status apoly_poly_is_a_polynomial(const apoly_poly* poly, int* out);
APOLY_API apoly_status apoly_poly_reciprocal(const apoly_poly* poly, apoly_poly** out);
APOLY_API apoly_status apoly_poly_q_transform(const apoly_poly* poly, apoly_poly** out);

APOLY_API size_t apoly_poly_list_size(const apoly_poly_list* list);
APOLY_API apoly_status apoly_poly_list_get(const apoly_poly_list* list, size_t index, char* buf, size_t len,
                                           size_t* needed);
APOLY_API void apoly_poly_list_destroy(apoly_poly_list* list);

/* Number of A-polynomials of degree n over F_{2^r}, as a decimal string. */
APOLY_API apoly_status apoly_count(const apoly_context* ctx, unsigned r, unsigned n, apoly_method method, char* buf,
                                   size_t len, size_t* needed);
APOLY_API apoly_status apoly_enumerate(const apoly_context* ctx, unsigned r, unsigned n, apoly_poly_list** out);
/* f_0 = seed, f_{m+1} = f_m^Q for m < iterations, every iterate verified.
   APOLY_E_INVALID_ARGUMENT if the seed is not an A-polynomial,
   APOLY_E_VERIFICATION if an iterate fails. */
APOLY_API apoly_status apoly_construct(const apoly_poly* seed, unsigned iterations, apoly_poly_list** out);

/* Closed forms, as decimal strings. */
APOLY_API apoly_status apoly_lucas(uint64_t t, char* buf, size_t len, size_t* needed);
APOLY_API apoly_status apoly_place_count(unsigned r, unsigned n, char* buf, size_t len, size_t* needed);
APOLY_API apoly_status apoly_inert_count(unsigned r, unsigned n, char* buf, size_t len, size_t* needed);
APOLY_API apoly_status apoly_existence(unsigned r, unsigned n, int* out);

/* Degree-1 places of y^2 + y = x + 1/x over F_{q^n}, by scanning. */
APOLY_API apoly_status apoly_rational_places(const apoly_context* ctx, unsigned r, unsigned n, uint64_t* out);

/* K(chi_c^{(n)}; a, b) by direct summation. */
APOLY_API apoly_status apoly_kloosterman(const apoly_context* ctx, unsigned r, unsigned n, uint64_t a, uint64_t b,
                                         uint64_t chi, int64_t* out);
/* (1/q^2) sum_u chi(u) sum_{a+b=u} K(chi^{(n)}; a, b), as a decimal string. */
APOLY_API apoly_status apoly_kloosterman_average(const apoly_context* ctx, unsigned r, unsigned n, uint64_t chi,
                                                 char* buf, size_t len, size_t* needed);

/* Verification suites: "kloosterman", "curve", "identity", "bound",
   "existence", "oracles". Zero fields select the suite defaults. A suite that
   ran to completion returns APOLY_OK whether or not it passed. */
typedef struct apoly_verify_params {
    unsigned r;
    unsigned max_r;
    unsigned max_n;
    unsigned max_rn;
    unsigned max_t;
    unsigned max_chars;
} apoly_verify_params;

APOLY_API apoly_status apoly_verify(const apoly_context* ctx, const char* suite, const apoly_verify_params* params,
                                    apoly_report** out);
APOLY_API int apoly_report_passed(const apoly_report* report);
APOLY_API size_t apoly_report_cases(const apoly_report* report);
/* JSON object with the suite's summary and failures; owned by the report. */
APOLY_API const char* apoly_report_detail_json(const apoly_report* report);
APOLY_API void apoly_report_destroy(apoly_report* report);

#ifdef __cplusplus
}
#endif

#endif
