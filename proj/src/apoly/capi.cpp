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

#include <apoly/apoly.h>

#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "apoly/apolynomial.hpp"
#include "apoly/charsums.hpp"
#include "apoly/counting.hpp"
#include "apoly/curve.hpp"
#include "apoly/field.hpp"
#include "apoly/poly.hpp"
#include "apoly/suites.hpp"
#include "apoly/tower.hpp"

struct apoly_context {
    apoly::WorkCap cap;
};

struct apoly_field {
    apoly::Field field;
};

struct apoly_tower {
    apoly::Tower tower;
};

struct apoly_poly {
    apoly::Poly poly;
};

struct apoly_poly_list {
    std::vector<std::string> items;
};

struct apoly_report {
    bool passed = false;
    std::size_t cases = 0;
    std::string detail;
};

namespace {

thread_local std::string last_error;

apoly_status to_status(apoly::ErrorCode code)
{
    using apoly::ErrorCode;
    switch (code) {
        case ErrorCode::invalid_argument: return APOLY_E_INVALID_ARGUMENT;
        case ErrorCode::parse_error: return APOLY_E_PARSE;
        case ErrorCode::domain_error: return APOLY_E_DOMAIN;
        case ErrorCode::division_by_zero: return APOLY_E_DIVISION_BY_ZERO;
        case ErrorCode::cap_exceeded: return APOLY_E_CAP_EXCEEDED;
        case ErrorCode::invariant_violation: return APOLY_E_INVARIANT;
        case ErrorCode::verification_failure: return APOLY_E_VERIFICATION;
    }
    return APOLY_E_INTERNAL;
}

template <class Fn>
apoly_status guarded(Fn&& fn) noexcept
{
    try {
        last_error.clear();
        fn();
        return APOLY_OK;
    } catch (const apoly::Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return APOLY_E_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return APOLY_E_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return APOLY_E_INTERNAL;
    }
}

void need(const void* p, const char* what)
{
    if (p == nullptr) apoly::raise(apoly::ErrorCode::invalid_argument, std::string(what) + " is NULL");
}

apoly_status string_result(const std::string& s, char* buf, std::size_t len, std::size_t* needed) noexcept
{
    if (needed != nullptr) *needed = s.size() + 1;
    if (buf == nullptr) return APOLY_OK;
    if (len < s.size() + 1) {
        last_error = "buffer too small: need " + std::to_string(s.size() + 1) + " bytes";
        return APOLY_E_BUFFER_TOO_SMALL;
    }
    s.copy(buf, s.size());
    buf[s.size()] = '\0';
    return APOLY_OK;
}

/// Runs `compute` under the guard, then hands its string to string_result.
template <class Fn>
apoly_status string_call(char* buf, std::size_t len, std::size_t* needed, Fn&& compute) noexcept
{
    std::string value;
    const apoly_status st = guarded([&] { value = compute(); });
    if (st != APOLY_OK) return st;
    return string_result(value, buf, len, needed);
}

apoly::WorkCap cap_of(const apoly_context* ctx) { return ctx != nullptr ? ctx->cap : apoly::WorkCap{}; }

}  // namespace

extern "C" {

const char* apoly_version(void) { return "1.0.0"; }

const char* apoly_status_string(apoly_status status)
{
    switch (status) {
        case APOLY_OK: return "ok";
        case APOLY_E_INVALID_ARGUMENT: return "invalid argument";
        case APOLY_E_PARSE: return "parse error";
        case APOLY_E_DOMAIN: return "domain error";
        case APOLY_E_DIVISION_BY_ZERO: return "division by zero";
        case APOLY_E_CAP_EXCEEDED: return "resource cap exceeded";
        case APOLY_E_INVARIANT: return "invariant violation";
        case APOLY_E_VERIFICATION: return "verification failure";
        case APOLY_E_BUFFER_TOO_SMALL: return "buffer too small";
        case APOLY_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* apoly_last_error(void) { return last_error.c_str(); }

apoly_status apoly_context_create(apoly_context** out)
{
    return guarded([&] {
        need(out, "out");
        *out = new apoly_context{};
    });
}

void apoly_context_destroy(apoly_context* ctx) { delete ctx; }

apoly_status apoly_context_set_cap(apoly_context* ctx, unsigned log2_cap)
{
    return guarded([&] {
        need(ctx, "context");
        apoly::require(log2_cap <= 63, apoly::ErrorCode::invalid_argument, "cap must be at most 63");
        ctx->cap = apoly::WorkCap(log2_cap);
    });
}

unsigned apoly_context_cap(const apoly_context* ctx) { return cap_of(ctx).log2_limit(); }

apoly_status apoly_field_create(unsigned m, apoly_field** out)
{
    return guarded([&] {
        need(out, "out");
        *out = new apoly_field{apoly::Field::binary(m)};
    });
}

void apoly_field_destroy(apoly_field* field) { delete field; }

unsigned apoly_field_degree(const apoly_field* field) { return field != nullptr ? field->field.degree() : 0; }

uint64_t apoly_field_modulus(const apoly_field* field) { return field != nullptr ? field->field.modulus() : 0; }

apoly_status apoly_field_add(const apoly_field* field, uint64_t a, uint64_t b, uint64_t* out)
{
    return guarded([&] {
        need(field, "field");
        need(out, "out");
        field->field.check(a);
        field->field.check(b);
        *out = apoly::Field::add(a, b);
    });
}

apoly_status apoly_field_mul(const apoly_field* field, uint64_t a, uint64_t b, uint64_t* out)
{
    return guarded([&] {
        need(field, "field");
        need(out, "out");
        field->field.check(a);
        field->field.check(b);
        *out = field->field.mul(a, b);
    });
}

apoly_status apoly_field_inv(const apoly_field* field, uint64_t a, uint64_t* out)
{
    return guarded([&] {
        need(field, "field");
        need(out, "out");
        *out = field->field.inv(a);
    });
}

apoly_status apoly_field_trace(const apoly_field* field, uint64_t a, int* out)
{
    return guarded([&] {
        need(field, "field");
        need(out, "out");
        field->field.check(a);
        *out = static_cast<int>(field->field.trace(a));
    });
}

apoly_status apoly_tower_create(const apoly_context* ctx, unsigned r, unsigned n, apoly_tower** out)
{
    return guarded([&] {
        need(out, "out");
        *out = new apoly_tower{apoly::Tower::build(r, n, cap_of(ctx))};
    });
}

void apoly_tower_destroy(apoly_tower* tower) { delete tower; }

apoly_status apoly_tower_modulus(const apoly_tower* tower, char* buf, size_t len, size_t* needed)
{
    return string_call(buf, len, needed, [&] {
        need(tower, "tower");
        return apoly::format_poly(tower->tower.modulus());
    });
}

apoly_status apoly_tower_traces(const apoly_tower* tower, const char* element, uint64_t* relative, int* absolute)
{
    return guarded([&] {
        need(tower, "tower");
        need(element, "element");
        const apoly::TElem x = tower->tower.parse(element);
        if (relative != nullptr) *relative = tower->tower.relative_trace(x);
        if (absolute != nullptr) *absolute = static_cast<int>(tower->tower.absolute_trace(x));
    });
}

apoly_status apoly_poly_parse(const apoly_field* field, const char* text, apoly_poly** out)
{
    return guarded([&] {
        need(field, "field");
        need(text, "text");
        need(out, "out");
        *out = new apoly_poly{apoly::parse_poly(field->field, text)};
    });
}

void apoly_poly_destroy(apoly_poly* poly) { delete poly; }

int apoly_poly_degree(const apoly_poly* poly) { return poly != nullptr ? poly->poly.degree() : -1; }

apoly_status apoly_poly_format(const apoly_poly* poly, char* buf, size_t len, size_t* needed)
{
    return string_call(buf, len, needed, [&] {
        need(poly, "poly");
        return apoly::format_poly(poly->poly);
    });
}

apoly_status apoly_poly_is_irreducible(const apoly_poly* poly, int* out)
{
    return guarded([&] {
        need(poly, "poly");
        need(out, "out");
        *out = apoly::is_irreducible(poly->poly) ? 1 : 0;
    });
}

apoly_status apoly_poly_is_self_reciprocal(const apoly_poly* poly, int* out)
{
    return guarded([&] {
        need(poly, "poly");
        need(out, "out");
        *out = apoly::is_self_reciprocal(poly->poly) ? 1 : 0;
    });
}

apoly_status apoly_poly_is_a_polynomial(const apoly_poly* poly, int* out)
{
    return guarded([&] {
        need(poly, "poly");
        need(out, "out");
        *out = apoly::is_a_polynomial(poly->poly) ? 1 : 0;
    });
}

apoly_status apoly_poly_reciprocal(const apoly_poly* poly, apoly_poly** out)
{
    return guarded([&] {
        need(poly, "poly");
        need(out, "out");
        *out = new apoly_poly{apoly::reciprocal(poly->poly)};
    });
}

apoly_status apoly_poly_q_transform(const apoly_poly* poly, apoly_poly** out)
{
    return guarded([&] {
        need(poly, "poly");
        need(out, "out");
        *out = new apoly_poly{apoly::q_transform(poly->poly)};
    });
}

size_t apoly_poly_list_size(const apoly_poly_list* list) { return list != nullptr ? list->items.size() : 0; }

apoly_status apoly_poly_list_get(const apoly_poly_list* list, size_t index, char* buf, size_t len, size_t* needed)
{
    return string_call(buf, len, needed, [&] {
        need(list, "list");
        apoly::require(index < list->items.size(), apoly::ErrorCode::invalid_argument, "list index out of range");
        return list->items[index];
    });
}

void apoly_poly_list_destroy(apoly_poly_list* list) { delete list; }

apoly_status apoly_count(const apoly_context* ctx, unsigned r, unsigned n, apoly_method method, char* buf,
                         size_t len, size_t* needed)
{
    return string_call(buf, len, needed, [&]() -> std::string {
        switch (method) {
            case APOLY_METHOD_FORMULA: return apoly::to_decimal(apoly::count_formula(r, n));
            case APOLY_METHOD_POLY_ORACLE: return std::to_string(apoly::count_via_polys(r, n, cap_of(ctx)));
            case APOLY_METHOD_ELEMENT_ORACLE: return std::to_string(apoly::count_via_elements(r, n, cap_of(ctx)));
        }
        apoly::raise(apoly::ErrorCode::invalid_argument, "unknown counting method");
    });
}

apoly_status apoly_enumerate(const apoly_context* ctx, unsigned r, unsigned n, apoly_poly_list** out)
{
    return guarded([&] {
        need(out, "out");
        auto list = std::make_unique<apoly_poly_list>();
        for (const auto& f : apoly::enumerate_a_polynomials(r, n, cap_of(ctx)))
            list->items.push_back(apoly::format_poly(f));
        *out = list.release();
    });
}

apoly_status apoly_construct(const apoly_poly* seed, unsigned iterations, apoly_poly_list** out)
{
    return guarded([&] {
        need(seed, "seed");
        need(out, "out");
        const apoly::ASeq seq = apoly::q_iterate(seed->poly, iterations);
        auto list = std::make_unique<apoly_poly_list>();
        for (const auto& f : seq.iterates) list->items.push_back(apoly::format_poly(f));
        *out = list.release();
    });
}

apoly_status apoly_lucas(uint64_t t, char* buf, size_t len, size_t* needed)
{
    return string_call(buf, len, needed, [&] { return apoly::to_decimal(apoly::lucas_s(t)); });
}

apoly_status apoly_place_count(unsigned r, unsigned n, char* buf, size_t len, size_t* needed)
{
    return string_call(buf, len, needed, [&] { return apoly::to_decimal(apoly::place_count_B(r, n)); });
}

apoly_status apoly_inert_count(unsigned r, unsigned n, char* buf, size_t len, size_t* needed)
{
    return string_call(buf, len, needed, [&] { return apoly::to_decimal(apoly::inert_count_C(r, n)); });
}

apoly_status apoly_existence(unsigned r, unsigned n, int* out)
{
    return guarded([&] {
        need(out, "out");
        *out = apoly::existence(r, n) ? 1 : 0;
    });
}

apoly_status apoly_rational_places(const apoly_context* ctx, unsigned r, unsigned n, uint64_t* out)
{
    return guarded([&] {
        need(out, "out");
        *out = apoly::rational_places(r, n, cap_of(ctx));
    });
}

apoly_status apoly_kloosterman(const apoly_context* ctx, unsigned r, unsigned n, uint64_t a, uint64_t b,
                               uint64_t chi, int64_t* out)
{
    return guarded([&] {
        need(out, "out");
        const apoly::Tower tower = apoly::Tower::build(r, n, cap_of(ctx));
        *out = apoly::kloosterman(tower, a, b, apoly::Character{chi}, cap_of(ctx)).get_si();
    });
}

apoly_status apoly_kloosterman_average(const apoly_context* ctx, unsigned r, unsigned n, uint64_t chi, char* buf,
                                       size_t len, size_t* needed)
{
    return string_call(buf, len, needed, [&] {
        const apoly::Tower tower = apoly::Tower::build(r, n, cap_of(ctx));
        tower.base().check(chi);
        return apoly::to_decimal(apoly::lhs_average(tower, apoly::Character{chi}, cap_of(ctx)));
    });
}

apoly_status apoly_verify(const apoly_context* ctx, const char* suite, const apoly_verify_params* params,
                          apoly_report** out)
{
    return guarded([&] {
        need(suite, "suite");
        need(out, "out");
        apoly::require(apoly::is_suite_name(suite), apoly::ErrorCode::invalid_argument,
                       "unknown suite '" + std::string(suite) + "'");
        apoly::SuiteParams p;
        if (params != nullptr) {
            p.r = params->r;
            p.max_r = params->max_r;
            p.max_n = params->max_n;
            p.max_rn = params->max_rn;
            p.max_t = params->max_t;
            p.max_chars = params->max_chars;
        }
        p.cap = cap_of(ctx);
        const apoly::SuiteOutcome outcome = apoly::run_suite(suite, p);
        *out = new apoly_report{outcome.pass, outcome.cases, outcome.detail.dump()};
    });
}

int apoly_report_passed(const apoly_report* report) { return report != nullptr && report->passed ? 1 : 0; }

size_t apoly_report_cases(const apoly_report* report) { return report != nullptr ? report->cases : 0; }

const char* apoly_report_detail_json(const apoly_report* report)
{
    return report != nullptr ? report->detail.c_str() : "";
}

void apoly_report_destroy(apoly_report* report) { delete report; }

}  // extern "C"
