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

// apoly: command-line front end over the C API. Every command prints one JSON
// object per line on stdout and a short human summary on stderr.
//
// Exit codes: 0 success / all checks passed, 1 verification failure,
// 2 usage error or invalid input, 3 exhaustive-work cap exceeded.

#include <apoly/apoly.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2, kCap = 3 };

/// Thrown out of a command when a C call fails; carries the status and message.
struct CallFailed {
    apoly_status status;
    std::string message;
};

void check(apoly_status s)
{
    if (s != APOLY_OK) throw CallFailed{s, apoly_last_error()};
}

int exit_code_for(apoly_status s)
{
    switch (s) {
        case APOLY_E_CAP_EXCEEDED:
            return kCap;
        case APOLY_E_INVALID_ARGUMENT:
        case APOLY_E_PARSE:
        case APOLY_E_DOMAIN:
        case APOLY_E_DIVISION_BY_ZERO:
            return kUsage;
        default:
            return kFailed;
    }
}

/// Runs the (buf, len, needed) protocol twice: once to size, once to fill.
template <typename Call>
std::string fetch_string(Call&& call)
{
    std::size_t needed = 0;
    check(call(nullptr, 0, &needed));
    std::string out(needed, '\0');
    check(call(out.data(), out.size(), &needed));
    out.resize(needed > 0 ? needed - 1 : 0);
    return out;
}

template <typename T, void (*Destroy)(T*)>
struct Deleter {
    void operator()(T* p) const noexcept { Destroy(p); }
};
using ContextPtr = std::unique_ptr<apoly_context, Deleter<apoly_context, apoly_context_destroy>>;
using FieldPtr = std::unique_ptr<apoly_field, Deleter<apoly_field, apoly_field_destroy>>;
using PolyPtr = std::unique_ptr<apoly_poly, Deleter<apoly_poly, apoly_poly_destroy>>;
using ListPtr = std::unique_ptr<apoly_poly_list, Deleter<apoly_poly_list, apoly_poly_list_destroy>>;
using ReportPtr = std::unique_ptr<apoly_report, Deleter<apoly_report, apoly_report_destroy>>;

std::vector<std::string> list_strings(const apoly_poly_list* list)
{
    std::vector<std::string> out;
    const std::size_t size = apoly_poly_list_size(list);
    out.reserve(size);
    for (std::size_t i = 0; i < size; ++i)
        out.push_back(fetch_string(
            [&](char* buf, std::size_t len, std::size_t* needed) { return apoly_poly_list_get(list, i, buf, len, needed); }));
    return out;
}

PolyPtr parse_poly(const apoly_field* field, const std::string& text)
{
    apoly_poly* p = nullptr;
    check(apoly_poly_parse(field, text.c_str(), &p));
    return PolyPtr(p);
}

FieldPtr make_field(unsigned r)
{
    apoly_field* f = nullptr;
    check(apoly_field_create(r, &f));
    return FieldPtr(f);
}

struct Options {
    unsigned r = 0;
    unsigned n = 0;
    std::string method = "formula";
    std::string seed;
    unsigned m = 0;
    std::string suite;
    apoly_verify_params verify{};
    std::optional<unsigned> cap;
};

/// Outcome of a command: the report to print plus the process exit code.
struct Result {
    json report;
    int exit = kOk;
    std::string summary;
};

const char* method_name(apoly_method m)
{
    switch (m) {
        case APOLY_METHOD_FORMULA:
            return "formula";
        case APOLY_METHOD_POLY_ORACLE:
            return "poly-oracle";
        case APOLY_METHOD_ELEMENT_ORACLE:
            return "element-oracle";
    }
    return "formula";
}

std::string count_with(const apoly_context* ctx, unsigned r, unsigned n, apoly_method m)
{
    return fetch_string([&](char* buf, std::size_t len, std::size_t* needed) {
        return apoly_count(ctx, r, n, m, buf, len, needed);
    });
}

Result cmd_count(const apoly_context* ctx, const Options& o)
{
    Result res;
    res.report["params"] = {{"r", o.r}, {"n", o.n}};
    res.report["method"] = o.method;
    if (o.method != "all") {
        apoly_method m = APOLY_METHOD_FORMULA;
        if (o.method == "poly-oracle") m = APOLY_METHOD_POLY_ORACLE;
        if (o.method == "element-oracle") m = APOLY_METHOD_ELEMENT_ORACLE;
        const std::string v = count_with(ctx, o.r, o.n, m);
        res.report["value"] = v;
        res.summary = "A_" + std::to_string(o.r) + "(" + std::to_string(o.n) + ") = " + v + " (" + o.method + ")";
        return res;
    }
    json values = json::object();
    std::vector<std::string> seen;
    for (apoly_method m : {APOLY_METHOD_FORMULA, APOLY_METHOD_POLY_ORACLE, APOLY_METHOD_ELEMENT_ORACLE}) {
        seen.push_back(count_with(ctx, o.r, o.n, m));
        values[method_name(m)] = seen.back();
    }
    const bool agree = seen[0] == seen[1] && seen[1] == seen[2];
    res.report["values"] = values;
    if (agree) res.report["value"] = seen[0];
    res.report["verdict"] = agree ? "pass" : "fail";
    res.exit = agree ? kOk : kFailed;
    res.summary = "A_" + std::to_string(o.r) + "(" + std::to_string(o.n) + "): formula " + seen[0] + ", poly-oracle " +
                  seen[1] + ", element-oracle " + seen[2] + (agree ? " -- agree" : " -- MISMATCH");
    return res;
}

Result cmd_enumerate(const apoly_context* ctx, const Options& o)
{
    Result res;
    res.report["params"] = {{"r", o.r}, {"n", o.n}};
    res.report["method"] = "scan";
    apoly_poly_list* raw = nullptr;
    check(apoly_enumerate(ctx, o.r, o.n, &raw));
    const ListPtr list(raw);
    const auto polys = list_strings(list.get());
    res.report["values"] = polys;
    res.summary = std::to_string(polys.size()) + " A-polynomial(s) of degree " + std::to_string(o.n) +
                  " over F_2^" + std::to_string(o.r);
    return res;
}

Result cmd_construct(const apoly_context* ctx, const Options& o)
{
    Result res;
    json params = {{"r", o.r}, {"seed", o.seed}, {"m", o.m}};
    if (o.seed == "auto") params["n"] = o.n;
    res.report["params"] = params;
    res.report["method"] = "scan";

    const FieldPtr field = make_field(o.r);
    std::string seed_text = o.seed;
    if (o.seed == "auto") {
        if (o.n == 0) throw CallFailed{APOLY_E_INVALID_ARGUMENT, "--seed auto requires --n"};
        apoly_poly_list* raw = nullptr;
        check(apoly_enumerate(ctx, o.r, o.n, &raw));
        const ListPtr list(raw);
        if (apoly_poly_list_size(list.get()) == 0)
            throw CallFailed{APOLY_E_INVALID_ARGUMENT, "no A-polynomial of degree " + std::to_string(o.n) +
                                                           " over F_2^" + std::to_string(o.r) + " to seed with"};
        seed_text = list_strings(list.get()).front();
    }
    const PolyPtr seed = parse_poly(field.get(), seed_text);

    apoly_poly_list* raw = nullptr;
    check(apoly_construct(seed.get(), o.m, &raw));
    const ListPtr list(raw);
    const auto iterates = list_strings(list.get());

    // Re-check each iterate through the public predicates so the report
    // carries the confirmation rather than just the library's word for it.
    json detail = json::array();
    bool ok = true;
    const int n0 = apoly_poly_degree(seed.get());
    for (std::size_t m = 0; m < iterates.size(); ++m) {
        const PolyPtr p = parse_poly(field.get(), iterates[m]);
        int irreducible = 0, palindromic = 0;
        check(apoly_poly_is_irreducible(p.get(), &irreducible));
        check(apoly_poly_is_self_reciprocal(p.get(), &palindromic));
        const int degree = apoly_poly_degree(p.get());
        const bool good = irreducible && degree == (n0 << m) && (m == 0 || palindromic);
        ok = ok && good;
        detail.push_back({{"m", m}, {"degree", degree}, {"irreducible", irreducible != 0},
                          {"self_reciprocal", palindromic != 0}});
    }
    res.report["values"] = iterates;
    res.report["iterates"] = detail;
    res.exit = ok ? kOk : kFailed;
    res.summary = "constructed " + std::to_string(iterates.size()) + " iterate(s) from " + seed_text + ", final degree " +
                  std::to_string(n0 << (iterates.size() - 1)) + (ok ? "" : " -- VERIFICATION FAILED");
    return res;
}

Result cmd_verify(const apoly_context* ctx, const Options& o)
{
    Result res;
    json params = json::object();
    const auto put = [&](const char* key, unsigned v) {
        if (v != 0) params[key] = v;
    };
    put("r", o.verify.r);
    put("max_r", o.verify.max_r);
    put("max_n", o.verify.max_n);
    put("max_rn", o.verify.max_rn);
    put("max_t", o.verify.max_t);
    put("max_chars", o.verify.max_chars);
    res.report["params"] = params;
    res.report["suite"] = o.suite;
    res.report["method"] = o.suite == "identity" || o.suite == "existence" || o.suite == "bound" ? "formula" : "scan";

    apoly_report* raw = nullptr;
    check(apoly_verify(ctx, o.suite.c_str(), &o.verify, &raw));
    const ReportPtr report(raw);
    const bool passed = apoly_report_passed(report.get()) != 0;
    res.report["cases"] = apoly_report_cases(report.get());
    res.report["detail"] = json::parse(apoly_report_detail_json(report.get()));
    res.report["verdict"] = passed ? "pass" : "fail";
    res.exit = passed ? kOk : kFailed;
    res.summary = "verify " + o.suite + ": " + std::to_string(apoly_report_cases(report.get())) + " case(s), " +
                  (passed ? "PASS" : "FAIL");
    return res;
}

std::optional<unsigned> cap_from_env()
{
    const char* env = std::getenv("APOLY_CAP");
    if (env == nullptr || *env == '\0') return std::nullopt;
    try {
        std::size_t pos = 0;
        const unsigned long v = std::stoul(env, &pos);
        if (pos != std::string(env).size() || v > 63) throw std::invalid_argument("range");
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw CallFailed{APOLY_E_INVALID_ARGUMENT, std::string("APOLY_CAP must be an integer in [0, 63], got '") +
                                                       env + "'"};
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"A-polynomials over binary fields: counts, enumeration, construction and verification", "apoly"};
    app.require_subcommand(1);
    Options o;
    unsigned cap_flag = 0;
    auto* cap_opt = app.add_option("--cap", cap_flag, "log2 of the exhaustive-work limit (default 24; env APOLY_CAP)")
                        ->check(CLI::Range(0U, 63U));

    auto* count = app.add_subcommand("count", "Number of A-polynomials of degree n over F_2^r");
    count->add_option("--r", o.r, "base field degree")->required()->check(CLI::PositiveNumber);
    count->add_option("--n", o.n, "polynomial degree")->required()->check(CLI::PositiveNumber);
    count->add_option("--method", o.method, "formula | poly-oracle | element-oracle | all")
        ->check(CLI::IsMember({"formula", "poly-oracle", "element-oracle", "all"}));

    auto* enumerate = app.add_subcommand("enumerate", "List the A-polynomials of degree n over F_2^r");
    enumerate->add_option("--r", o.r, "base field degree")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--n", o.n, "polynomial degree")->required()->check(CLI::PositiveNumber);

    auto* construct = app.add_subcommand("construct", "Iterate the Q-transform from an A-polynomial seed");
    construct->add_option("--r", o.r, "base field degree")->required()->check(CLI::PositiveNumber);
    construct->add_option("--seed", o.seed, "seed polynomial \"a0,a1,...\" or \"auto\"")->required();
    construct->add_option("--n", o.n, "seed degree when --seed auto")->check(CLI::PositiveNumber);
    construct->add_option("--m", o.m, "number of Q-transform steps")->required();

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", o.suite, "kloosterman | curve | identity | bound | existence | oracles")
        ->required()
        ->check(CLI::IsMember({"kloosterman", "curve", "identity", "bound", "existence", "oracles"}));
    verify->add_option("--r", o.verify.r, "single base degree (kloosterman)");
    verify->add_option("--max-r", o.verify.max_r, "largest base degree");
    verify->add_option("--max-n", o.verify.max_n, "largest extension degree");
    verify->add_option("--max-rn", o.verify.max_rn, "largest total degree r*n");
    verify->add_option("--max-t", o.verify.max_t, "largest Lucas index (identity)");
    verify->add_option("--max-chars", o.verify.max_chars, "characters checked per cell (kloosterman)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const auto start = std::chrono::steady_clock::now();
    Result res;
    try {
        o.cap = *cap_opt ? std::optional<unsigned>(cap_flag) : cap_from_env();
        apoly_context* raw = nullptr;
        check(apoly_context_create(&raw));
        const ContextPtr ctx(raw);
        if (o.cap) check(apoly_context_set_cap(ctx.get(), *o.cap));

        if (command == "count")
            res = cmd_count(ctx.get(), o);
        else if (command == "enumerate")
            res = cmd_enumerate(ctx.get(), o);
        else if (command == "construct")
            res = cmd_construct(ctx.get(), o);
        else
            res = cmd_verify(ctx.get(), o);
    } catch (const CallFailed& f) {
        res.report["error"] = {{"status", apoly_status_string(f.status)}, {"message", f.message}};
        if (f.status == APOLY_E_VERIFICATION) res.report["verdict"] = "fail";
        res.exit = exit_code_for(f.status);
        res.summary = std::string("error: ") + f.message;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

    json line = {{"command", command}};
    line.update(res.report);
    line["elapsed_ms"] = elapsed;
    std::cout << line.dump() << '\n';
    std::cerr << res.summary << '\n';
    return res.exit;
}
