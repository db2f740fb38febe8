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

#include "apoly/suites.hpp"

#include <array>

#include "apoly/apolynomial.hpp"
#include "apoly/charsums.hpp"
#include "apoly/counting.hpp"
#include "apoly/curve.hpp"

namespace apoly {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxListedFailures = 64;

class Collector {
   public:
    void ok() { ++cases_; }
    void fail(json what)
    {
        ++cases_;
        pass_ = false;
        if (failures_.size() < kMaxListedFailures) failures_.push_back(std::move(what));
    }

    SuiteOutcome finish(json detail = json::object())
    {
        SuiteOutcome out;
        out.pass = pass_;
        out.cases = cases_;
        out.detail = std::move(detail);
        out.detail["failures"] = std::move(failures_);
        return out;
    }

   private:
    bool pass_ = true;
    std::size_t cases_ = 0;
    json failures_ = json::array();
};

unsigned or_default(unsigned v, unsigned fallback) { return v == 0 ? fallback : v; }

}  // namespace

SuiteOutcome suite_identity(unsigned max_t)
{
    Collector c;
    for (std::uint64_t t = 1; t <= max_t; ++t) {
        const BigInt s = lucas_s(t);
        try {
            const BigInt rhs = niederreiter_rhs(t);
            const bool bounded = s * s <= 4 * pow2(t);
            if (rhs == s && bounded)
                c.ok();
            else
                c.fail({{"t", t}, {"lucas", to_decimal(s)}, {"binomial", to_decimal(rhs)}, {"bounded", bounded}});
        } catch (const Error& e) {
            c.fail({{"t", t}, {"error", e.what()}});
        }
    }
    return c.finish({{"max_t", max_t}});
}

SuiteOutcome suite_existence(unsigned max_r, unsigned max_n)
{
    Collector c;
    json exceptions = json::array();
    for (unsigned r = 1; r <= max_r; ++r)
        for (unsigned n = 1; n <= max_n; ++n) {
            const bool exists = existence(r, n);
            const bool expected = !(r == 1 && n == 3);
            if (!exists) exceptions.push_back({r, n});
            if (exists == expected)
                c.ok();
            else
                c.fail({{"r", r}, {"n", n}, {"count", to_decimal(count_formula(r, n))}});
        }
    return c.finish({{"max_r", max_r}, {"max_n", max_n}, {"exceptions", exceptions}});
}

SuiteOutcome suite_bound(unsigned max_r, unsigned max_n)
{
    Collector c;
    std::size_t stated_failures = 0;
    json corrected_failures = json::array();
    for (unsigned r = 1; r <= max_r; ++r)
        for (unsigned n = 1; n <= max_n; ++n) {
            const BoundResult b = bound_check(r, n);
            if (b.holds) {
                c.ok();
            } else {
                ++stated_failures;
                c.fail({{"r", r}, {"n", n}, {"lhs", b.lhs}, {"rhs", b.rhs_decimal}});
            }
            const BoundResult fixed = corrected_bound_check(r, n);
            if (!fixed.holds) corrected_failures.push_back({{"r", r}, {"n", n}, {"lhs", fixed.lhs}});
        }

    json detail = {{"max_r", max_r},
                   {"max_n", max_n},
                   {"stated_failures", stated_failures},
                   {"corrected_failures", corrected_failures}};
    // |4n A_1(n) / 2^n - 1| should shrink along n = 12, 16, 20, 24.
    if (max_n >= 24) {
        constexpr std::array<unsigned, 4> ns{12, 16, 20, 24};
        json ratios = json::array();
        bool monotone = true;
        mpq_class prev = -1;
        for (unsigned n : ns) {
            mpq_class ratio(BigInt(4 * n) * count_formula(1, n) - pow2(n), pow2(n));
            ratio.canonicalize();
            ratio = abs(ratio);
            if (prev >= 0 && !(ratio < prev)) monotone = false;
            prev = ratio;
            ratios.push_back({{"n", n}, {"ratio", ratio.get_str()}, {"approx", ratio.get_d()}});
        }
        detail["r1_ratios"] = ratios;
        detail["r1_monotone"] = monotone;
        if (monotone)
            c.ok();
        else
            c.fail({{"check", "r=1 ratio monotonicity"}, {"ratios", ratios}});
    }
    return c.finish(detail);
}

SuiteOutcome suite_curve(unsigned max_rn, const WorkCap& cap)
{
    Collector c;
    for (unsigned r = 1; r <= max_rn; ++r)
        for (unsigned n = 1; r * n <= max_rn; ++n) {
            try {
                rational_places(r, n, cap);  // throws on a zeta mismatch
                const BigInt deg = degree_place_count(r, n, cap);
                const BigInt b = place_count_B(r, n);
                if (deg == b)
                    c.ok();
                else
                    c.fail({{"r", r}, {"n", n}, {"degree_places", to_decimal(deg)}, {"B", to_decimal(b)}});
            } catch (const Error& e) {
                if (e.code() == ErrorCode::cap_exceeded) throw;
                c.fail({{"r", r}, {"n", n}, {"error", e.what()}});
            }
        }
    return c.finish({{"max_rn", max_rn}});
}

SuiteOutcome suite_oracles(unsigned max_rn, unsigned max_r, unsigned max_n, const WorkCap& cap)
{
    Collector c;
    for (unsigned r = 1; r <= max_rn; ++r)
        for (unsigned n = 1; r * n <= max_rn; ++n) {
            const BigInt formula = count_formula(r, n);
            const BigInt polys = from_u64(count_via_polys(r, n, cap));
            const BigInt elems = from_u64(count_via_elements(r, n, cap));
            if (formula == polys && polys == elems)
                c.ok();
            else
                c.fail({{"r", r},
                        {"n", n},
                        {"formula", to_decimal(formula)},
                        {"poly_oracle", to_decimal(polys)},
                        {"element_oracle", to_decimal(elems)}});
        }
    for (unsigned r = 1; r <= max_r; ++r)
        for (unsigned n = 1; n <= max_n; ++n) {
            const BigInt a = count_formula(r, n);
            const BigInt inert = inert_count_C(r, n);
            if (inert == 2 * a && a >= 0)
                c.ok();
            else
                c.fail({{"r", r}, {"n", n}, {"A", to_decimal(a)}, {"C", to_decimal(inert)}});
        }
    return c.finish({{"max_rn", max_rn}, {"max_r", max_r}, {"max_n", max_n}});
}

SuiteOutcome suite_kloosterman(unsigned r, unsigned max_n, unsigned max_rn, unsigned max_chars, const WorkCap& cap)
{
    Collector c;
    json cells = json::array();
    const auto run_cell = [&](unsigned rr, unsigned n) {
        const KloostermanVerification v = verify_kloosterman_identity(rr, n, cap, max_chars);
        json lhs_values = json::array();
        for (const auto& pc : v.per_character) {
            const std::string s = to_decimal(pc.lhs);
            if (lhs_values.empty() || lhs_values.back() != s) lhs_values.push_back(s);
            if (pc.pass)
                c.ok();
            else
                c.fail({{"r", rr}, {"n", n}, {"chi", pc.chi.twist}, {"lhs", s}, {"rhs", to_decimal(v.rhs)}});
        }
        cells.push_back({{"r", rr},
                         {"n", n},
                         {"rhs", to_decimal(v.rhs)},
                         {"lhs", lhs_values},
                         {"characters", v.per_character.size()},
                         {"sampled", v.sampled},
                         {"pass", v.all_pass()}});
    };
    if (r != 0) {
        for (unsigned n = 1; n <= max_n; ++n) run_cell(r, n);
    } else {
        for (unsigned rr = 1; rr <= max_rn; ++rr)
            for (unsigned n = 1; rr * n <= max_rn; ++n) run_cell(rr, n);
    }
    return c.finish({{"cells", cells}});
}

bool is_suite_name(std::string_view name)
{
    return name == "kloosterman" || name == "curve" || name == "identity" || name == "bound" ||
           name == "existence" || name == "oracles";
}

SuiteOutcome run_suite(std::string_view name, const SuiteParams& p)
{
    if (name == "identity") return suite_identity(or_default(p.max_t, 200));
    if (name == "existence") return suite_existence(or_default(p.max_r, 8), or_default(p.max_n, 64));
    if (name == "bound") return suite_bound(or_default(p.max_r, 8), or_default(p.max_n, 64));
    if (name == "curve") return suite_curve(or_default(p.max_rn, 20), p.cap);
    if (name == "oracles")
        return suite_oracles(or_default(p.max_rn, 20), or_default(p.max_r, 8), or_default(p.max_n, 64), p.cap);
    if (name == "kloosterman")
        return suite_kloosterman(p.r, or_default(p.max_n, 12), or_default(p.max_rn, 16), p.max_chars, p.cap);
    raise(ErrorCode::invalid_argument, "unknown suite '" + std::string(name) + "'");
}

}  // namespace apoly
