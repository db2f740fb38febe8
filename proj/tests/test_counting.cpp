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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <cstdlib>
#include <vector>

#include "apoly/counting.hpp"
#include "apoly/error.hpp"
#include "apoly/numtheory.hpp"

using namespace apoly;

TEST_CASE("Lucas sequence")
{
    CHECK(lucas_s(0) == 2);
    CHECK(lucas_s(1) == -1);
    CHECK(lucas_s(2) == -3);
    CHECK(lucas_s(3) == 5);
    CHECK(lucas_s(4) == 1);
    // Power sums of the roots of X^2 + X + 2, in double precision.
    const std::complex<double> alpha(-0.5, std::sqrt(7.0) / 2);
    for (unsigned t = 0; t <= 40; ++t) {
        const double direct = 2 * std::pow(alpha, static_cast<double>(t)).real();
        CHECK(lucas_s(t).get_d() == doctest::Approx(direct).epsilon(1e-9));
    }
    for (unsigned t = 0; t <= 200; ++t) CHECK(lucas_s(t) * lucas_s(t) <= 4 * pow2(t));
}

TEST_CASE("divisor functions")
{
    CHECK(moebius(1) == 1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(sigma0(9) == 3);
    CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(split_two_adic(40).k == 3);
    CHECK(split_two_adic(40).odd == 5);
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        int sum = 0;
        for (auto d : divisors(n)) sum += moebius(d);
        CHECK(sum == (n == 1 ? 1 : 0));
    }
    CHECK_THROWS_AS(divisors(0), Error);
}

TEST_CASE("closed-form counts")
{
    CHECK(count_formula(1, 3) == 0);
    CHECK(count_formula(1, 1) == 1);
    CHECK(count_formula(1, 2) == 1);
    CHECK(count_formula(2, 1) == 2);
    CHECK(place_count_B(1, 1) == 4);
    CHECK(place_count_B(1, 2) == 2);
    CHECK(place_count_B(2, 1) == 8);
    CHECK(inert_count_C(1, 1) == 2);
    CHECK(inert_count_C(1, 3) == 0);
    CHECK(inert_count_C(1, 4) == 2);
    CHECK(count_formula(1, 24) == 174822);
    CHECK_THROWS_AS(count_formula(0, 3), Error);
    CHECK_THROWS_AS(count_formula(1, 0), Error);
}

TEST_CASE("grid invariants for r <= 8, n <= 64")
{
    for (unsigned r = 1; r <= 8; ++r)
        for (unsigned n = 1; n <= 64; ++n) {
            CAPTURE(r);
            CAPTURE(n);
            const BigInt a = count_formula(r, n);
            CHECK(a >= 0);
            CHECK(inert_count_C(r, n) == 2 * a);
            CHECK(existence(r, n) == !(r == 1 && n == 3));
            CHECK(corrected_bound_check(r, n).holds);
        }
}

TEST_CASE("estimate examples")
{
    const BoundResult a = bound_check(1, 3);
    CHECK(a.holds);
    CHECK(a.lhs == "2/3");
    CHECK(std::atof(a.rhs_decimal.c_str()) == doctest::Approx((2.0 / 12) * (2 + 1 + 2 * std::sqrt(2.0))));
    const BoundResult b = bound_check(1, 1);
    CHECK(b.holds);
    CHECK(b.lhs == "1/2");
    CHECK(std::atof(b.rhs_decimal.c_str()) ==
          doctest::Approx(0.25 * (std::cbrt(2.0) + 1 + 2 * std::pow(2.0, 1.0 / 6))));
    CHECK(bound_check(2, 6).holds);
}

TEST_CASE("the estimate without the leading error term fails once 2^{rn/2} dominates")
{
    // A_1(8) = 9: |4 * 8 * 9 - 256| / 32 = 1, far above (2^{8/3} + 1 + 2 * 2^{4/3}) / 32.
    const BoundResult b = bound_check(1, 8);
    CHECK_FALSE(b.holds);
    CHECK(b.lhs == "1/1");
    CHECK(std::atof(b.rhs_decimal.c_str()) ==
          doctest::Approx((std::pow(2.0, 8.0 / 3) + 1 + 2 * std::pow(2.0, 4.0 / 3)) / 32));
    CHECK(corrected_bound_check(1, 8).holds);
    // Every cell up to n = 7 satisfies the stated form for r = 1.
    for (unsigned n = 1; n <= 7; ++n) CHECK(bound_check(1, n).holds);
}

TEST_CASE("r = 1 relative error shrinks along n = 12, 16, 20, 24")
{
    double prev = 1;
    for (unsigned n : {12U, 16U, 20U, 24U}) {
        const double ratio = std::abs(4.0 * n * count_formula(1, n).get_d() / std::pow(2.0, n) - 1);
        CHECK(ratio < prev);
        prev = ratio;
    }
}

TEST_CASE("existence")
{
    CHECK_FALSE(existence(1, 3));
    CHECK(existence(1, 7));
    CHECK(existence(4, 1));
}

TEST_CASE("binomial-sum identity")
{
    CHECK(niederreiter_rhs(1) == -1);
    CHECK(niederreiter_rhs(2) == -3);
    CHECK(niederreiter_rhs(3) == 5);
    for (std::uint64_t t = 1; t <= 200; ++t) CHECK(niederreiter_rhs(t) == lucas_s(t));
    CHECK_THROWS_AS(niederreiter_rhs(0), Error);
}

TEST_CASE("exact division refuses remainders")
{
    CHECK(exact_div(12, 4, "test") == 3);
    try {
        exact_div(13, 4, "test");
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invariant_violation);
    }
}
