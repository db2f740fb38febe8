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

#include <random>
#include <vector>

#include "apoly/error.hpp"
#include "apoly/poly.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace apoly;

namespace {

const Field F2 = Field::binary(1);
const Field F4 = Field::binary(2);

Poly p2(const char* text) { return parse_poly(F2, text); }
Poly p4(const char* text) { return parse_poly(F4, text); }

Poly random_poly(const Field& f, std::mt19937_64& rng, int max_deg)
{
    const int d = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 2)) - 1;
    std::vector<Elem> c(static_cast<std::size_t>(d + 1));
    for (auto& x : c) x = rng() & f.mask();
    return Poly(f, c);
}

template <class Fn>
ErrorCode code_of(Fn&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an apoly::Error");
    return ErrorCode::invariant_violation;
}

}  // namespace

TEST_CASE("representation")
{
    const Poly p(F4, {1, 2, 0, 0});
    CHECK(p.degree() == 1);
    CHECK(p.lead() == 2);
    CHECK_FALSE(p.is_monic());
    CHECK(p.monic() == p4("3,1"));  // (2T + 1) / 2 = T + 1/2 = T + 3
    CHECK(Poly(F4).degree() == -1);
    CHECK(Poly(F4, {0, 0}).is_zero());
    CHECK(Poly::monomial(F4, 3, 2) == p4("0,0,0,2"));
    CHECK(code_of([] { Poly(F4, {4}); }) == ErrorCode::invalid_argument);
}

TEST_CASE("text form")
{
    CHECK(format_poly(p4("2,1")) == "2,1");
    CHECK(format_poly(Poly(F4)) == "0");
    CHECK(p4("0").is_zero());
    CHECK(format_poly(p4("1,0,0")) == "1");
    CHECK(format_poly(p2(" 1, 1 ,1")) == "1,1,1");
    CHECK(code_of([] { p2("1,2"); }) == ErrorCode::parse_error);
    CHECK(code_of([] { p2(""); }) == ErrorCode::parse_error);
    CHECK(code_of([] { p2("1,,1"); }) == ErrorCode::parse_error);
    CHECK(code_of([] { p2("a"); }) == ErrorCode::parse_error);
}

TEST_CASE("arithmetic examples over F_2")
{
    CHECK(p2("1,1") * p2("1,1") == p2("1,0,1"));
    CHECK(gcd(p2("1,0,1"), p2("1,1")) == p2("1,1"));
    CHECK(powmod(p2("0,1"), 4, p2("1,1,1")) == p2("0,1"));
    CHECK(frobenius_mod(p2("0,1"), p2("1,1,1")) == p2("1,1"));
    CHECK(code_of([] { divrem(p2("1,1"), Poly(F2)); }) == ErrorCode::division_by_zero);
}

TEST_CASE("ring laws and division with remainder on random samples")
{
    std::mt19937_64 rng(42);
    for (unsigned r : {1U, 2U, 3U, 5U, 8U}) {
        const Field f = Field::binary(r);
        for (int i = 0; i < 200; ++i) {
            const Poly a = random_poly(f, rng, 9), b = random_poly(f, rng, 9), c = random_poly(f, rng, 9);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + a).is_zero());
            CHECK(a * Poly::monomial(f, 0) == a);
            if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
            if (b.is_zero()) continue;
            const DivRem qr = divrem(a, b);
            CHECK(qr.quot * b + qr.rem == a);
            CHECK(qr.rem.degree() < b.degree());
            const Poly g = gcd(a, b);
            CHECK(g.is_monic());
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());
            // powmod agrees with repeated multiplication.
            const Poly m = random_poly(f, rng, 5) + Poly::monomial(f, 6);
            Poly acc = Poly::monomial(f, 0) % m;
            for (int e = 0; e < 11; ++e) acc = (acc * a) % m;
            CHECK(powmod(a, 11, m) == acc);
        }
    }
}

TEST_CASE("irreducibility examples")
{
    CHECK(is_irreducible(p2("1,1,1")));
    CHECK_FALSE(is_irreducible(p2("1,0,1")));
    CHECK(is_irreducible(p2("1,1,1,1,1")));
    CHECK(is_irreducible(p4("2,1")));
    CHECK(is_irreducible(p4("1,2,1")));       // T^2 + zT + 1
    CHECK_FALSE(is_irreducible(p4("1,0,1")));  // (T + 1)^2
    CHECK(code_of([] { is_irreducible(p2("1")); }) == ErrorCode::invalid_argument);
}

TEST_CASE("Rabin agrees with trial division when q^deg <= 2^16")
{
    const props::Check c = props::rabin_vs_trial_division(16);
    INFO(c.failure);
    CHECK(c.ok);
}

TEST_CASE("monic irreducible counts follow the necklace formula for q^n <= 2^20")
{
    const props::Check c = props::irreducible_counts(20);
    INFO(c.failure);
    CHECK(c.ok);
}

TEST_CASE("reciprocal")
{
    CHECK(reciprocal(p2("1,1,1")) == p2("1,1,1"));
    CHECK(reciprocal(p4("2,1")) == p4("1,2"));
    CHECK(reciprocal(p2("1,1,0,1")) == p2("1,0,1,1"));
    CHECK(code_of([] { reciprocal(p2("0,1")); }) == ErrorCode::domain_error);
    CHECK(is_self_reciprocal(p2("1,1,1")));
    CHECK_FALSE(is_self_reciprocal(p2("1,1,0,1")));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        Poly a = random_poly(F4, rng, 8) + Poly::monomial(F4, 0, 1 + rng() % 3);
        if (a.coeff(0) == 0) continue;
        CHECK(reciprocal(reciprocal(a)) == a);
    }
}

TEST_CASE("Q-transform examples")
{
    CHECK(q_transform(p2("1,1")) == p2("1,1,1"));
    CHECK(q_transform(p2("1,1,1")) == p2("1,1,1,1,1"));
    CHECK(q_transform(p4("2,1")) == p4("1,2,1"));
    CHECK(code_of([] { q_transform(p4("2,2")); }) == ErrorCode::invalid_argument);
    CHECK(code_of([] { q_transform(p4("2")); }) == ErrorCode::invalid_argument);
}

TEST_CASE("Q-transform equals T^n f(T + 1/T) evaluated pointwise")
{
    // Check f^Q(t) = t^n f(t + 1/t) at every nonzero t of F_256.
    const Field big = Field::binary(8);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const Poly f = random_poly(big, rng, 6) + Poly::monomial(big, 7);
        const Poly g = q_transform(f);
        const auto eval = [&](const Poly& p, Elem x) {
            Elem acc = 0;
            for (int k = p.degree(); k >= 0; --k) acc = big.mul(acc, x) ^ p.coeff(static_cast<std::size_t>(k));
            return acc;
        };
        bool ok = true;
        for (Elem t = 1; t < big.order(); ++t) {
            const Elem s = t ^ big.inv(t);
            ok = ok && eval(g, t) == big.mul(big.pow(t, 7), eval(f, s));
        }
        CHECK(ok);
    }
}

TEST_CASE("Q-transform structure, exhaustive for deg <= 8 over F_2 and F_4")
{
    const props::Check c = props::q_transform_structure(8);
    INFO(c.failure);
    CHECK(c.ok);
    CHECK(c.cases == 16);
}

TEST_CASE("monic enumeration order")
{
    std::vector<std::string> seen;
    for_each_monic(F2, 1, WorkCap{}, [&](const Poly& p) { seen.push_back(format_poly(p)); });
    CHECK(seen == std::vector<std::string>{"0,1", "1,1"});
    seen.clear();
    for_each_monic(F2, 2, WorkCap{}, [&](const Poly& p) { seen.push_back(format_poly(p)); });
    CHECK(seen.size() == 4);
    seen.clear();
    for_each_monic(F4, 2, WorkCap{}, [&](const Poly& p) { seen.push_back(format_poly(p)); });
    CHECK(seen.size() == 16);
    CHECK(seen.front() == "0,0,1");
    CHECK(seen.back() == "3,3,1");
    CHECK(seen[1] == "1,0,1");  // a_0 varies fastest
    CHECK(code_of([] { for_each_monic(F4, 13, WorkCap{}, [](const Poly&) {}); }) == ErrorCode::cap_exceeded);
}
