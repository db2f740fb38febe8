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

#include "apoly/field.hpp"

#include <array>
#include <charconv>
#include <mutex>
#include <utility>
#include <vector>

#include "apoly/error.hpp"
#include "apoly/numtheory.hpp"

namespace apoly {

namespace gf2x {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) noexcept
{
    const int d = degree(mod);
    std::uint64_t r = 0;
    while (b != 0) {
        if (b & 1U) r ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> d) & 1U) a ^= mod;
    }
    return r;
}

namespace {

std::uint64_t rem(std::uint64_t a, std::uint64_t b) noexcept
{
    const int db = degree(b);
    for (int da = degree(a); da >= db; da = degree(a)) a ^= b << (da - db);
    return a;
}

}  // namespace

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept
{
    while (b != 0) {
        a = rem(a, b);
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(std::uint64_t p) noexcept
{
    const int d = degree(p);
    if (d <= 0) return false;
    if (d == 1) return true;
    // frob[k] = x^{2^k} mod p
    std::array<std::uint64_t, 64> frob{};
    frob[0] = 2;
    for (int k = 1; k <= d; ++k) frob[k] = mulmod(frob[k - 1], frob[k - 1], p);
    if (frob[d] != 2) return false;
    for (unsigned ell : prime_factors(static_cast<std::uint64_t>(d)))
        if (gcd(p, frob[d / static_cast<int>(ell)] ^ 2U) != 1) return false;
    return true;
}

}  // namespace gf2x

std::uint64_t find_field_modulus(unsigned m)
{
    require(m >= 1 && m <= kMaxFieldDegree, ErrorCode::invalid_argument,
            "field degree must be in [1, 63], got " + std::to_string(m));
    const std::uint64_t lead = std::uint64_t{1} << m;
    for (std::uint64_t low = 0; low < lead; ++low)
        if (gf2x::is_irreducible(lead | low)) return lead | low;
    raise(ErrorCode::invariant_violation, "no irreducible polynomial of degree " + std::to_string(m));
}

struct Field::Impl {
    unsigned m = 0;
    std::uint64_t modulus = 0;
    Elem trace_mask = 0;
    // log/exp tables relative to a generator, only for m <= kTableDegree.
    std::vector<std::uint32_t> log;
    std::vector<Elem> exp;
};

namespace {

constexpr unsigned kTableDegree = 16;

Elem slow_pow(Elem a, std::uint64_t e, std::uint64_t mod)
{
    Elem r = 1;
    while (e != 0) {
        if (e & 1U) r = gf2x::mulmod(r, a, mod);
        a = gf2x::mulmod(a, a, mod);
        e >>= 1;
    }
    return r;
}

}  // namespace

Field Field::binary(unsigned m)
{
    require(m >= 1 && m <= kMaxFieldDegree, ErrorCode::invalid_argument,
            "field degree must be in [1, 63], got " + std::to_string(m));
    static std::mutex mu;
    static std::array<std::shared_ptr<const Impl>, kMaxFieldDegree + 1> cache;
    std::scoped_lock lock(mu);
    if (!cache[m]) cache[m] = make_impl(m);
    return Field(cache[m]);
}

std::shared_ptr<const Field::Impl> Field::make_impl(unsigned m)
{
    auto impl = std::make_shared<Impl>();
    impl->m = m;
    impl->modulus = find_field_modulus(m);
    const std::uint64_t mod = impl->modulus;

    for (unsigned i = 0; i < m; ++i) {
        Elem t = 0;
        Elem x = Elem{1} << i;
        for (unsigned k = 0; k < m; ++k) {
            t ^= x;
            x = gf2x::mulmod(x, x, mod);
        }
        if (t == 1) impl->trace_mask |= std::uint64_t{1} << i;
    }

    if (m <= kTableDegree) {
        const std::uint64_t n = (std::uint64_t{1} << m) - 1;
        const auto primes = prime_factors(n);
        Elem g = 1;
        for (Elem cand = (m == 1 ? 1 : 2); cand <= n; ++cand) {
            bool ok = true;
            for (auto p : primes)
                if (slow_pow(cand, n / p, mod) == 1) ok = false;
            if (ok) {
                g = cand;
                break;
            }
        }
        impl->log.assign(n + 1, 0);
        impl->exp.assign(2 * n, 0);
        Elem x = 1;
        for (std::uint64_t k = 0; k < n; ++k) {
            impl->exp[k] = x;
            impl->exp[k + n] = x;
            impl->log[x] = static_cast<std::uint32_t>(k);
            x = gf2x::mulmod(x, g, mod);
        }
    }
    return impl;
}

unsigned Field::degree() const noexcept { return impl_->m; }
std::uint64_t Field::modulus() const noexcept { return impl_->modulus; }
Elem Field::trace_mask() const noexcept { return impl_->trace_mask; }

void Field::check(Elem a) const
{
    if (!contains(a))
        raise(ErrorCode::invalid_argument,
              "value " + std::to_string(a) + " is not an element of F_2^" + std::to_string(degree()));
}

Elem Field::mul(Elem a, Elem b) const noexcept
{
    if (!impl_->exp.empty()) {
        if (a == 0 || b == 0) return 0;
        return impl_->exp[impl_->log[a] + impl_->log[b]];
    }
    return gf2x::mulmod(a, b, impl_->modulus);
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept
{
    Elem r = 1;
    while (e != 0) {
        if (e & 1U) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::inv(Elem a) const
{
    require(a != 0, ErrorCode::division_by_zero, "inverse of zero field element");
    check(a);
    std::uint64_t u = a, v = impl_->modulus;
    std::uint64_t g1 = 1, g2 = 0;
    while (u != 1) {
        int j = gf2x::degree(u) - gf2x::degree(v);
        if (j < 0) {
            std::swap(u, v);
            std::swap(g1, g2);
            j = -j;
        }
        u ^= v << j;
        g1 ^= g2 << j;
    }
    return g1;
}

Elem Field::trace_dual(Elem y) const noexcept
{
    Elem d = 0;
    Elem basis = 1;
    for (unsigned i = 0; i < degree(); ++i) {
        if (trace(mul(basis, y))) d |= Elem{1} << i;
        basis = gf2x::mulmod(basis, 2, impl_->modulus);
    }
    return d;
}

std::string Field::format(Elem a) const { return std::to_string(a); }

Elem Field::parse(std::string_view text) const
{
    Elem v = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc{} || ptr != end)
        raise(ErrorCode::parse_error, "not a field element: '" + std::string(text) + "'");
    if (!contains(v))
        raise(ErrorCode::parse_error,
              "value " + std::string(text) + " out of range for F_2^" + std::to_string(degree()));
    return v;
}

}  // namespace apoly
