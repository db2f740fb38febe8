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

// Test-only reference implementations. They deliberately share no code path
// with the library: schoolbook multiplication with explicit reduction, trial
// division instead of Rabin, exhaustive search instead of Euclid, and
// definition-level sums instead of precomputed linear maps.

#ifndef APOLY_TESTS_ORACLES_HPP
#define APOLY_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

namespace apoly::oracle {

inline int bit_degree(std::uint64_t a)
{
    int d = -1;
    for (int i = 0; i < 64; ++i)
        if ((a >> i) & 1U) d = i;
    return d;
}

/// Remainder of binary polynomials, a mod b.
inline std::uint64_t bit_rem(std::uint64_t a, std::uint64_t b)
{
    const int db = bit_degree(b);
    while (bit_degree(a) >= db) a ^= b << (bit_degree(a) - db);
    return a;
}

/// Irreducibility over F_2 by trial division with every polynomial of degree
/// 1 .. deg/2.
inline bool bit_irreducible_by_trial_division(std::uint64_t p)
{
    const int d = bit_degree(p);
    if (d < 1) return false;
    for (std::uint64_t g = 2; bit_degree(g) <= d / 2; ++g)
        if (bit_rem(p, g) == 0) return false;
    return true;
}

/// Smallest irreducible of degree m by scanning low bits upward.
inline std::uint64_t brute_force_modulus(unsigned m)
{
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << m); ++low)
        if (bit_irreducible_by_trial_division((std::uint64_t{1} << m) | low)) return (std::uint64_t{1} << m) | low;
    return 0;
}

/// F_{2^m} with schoolbook multiplication: full product, then long division.
struct NaiveField {
    unsigned m;
    std::uint64_t mod;

    std::uint64_t size() const { return std::uint64_t{1} << m; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const
    {
        // Product of degree < 2m, kept in two words.
        std::uint64_t lo = 0, hi = 0;
        for (unsigned i = 0; i < m; ++i)
            if ((b >> i) & 1U) {
                lo ^= a << i;
                if (i != 0) hi ^= a >> (64 - i);
            }
        for (int k = 2 * static_cast<int>(m) - 2; k >= static_cast<int>(m); --k) {
            const bool set = k >= 64 ? ((hi >> (k - 64)) & 1U) : ((lo >> k) & 1U);
            if (!set) continue;
            const int shift = k - static_cast<int>(m);
            lo ^= mod << shift;
            if (shift != 0) hi ^= mod >> (64 - shift);
        }
        return lo;
    }

    /// Exhaustive search; 0 has no inverse and yields 0.
    std::uint64_t brute_inverse(std::uint64_t a) const
    {
        for (std::uint64_t b = 1; b < size(); ++b)
            if (mul(a, b) == 1) return b;
        return 0;
    }

    /// a + a^2 + a^4 + ... + a^{2^{m-1}}.
    unsigned trace(std::uint64_t a) const
    {
        std::uint64_t t = 0, x = a;
        for (unsigned k = 0; k < m; ++k) {
            t ^= x;
            x = mul(x, x);
        }
        return static_cast<unsigned>(t);
    }
};

inline NaiveField naive_field(unsigned m) { return NaiveField{m, brute_force_modulus(m)}; }

/// Polynomials over a NaiveField, constant term first, without trailing zeros.
using NaivePoly = std::vector<std::uint64_t>;

inline NaivePoly naive_rem(const NaiveField& f, NaivePoly a, const NaivePoly& b)
{
    const std::uint64_t lead_inv = f.brute_inverse(b.back());
    while (a.size() >= b.size()) {
        const std::uint64_t c = f.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] ^= f.mul(c, b[j]);
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

/// Irreducibility of a monic polynomial by trial division with every monic
/// polynomial of degree 1 .. deg/2.
inline bool irreducible_by_trial_division(const NaiveField& f, const NaivePoly& p)
{
    const std::size_t n = p.size() - 1;
    if (n < 1) return false;
    for (std::size_t d = 1; d <= n / 2; ++d) {
        const std::uint64_t count = std::uint64_t{1} << (f.m * d);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            NaivePoly g(d + 1, 0);
            for (std::size_t j = 0; j < d; ++j) g[j] = (idx >> (j * f.m)) & (f.size() - 1);
            g[d] = 1;
            if (naive_rem(f, p, g).empty()) return false;
        }
    }
    return true;
}

/// #{(x, y) : x != 0, y^2 + y = x + 1/x} over F_{2^t}, by trying every pair.
inline std::uint64_t curve_affine_points(unsigned t)
{
    const NaiveField f = naive_field(t);
    std::uint64_t count = 0;
    for (std::uint64_t x = 1; x < f.size(); ++x) {
        const std::uint64_t s = x ^ f.brute_inverse(x);
        for (std::uint64_t y = 0; y < f.size(); ++y)
            if ((f.mul(y, y) ^ y) == s) ++count;
    }
    return count;
}

// Exact values obtained by brute force outside this code base (monic scan
// with trial-division irreducibility and both trace conditions).
inline constexpr std::uint64_t kA1[] = {1, 1, 0, 1, 2, 2, 4, 9, 14, 24};  // A_1(1..10)
inline constexpr std::uint64_t kA2[] = {2, 2, 4, 18, 48};                 // A_2(1..5)
inline constexpr std::uint64_t kA3[] = {1, 7, 42};                        // A_3(1..3)
inline constexpr std::uint64_t kA4[] = {4, 36};                           // A_4(1..2)

}  // namespace apoly::oracle

#endif
