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

#ifndef APOLY_FIELD_HPP
#define APOLY_FIELD_HPP

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace apoly {

/// Element of F_{2^m} in the polynomial basis: bit i is the coefficient of z^i.
using Elem = std::uint64_t;

inline constexpr unsigned kMaxFieldDegree = 63;

/// Arithmetic on binary polynomials packed into a machine word (bit i is the
/// coefficient of x^i). Only used for moduli of degree <= 63.
namespace gf2x {

inline int degree(std::uint64_t a) noexcept { return a == 0 ? -1 : 63 - std::countl_zero(a); }

/// a * b mod `mod`, with deg a, deg b < deg mod.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) noexcept;
std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;
/// Rabin's test over F_2.
bool is_irreducible(std::uint64_t p) noexcept;

}  // namespace gf2x

/// Smallest monic irreducible of degree m over F_2, ordered by the integer
/// value of its low coefficient bits. The returned word includes the leading
/// bit 1 << m.
std::uint64_t find_field_modulus(unsigned m);

/// The binary field F_{2^m}. Cheap to copy; instances for the same m share
/// their tables and compare equal.
class Field {
   public:
    /// Cached per m; thread-safe.
    static Field binary(unsigned m);

    unsigned degree() const noexcept;
    std::uint64_t modulus() const noexcept;
    std::uint64_t order() const noexcept { return std::uint64_t{1} << degree(); }
    Elem mask() const noexcept { return order() - 1; }

    bool contains(Elem a) const noexcept { return (a & ~mask()) == 0; }
    /// Throws invalid_argument when `a` is not an element of this field.
    void check(Elem a) const;

    static Elem add(Elem a, Elem b) noexcept { return a ^ b; }
    Elem mul(Elem a, Elem b) const noexcept;
    Elem square(Elem a) const noexcept { return mul(a, a); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    /// Extended Euclid on binary polynomials; throws division_by_zero for 0.
    Elem inv(Elem a) const;

    /// Absolute trace to F_2, evaluated through a precomputed linear mask.
    unsigned trace(Elem a) const noexcept { return static_cast<unsigned>(std::popcount(a & trace_mask())) & 1U; }
    Elem trace_mask() const noexcept;
    /// Mask d(y) with Tr(x*y) = parity(x & d(y)) for all x.
    Elem trace_dual(Elem y) const noexcept;

    std::string format(Elem a) const;
    Elem parse(std::string_view text) const;

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.degree() == b.degree(); }

   private:
    struct Impl;
    static std::shared_ptr<const Impl> make_impl(unsigned m);
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

}  // namespace apoly

#endif
