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

#ifndef APOLY_POLY_HPP
#define APOLY_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "apoly/bigint.hpp"
#include "apoly/error.hpp"
#include "apoly/field.hpp"

namespace apoly {

/// Dense univariate polynomial over F_{2^r}, constant term first. The
/// coefficient vector never carries trailing zeros.
class Poly {
   public:
    explicit Poly(Field field) : field_(std::move(field)) {}
    Poly(Field field, std::vector<Elem> coeffs);

    static Poly monomial(Field field, std::size_t deg, Elem c = 1);

    const Field& field() const noexcept { return field_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const noexcept { return lead() == 1; }
    std::span<const Elem> coeffs() const noexcept { return c_; }

    Poly scaled(Elem c) const;
    Poly monic() const;

    Poly& operator+=(const Poly& other);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    // Characteristic 2: subtraction is addition.
    friend Poly operator-(Poly a, const Poly& b) { return a += b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) noexcept
    {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }

   private:
    void trim() noexcept;

    Field field_;
    std::vector<Elem> c_;
};

struct DivRem {
    Poly quot;
    Poly rem;
};

DivRem divrem(const Poly& a, const Poly& b);
inline Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).rem; }
/// Monic gcd; gcd(0, 0) is 0.
Poly gcd(Poly a, Poly b);
Poly powmod(const Poly& base, const BigInt& e, const Poly& mod);
/// h^q mod `mod`, q the size of the coefficient field.
Poly frobenius_mod(const Poly& h, const Poly& mod);

/// Rabin's deterministic test. Throws invalid_argument for constants.
bool is_irreducible(const Poly& p);

/// x^{deg p} p(1/x). Requires p(0) != 0.
Poly reciprocal(const Poly& p);
bool is_self_reciprocal(const Poly& p);
/// T^{deg f} f(T + 1/T) for monic f of degree >= 1.
Poly q_transform(const Poly& f);

/// "a0,a1,...,an" with each ai the integer encoding of an element of F_{2^r}.
Poly parse_poly(const Field& field, std::string_view text);
std::string format_poly(const Poly& p);

/// Number of monic polynomials of degree n, as log2: r*n.
inline unsigned monic_count_log2(const Field& field, unsigned n) { return field.degree() * n; }

/// The index-th monic polynomial of degree n, where the index is the integer
/// a_0 + a_1 q + ... + a_{n-1} q^{n-1}. This is the enumeration order.
Poly monic_from_index(const Field& field, unsigned n, std::uint64_t index);

/// Visits all q^n monic polynomials of degree n in enumeration order.
template <class Fn>
void for_each_monic(const Field& field, unsigned n, const WorkCap& cap, Fn&& fn)
{
    const unsigned log2_count = monic_count_log2(field, n);
    cap.check(log2_count, "monic enumeration");
    require(log2_count < 64, ErrorCode::cap_exceeded, "monic enumeration does not fit 64-bit indices");
    const std::uint64_t count = std::uint64_t{1} << log2_count;
    for (std::uint64_t i = 0; i < count; ++i) fn(monic_from_index(field, n, i));
}

}  // namespace apoly

#endif
