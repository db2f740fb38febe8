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

#ifndef APOLY_COUNTING_HPP
#define APOLY_COUNTING_HPP

#include <cstdint>
#include <string>

#include "apoly/bigint.hpp"

namespace apoly {

/// s_t = alpha^t + conj(alpha)^t for alpha = (-1 + sqrt(-7)) / 2, the roots of
/// X^2 + X + 2: s_0 = 2, s_1 = -1, s_{t+2} = -s_{t+1} - 2 s_t.
BigInt lucas_s(std::uint64_t t);

/// Number of A-polynomials of degree n over F_{2^r}, from the closed formula
///   A_r(n) = 1/(4n) sum_{d | m} mu(m/d) (q^{2^k d} + 1 - s_{r 2^k d}),
/// n = 2^k m with m odd. Throws invariant_violation if 4n does not divide.
BigInt count_formula(unsigned r, std::uint64_t n);

/// Degree-n places of the genus-1 function field y^2 + y = x + 1/x over F_q:
///   B(n) = 1/n sum_{d | n} mu(n/d) (q^d + 1 - s_{rd}).
BigInt place_count_B(unsigned r, std::uint64_t n);

/// Inert degree-n places in the unramified double cover:
///   C_r(2^k m) = sum_{i=1}^{k+1} B(2^{k+1-i} m) / 2^i,
/// summed over the common denominator 2^{k+1} and divided once.
BigInt inert_count_C(unsigned r, std::uint64_t n);

struct BoundResult {
    bool holds = false;
    /// |A - q^n/(4n)| as a reduced fraction "p/q".
    std::string lhs;
    std::string lhs_decimal;
    std::string rhs_decimal;
};

/// |A_r(n) - q^n/(4n)| <= sigma0(m)/(4n) (q^{n/3} + 1 + 2 * 2^{rn/6}), with the
/// left side exact and the right side in 128-bit MPFR arithmetic, compared
/// with a relative slack of 1e-18.
BoundResult bound_check(unsigned r, std::uint64_t n);

/// The same estimate with the d = m summand's own error accounted for:
///   |4n A_r(n) - q^n| <= (1 + 2 * 2^{rn/2}) + (sigma0(m) - 1)(q^{n/3} + 1 + 2 * 2^{rn/6}).
/// bound_check omits the 2 * 2^{rn/2} contribution of that summand and so
/// fails whenever it dominates (first at r = 1, n = 8).
BoundResult corrected_bound_check(unsigned r, std::uint64_t n);

/// count_formula(r, n) >= 1.
bool existence(unsigned r, std::uint64_t n);

/// 2^{1-t} sum_{j=0}^{floor(t/2)} C(t, 2j) (-1)^{t+j} 7^j for t >= 1; the
/// division is checked exact.
BigInt niederreiter_rhs(std::uint64_t t);

}  // namespace apoly

#endif
