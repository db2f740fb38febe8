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

#ifndef APOLY_APOLYNOMIAL_HPP
#define APOLY_APOLYNOMIAL_HPP

#include <cstdint>
#include <vector>

#include "apoly/error.hpp"
#include "apoly/poly.hpp"

namespace apoly {

/// Largest iterate degree q_iterate will build and verify.
inline constexpr unsigned kMaxIterateDegree = 1024;

/// Tr(a_{n-1}) = 1 and Tr(a_1 / a_0) = 1, reading the coefficients off
/// T^n + a_{n-1} T^{n-1} + ... + a_1 T + a_0 literally: for n = 1 the leading
/// 1 plays a_1, for n = 2 the middle coefficient is both a_{n-1} and a_1.
/// Requires f monic of degree >= 1 with f(0) != 0; f = T is a domain error.
bool satisfies_trace_conditions(const Poly& f);

/// Irreducible and satisfying both trace conditions.
bool is_a_polynomial(const Poly& f);

/// All A-polynomials of degree n over F_{2^r}, in enumeration order, by
/// scanning every monic polynomial.
std::vector<Poly> enumerate_a_polynomials(unsigned r, unsigned n, const WorkCap& cap = WorkCap{});

/// Number of A-polynomials from the monic scan.
std::uint64_t count_via_polys(unsigned r, unsigned n, const WorkCap& cap = WorkCap{});

/// Number of A-polynomials from elements: alpha in F_{q^n}^* with
/// Tr(alpha) = Tr(1/alpha) = 1 (absolute traces) and [F_q(alpha):F_q] = n,
/// divided by n.
std::uint64_t count_via_elements(unsigned r, unsigned n, const WorkCap& cap = WorkCap{});

/// f_0, f_1 = f_0^Q, ..., f_M.
struct ASeq {
    unsigned r = 0;
    unsigned n = 0;
    std::vector<Poly> iterates;

    const Poly& seed() const { return iterates.front(); }
};

/// Builds and verifies the Q-transform chain from an A-polynomial seed. Every
/// iterate is checked monic, irreducible, of degree n 2^m, and self-reciprocal
/// for m >= 1; any failure throws verification_failure naming m.
ASeq q_iterate(const Poly& seed, unsigned iterations, unsigned max_degree = kMaxIterateDegree);

}  // namespace apoly

#endif
