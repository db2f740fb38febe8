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

#ifndef APOLY_TOWER_HPP
#define APOLY_TOWER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "apoly/error.hpp"
#include "apoly/field.hpp"
#include "apoly/poly.hpp"

namespace apoly {

/// Element of F_{q^n} = F_q[w]/(g), packed: coordinate i (coefficient of w^i)
/// occupies bits [i*r, (i+1)*r). Addition is XOR, and the packed integers
/// 0 .. q^n - 1 enumerate the field.
using TElem = std::uint64_t;

/// The tower F_2 c F_q c F_{q^n}, q = 2^r. Immutable after construction.
class Tower {
   public:
    /// Smallest monic irreducible g of degree n over F_q in enumeration order
    /// (see monic_from_index). Requires r*n <= 63 and within `cap`.
    static Tower build(unsigned r, unsigned n, const WorkCap& cap = WorkCap{});

    const Field& base() const noexcept { return base_; }
    unsigned base_degree() const noexcept { return base_.degree(); }
    unsigned ext_degree() const noexcept { return n_; }
    unsigned total_degree() const noexcept { return base_degree() * n_; }
    const Poly& modulus() const noexcept { return modulus_; }
    std::uint64_t size() const noexcept { return std::uint64_t{1} << total_degree(); }

    bool contains(TElem x) const noexcept { return (x >> total_degree()) == 0; }
    TElem embed(Elem a) const noexcept { return a; }
    Elem coord(TElem x, unsigned i) const noexcept { return (x >> (i * base_degree())) & base_.mask(); }
    bool in_base(TElem x) const noexcept { return (x >> base_degree()) == 0; }

    TElem mul(TElem a, TElem b) const noexcept;
    TElem scale(Elem c, TElem x) const noexcept;
    TElem square(TElem a) const noexcept { return mul(a, a); }
    TElem pow(TElem a, std::uint64_t e) const noexcept;
    /// Throws division_by_zero for 0.
    TElem inv(TElem a) const;

    /// x^q through the precomputed F_2-linear map.
    TElem frobenius(TElem x) const noexcept { return apply(frob_cols_, x); }
    TElem frobenius_pow(TElem x, unsigned k) const noexcept;
    /// True iff [F_q(x) : F_q] = n, i.e. x^{q^{n/l}} != x for every prime l | n.
    bool has_full_degree(TElem x) const noexcept;

    /// Tr_{F_{q^n}/F_q}, through its F_2-linear matrix.
    Elem relative_trace(TElem x) const noexcept { return static_cast<Elem>(apply(rel_trace_cols_, x)); }
    /// Tr_{F_{q^n}/F_2} as parity of a mask.
    unsigned absolute_trace(TElem x) const noexcept
    {
        return static_cast<unsigned>(std::popcount(x & abs_trace_mask_)) & 1U;
    }
    TElem absolute_trace_mask() const noexcept { return abs_trace_mask_; }

    /// Definitional forms, for cross-checking the linear maps.
    Elem relative_trace_by_conjugates(TElem x) const;
    unsigned absolute_trace_by_squares(TElem x) const;

    std::string format(TElem x) const;
    TElem parse(std::string_view text) const;

   private:
    Tower(Field base, unsigned n, Poly modulus);
    static std::uint64_t apply(const std::vector<std::uint64_t>& cols, TElem x) noexcept;

    Field base_;
    unsigned n_;
    Poly modulus_;
    std::vector<Elem> g_;  // low coefficients of the monic modulus
    std::vector<std::uint64_t> frob_cols_;
    std::vector<std::uint64_t> rel_trace_cols_;
    TElem abs_trace_mask_ = 0;
    std::vector<unsigned> maximal_divisors_;
};

}  // namespace apoly

#endif
