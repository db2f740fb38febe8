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

#ifndef APOLY_CHARSUMS_HPP
#define APOLY_CHARSUMS_HPP

#include <cstdint>
#include <vector>

#include "apoly/bigint.hpp"
#include "apoly/error.hpp"
#include "apoly/field.hpp"
#include "apoly/tower.hpp"

namespace apoly {

/// Additive character chi_c(u) = (-1)^{Tr(c u)} of F_q. Every additive
/// character of F_q has this form; c = 0 is the trivial one.
struct Character {
    Elem twist = 0;

    bool trivial() const noexcept { return twist == 0; }
};

/// chi_c(u) for u in F_q, as +1 or -1.
int char_eval(const Field& base, Character chi, Elem u);

/// The lift chi_c^{(n)}(u) = chi_c(Tr_{F_{q^n}/F_q}(u)) = (-1)^{Tr_{F_{q^n}/F_2}(c u)}.
int char_eval_lifted(const Tower& tower, Character chi, TElem u);

/// K(chi^{(n)}; a, b) = sum over alpha in F_{q^n}^* of chi^{(n)}(a alpha + b / alpha),
/// by direct summation.
BigInt kloosterman(const Tower& tower, Elem a, Elem b, Character chi, const WorkCap& cap = WorkCap{});

/// (1/q^2) sum_u chi(u) sum_{a + b = u} K(chi^{(n)}; a, b), summing every
/// Kloosterman sum term by term: q^{n+2} lifted-character evaluations.
BigInt lhs_average_direct(const Tower& tower, Character chi, const WorkCap& cap = WorkCap{});

/// Same quantity in O(q^n + q log q) per character. Uses K(a, b) = K(1, ab)
/// (substitute alpha -> alpha / a) to reduce the double sum to
///   (q^n - 1) - 2 K(1, 0) + sum_{w != 0} K(1, w) kappa(w),
/// where kappa(w) is the Kloosterman sum of chi over F_q itself, and obtains
/// K(1, .) and kappa(.) from Walsh-Hadamard transforms of trace histograms.
class KloostermanAverager {
   public:
    explicit KloostermanAverager(const Tower& tower, const WorkCap& cap = WorkCap{});

    BigInt lhs(Character chi) const;
    /// K(chi^{(n)}; 1, w) for every w in F_q, indexed by w.
    std::vector<std::int64_t> kloosterman_row(Character chi) const;

   private:
    const Tower* tower_;
    std::vector<std::uint32_t> t1_;  // Tr_rel(alpha)
    std::vector<std::uint32_t> t2_;  // Tr_rel(1/alpha)
    std::vector<Elem> dual_cols_;
};

BigInt lhs_average(const Tower& tower, Character chi, const WorkCap& cap = WorkCap{});

/// sum_{d | n} mu(n/d) d A_r(d), from the closed formula.
BigInt kloosterman_rhs(unsigned r, unsigned n);

/// |R(n)| = #{alpha in F_{q^n}^* : Tr(alpha) = Tr(1/alpha) = 1}, absolute traces.
std::uint64_t r_count(const Tower& tower);
/// sum over d | n with n/d odd of d A_r(d): the degree decomposition of R(n),
/// since Tr_{F_{q^n}/F_2}(alpha) = (n/d) Tr_{F_{q^d}/F_2}(alpha) on F_{q^d}.
BigInt r_count_formula(unsigned r, unsigned n);
/// #{alpha : Tr_rel(alpha) = Tr_rel(1/alpha) = 1}, which is what the weighted
/// Kloosterman average counts.
std::uint64_t relative_r_count(const Tower& tower);

/// Characters used by the verification: all q - 1 nontrivial ones when
/// max_chars == 0 and q <= 2^12, or when max_chars >= q - 1; otherwise
/// max_chars (64 by default) twists spread evenly over F_q^*, always
/// including c = 1.
std::vector<Character> select_characters(const Field& base, unsigned max_chars);

struct CharacterVerdict {
    Character chi;
    BigInt lhs;
    bool pass = false;
};

struct KloostermanVerification {
    unsigned r = 0;
    unsigned n = 0;
    BigInt rhs;
    bool sampled = false;
    std::vector<CharacterVerdict> per_character;

    bool all_pass() const noexcept
    {
        for (const auto& v : per_character)
            if (!v.pass) return false;
        return true;
    }
};

/// lhs_average(chi) == kloosterman_rhs(r, n) for each selected nontrivial chi.
KloostermanVerification verify_kloosterman_identity(unsigned r, unsigned n, const WorkCap& cap = WorkCap{},
                                                    unsigned max_chars = 0);

}  // namespace apoly

#endif
