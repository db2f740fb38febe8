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

#include "apoly/charsums.hpp"

#include <string>

#include "apoly/counting.hpp"
#include "apoly/numtheory.hpp"

namespace apoly {

namespace {

BigInt from_i128(__int128 v)
{
    const bool neg = v < 0;
    const unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt hi = from_u64(static_cast<std::uint64_t>(u >> 64));
    BigInt out = (hi << 64) + from_u64(static_cast<std::uint64_t>(u));
    return neg ? BigInt(-out) : out;
}

void walsh_hadamard(std::vector<std::int64_t>& h)
{
    for (std::size_t len = 1; len < h.size(); len <<= 1)
        for (std::size_t i = 0; i < h.size(); i += 2 * len)
            for (std::size_t j = i; j < i + len; ++j) {
                const std::int64_t a = h[j], b = h[j + len];
                h[j] = a + b;
                h[j + len] = a - b;
            }
}

Elem apply_cols(const std::vector<Elem>& cols, Elem y)
{
    Elem out = 0;
    while (y != 0) {
        out ^= cols[static_cast<std::size_t>(std::countr_zero(y))];
        y &= y - 1;
    }
    return out;
}

void check_nontrivial(Character chi)
{
    require(!chi.trivial(), ErrorCode::invalid_argument, "the weighted Kloosterman average needs a nontrivial character");
}

}  // namespace

int char_eval(const Field& base, Character chi, Elem u)
{
    base.check(chi.twist);
    base.check(u);
    return base.trace(base.mul(chi.twist, u)) ? -1 : 1;
}

int char_eval_lifted(const Tower& tower, Character chi, TElem u)
{
    return tower.absolute_trace(tower.scale(chi.twist, u)) ? -1 : 1;
}

BigInt kloosterman(const Tower& tower, Elem a, Elem b, Character chi, const WorkCap& cap)
{
    cap.check(tower.total_degree(), "Kloosterman sum");
    const Field& base = tower.base();
    base.check(a);
    base.check(b);
    base.check(chi.twist);
    std::int64_t sum = 0;
    for (TElem x = 1; x < tower.size(); ++x)
        sum += char_eval_lifted(tower, chi, tower.scale(a, x) ^ tower.scale(b, tower.inv(x)));
    return from_i128(sum);
}

BigInt lhs_average_direct(const Tower& tower, Character chi, const WorkCap& cap)
{
    check_nontrivial(chi);
    const Field& base = tower.base();
    base.check(chi.twist);
    cap.check(tower.total_degree() + 2 * tower.base_degree(), "direct Kloosterman average");

    std::vector<TElem> inverse(tower.size());
    for (TElem x = 1; x < tower.size(); ++x) inverse[x] = tower.inv(x);

    const std::uint64_t q = base.order();
    __int128 total = 0;
    for (Elem u = 0; u < q; ++u) {
        __int128 inner = 0;
        for (Elem a = 0; a < q; ++a) {
            const Elem b = a ^ u;
            std::int64_t k = 0;
            for (TElem x = 1; x < tower.size(); ++x)
                k += char_eval_lifted(tower, chi, tower.scale(a, x) ^ tower.scale(b, inverse[x]));
            inner += k;
        }
        total += char_eval(base, chi, u) * inner;
    }
    return exact_div(from_i128(total), from_u64(q) * from_u64(q), "weighted Kloosterman sum");
}

KloostermanAverager::KloostermanAverager(const Tower& tower, const WorkCap& cap) : tower_(&tower)
{
    require(tower.base_degree() <= 32, ErrorCode::cap_exceeded, "Kloosterman averager needs r <= 32");
    cap.check(tower.total_degree(), "Kloosterman average");
    const std::uint64_t count = tower.size() - 1;
    t1_.resize(count);
    t2_.resize(count);
    for (TElem x = 1; x < tower.size(); ++x) {
        t1_[x - 1] = static_cast<std::uint32_t>(tower.relative_trace(x));
        t2_[x - 1] = static_cast<std::uint32_t>(tower.relative_trace(tower.inv(x)));
    }
    const Field& base = tower.base();
    for (unsigned j = 0; j < base.degree(); ++j) dual_cols_.push_back(base.trace_dual(Elem{1} << j));
}

std::vector<std::int64_t> KloostermanAverager::kloosterman_row(Character chi) const
{
    const Field& base = tower_->base();
    base.check(chi.twist);
    // K(1, w) = sum_alpha (-1)^{Tr(c t1)} (-1)^{parity(w & dual(c t2))}
    std::vector<std::int64_t> h(base.order(), 0);
    for (std::size_t i = 0; i < t1_.size(); ++i) {
        const Elem v = apply_cols(dual_cols_, base.mul(chi.twist, t2_[i]));
        h[v] += base.trace(base.mul(chi.twist, t1_[i])) ? -1 : 1;
    }
    walsh_hadamard(h);
    return h;
}

BigInt KloostermanAverager::lhs(Character chi) const
{
    check_nontrivial(chi);
    const Field& base = tower_->base();
    const std::uint64_t q = base.order();

    const std::vector<std::int64_t> k = kloosterman_row(chi);

    // kappa(w) = sum_{x in F_q^*} chi(x + w / x)
    std::vector<std::int64_t> kappa(q, 0);
    for (Elem x = 1; x < q; ++x) {
        const Elem v = apply_cols(dual_cols_, base.mul(chi.twist, base.inv(x)));
        kappa[v] += base.trace(base.mul(chi.twist, x)) ? -1 : 1;
    }
    walsh_hadamard(kappa);

    __int128 total = static_cast<__int128>(tower_->size() - 1) - 2 * static_cast<__int128>(k[0]);
    for (Elem w = 1; w < q; ++w) total += static_cast<__int128>(k[w]) * kappa[w];
    return exact_div(from_i128(total), from_u64(q) * from_u64(q), "weighted Kloosterman sum");
}

BigInt lhs_average(const Tower& tower, Character chi, const WorkCap& cap)
{
    check_nontrivial(chi);
    return KloostermanAverager(tower, cap).lhs(chi);
}

BigInt kloosterman_rhs(unsigned r, unsigned n)
{
    require(r >= 1 && n >= 1, ErrorCode::invalid_argument, "r and n must be positive");
    BigInt sum = 0;
    for (std::uint64_t d : divisors(n)) {
        const int mu = moebius(n / d);
        if (mu != 0) sum += mu * from_u64(d) * count_formula(r, d);
    }
    return sum;
}

std::uint64_t r_count(const Tower& tower)
{
    std::uint64_t count = 0;
    for (TElem x = 1; x < tower.size(); ++x)
        if (tower.absolute_trace(x) == 1 && tower.absolute_trace(tower.inv(x)) == 1) ++count;
    return count;
}

BigInt r_count_formula(unsigned r, unsigned n)
{
    require(r >= 1 && n >= 1, ErrorCode::invalid_argument, "r and n must be positive");
    BigInt sum = 0;
    for (std::uint64_t d : divisors(n))
        if ((n / d) % 2 == 1) sum += from_u64(d) * count_formula(r, d);
    return sum;
}

std::uint64_t relative_r_count(const Tower& tower)
{
    std::uint64_t count = 0;
    for (TElem x = 1; x < tower.size(); ++x)
        if (tower.relative_trace(x) == 1 && tower.relative_trace(tower.inv(x)) == 1) ++count;
    return count;
}

std::vector<Character> select_characters(const Field& base, unsigned max_chars)
{
    constexpr unsigned kAllCharactersDegree = 12;
    constexpr unsigned kDefaultSample = 64;
    const std::uint64_t nontrivial = base.order() - 1;
    std::uint64_t want = max_chars;
    if (max_chars == 0) want = base.degree() <= kAllCharactersDegree ? nontrivial : kDefaultSample;
    std::vector<Character> out;
    if (want >= nontrivial) {
        for (Elem c = 1; c <= nontrivial; ++c) out.push_back({c});
        return out;
    }
    for (std::uint64_t i = 0; i < want; ++i)
        out.push_back({1 + static_cast<Elem>((static_cast<unsigned __int128>(i) * nontrivial) / want)});
    return out;
}

KloostermanVerification verify_kloosterman_identity(unsigned r, unsigned n, const WorkCap& cap, unsigned max_chars)
{
    const Tower tower = Tower::build(r, n, cap);
    const KloostermanAverager avg(tower, cap);
    KloostermanVerification out;
    out.r = r;
    out.n = n;
    out.rhs = kloosterman_rhs(r, n);
    const auto chars = select_characters(tower.base(), max_chars);
    out.sampled = chars.size() < tower.base().order() - 1;
    for (Character chi : chars) {
        BigInt lhs = avg.lhs(chi);
        const bool pass = lhs == out.rhs;
        out.per_character.push_back({chi, std::move(lhs), pass});
    }
    return out;
}

}  // namespace apoly
