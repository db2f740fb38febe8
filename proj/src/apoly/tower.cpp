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

#include "apoly/tower.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <utility>

#include "apoly/numtheory.hpp"

namespace apoly {

namespace {

constexpr unsigned kMaxTowerBits = 63;

}  // namespace

Tower Tower::build(unsigned r, unsigned n, const WorkCap& cap)
{
    require(r >= 1 && n >= 1, ErrorCode::invalid_argument, "tower needs r >= 1 and n >= 1");
    require(r * n <= kMaxTowerBits, ErrorCode::cap_exceeded,
            "tower F_{2^" + std::to_string(r) + "}^" + std::to_string(n) + " exceeds 63 bits");
    cap.check(r * n, "tower construction");
    Field base = Field::binary(r);
    if (n == 1) return Tower(base, 1, Poly::monomial(base, 1));
    for (std::uint64_t idx = 0;; ++idx) {
        Poly g = monic_from_index(base, n, idx);
        if (g.coeff(0) != 0 && is_irreducible(g)) return Tower(base, n, std::move(g));
    }
}

Tower::Tower(Field base, unsigned n, Poly modulus) : base_(std::move(base)), n_(n), modulus_(std::move(modulus))
{
    g_.assign(modulus_.coeffs().begin(), modulus_.coeffs().begin() + n_);
    const unsigned r = base_degree();
    const unsigned bits = total_degree();

    // Images of the F_2-basis z^j w^i under x -> x^q, computed definitionally.
    frob_cols_.resize(bits);
    for (unsigned i = 0; i < n_; ++i) {
        const TElem wi = TElem{1} << (i * r);
        TElem img = wi;
        for (unsigned s = 0; s < r; ++s) img = mul(img, img);
        for (unsigned j = 0; j < r; ++j) frob_cols_[i * r + j] = scale(Elem{1} << j, img);
    }

    rel_trace_cols_.resize(bits);
    for (unsigned b = 0; b < bits; ++b) {
        const Elem t = relative_trace_by_conjugates(TElem{1} << b);
        rel_trace_cols_[b] = t;
        if (base_.trace(t)) abs_trace_mask_ |= TElem{1} << b;
    }

    for (auto ell : prime_factors(n_)) maximal_divisors_.push_back(static_cast<unsigned>(n_ / ell));
}

std::uint64_t Tower::apply(const std::vector<std::uint64_t>& cols, TElem x) noexcept
{
    std::uint64_t out = 0;
    while (x != 0) {
        const int b = std::countr_zero(x);
        out ^= cols[static_cast<std::size_t>(b)];
        x &= x - 1;
    }
    return out;
}

TElem Tower::mul(TElem a, TElem b) const noexcept
{
    const unsigned r = base_degree();
    if (n_ == 1) return base_.mul(a, b);
    std::array<Elem, 64> ac{}, bc{};
    std::array<Elem, 128> c{};
    for (unsigned i = 0; i < n_; ++i) {
        ac[i] = coord(a, i);
        bc[i] = coord(b, i);
    }
    for (unsigned i = 0; i < n_; ++i) {
        if (ac[i] == 0) continue;
        for (unsigned j = 0; j < n_; ++j)
            if (bc[j] != 0) c[i + j] ^= base_.mul(ac[i], bc[j]);
    }
    for (unsigned top = 2 * n_ - 2; top >= n_; --top) {
        const Elem t = c[top];
        if (t == 0) continue;
        for (unsigned j = 0; j < n_; ++j) c[top - n_ + j] ^= base_.mul(t, g_[j]);
    }
    TElem out = 0;
    for (unsigned i = 0; i < n_; ++i) out |= c[i] << (i * r);
    return out;
}

TElem Tower::scale(Elem c, TElem x) const noexcept
{
    const unsigned r = base_degree();
    TElem out = 0;
    for (unsigned i = 0; i < n_; ++i) out |= base_.mul(c, coord(x, i)) << (i * r);
    return out;
}

TElem Tower::pow(TElem a, std::uint64_t e) const noexcept
{
    TElem r = 1;
    while (e != 0) {
        if (e & 1U) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

TElem Tower::inv(TElem a) const
{
    require(a != 0, ErrorCode::division_by_zero, "inverse of zero tower element");
    if (n_ == 1) return base_.inv(a);

    // Extended Euclid on (g, a) over F_q; s_k * a = r_k mod g.
    struct Small {
        std::array<Elem, 65> c{};
        int deg = -1;
        void fix()
        {
            while (deg >= 0 && c[static_cast<std::size_t>(deg)] == 0) --deg;
        }
    };
    Small r0, r1, s0, s1;
    for (unsigned i = 0; i < n_; ++i) r0.c[i] = g_[i];
    r0.c[n_] = 1;
    r0.deg = static_cast<int>(n_);
    for (unsigned i = 0; i < n_; ++i) r1.c[i] = coord(a, i);
    r1.deg = static_cast<int>(n_) - 1;
    r1.fix();
    s1.c[0] = 1;
    s1.deg = 0;

    while (r1.deg > 0) {
        const Elem inv_lead = base_.inv(r1.c[static_cast<std::size_t>(r1.deg)]);
        while (r0.deg >= r1.deg) {
            const auto j = static_cast<std::size_t>(r0.deg - r1.deg);
            const Elem f = base_.mul(r0.c[static_cast<std::size_t>(r0.deg)], inv_lead);
            for (int k = 0; k <= r1.deg; ++k) r0.c[j + static_cast<std::size_t>(k)] ^= base_.mul(f, r1.c[static_cast<std::size_t>(k)]);
            for (int k = 0; k <= s1.deg; ++k) s0.c[j + static_cast<std::size_t>(k)] ^= base_.mul(f, s1.c[static_cast<std::size_t>(k)]);
            s0.deg = std::max(s0.deg, s1.deg + static_cast<int>(j));
            s0.fix();
            r0.fix();
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    const Elem c = base_.inv(r1.c[0]);
    TElem out = 0;
    for (int i = 0; i <= s1.deg; ++i)
        out |= base_.mul(s1.c[static_cast<std::size_t>(i)], c) << (static_cast<unsigned>(i) * base_degree());
    return out;
}

TElem Tower::frobenius_pow(TElem x, unsigned k) const noexcept
{
    for (unsigned i = 0; i < k; ++i) x = frobenius(x);
    return x;
}

bool Tower::has_full_degree(TElem x) const noexcept
{
    for (unsigned d : maximal_divisors_)
        if (frobenius_pow(x, d) == x) return false;
    return true;
}

Elem Tower::relative_trace_by_conjugates(TElem x) const
{
    TElem sum = 0;
    TElem conj = x;
    for (unsigned k = 0; k < n_; ++k) {
        sum ^= conj;
        for (unsigned s = 0; s < base_degree(); ++s) conj = mul(conj, conj);
    }
    require(in_base(sum), ErrorCode::invariant_violation, "relative trace left the base field");
    return static_cast<Elem>(sum);
}

unsigned Tower::absolute_trace_by_squares(TElem x) const
{
    TElem sum = 0;
    for (unsigned k = 0; k < total_degree(); ++k) {
        sum ^= x;
        x = mul(x, x);
    }
    require(sum <= 1, ErrorCode::invariant_violation, "absolute trace left F_2");
    return static_cast<unsigned>(sum);
}

std::string Tower::format(TElem x) const
{
    std::string out;
    for (unsigned i = 0; i < n_; ++i) {
        if (i != 0) out += ',';
        out += std::to_string(coord(x, i));
    }
    return out;
}

TElem Tower::parse(std::string_view text) const
{
    const Poly p = parse_poly(base_, text);
    require(p.degree() < static_cast<int>(n_), ErrorCode::parse_error,
            "tower element has more than " + std::to_string(n_) + " coordinates");
    TElem out = 0;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) out |= p.coeffs()[i] << (i * base_degree());
    return out;
}

}  // namespace apoly
