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

#include "apoly/apolynomial.hpp"

#include <string>

#include "apoly/tower.hpp"

namespace apoly {

namespace {

void check_seed_shape(const Poly& f)
{
    require(f.degree() >= 1, ErrorCode::invalid_argument, "A-polynomial test needs degree >= 1");
    require(f.is_monic(), ErrorCode::invalid_argument, "A-polynomial test needs a monic polynomial");
    require(f.coeff(0) != 0, ErrorCode::domain_error, "a_1/a_0 is undefined for f = T");
}

bool trace_conditions(const Field& fld, Elem a0, Elem a1, Elem top)
{
    return fld.trace(top) == 1 && fld.trace(fld.mul(a1, fld.inv(a0))) == 1;
}

// Scan kernel shared by enumerate/count: reads the three coefficients the
// trace conditions need straight from the index before building a Poly.
template <class Fn>
void scan_a_polynomials(unsigned r, unsigned n, const WorkCap& cap, Fn&& on_hit)
{
    require(r >= 1 && n >= 1, ErrorCode::invalid_argument, "r and n must be positive");
    const Field fld = Field::binary(r);
    const unsigned bits = r * n;
    cap.check(bits, "A-polynomial scan");
    require(bits < 64, ErrorCode::cap_exceeded, "A-polynomial scan does not fit 64-bit indices");
    const std::uint64_t count = std::uint64_t{1} << bits;
    const Elem mask = fld.mask();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const Elem a0 = idx & mask;
        if (a0 == 0) continue;
        const Elem top = (idx >> ((n - 1) * r)) & mask;
        const Elem a1 = n == 1 ? Elem{1} : (idx >> r) & mask;
        if (!trace_conditions(fld, a0, a1, top)) continue;
        Poly f = monic_from_index(fld, n, idx);
        if (is_irreducible(f)) on_hit(std::move(f));
    }
}

}  // namespace

bool satisfies_trace_conditions(const Poly& f)
{
    check_seed_shape(f);
    const auto n = static_cast<std::size_t>(f.degree());
    return trace_conditions(f.field(), f.coeff(0), f.coeff(1), f.coeff(n - 1));
}

bool is_a_polynomial(const Poly& f) { return satisfies_trace_conditions(f) && is_irreducible(f); }

std::vector<Poly> enumerate_a_polynomials(unsigned r, unsigned n, const WorkCap& cap)
{
    std::vector<Poly> out;
    scan_a_polynomials(r, n, cap, [&](Poly f) { out.push_back(std::move(f)); });
    return out;
}

std::uint64_t count_via_polys(unsigned r, unsigned n, const WorkCap& cap)
{
    std::uint64_t count = 0;
    scan_a_polynomials(r, n, cap, [&](const Poly&) { ++count; });
    return count;
}

std::uint64_t count_via_elements(unsigned r, unsigned n, const WorkCap& cap)
{
    require(r >= 1 && n >= 1, ErrorCode::invalid_argument, "r and n must be positive");
    cap.check(r * n, "element-orbit count");
    const Tower tower = Tower::build(r, n, cap);
    std::uint64_t hits = 0;
    for (TElem x = 1; x < tower.size(); ++x) {
        if (tower.absolute_trace(x) != 1) continue;
        if (tower.absolute_trace(tower.inv(x)) != 1) continue;
        if (tower.has_full_degree(x)) ++hits;
    }
    if (hits % n != 0)
        raise(ErrorCode::invariant_violation, "element count " + std::to_string(hits) +
                                                  " is not divisible by n = " + std::to_string(n));
    return hits / n;
}

ASeq q_iterate(const Poly& seed, unsigned iterations, unsigned max_degree)
{
    if (!is_a_polynomial(seed))
        raise(ErrorCode::invalid_argument, "seed " + format_poly(seed) + " is not an A-polynomial");
    const auto n = static_cast<unsigned>(seed.degree());
    require(iterations < 32 && (std::uint64_t{n} << iterations) <= max_degree, ErrorCode::cap_exceeded,
            "iterate degree n*2^M exceeds the limit " + std::to_string(max_degree));

    ASeq seq;
    seq.r = seed.field().degree();
    seq.n = n;
    seq.iterates.push_back(seed);
    for (unsigned m = 1; m <= iterations; ++m) {
        Poly next = q_transform(seq.iterates.back());
        const auto fail = [&](const std::string& why) {
            raise(ErrorCode::verification_failure, "iterate m=" + std::to_string(m) + " " + why);
        };
        if (next.degree() != static_cast<int>(n << m)) fail("has wrong degree");
        if (!next.is_monic()) fail("is not monic");
        if (!is_self_reciprocal(next)) fail("is not self-reciprocal");
        if (!is_irreducible(next)) fail("is reducible");
        seq.iterates.push_back(std::move(next));
    }
    return seq;
}

}  // namespace apoly
