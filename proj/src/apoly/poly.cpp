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

#include "apoly/poly.hpp"

#include <algorithm>
#include <utility>

#include "apoly/numtheory.hpp"

namespace apoly {

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs))
{
    for (Elem c : c_) field_.check(c);
    trim();
}

Poly Poly::monomial(Field field, std::size_t deg, Elem c)
{
    std::vector<Elem> v(deg + 1, 0);
    v[deg] = c;
    return Poly(std::move(field), std::move(v));
}

void Poly::trim() noexcept
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::scaled(Elem c) const
{
    Poly out(field_);
    if (c == 0) return out;
    out.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = field_.mul(c_[i], c);
    return out;
}

Poly Poly::monic() const
{
    require(!is_zero(), ErrorCode::division_by_zero, "monic() of the zero polynomial");
    return is_monic() ? *this : scaled(field_.inv(lead()));
}

Poly& Poly::operator+=(const Poly& other)
{
    require(field_ == other.field_, ErrorCode::invalid_argument, "polynomials over different fields");
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), 0);
    for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] ^= other.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    require(a.field_ == b.field_, ErrorCode::invalid_argument, "polynomials over different fields");
    Poly out(a.field_);
    if (a.is_zero() || b.is_zero()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] ^= a.field_.mul(a.c_[i], b.c_[j]);
    }
    out.trim();
    return out;
}

namespace {

/// Reduces `v` (coefficients, constant first) modulo the monic `mod` in place;
/// the result has length < deg mod and may carry trailing zeros.
void reduce_monic(const Field& f, std::vector<Elem>& v, std::span<const Elem> mod)
{
    const std::size_t d = mod.size() - 1;
    for (std::size_t top = v.size(); top-- > d;) {
        const Elem c = v[top];
        if (c == 0) continue;
        const std::size_t shift = top - d;
        for (std::size_t j = 0; j < d; ++j) v[shift + j] ^= f.mul(c, mod[j]);
        v[top] = 0;
    }
    if (v.size() > d) v.resize(d);
}

std::vector<Elem> square_coeffs(const Field& f, std::span<const Elem> a)
{
    std::vector<Elem> out(a.empty() ? 0 : 2 * a.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[2 * i] = f.square(a[i]);
    return out;
}

}  // namespace

DivRem divrem(const Poly& a, const Poly& b)
{
    require(!b.is_zero(), ErrorCode::division_by_zero, "polynomial division by zero");
    require(a.field() == b.field(), ErrorCode::invalid_argument, "polynomials over different fields");
    const Field& f = a.field();
    const int db = b.degree();
    if (a.degree() < db) return {Poly(f), a};

    const Elem inv_lead = f.inv(b.lead());
    std::vector<Elem> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<Elem> q(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    const auto bc = b.coeffs();
    for (int top = a.degree(); top >= db; --top) {
        const Elem c = r[static_cast<std::size_t>(top)];
        if (c == 0) continue;
        const Elem factor = f.mul(c, inv_lead);
        const auto shift = static_cast<std::size_t>(top - db);
        q[shift] = factor;
        for (std::size_t j = 0; j < bc.size(); ++j) r[shift + j] ^= f.mul(factor, bc[j]);
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly gcd(Poly a, Poly b)
{
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Poly powmod(const Poly& base, const BigInt& e, const Poly& mod)
{
    require(!mod.is_zero(), ErrorCode::division_by_zero, "powmod with zero modulus");
    require(e >= 0, ErrorCode::invalid_argument, "powmod with negative exponent");
    const Field& f = base.field();
    Poly result = Poly::monomial(f, 0) % mod;
    Poly b = base % mod;
    const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % mod;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % mod;
    }
    return result;
}

Poly frobenius_mod(const Poly& h, const Poly& mod)
{
    require(!mod.is_zero(), ErrorCode::division_by_zero, "frobenius_mod with zero modulus");
    const Field& f = h.field();
    const Poly m = mod.monic();
    const Poly start = h % m;
    std::vector<Elem> v(start.coeffs().begin(), start.coeffs().end());
    for (unsigned i = 0; i < f.degree(); ++i) {
        v = square_coeffs(f, v);
        reduce_monic(f, v, m.coeffs());
    }
    return Poly(f, std::move(v));
}

bool is_irreducible(const Poly& p)
{
    require(p.degree() >= 1, ErrorCode::invalid_argument, "irreducibility of a constant polynomial");
    const Field& f = p.field();
    const auto n = static_cast<unsigned>(p.degree());
    if (n == 1) return true;
    if (f.degree() == 1 && n <= 63) {
        // Over F_2 the polynomial fits a machine word.
        std::uint64_t bits = 0;
        for (unsigned i = 0; i <= n; ++i) bits |= p.coeff(i) << i;
        return gf2x::is_irreducible(bits);
    }
    const Poly m = p.monic();
    const Poly x = Poly::monomial(f, 1);

    // frob[k] = x^{q^k} mod p for k = 0..n
    std::vector<Poly> frob;
    frob.reserve(n + 1);
    frob.push_back(x);
    for (unsigned k = 1; k <= n; ++k) frob.push_back(frobenius_mod(frob.back(), m));
    if (frob[n] != x) return false;
    for (auto ell : prime_factors(n))
        if (gcd(m, frob[n / ell] - x).degree() != 0) return false;
    return true;
}

Poly reciprocal(const Poly& p)
{
    require(!p.is_zero() && p.coeff(0) != 0, ErrorCode::domain_error,
            "reciprocal requires a nonzero constant term");
    std::vector<Elem> v(p.coeffs().rbegin(), p.coeffs().rend());
    return Poly(p.field(), std::move(v));
}

bool is_self_reciprocal(const Poly& p) { return reciprocal(p) == p; }

Poly q_transform(const Poly& f)
{
    require(f.degree() >= 1, ErrorCode::invalid_argument, "Q-transform needs degree >= 1");
    require(f.is_monic(), ErrorCode::invalid_argument, "Q-transform needs a monic polynomial");
    const auto n = static_cast<std::size_t>(f.degree());
    const Field& fld = f.field();

    // sum_i a_i T^{n-i} (T^2+1)^i, with (T^2+1)^i built incrementally.
    std::vector<Elem> out(2 * n + 1, 0);
    std::vector<Elem> power{1};
    for (std::size_t i = 0; i <= n; ++i) {
        const Elem a = f.coeff(i);
        if (a != 0)
            for (std::size_t k = 0; k < power.size(); ++k)
                if (power[k] != 0) out[k + n - i] ^= fld.mul(a, power[k]);
        power.resize(power.size() + 2, 0);
        for (std::size_t k = power.size(); k-- > 2;) power[k] ^= power[k - 2];
    }
    return Poly(fld, std::move(out));
}

Poly parse_poly(const Field& field, std::string_view text)
{
    std::vector<Elem> coeffs;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view tok = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        coeffs.push_back(field.parse(tok));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Poly(field, std::move(coeffs));
}

std::string format_poly(const Poly& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i != 0) out += ',';
        out += p.field().format(p.coeffs()[i]);
    }
    return out;
}

Poly monic_from_index(const Field& field, unsigned n, std::uint64_t index)
{
    const unsigned r = field.degree();
    std::vector<Elem> v(n + 1, 0);
    for (unsigned j = 0; j < n && j * r < 64; ++j) v[j] = (index >> (j * r)) & field.mask();
    v[n] = 1;
    return Poly(field, std::move(v));
}

}  // namespace apoly
