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

#include "apoly/counting.hpp"

#include <mpfr.h>

#include "apoly/numtheory.hpp"

namespace apoly {

namespace {

void check_rn(unsigned r, std::uint64_t n)
{
    require(r >= 1 && n >= 1, ErrorCode::invalid_argument, "r and n must be positive");
}

/// q^e + 1 - s_{re}: the number of degree-1 places over F_{q^e}.
BigInt rational_place_term(unsigned r, std::uint64_t e) { return pow2(r * e) + 1 - lucas_s(r * e); }

class Mpfr {
   public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }

    std::string str(int digits)
    {
        mpfr_exp_t exp = 0;
        char* s = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN);
        std::string mant(s);
        mpfr_free_str(s);
        bool neg = !mant.empty() && mant[0] == '-';
        if (neg) mant.erase(0, 1);
        if (mpfr_zero_p(v_)) return "0";
        return std::string(neg ? "-" : "") + "0." + mant + "e" + std::to_string(exp);
    }

   private:
    mpfr_t v_;
};

constexpr mpfr_prec_t kBoundPrecision = 128;

}  // namespace

BigInt lucas_s(std::uint64_t t)
{
    BigInt prev = 2, cur = -1;
    if (t == 0) return prev;
    for (std::uint64_t i = 1; i < t; ++i) {
        BigInt next = -cur - 2 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt count_formula(unsigned r, std::uint64_t n)
{
    check_rn(r, n);
    const TwoAdic split = split_two_adic(n);
    const std::uint64_t scale = std::uint64_t{1} << split.k;
    BigInt sum = 0;
    for (std::uint64_t d : divisors(split.odd)) {
        const int mu = moebius(split.odd / d);
        if (mu != 0) sum += mu * rational_place_term(r, scale * d);
    }
    return exact_div(sum, from_u64(4 * n), "A_r(n) Moebius sum");
}

BigInt place_count_B(unsigned r, std::uint64_t n)
{
    check_rn(r, n);
    BigInt sum = 0;
    for (std::uint64_t d : divisors(n)) {
        const int mu = moebius(n / d);
        if (mu != 0) sum += mu * rational_place_term(r, d);
    }
    BigInt b = exact_div(sum, from_u64(n), "B(n) Moebius sum");
    require(b >= 0, ErrorCode::invariant_violation, "negative place count B(n)");
    return b;
}

BigInt inert_count_C(unsigned r, std::uint64_t n)
{
    check_rn(r, n);
    const TwoAdic split = split_two_adic(n);
    // sum_{i=1}^{k+1} 2^{k+1-i} B(2^{k+1-i} m), over 2^{k+1}
    BigInt num = 0;
    for (unsigned i = 1; i <= split.k + 1; ++i) {
        const unsigned e = split.k + 1 - i;
        num += pow2(e) * place_count_B(r, (std::uint64_t{1} << e) * split.odd);
    }
    return exact_div(num, pow2(split.k + 1), "C_r(n) dyadic sum");
}

namespace {

/// 2^{rn / den} in MPFR arithmetic.
void pow2_fraction(Mpfr& out, unsigned r, std::uint64_t n, unsigned den)
{
    Mpfr e(kBoundPrecision);
    mpfr_set_ui(e.get(), static_cast<unsigned long>(r * n), MPFR_RNDN);
    mpfr_div_ui(e.get(), e.get(), den, MPFR_RNDN);
    mpfr_ui_pow(out.get(), 2, e.get(), MPFR_RNDN);
}

/// Shared evaluation; `leading_term` adds the error of the d = m summand,
/// 1 + 2 * 2^{rn/2}, in place of one copy of the proper-divisor term.
BoundResult evaluate_bound(unsigned r, std::uint64_t n, bool leading_term)
{
    check_rn(r, n);
    const BigInt a = count_formula(r, n);
    const BigInt four_n = from_u64(4 * n);
    BigInt scaled = four_n * a - pow2(r * n);
    if (scaled < 0) scaled = -scaled;

    BoundResult out;
    {
        mpq_class frac(scaled, four_n);
        frac.canonicalize();
        out.lhs = frac.get_num().get_str() + "/" + frac.get_den().get_str();
    }

    const std::uint64_t m = split_two_adic(n).odd;

    // Both sides carry the 4n factor. Proper-divisor term: 2^{rn/3} + 1 + 2 * 2^{rn/6}.
    Mpfr third(kBoundPrecision), sixth(kBoundPrecision), rhs(kBoundPrecision);
    pow2_fraction(third, r, n, 3);
    pow2_fraction(sixth, r, n, 6);
    mpfr_mul_ui(sixth.get(), sixth.get(), 2, MPFR_RNDN);
    mpfr_add(rhs.get(), third.get(), sixth.get(), MPFR_RNDN);
    mpfr_add_ui(rhs.get(), rhs.get(), 1, MPFR_RNDN);
    if (!leading_term) {
        mpfr_mul_ui(rhs.get(), rhs.get(), static_cast<unsigned long>(sigma0(m)), MPFR_RNDN);
    } else {
        mpfr_mul_ui(rhs.get(), rhs.get(), static_cast<unsigned long>(sigma0(m) - 1), MPFR_RNDN);
        Mpfr half(kBoundPrecision);
        pow2_fraction(half, r, n, 2);
        mpfr_mul_ui(half.get(), half.get(), 2, MPFR_RNDN);
        mpfr_add_ui(half.get(), half.get(), 1, MPFR_RNDN);
        mpfr_add(rhs.get(), rhs.get(), half.get(), MPFR_RNDN);
    }

    Mpfr lhs(kBoundPrecision), slack(kBoundPrecision);
    mpfr_set_z(lhs.get(), scaled.get_mpz_t(), MPFR_RNDN);
    mpfr_set_str(slack.get(), "1e-18", 10, MPFR_RNDN);
    mpfr_add_ui(slack.get(), slack.get(), 1, MPFR_RNDN);
    mpfr_mul(slack.get(), slack.get(), rhs.get(), MPFR_RNDN);
    out.holds = mpfr_lessequal_p(lhs.get(), slack.get()) != 0;

    mpfr_div_ui(lhs.get(), lhs.get(), static_cast<unsigned long>(4 * n), MPFR_RNDN);
    mpfr_div_ui(rhs.get(), rhs.get(), static_cast<unsigned long>(4 * n), MPFR_RNDN);
    out.lhs_decimal = lhs.str(30);
    out.rhs_decimal = rhs.str(30);
    return out;
}

}  // namespace

BoundResult bound_check(unsigned r, std::uint64_t n) { return evaluate_bound(r, n, false); }

BoundResult corrected_bound_check(unsigned r, std::uint64_t n) { return evaluate_bound(r, n, true); }

bool existence(unsigned r, std::uint64_t n) { return count_formula(r, n) >= 1; }

BigInt niederreiter_rhs(std::uint64_t t)
{
    require(t >= 1, ErrorCode::invalid_argument, "binomial identity needs t >= 1");
    BigInt sum = 0;
    BigInt seven_j = 1;
    for (std::uint64_t j = 0; 2 * j <= t; ++j) {
        BigInt binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(t), static_cast<unsigned long>(2 * j));
        BigInt term = binom * seven_j;
        if ((t + j) % 2 == 1) term = -term;
        sum += term;
        seven_j *= 7;
    }
    return exact_div(sum, pow2(t - 1), "binomial identity sum");
}

}  // namespace apoly
