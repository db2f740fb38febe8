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

#ifndef APOLY_BIGINT_HPP
#define APOLY_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "apoly/error.hpp"

namespace apoly {

using BigInt = mpz_class;

inline BigInt pow2(unsigned long e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline BigInt from_u64(std::uint64_t v)
{
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// num / den, throwing invariant_violation when the division leaves a
/// remainder. Every closed-form count divides through this.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const std::string& what)
{
    require(den != 0, ErrorCode::division_by_zero, what + ": zero divisor");
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        raise(ErrorCode::invariant_violation,
              what + ": " + to_decimal(num) + " is not divisible by " + to_decimal(den));
    return q;
}

}  // namespace apoly

#endif
