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

#include "apoly/numtheory.hpp"

#include <algorithm>
#include <string>

#include "apoly/error.hpp"

namespace apoly {

namespace {

void check_positive(std::uint64_t n)
{
    require(n >= 1, ErrorCode::invalid_argument, "argument must be a positive integer");
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    check_positive(n);
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    check_positive(n);
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int moebius(std::uint64_t n)
{
    check_positive(n);
    int mu = 1;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

std::uint64_t sigma0(std::uint64_t n) { return divisors(n).size(); }

TwoAdic split_two_adic(std::uint64_t n)
{
    check_positive(n);
    TwoAdic t;
    while (n % 2 == 0) {
        n /= 2;
        ++t.k;
    }
    t.odd = n;
    return t;
}

}  // namespace apoly
