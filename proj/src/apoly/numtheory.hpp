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

#ifndef APOLY_NUMTHEORY_HPP
#define APOLY_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

namespace apoly {

/// Distinct prime factors in increasing order, by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);
int moebius(std::uint64_t n);
/// Number of positive divisors.
std::uint64_t sigma0(std::uint64_t n);

/// n = 2^k * m with m odd.
struct TwoAdic {
    unsigned k = 0;
    std::uint64_t odd = 1;
};
TwoAdic split_two_adic(std::uint64_t n);

}  // namespace apoly

#endif
