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

#include "apoly/curve.hpp"

#include <string>

#include "apoly/counting.hpp"
#include "apoly/numtheory.hpp"
#include "apoly/tower.hpp"

namespace apoly {

std::uint64_t count_affine(unsigned r, unsigned n, const WorkCap& cap)
{
    require(r >= 1 && n >= 1, ErrorCode::invalid_argument, "r and n must be positive");
    cap.check(r * n, "curve point scan");
    const Tower tower = Tower::build(r, n, cap);
    std::uint64_t count = 0;
    for (TElem x = 1; x < tower.size(); ++x)
        if (tower.absolute_trace(x ^ tower.inv(x)) == 0) count += 2;
    return count;
}

std::uint64_t rational_places(unsigned r, unsigned n, const WorkCap& cap)
{
    const std::uint64_t places = count_affine(r, n, cap) + 2;
    const BigInt expected = pow2(r * n) + 1 - lucas_s(std::uint64_t{r} * n);
    if (from_u64(places) != expected)
        raise(ErrorCode::invariant_violation, "rational places over F_{2^" + std::to_string(r * n) +
                                                  "}: scanned " + std::to_string(places) +
                                                  ", L-polynomial predicts " + to_decimal(expected));
    return places;
}

BigInt degree_place_count(unsigned r, unsigned n, const WorkCap& cap)
{
    require(r >= 1 && n >= 1, ErrorCode::invalid_argument, "r and n must be positive");
    cap.check(r * n, "curve point scan");
    BigInt sum = 0;
    for (std::uint64_t d : divisors(n)) {
        const int mu = moebius(n / d);
        if (mu != 0) sum += mu * from_u64(rational_places(r, static_cast<unsigned>(d), cap));
    }
    return exact_div(sum, from_u64(n), "degree-n place inversion");
}

}  // namespace apoly
