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

#ifndef APOLY_CURVE_HPP
#define APOLY_CURVE_HPP

#include <cstdint>

#include "apoly/bigint.hpp"
#include "apoly/error.hpp"

namespace apoly {

// Point counts for the genus-1 function field E: y^2 + y = x + 1/x, over
// F_{q^n}. Two degree-1 places lie over the zero and the pole of x; every
// other degree-1 place is an affine solution with x != 0.

/// #{(x, y) in F_{q^n}^* x F_{q^n} : y^2 + y = x + 1/x}, by scanning x and
/// using that y^2 + y = s is solvable (twice) iff Tr(s) = 0.
std::uint64_t count_affine(unsigned r, unsigned n, const WorkCap& cap = WorkCap{});

/// count_affine + 2, checked against q^n + 1 - s_{rn}; a mismatch throws
/// invariant_violation.
std::uint64_t rational_places(unsigned r, unsigned n, const WorkCap& cap = WorkCap{});

/// (1/n) sum_{d | n} mu(n/d) rational_places(r, d), from scanned counts.
BigInt degree_place_count(unsigned r, unsigned n, const WorkCap& cap = WorkCap{});

}  // namespace apoly

#endif
