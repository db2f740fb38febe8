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

#ifndef APOLY_SUITES_HPP
#define APOLY_SUITES_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "apoly/error.hpp"

namespace apoly {

/// Ranges for the verification suites. Zero means "suite default".
struct SuiteParams {
    unsigned r = 0;          // kloosterman: single base degree (0 = all with rn <= max_rn)
    unsigned max_r = 0;      // bound, existence, oracles (formula side): default 8
    unsigned max_n = 0;      // bound, existence, oracles: default 64; kloosterman with r: default 12
    unsigned max_rn = 0;     // kloosterman: 16, curve: 20, oracles (exhaustive side): 20
    unsigned max_t = 0;      // identity: 200
    unsigned max_chars = 0;  // kloosterman: see select_characters
    WorkCap cap{};
};

struct SuiteOutcome {
    bool pass = false;
    std::size_t cases = 0;
    /// Suite-specific summary plus "failures" (first 64 offending cases).
    nlohmann::json detail = nlohmann::json::object();
};

bool is_suite_name(std::string_view name);
/// One of "kloosterman", "curve", "identity", "bound", "existence", "oracles".
SuiteOutcome run_suite(std::string_view name, const SuiteParams& params);

SuiteOutcome suite_identity(unsigned max_t);
SuiteOutcome suite_existence(unsigned max_r, unsigned max_n);
SuiteOutcome suite_bound(unsigned max_r, unsigned max_n);
SuiteOutcome suite_curve(unsigned max_rn, const WorkCap& cap);
SuiteOutcome suite_oracles(unsigned max_rn, unsigned max_r, unsigned max_n, const WorkCap& cap);
/// r == 0: every (r, n) with rn <= max_rn; otherwise that r with n <= max_n.
SuiteOutcome suite_kloosterman(unsigned r, unsigned max_n, unsigned max_rn, unsigned max_chars, const WorkCap& cap);

}  // namespace apoly

#endif
