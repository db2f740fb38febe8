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

#ifndef APOLY_ERROR_HPP
#define APOLY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace apoly {

enum class ErrorCode {
    invalid_argument,
    parse_error,
    domain_error,
    division_by_zero,
    cap_exceeded,
    invariant_violation,
    verification_failure,
};

/// Base exception for everything the library throws on purpose. The C API
/// maps `code()` one-to-one onto its status values.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what)
{
    if (!cond) raise(code, what);
}

/// Limit on exhaustive work, expressed as log2 of the number of iterations
/// (q^n = 2^{rn} elements or polynomials). Formula-only paths ignore it.
class WorkCap {
   public:
    static constexpr unsigned kDefault = 24;

    constexpr WorkCap() = default;
    constexpr explicit WorkCap(unsigned log2_limit) : log2_limit_(log2_limit) {}

    constexpr unsigned log2_limit() const noexcept { return log2_limit_; }
    constexpr bool allows(unsigned log2_work) const noexcept { return log2_work <= log2_limit_; }

    void check(unsigned log2_work, const std::string& what) const
    {
        if (!allows(log2_work))
            raise(ErrorCode::cap_exceeded, what + ": 2^" + std::to_string(log2_work) +
                                               " iterations exceeds cap 2^" + std::to_string(log2_limit_));
    }

   private:
    unsigned log2_limit_ = kDefault;
};

}  // namespace apoly

#endif
