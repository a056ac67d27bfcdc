// Copyright (c) 2026 The cpplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CPPLAB_ERRORS_HPP
#define CPPLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cpplab {

enum class Errc {
    not_prime,
    reducible_modulus,
    unsupported_size,
    division_by_zero,
    internal_invariant,
    not_invertible,
    hypothesis_violated,
    inadmissible_coefficient,
    zero_gamma,
    bad_divisor,
    zero_coefficient,
    invalid_argument,
};

const char* errc_name(Errc code);

/// All library failures are reported through this exception. `code` tells
/// callers (in particular the CLI exit-code mapping) what category of
/// failure occurred.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

inline const char* errc_name(Errc code) {
    switch (code) {
        case Errc::not_prime: return "NotPrime";
        case Errc::reducible_modulus: return "ReducibleModulus";
        case Errc::unsupported_size: return "UnsupportedSize";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::internal_invariant: return "InternalInvariant";
        case Errc::not_invertible: return "NotInvertible";
        case Errc::hypothesis_violated: return "HypothesisViolated";
        case Errc::inadmissible_coefficient: return "InadmissibleCoefficient";
        case Errc::zero_gamma: return "ZeroGamma";
        case Errc::bad_divisor: return "BadDivisor";
        case Errc::zero_coefficient: return "ZeroCoefficient";
        case Errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

}  // namespace cpplab

#endif  // CPPLAB_ERRORS_HPP
