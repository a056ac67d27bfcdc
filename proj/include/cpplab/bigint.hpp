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

#ifndef CPPLAB_BIGINT_HPP
#define CPPLAB_BIGINT_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "cpplab/errors.hpp"

namespace cpplab {

/// Exponents and exponent-ring arithmetic are arbitrary precision throughout;
/// the closed-form inverse exponents are evaluated symbolically before any
/// reduction happens.
using BigInt = boost::multiprecision::cpp_int;

/// base^exp over the integers.
inline BigInt bi_pow(uint64_t base, uint32_t exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

/// Non-negative remainder of a mod n (n > 0).
inline BigInt mod_floor(const BigInt& a, const BigInt& n) {
    BigInt r = a % n;
    if (r < 0) r += n;
    return r;
}

inline uint64_t to_u64(const BigInt& v, const char* what) {
    require(v >= 0 && v <= BigInt(UINT64_MAX), Errc::unsupported_size,
            std::string(what) + " does not fit in 64 bits");
    return static_cast<uint64_t>(v);
}

inline std::string dec_string(const BigInt& v) { return v.str(); }

}  // namespace cpplab

#endif  // CPPLAB_BIGINT_HPP
