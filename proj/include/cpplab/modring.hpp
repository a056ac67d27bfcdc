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

#ifndef CPPLAB_MODRING_HPP
#define CPPLAB_MODRING_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cpplab/bigint.hpp"

namespace cpplab {

/// The three monomial families. c1: x^(3^m + 2) with v = v1*alpha;
/// c2: x^(2*3^m + 3); c3: x^(s(p^m - 1) + 1) with v on the unit circle.
enum class FamilyClass { c1, c2, c3 };

const char* family_class_name(FamilyClass cls);

/// Which route produced an inverse exponent.
enum class InversePath { closed_form, generic };

struct ExtGcdResult {
    BigInt g, u, w;  // u*a + w*b == g == gcd(a, b) > 0
};

/// Extended Euclid; inputs may be negative, not both zero.
ExtGcdResult ext_gcd(const BigInt& a, const BigInt& b);

/// Inverse of a in Z_n, in [1, n). Requires gcd(a mod n, n) = 1.
BigInt mod_inverse(const BigInt& a, const BigInt& n);

/// Factorization by trial division up to `bound`. A cofactor below bound^2 is
/// necessarily prime and gets included; anything larger is refused.
std::vector<std::pair<BigInt, unsigned>> trial_factor(const BigInt& n, uint64_t bound);

/// A closed-form inverse exponent: the symbolic value evaluated over the
/// integers (possibly negative), its normalization into [0, q-1), and the
/// formula it came from.
struct ClosedFormExponent {
    BigInt raw;
    BigInt normalized;
    std::string formula;
};

/// Whether a closed form is available for these family parameters (c1 and c2
/// always; c3 only for s = 2 with p = 3 or p = 7 mod 12).
bool closed_form_applies(FamilyClass cls, uint32_t p, uint32_t m, uint32_t s);

/// The closed-form inverse exponent for the family's forward exponent,
/// reduced mod p^(2m) - 1. Throws HypothesisViolated when no closed form
/// covers the parameters.
ClosedFormExponent closed_form_exponent(FamilyClass cls, uint32_t p, uint32_t m, uint32_t s);

}  // namespace cpplab

#endif  // CPPLAB_MODRING_HPP
