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

#ifndef CPPLAB_FAMILIES_HPP
#define CPPLAB_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cpplab/field.hpp"
#include "cpplab/modring.hpp"

namespace cpplab {

/// Parameters of one monomial family instance. The modulus is part of the
/// family identity for c1/c2 (the admissible set is coordinate-defined);
/// c3 carries no modulus preference and runs over an auto-selected tower.
struct FamilySpec {
    FamilyClass cls = FamilyClass::c1;
    uint32_t p = 3;
    uint32_t m = 1;
    uint32_t s = 0;  // c3 only
    QuadModulus modulus = QuadModulus::x2_plus_1;
};

FamilySpec make_c1(uint32_t m, QuadModulus variant = QuadModulus::x2_plus_1);
FamilySpec make_c2(uint32_t m);
FamilySpec make_c3(uint32_t p, uint32_t m, uint32_t s);

/// Checks every class hypothesis; throws HypothesisViolated naming the failed
/// condition. Also asserts gcd(d, q-1) = 1, which the hypotheses imply.
void validate(const FamilySpec& spec);

/// The forward exponent d before reduction: 3^m + 2, 2*3^m + 3, or
/// s(p^m - 1) + 1.
BigInt forward_exponent(const FamilySpec& spec);

/// p^(2m).
BigInt family_q(const FamilySpec& spec);

/// Context with the modulus variant the family requires (auto for c3).
FieldCtx make_family_ctx(const FamilySpec& spec, uint64_t max_q = kDefaultSweepCap);

/// True when ctx's tower is usable for this family (the c1/c2 coordinate
/// rules only mean what they should over their own modulus).
bool ctx_matches(const FieldCtx& ctx, const FamilySpec& spec);

/// The evaluable object c * x^e. The exponent is kept reduced mod q-1, in
/// [1, q-1); the coefficient is nonzero.
struct Monomial {
    FieldElem coeff;
    BigInt exponent;
};

Monomial make_monomial(const FieldCtx& ctx, const FieldElem& coeff, const BigInt& exponent);
FieldElem eval(const FieldCtx& ctx, const Monomial& mono, const FieldElem& x);

/// Generator of U = {u : u * u^(p^m) = 1}, the norm-one subgroup of order
/// p^m + 1, as a power of the canonical primitive element.
struct UnitCircle {
    FieldElem generator;
    uint64_t order = 0;
};

UnitCircle unit_circle(const FieldCtx& ctx);

/// Membership test for the family's admissible coefficient set.
bool is_admissible(const FieldCtx& ctx, const FamilySpec& spec, const FieldElem& v);

/// The admissible set in canonical enumeration order. Cardinalities:
/// 3^m - 1 (c1), 2(3^m - 1) (c2), (p^m + 1)(s - 1)/s (c3).
std::vector<FieldElem> admissible_v(const FieldCtx& ctx, const FamilySpec& spec);

/// v^(-1) x^d for admissible v.
Monomial forward_monomial(const FieldCtx& ctx, const FamilySpec& spec, const FieldElem& v);

/// The inverse exponent and which route produced it.
struct InverseInfo {
    BigInt exponent;  // normalized into [0, q-1)
    BigInt raw;       // symbolic value before normalization (may be negative)
    InversePath path = InversePath::generic;
    std::string formula;  // empty for the generic route
};

InverseInfo inverse_info(const FamilySpec& spec);

/// v^e x^e with e the inverse exponent; composes with forward_monomial to
/// the identity on all of F_q.
Monomial inverse_monomial(const FieldCtx& ctx, const FamilySpec& spec, const FieldElem& v);

}  // namespace cpplab

#endif  // CPPLAB_FAMILIES_HPP
