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

#include "cpplab/families.hpp"

#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace cpplab {

namespace {

// Scale a base element by the small scalar s.
BaseElem scale(const FieldCtx& ctx, const BaseElem& a, uint32_t s) {
    BaseElem r = a;
    for (uint32_t i = 0; i < ctx.m; ++i) {
        r.c[i] = static_cast<uint32_t>(static_cast<uint64_t>(a.c[i]) * s % ctx.p);
    }
    return r;
}

}  // namespace

FamilySpec make_c1(uint32_t m, QuadModulus variant) {
    FamilySpec spec{FamilyClass::c1, 3, m, 0, variant};
    validate(spec);
    return spec;
}

FamilySpec make_c2(uint32_t m) {
    FamilySpec spec{FamilyClass::c2, 3, m, 0, QuadModulus::x2_plus_2x_plus_2};
    validate(spec);
    return spec;
}

FamilySpec make_c3(uint32_t p, uint32_t m, uint32_t s) {
    FamilySpec spec{FamilyClass::c3, p, m, s, QuadModulus::auto_select};
    validate(spec);
    return spec;
}

void validate(const FamilySpec& spec) {
    require(spec.m >= 1, Errc::hypothesis_violated, "m must be >= 1");
    switch (spec.cls) {
        case FamilyClass::c1:
            require(spec.p == 3, Errc::hypothesis_violated, "class 1 requires p = 3");
            require(spec.m % 2 == 1, Errc::hypothesis_violated, "class 1 requires odd m");
            require(spec.modulus != QuadModulus::auto_select, Errc::hypothesis_violated,
                    "class 1 requires one of the three named quadratic moduli");
            break;
        case FamilyClass::c2:
            require(spec.p == 3, Errc::hypothesis_violated, "class 2 requires p = 3");
            require(spec.m % 2 == 1, Errc::hypothesis_violated, "class 2 requires odd m");
            require(spec.modulus == QuadModulus::x2_plus_2x_plus_2, Errc::hypothesis_violated,
                    "class 2 is tied to the x^2+2x+2 tower");
            break;
        case FamilyClass::c3: {
            require(spec.s >= 1, Errc::hypothesis_violated, "class 3 requires s >= 1");
            BigInt pm1 = bi_pow(spec.p, spec.m) + 1;
            require(boost::multiprecision::gcd(BigInt(2) * spec.s - 1, pm1) == 1,
                    Errc::hypothesis_violated, "gcd(2s-1, p^m+1) != 1");
            require(pm1 % (BigInt(2) * spec.s) == 0, Errc::hypothesis_violated,
                    "2s does not divide p^m+1");
            require(boost::multiprecision::gcd(BigInt(spec.s) - 1, pm1) == 1,
                    Errc::hypothesis_violated, "gcd(s-1, p^m+1) != 1");
            break;
        }
    }
    // Follows from the hypotheses; a failure here is a bug, not bad input.
    BigInt q_minus_1 = family_q(spec) - 1;
    require(boost::multiprecision::gcd(forward_exponent(spec), q_minus_1) == 1,
            Errc::internal_invariant, "forward exponent not coprime to q-1");
}

BigInt forward_exponent(const FamilySpec& spec) {
    switch (spec.cls) {
        case FamilyClass::c1: return bi_pow(3, spec.m) + 2;
        case FamilyClass::c2: return 2 * bi_pow(3, spec.m) + 3;
        case FamilyClass::c3: return BigInt(spec.s) * (bi_pow(spec.p, spec.m) - 1) + 1;
    }
    fail(Errc::invalid_argument, "unknown family class");
}

BigInt family_q(const FamilySpec& spec) { return bi_pow(spec.p, 2 * spec.m); }

FieldCtx make_family_ctx(const FamilySpec& spec, uint64_t max_q) {
    validate(spec);
    return make_ctx(spec.p, spec.m, spec.modulus, max_q);
}

bool ctx_matches(const FieldCtx& ctx, const FamilySpec& spec) {
    if (ctx.p != spec.p || ctx.m != spec.m) return false;
    switch (spec.cls) {
        case FamilyClass::c1:
        case FamilyClass::c2: {
            uint32_t want_c0 = 0, want_c1 = 0;
            switch (spec.modulus) {
                case QuadModulus::x2_plus_1: want_c0 = 1; want_c1 = 0; break;
                case QuadModulus::x2_plus_2x_plus_2: want_c0 = 2; want_c1 = 2; break;
                case QuadModulus::x2_plus_x_plus_2: want_c0 = 2; want_c1 = 1; break;
                case QuadModulus::auto_select: return false;
            }
            return ctx.top_c0 == want_c0 && ctx.top_c1 == want_c1;
        }
        case FamilyClass::c3:
            return true;  // U is modulus-independent
    }
    return false;
}

Monomial make_monomial(const FieldCtx& ctx, const FieldElem& coeff, const BigInt& exponent) {
    require(!coeff.is_zero(), Errc::zero_coefficient, "monomial coefficient must be nonzero");
    BigInt e = mod_floor(exponent, ctx.unit_order);
    require(e != 0, Errc::invalid_argument,
            "monomial exponent is 0 mod q-1; not an evaluable power map here");
    return Monomial{coeff, e};
}

FieldElem eval(const FieldCtx& ctx, const Monomial& mono, const FieldElem& x) {
    return mul(ctx, mono.coeff, pow(ctx, x, mono.exponent));
}

UnitCircle unit_circle(const FieldCtx& ctx) {
    uint64_t order = ctx.q_base + 1;
    FieldElem g = primitive_element(ctx);
    FieldElem u = pow(ctx, g, BigInt(ctx.q_base) - 1);
    require(norm_to_base(ctx, u) == base_one(ctx), Errc::internal_invariant,
            "unit-circle generator has norm != 1");
    require(multiplicative_order(ctx, u) == order, Errc::internal_invariant,
            "unit-circle generator order != p^m + 1");
    return UnitCircle{u, order};
}

bool is_admissible(const FieldCtx& ctx, const FamilySpec& spec, const FieldElem& v) {
    require(ctx_matches(ctx, spec), Errc::hypothesis_violated,
            "context tower does not match the family spec");
    if (v.is_zero()) return false;
    switch (spec.cls) {
        case FamilyClass::c1:
            switch (spec.modulus) {
                case QuadModulus::x2_plus_1:
                    return v.a0.is_zero();
                case QuadModulus::x2_plus_2x_plus_2:
                    return v.a0 == v.a1;
                case QuadModulus::x2_plus_x_plus_2:
                    return v.a1 == scale(ctx, v.a0, 2);
                case QuadModulus::auto_select:
                    return false;
            }
            return false;
        case FamilyClass::c2:
            return v.a0.is_zero() || v.a1 == scale(ctx, v.a0, 2);
        case FamilyClass::c3: {
            if (norm_to_base(ctx, v) != base_one(ctx)) return false;
            // v in U^s iff v^((p^m+1)/s) = 1; s | p^m+1 under the hypotheses.
            uint64_t k = (ctx.q_base + 1) / spec.s;
            return pow(ctx, v, BigInt(k)) != one(ctx);
        }
    }
    return false;
}

std::vector<FieldElem> admissible_v(const FieldCtx& ctx, const FamilySpec& spec) {
    validate(spec);
    require(ctx_matches(ctx, spec), Errc::hypothesis_violated,
            "context tower does not match the family spec");
    std::vector<FieldElem> out;
    for (uint64_t k = 1; k < ctx.q; ++k) {
        FieldElem v = element_at(ctx, k);
        if (is_admissible(ctx, spec, v)) out.push_back(std::move(v));
    }
    return out;
}

Monomial forward_monomial(const FieldCtx& ctx, const FamilySpec& spec, const FieldElem& v) {
    validate(spec);
    require(is_admissible(ctx, spec, v), Errc::inadmissible_coefficient,
            "v is not in the family's admissible set");
    return make_monomial(ctx, inv(ctx, v), forward_exponent(spec));
}

InverseInfo inverse_info(const FamilySpec& spec) {
    validate(spec);
    if (closed_form_applies(spec.cls, spec.p, spec.m, spec.s)) {
        ClosedFormExponent cf = closed_form_exponent(spec.cls, spec.p, spec.m, spec.s);
        return InverseInfo{cf.normalized, cf.raw, InversePath::closed_form, cf.formula};
    }
    BigInt e = mod_inverse(forward_exponent(spec), family_q(spec) - 1);
    return InverseInfo{e, e, InversePath::generic, ""};
}

Monomial inverse_monomial(const FieldCtx& ctx, const FamilySpec& spec, const FieldElem& v) {
    validate(spec);
    require(is_admissible(ctx, spec, v), Errc::inadmissible_coefficient,
            "v is not in the family's admissible set");
    InverseInfo info = inverse_info(spec);
    return make_monomial(ctx, pow(ctx, v, info.exponent), info.exponent);
}

}  // namespace cpplab
