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

#ifndef CPPLAB_FIELD_HPP
#define CPPLAB_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cpplab/bigint.hpp"
#include "cpplab/errors.hpp"

namespace cpplab {

/// Exhaustive operations refuse fields larger than this unless the caller
/// raises the cap explicitly.
inline constexpr uint64_t kDefaultSweepCap = uint64_t(1) << 20;

/// Trial-division bound used when factoring group orders.
inline constexpr uint64_t kDefaultFactorBound = 1'000'000;

/// The quadratic used on top of F_{p^m}. The three named choices are the
/// degree-2 irreducibles over F_3; `auto_select` picks x^2 - c for the
/// smallest c that works over the base field.
enum class QuadModulus {
    x2_plus_1,          // x^2 + 1
    x2_plus_2x_plus_2,  // x^2 + 2x + 2
    x2_plus_x_plus_2,   // x^2 + x + 2
    auto_select,
};

const char* quad_modulus_name(QuadModulus v);

/// Element of F_{p^m} in the power basis of base_modulus. coeffs[i]
/// multiplies x^i; all entries reduced mod p; length is exactly m.
struct BaseElem {
    std::vector<uint32_t> c;

    bool operator==(const BaseElem&) const = default;

    bool is_zero() const {
        for (uint32_t v : c)
            if (v) return false;
        return true;
    }
};

/// Element a0 + a1*alpha of F_{p^(2m)}, with alpha a root of the top modulus.
struct FieldElem {
    BaseElem a0, a1;

    bool operator==(const FieldElem&) const = default;

    bool is_zero() const { return a0.is_zero() && a1.is_zero(); }
};

/// Discrete-log tables over the canonical element enumeration: exp/log with
/// respect to the canonical primitive element, Zech logarithms for unit
/// addition, and the absolute trace per element index. Built lazily, shared
/// by all copies of a context.
struct MulTables {
    static constexpr uint32_t kNoLog = UINT32_MAX;

    uint64_t q = 0;
    uint64_t units = 0;                // q - 1
    uint64_t generator_index = 0;      // canonical index of the generator
    std::vector<uint32_t> exp;         // exp[t] = index of g^t, t in [0, units)
    std::vector<uint32_t> log;         // log[index]; kNoLog for the zero element
    std::vector<uint32_t> zech;        // zech[t] = log(1 + g^t); kNoLog when 1 + g^t = 0
    std::vector<uint8_t> trace;        // absolute trace by element index
};

namespace detail {
struct CtxCache;
}

/// Two-level tower description F_p -> F_{p^m} -> F_{p^(2m)}. Immutable after
/// construction and safe to share across threads; all operations are pure
/// functions of (ctx, operands).
class FieldCtx {
  public:
    uint32_t p = 0;
    uint32_t m = 0;
    std::vector<uint32_t> base_modulus;  // monic, degree m, constant term first (length m+1)
    QuadModulus top_choice = QuadModulus::auto_select;
    uint32_t top_c0 = 0, top_c1 = 0;     // top modulus x^2 + top_c1*x + top_c0 over F_p
    uint64_t q_base = 0;                 // p^m
    uint64_t q = 0;                      // p^(2m)
    BigInt unit_order;                   // q - 1
    uint64_t max_q = kDefaultSweepCap;
    uint64_t factor_bound = kDefaultFactorBound;

    const MulTables& tables() const;

  private:
    FieldCtx() = default;
    friend FieldCtx make_ctx(uint32_t, uint32_t, QuadModulus, uint64_t, uint64_t);

    std::shared_ptr<detail::CtxCache> cache_;
};

/// Builds a validated context. The base modulus is the lexicographically
/// smallest monic irreducible of degree m over F_p (coefficient tuples
/// compared constant term first).
FieldCtx make_ctx(uint32_t p, uint32_t m, QuadModulus top,
                  uint64_t max_q = kDefaultSweepCap,
                  uint64_t factor_bound = kDefaultFactorBound);

// Constants and conversions ------------------------------------------------

FieldElem zero(const FieldCtx& ctx);
FieldElem one(const FieldCtx& ctx);
FieldElem alpha(const FieldCtx& ctx);
FieldElem from_int(const FieldCtx& ctx, int64_t v);
FieldElem embed_base(const FieldCtx& ctx, const BaseElem& b);
BaseElem base_zero(const FieldCtx& ctx);
BaseElem base_one(const FieldCtx& ctx);
BaseElem base_from_int(const FieldCtx& ctx, int64_t v);

// Arithmetic in F_{p^(2m)} ---------------------------------------------------

FieldElem add(const FieldCtx& ctx, const FieldElem& a, const FieldElem& b);
FieldElem sub(const FieldCtx& ctx, const FieldElem& a, const FieldElem& b);
FieldElem neg(const FieldCtx& ctx, const FieldElem& a);
FieldElem mul(const FieldCtx& ctx, const FieldElem& a, const FieldElem& b);

/// Multiplicative inverse via the conjugate/norm route (polynomial extended
/// gcd underneath); must agree with pow(a, q-2), which tests cross-check.
FieldElem inv(const FieldCtx& ctx, const FieldElem& a);

/// a^e with e arbitrary precision; negative e is normalized mod q-1 and
/// requires a != 0.
FieldElem pow(const FieldCtx& ctx, const FieldElem& a, const BigInt& e);
FieldElem pow(const FieldCtx& ctx, const FieldElem& a, int64_t e);

/// a^(p^k), 0 <= k <= 2m.
FieldElem frobenius(const FieldCtx& ctx, const FieldElem& a, uint32_t k);

/// a^(p^m) computed coordinate-wise in one step (the nontrivial automorphism
/// over the base field). frobenius(a, m) must agree; tests cross-check.
FieldElem conjugate(const FieldCtx& ctx, const FieldElem& a);

/// Tr over the base field: x + x^(p^m). The alpha-part of the sum must
/// vanish; a nonzero one indicates an arithmetic bug.
BaseElem trace_to_base(const FieldCtx& ctx, const FieldElem& x);

/// Absolute trace Tr down to F_p, computed as trace of trace.
uint32_t abs_trace(const FieldCtx& ctx, const FieldElem& x);

/// x * x^(p^m) = x^(p^m + 1), asserted to lie in the base field.
BaseElem norm_to_base(const FieldCtx& ctx, const FieldElem& x);

// Arithmetic in F_{p^m} ------------------------------------------------------

BaseElem add(const FieldCtx& ctx, const BaseElem& a, const BaseElem& b);
BaseElem sub(const FieldCtx& ctx, const BaseElem& a, const BaseElem& b);
BaseElem neg(const FieldCtx& ctx, const BaseElem& a);
BaseElem mul(const FieldCtx& ctx, const BaseElem& a, const BaseElem& b);
BaseElem inv(const FieldCtx& ctx, const BaseElem& a);
BaseElem pow(const FieldCtx& ctx, const BaseElem& a, const BigInt& e);
BaseElem pow(const FieldCtx& ctx, const BaseElem& a, int64_t e);

/// Absolute trace of the base field, Tr from F_{p^m} down to F_p.
uint32_t abs_trace(const FieldCtx& ctx, const BaseElem& x);

// Enumeration ----------------------------------------------------------------
//
// The canonical order sorts elements by the tuple (a1[0..m), a0[0..m))
// compared position by position, constant term first; index 0 is the zero
// element. Reports, sweeps and primitive-element search all use this order.

uint64_t index_of(const FieldCtx& ctx, const FieldElem& x);
FieldElem element_at(const FieldCtx& ctx, uint64_t index);
uint64_t base_index_of(const FieldCtx& ctx, const BaseElem& x);
BaseElem base_element_at(const FieldCtx& ctx, uint64_t index);

/// All q elements, canonical order.
std::vector<FieldElem> enumerate_field(const FieldCtx& ctx);

/// All p^m base-field elements, canonical order.
std::vector<BaseElem> enumerate_base(const FieldCtx& ctx);

// Multiplicative structure ---------------------------------------------------

/// First element in canonical order whose multiplicative order is q-1.
FieldElem primitive_element(const FieldCtx& ctx);

/// Exact multiplicative order of a nonzero element.
uint64_t multiplicative_order(const FieldCtx& ctx, const FieldElem& x);

/// Shared discrete-log tables for the context (built on first use).
inline const MulTables& mul_tables(const FieldCtx& ctx) { return ctx.tables(); }

/// Compact rendering "[[a0...],[a1...]]" used in text reports and messages.
std::string to_string(const FieldCtx& ctx, const FieldElem& x);
std::string to_string(const FieldCtx& ctx, const BaseElem& x);

}  // namespace cpplab

#endif  // CPPLAB_FIELD_HPP
