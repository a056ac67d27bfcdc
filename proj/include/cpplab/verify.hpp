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

#ifndef CPPLAB_VERIFY_HPP
#define CPPLAB_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cpplab/families.hpp"
#include "cpplab/field.hpp"

namespace cpplab {

using ElemFn = std::function<FieldElem(const FieldElem&)>;
using BaseFn = std::function<BaseElem(const BaseElem&)>;

/// Exhaustive image check over the full field F_{p^(2m)}: true iff the map
/// hits q distinct values. Elements are visited in canonical order so
/// failure witnesses are reproducible.
bool is_permutation(const FieldCtx& ctx, const ElemFn& f);

/// Same check over the base field F_{p^m}.
bool is_permutation_on_base(const FieldCtx& ctx, const BaseFn& f);

/// f and f + x both bijective, checked exhaustively.
bool is_cpp(const FieldCtx& ctx, const Monomial& mono);

/// Both compositions of the two monomials equal the identity on every point.
bool composition_is_identity(const FieldCtx& ctx, const Monomial& f, const Monomial& g);

/// Occurrence counts of the absolute trace of gamma*f(x). The character sum
/// vanishes iff every residue class occurs exactly q/p times; integer counts
/// only, no complex arithmetic anywhere.
struct CharSumCounts {
    std::vector<uint64_t> counts;  // length p
    bool vanishes = false;
};

CharSumCounts char_sum_uniformity(const FieldCtx& ctx, const ElemFn& f, const FieldElem& gamma);
CharSumCounts char_sum_uniformity_on_base(const FieldCtx& ctx, const BaseFn& f,
                                          const BaseElem& gamma);

/// Character-sum permutation criterion: counts uniform for every nonzero
/// gamma. Must agree with is_permutation.
bool pp_by_char_sums(const FieldCtx& ctx, const ElemFn& f);
bool pp_by_char_sums_on_base(const FieldCtx& ctx, const BaseFn& f);

/// Two-condition criterion for x^((q-1)/d + 1) + a*x with d | q-1, a != 0,
/// phrased via the primitive d-th root of unity zeta = g^((q-1)/d).
/// A zero denominator a + zeta^j makes the condition-(ii) ratio undefined;
/// such pairs cannot realize the forbidden equality and count as satisfied.
bool wan_check(const FieldCtx& ctx, uint64_t d, const FieldElem& a);

/// Empirical probe: all v != 0 for which v^(-1) x^d is a CPP, by exhaustive
/// check over the q-1 candidates. Requires gcd(d, q-1) = 1. Canonical order.
std::vector<FieldElem> cpp_scan(const FieldCtx& ctx, const BigInt& d);

struct VerifyRow {
    FieldElem v;
    bool is_pp = false;
    bool is_cpp = false;
    bool composition_ok = false;
    bool inverse_is_cpp = false;
    std::optional<bool> char_sum_ok;  // empty when the check was skipped
    std::optional<bool> wan_ok;       // c3 only

    bool pass() const {
        return is_pp && is_cpp && composition_ok && inverse_is_cpp &&
               char_sum_ok.value_or(true) && wan_ok.value_or(true);
    }
};

struct VerifyReport {
    FamilySpec spec;
    BigInt d;  // symbolic forward exponent
    InverseInfo inverse;
    bool inverse_matches_generic = false;  // closed form == mod_inverse(d, q-1)
    uint64_t admissible_count = 0;
    bool expected_count_ok = false;
    std::vector<VerifyRow> rows;
    std::optional<bool> cpp_scan_superset_ok;  // empty when the scan was skipped
    uint64_t cpp_scan_count = 0;
    bool all_pass = false;
    std::optional<uint64_t> first_failure;  // row index of the witnessing v
    double elapsed_ms = 0.0;
};

struct VerifyOptions {
    unsigned workers = 1;
    enum class CharSums { automatic, always, never };
    CharSums char_sums = CharSums::automatic;
    uint64_t char_sum_cap = 4096;  // automatic mode runs char sums iff q <= cap
    bool run_scan = true;
};

/// Runs every per-coefficient check for the family over its full admissible
/// set: bijectivity of f and f + x, composition with the closed-form inverse
/// on all q points, inverse exponent against the generic route, character-sum
/// agreement (capped), the two-condition criterion for c3, CPP-ness of the
/// inverse monomial, and the admissible-set-inside-scan probe.
VerifyReport verify_family(const FieldCtx& ctx, const FamilySpec& spec,
                           const VerifyOptions& opts = {});

}  // namespace cpplab

#endif  // CPPLAB_VERIFY_HPP
