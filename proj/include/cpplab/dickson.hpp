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

#ifndef CPPLAB_DICKSON_HPP
#define CPPLAB_DICKSON_HPP

#include <cstdint>
#include <vector>

#include "cpplab/field.hpp"

namespace cpplab {

/// D_n(x, a) by iterating D_0 = 2, D_1 = x, D_{i+2} = x*D_{i+1} - a*D_i.
/// O(n) field multiplications; desk-scale n never warrants a log-time path.
FieldElem dickson_eval(const FieldCtx& ctx, uint64_t n, const FieldElem& x, const FieldElem& a);

/// Same recurrence inside the base field F_{p^m}.
BaseElem dickson_eval(const FieldCtx& ctx, uint64_t n, const BaseElem& x, const BaseElem& a);

/// Coefficient table of D_n = sum_i coeffs[i] * (-a)^i * x^(n-2i),
/// i in [0, n/2]. Each entry is (n/(n-i)) * C(n-i, i) computed exactly over
/// the integers (where it is integral), reduced mod p last.
std::vector<uint32_t> dickson_coeffs(uint32_t p, uint64_t n);

/// D_n(x, a) with a != 0 permutes F_q iff gcd(n, q^2-1) = 1.
bool dickson_is_pp(uint64_t n, uint64_t q);

}  // namespace cpplab

#endif  // CPPLAB_DICKSON_HPP
