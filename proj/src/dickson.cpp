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

#include "cpplab/dickson.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace cpplab {

namespace {

template <typename Elem, typename MulFn, typename SubFn>
Elem dickson_iterate(uint64_t n, const Elem& x, const Elem& a, const Elem& two, MulFn&& mul_fn,
                     SubFn&& sub_fn) {
    if (n == 0) return two;
    Elem prev = two;  // D_0
    Elem cur = x;     // D_1
    for (uint64_t i = 1; i < n; ++i) {
        Elem next = sub_fn(mul_fn(x, cur), mul_fn(a, prev));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

FieldElem dickson_eval(const FieldCtx& ctx, uint64_t n, const FieldElem& x, const FieldElem& a) {
    return dickson_iterate(
        n, x, a, from_int(ctx, 2),
        [&](const FieldElem& u, const FieldElem& v) { return mul(ctx, u, v); },
        [&](const FieldElem& u, const FieldElem& v) { return sub(ctx, u, v); });
}

BaseElem dickson_eval(const FieldCtx& ctx, uint64_t n, const BaseElem& x, const BaseElem& a) {
    return dickson_iterate(
        n, x, a, base_from_int(ctx, 2),
        [&](const BaseElem& u, const BaseElem& v) { return mul(ctx, u, v); },
        [&](const BaseElem& u, const BaseElem& v) { return sub(ctx, u, v); });
}

std::vector<uint32_t> dickson_coeffs(uint32_t p, uint64_t n) {
    require(n >= 1, Errc::invalid_argument, "dickson_coeffs needs n >= 1");
    std::vector<uint32_t> out(n / 2 + 1);
    for (uint64_t i = 0; i <= n / 2; ++i) {
        // binom = C(n-i, i)
        BigInt binom = 1;
        for (uint64_t k = 1; k <= i; ++k) {
            binom *= BigInt(n - i - k + 1);
            binom /= BigInt(k);
        }
        BigInt numer = BigInt(n) * binom;
        require(numer % BigInt(n - i) == 0, Errc::internal_invariant,
                "n/(n-i) * C(n-i, i) is not integral");
        BigInt coeff = numer / BigInt(n - i);
        out[i] = static_cast<uint32_t>(coeff % p);
    }
    return out;
}

bool dickson_is_pp(uint64_t n, uint64_t q) {
    require(n >= 1, Errc::invalid_argument, "dickson_is_pp needs n >= 1");
    BigInt order = BigInt(q) * q - 1;
    return boost::multiprecision::gcd(BigInt(n), order) == 1;
}

}  // namespace cpplab
