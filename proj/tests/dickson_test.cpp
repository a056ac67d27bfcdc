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

#include <doctest.h>

#include <set>

#include "cpplab/dickson.hpp"
#include "test_support.hpp"

using namespace cpplab;
using namespace cpplab::testing;

TEST_SUITE("dickson") {

TEST_CASE("initial values and the degree-3 and degree-5 shapes over F_9") {
    FieldCtx ctx = make_ctx(3, 1, QuadModulus::x2_plus_1);
    for (uint64_t i = 0; i < ctx.q; ++i) {
        FieldElem x = element_at(ctx, i);
        for (uint64_t j = 0; j < ctx.q; ++j) {
            FieldElem a = element_at(ctx, j);
            CHECK(dickson_eval(ctx, 0, x, a) == from_int(ctx, 2));
            CHECK(dickson_eval(ctx, 1, x, a) == x);
            // D_3 = x^3 in characteristic 3, for every parameter a
            CHECK(dickson_eval(ctx, 3, x, a) == pow(ctx, x, 3));
            // D_5 = x^5 + a x^3 - a^2 x
            FieldElem expect =
                add(ctx, pow(ctx, x, 5),
                    sub(ctx, mul(ctx, a, pow(ctx, x, 3)),
                        mul(ctx, mul(ctx, a, a), x)));
            CHECK(dickson_eval(ctx, 5, x, a) == expect);
        }
    }
}

TEST_CASE("coefficient tables for small n") {
    CHECK(dickson_coeffs(3, 1) == std::vector<uint32_t>{1});
    // D_2 = x^2 - 2a: multiplier of (-a)^1 is 2
    CHECK(dickson_coeffs(3, 2) == std::vector<uint32_t>{1, 2});
    // D_4 = x^4 - a x^2 + 2a^2; the trailing term is a constant, not 2a^2*x
    CHECK(dickson_coeffs(3, 4) == std::vector<uint32_t>{1, 1, 2});
    CHECK(dickson_coeffs(3, 5) == std::vector<uint32_t>{1, 2, 2});
}

TEST_CASE("closed form agrees with the recurrence for n <= 50, p in {3, 7}") {
    for (uint32_t p : {3u, 7u}) {
        auto table = dickson_recurrence_table(p, 50);
        for (uint64_t n = 1; n <= 50; ++n) {
            std::vector<uint32_t> coeffs = dickson_coeffs(p, n);
            BivariatePoly expect;
            for (uint64_t i = 0; i < coeffs.size(); ++i) {
                // coeffs[i] multiplies (-a)^i x^(n-2i)
                uint32_t signed_c =
                    (i % 2 == 0) ? coeffs[i] : static_cast<uint32_t>((p - coeffs[i]) % p);
                if (signed_c) expect[{n - 2 * i, i}] = signed_c;
            }
            CHECK(expect == table[n]);
        }
    }
}

TEST_CASE("the two printed-form discrepancies resolve toward the recurrence") {
    // The recurrence's D_4 ends in the constant 2a^2 and has no x^1 term.
    auto table3 = dickson_recurrence_table(3, 4);
    CHECK(table3[4].count({1, 2}) == 0);
    REQUIRE(table3[4].count({0, 2}) == 1);
    CHECK(table3[4][{0, 2}] == 2);
    // And the coefficient fraction must be n/(n-i): the flipped orientation
    // (n-i)/n already fails integrality at n = 2, i = 1.
    CHECK((2 - 1) % 2 != 0);            // (n-i)*C(n-i,i) = 1 not divisible by n = 2
    CHECK(dickson_coeffs(3, 2)[1] == 2);  // while n/(n-i)*C(n-i,i) = 2 matches D_2
}

TEST_CASE("permutation criterion versus gcd") {
    CHECK(dickson_is_pp(5, 3));
    CHECK(dickson_is_pp(5, 27));
    CHECK_FALSE(dickson_is_pp(2, 9));
    CHECK_FALSE(dickson_is_pp(2, 27));
    CHECK(dickson_is_pp(7, 9));  // gcd(7, 80) = 1
}

TEST_CASE("criterion matches exhaustive bijectivity over F_9 and F_27") {
    // F_9 is a full tower field; F_27 is the base field of the (3, 3) tower.
    FieldCtx f9 = make_ctx(3, 1, QuadModulus::x2_plus_1);
    for (uint64_t n = 1; n <= 30; ++n) {
        bool expect = dickson_is_pp(n, 9);
        for (uint64_t j = 1; j < f9.q; ++j) {
            FieldElem a = element_at(f9, j);
            std::set<uint64_t> image;
            for (uint64_t i = 0; i < f9.q; ++i) {
                image.insert(index_of(f9, dickson_eval(f9, n, element_at(f9, i), a)));
            }
            CHECK((image.size() == f9.q) == expect);
        }
    }
    FieldCtx t33 = make_ctx(3, 3, QuadModulus::x2_plus_1);
    for (uint64_t n = 1; n <= 30; ++n) {
        bool expect = dickson_is_pp(n, 27);
        for (uint64_t j = 1; j < t33.q_base; ++j) {
            BaseElem a = base_element_at(t33, j);
            std::set<uint64_t> image;
            for (uint64_t i = 0; i < t33.q_base; ++i) {
                image.insert(
                    base_index_of(t33, dickson_eval(t33, n, base_element_at(t33, i), a)));
            }
            CHECK((image.size() == t33.q_base) == expect);
        }
    }
}

TEST_CASE("base-field and embedded evaluation agree") {
    FieldCtx ctx = make_ctx(3, 3, QuadModulus::x2_plus_1);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        BaseElem x = random_base_elem(ctx, rng);
        BaseElem a = random_base_elem(ctx, rng);
        uint64_t n = rng() % 40;
        CHECK(embed_base(ctx, dickson_eval(ctx, n, x, a)) ==
              dickson_eval(ctx, n, embed_base(ctx, x), embed_base(ctx, a)));
    }
}

TEST_CASE("functional equation in the quadratic extension of F_9") {
    FieldCtx ctx = make_ctx(3, 1, QuadModulus::x2_plus_1);
    QuadExt ext(ctx);
    std::vector<QuadExt::Elem> all = ext.enumerate();
    for (uint64_t j = 1; j < ctx.q; ++j) {
        FieldElem a = element_at(ctx, j);
        QuadExt::Elem ea = ext.embed(a);
        for (const QuadExt::Elem& y : all) {
            if (ext.is_zero(y)) continue;
            QuadExt::Elem y_inv = ext.inv_(y);
            QuadExt::Elem arg = ext.add_(y, ext.mul_(ea, y_inv));
            for (uint64_t n = 0; n <= 12; ++n) {
                QuadExt::Elem lhs = ext.dickson(n, arg, ea);
                QuadExt::Elem rhs = ext.add_(
                    ext.pow_(y, n), ext.mul_(ext.embed(pow(ctx, a, BigInt(n))),
                                             ext.pow_(y_inv, n)));
                CHECK(lhs == rhs);
            }
        }
    }
}

}  // TEST_SUITE
