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

#include <algorithm>
#include <map>
#include <random>

#include "cpplab/field.hpp"
#include "test_support.hpp"

using namespace cpplab;
using namespace cpplab::testing;

namespace {

FieldElem elem2(const FieldCtx& ctx, uint32_t a0, uint32_t a1) {
    // m = 1 contexts only
    FieldElem e = zero(ctx);
    e.a0.c[0] = a0;
    e.a1.c[0] = a1;
    return e;
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("context over F_9 with x^2+1") {
    FieldCtx ctx = make_ctx(3, 1, QuadModulus::x2_plus_1);
    CHECK(ctx.q_base == 3);
    CHECK(ctx.q == 9);
    CHECK(ctx.unit_order == 8);
    // degree-1 base modulus is x itself
    CHECK(ctx.base_modulus == std::vector<uint32_t>{0, 1});
    CHECK(ctx.top_c0 == 1);
    CHECK(ctx.top_c1 == 0);
}

TEST_CASE("base modulus is the lex-smallest irreducible") {
    // independent oracle: enumerate monic polynomials in lex order
    // (constant term first) and brute-force-factor each candidate
    auto first_irreducible = [](uint32_t p, uint32_t m) {
        std::vector<uint32_t> c(m, 0);
        while (true) {
            std::vector<uint32_t> f = c;
            f.push_back(1);
            if (brute_force_irreducible(f, p)) return f;
            size_t i = m;
            while (i-- > 0) {
                if (++c[i] < p) break;
                c[i] = 0;
            }
        }
    };
    for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{
             {3, 1}, {3, 3}, {3, 5}, {7, 1}, {5, 3}, {19, 1}}) {
        FieldCtx ctx = make_ctx(p, m, QuadModulus::auto_select);
        CHECK(ctx.base_modulus == first_irreducible(p, m));
    }
    // the cubic over F_3 comes out as x^3 + 2x^2 + 1
    FieldCtx c33 = make_ctx(3, 3, QuadModulus::x2_plus_1);
    CHECK(c33.base_modulus == std::vector<uint32_t>{1, 0, 2, 1});
    CHECK(c33.q == 729);
}

TEST_CASE("paper moduli need odd m when p = 3") {
    auto code = error_code_of([] { make_ctx(3, 2, QuadModulus::x2_plus_1); });
    REQUIRE(code.has_value());
    CHECK(*code == Errc::reducible_modulus);
    // and x^2 - c cannot exist over F_9 either: every unit of F_3 is a square there
    auto code2 = error_code_of([] { make_ctx(3, 2, QuadModulus::auto_select); });
    REQUIRE(code2.has_value());
    CHECK(*code2 == Errc::reducible_modulus);
}

TEST_CASE("auto-selected top modulus is x^2 - c for the smallest nonsquare c") {
    // smallest nonsquares: 2 mod 5, 3 mod 7, 2 mod 19, 3 mod 31
    struct Case {
        uint32_t p, c;
    };
    for (Case tc : {Case{5, 2}, Case{7, 3}, Case{19, 2}, Case{31, 3}}) {
        FieldCtx ctx = make_ctx(tc.p, 1, QuadModulus::auto_select);
        CHECK(ctx.top_c1 == 0);
        CHECK(ctx.top_c0 == tc.p - tc.c);
        // oracle: c really is the smallest unit with no square root
        for (uint32_t cand = 1; cand < tc.c; ++cand) {
            bool has_root = false;
            for (uint32_t r = 1; r < tc.p; ++r) has_root = has_root || (r * r % tc.p == cand);
            CHECK(has_root);
        }
        bool c_has_root = false;
        for (uint32_t r = 1; r < tc.p; ++r) c_has_root = c_has_root || (r * r % tc.p == tc.c);
        CHECK_FALSE(c_has_root);
    }
    // p = 3 lands on x^2 - 2 = x^2 + 1
    FieldCtx f9 = make_ctx(3, 1, QuadModulus::auto_select);
    CHECK(f9.top_c0 == 1);
    CHECK(f9.top_c1 == 0);
}

TEST_CASE("rejects non-primes and even characteristic") {
    CHECK(error_code_of([] { make_ctx(9, 1, QuadModulus::x2_plus_1); }) == Errc::not_prime);
    CHECK(error_code_of([] { make_ctx(2, 1, QuadModulus::x2_plus_1); }) == Errc::not_prime);
    CHECK(error_code_of([] { make_ctx(1, 1, QuadModulus::x2_plus_1); }) == Errc::not_prime);
}

TEST_CASE("rejects q above the sweep cap") {
    CHECK(error_code_of([] { make_ctx(3, 7, QuadModulus::x2_plus_1); }) ==
          Errc::unsupported_size);  // 3^14 > 2^20
}

TEST_CASE("arithmetic facts in F_9, x^2+1 tower") {
    FieldCtx ctx = make_ctx(3, 1, QuadModulus::x2_plus_1);
    FieldElem a = alpha(ctx);
    CHECK(add(ctx, elem2(ctx, 1, 1), elem2(ctx, 2, 1)) == elem2(ctx, 0, 2));
    CHECK(mul(ctx, a, a) == from_int(ctx, 2));
    CHECK(pow(ctx, a, 2) == from_int(ctx, 2));
    CHECK(inv(ctx, a) == elem2(ctx, 0, 2));
    CHECK(frobenius(ctx, a, 1) == neg(ctx, a));  // alpha^3 = -alpha
}

TEST_CASE("arithmetic facts in F_9, x^2+2x+2 tower") {
    FieldCtx ctx = make_ctx(3, 1, QuadModulus::x2_plus_2x_plus_2);
    FieldElem a = alpha(ctx);
    CHECK(mul(ctx, a, a) == elem2(ctx, 1, 1));  // alpha^2 = -2alpha - 2 = 1 + alpha
    CHECK(multiplicative_order(ctx, a) == 8);
    CHECK(primitive_element(ctx) == a);
}

TEST_CASE("primitive element is the first in canonical order") {
    for (FieldCtx ctx : {make_ctx(3, 1, QuadModulus::x2_plus_1),
                         make_ctx(7, 1, QuadModulus::auto_select),
                         make_ctx(3, 3, QuadModulus::x2_plus_1)}) {
        // oracle: brute-force order of every element, take the first maximal
        uint64_t expected_index = 0;
        for (uint64_t k = 1; k < ctx.q; ++k) {
            FieldElem x = element_at(ctx, k);
            FieldElem acc = x;
            uint64_t ord = 1;
            while (!(acc == one(ctx))) {
                acc = mul(ctx, acc, x);
                ++ord;
            }
            if (ord == ctx.q - 1) {
                expected_index = k;
                break;
            }
        }
        REQUIRE(expected_index != 0);
        CHECK(index_of(ctx, primitive_element(ctx)) == expected_index);
    }
    // in the x^2+1 tower over F_9 that element is 1 + alpha
    FieldCtx f9 = make_ctx(3, 1, QuadModulus::x2_plus_1);
    CHECK(primitive_element(f9) == elem2(f9, 1, 1));
    // over F_49 the generator has order 48
    FieldCtx f49 = make_ctx(7, 1, QuadModulus::auto_select);
    CHECK(multiplicative_order(f49, primitive_element(f49)) == 48);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(20260810);
    for (FieldCtx ctx : {make_ctx(3, 3, QuadModulus::x2_plus_1),
                         make_ctx(7, 1, QuadModulus::auto_select),
                         make_ctx(3, 1, QuadModulus::x2_plus_x_plus_2)}) {
        for (int i = 0; i < 300; ++i) {
            FieldElem a = random_elem(ctx, rng);
            FieldElem b = random_elem(ctx, rng);
            FieldElem c = random_elem(ctx, rng);
            CHECK(add(ctx, a, b) == add(ctx, b, a));
            CHECK(mul(ctx, a, b) == mul(ctx, b, a));
            CHECK(add(ctx, add(ctx, a, b), c) == add(ctx, a, add(ctx, b, c)));
            CHECK(mul(ctx, mul(ctx, a, b), c) == mul(ctx, a, mul(ctx, b, c)));
            CHECK(mul(ctx, add(ctx, a, b), c) == add(ctx, mul(ctx, a, c), mul(ctx, b, c)));
            CHECK(add(ctx, a, zero(ctx)) == a);
            CHECK(add(ctx, a, neg(ctx, a)) == zero(ctx));
            CHECK(mul(ctx, a, one(ctx)) == a);
            if (!a.is_zero()) CHECK(mul(ctx, a, inv(ctx, a)) == one(ctx));
        }
    }
}

TEST_CASE("pow basics and Lagrange") {
    for (FieldCtx ctx : {make_ctx(3, 1, QuadModulus::x2_plus_1),
                         make_ctx(7, 1, QuadModulus::auto_select)}) {
        for (uint64_t k = 1; k < ctx.q; ++k) {
            FieldElem a = element_at(ctx, k);
            CHECK(pow(ctx, a, 0) == one(ctx));
            CHECK(pow(ctx, a, BigInt(ctx.q) - 1) == one(ctx));
            CHECK(pow(ctx, a, -1) == inv(ctx, a));
        }
    }
    FieldCtx ctx = make_ctx(3, 1, QuadModulus::x2_plus_1);
    CHECK(pow(ctx, zero(ctx), 5) == zero(ctx));
    CHECK(error_code_of([&] { pow(ctx, zero(ctx), -3); }) == Errc::division_by_zero);
    CHECK(error_code_of([&] { inv(ctx, zero(ctx)); }) == Errc::division_by_zero);
}

TEST_CASE("inverse agrees with the q-2 power route") {
    // exhaustive on F_9 and F_49
    for (FieldCtx ctx : {make_ctx(3, 1, QuadModulus::x2_plus_1),
                         make_ctx(7, 1, QuadModulus::auto_select)}) {
        for (uint64_t k = 1; k < ctx.q; ++k) {
            FieldElem a = element_at(ctx, k);
            CHECK(inv(ctx, a) == pow(ctx, a, BigInt(ctx.q) - 2));
        }
    }
    // 1000 random elements of F_729
    FieldCtx big = make_ctx(3, 3, QuadModulus::x2_plus_1);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        FieldElem a = random_unit(big, rng);
        CHECK(inv(big, a) == pow(big, a, BigInt(big.q) - 2));
    }
}

TEST_CASE("frobenius properties") {
    std::mt19937_64 rng(11);
    for (FieldCtx ctx : {make_ctx(3, 1, QuadModulus::x2_plus_1),
                         make_ctx(3, 3, QuadModulus::x2_plus_2x_plus_2),
                         make_ctx(7, 1, QuadModulus::auto_select)}) {
        for (int i = 0; i < 100; ++i) {
            FieldElem a = random_elem(ctx, rng);
            FieldElem b = random_elem(ctx, rng);
            CHECK(frobenius(ctx, a, 0) == a);
            CHECK(frobenius(ctx, a, 2 * ctx.m) == a);
            CHECK(frobenius(ctx, add(ctx, a, b), 1) ==
                  add(ctx, frobenius(ctx, a, 1), frobenius(ctx, b, 1)));
            CHECK(frobenius(ctx, a, ctx.m) == conjugate(ctx, a));
            CHECK(frobenius(ctx, frobenius(ctx, a, ctx.m), ctx.m) == a);
        }
        // the fixed set of x -> x^(p^m) is exactly the embedded base field
        uint64_t fixed = 0;
        for (uint64_t k = 0; k < ctx.q; ++k) {
            FieldElem x = element_at(ctx, k);
            if (frobenius(ctx, x, ctx.m) == x) {
                ++fixed;
                CHECK(x.a1.is_zero());
            }
        }
        CHECK(fixed == ctx.q_base);
        CHECK(error_code_of([&] { frobenius(ctx, one(ctx), 2 * ctx.m + 1); }) ==
              Errc::invalid_argument);
    }
}

TEST_CASE("trace identities of the two towers") {
    // x^2+1: Tr(alpha) = Tr(alpha^3) = 0, Tr(alpha^2) = 1, Tr(x0+x1*a) = 2*x0
    for (uint32_t m : {1u, 3u}) {
        FieldCtx ctx = make_ctx(3, m, QuadModulus::x2_plus_1);
        FieldElem a = alpha(ctx);
        CHECK(trace_to_base(ctx, a).is_zero());
        CHECK(trace_to_base(ctx, pow(ctx, a, 3)).is_zero());
        CHECK(trace_to_base(ctx, mul(ctx, a, a)) == base_one(ctx));
        for (uint64_t k = 0; k < ctx.q; ++k) {
            FieldElem x = element_at(ctx, k);
            BaseElem expect = add(ctx, x.a0, x.a0);
            CHECK(trace_to_base(ctx, x) == expect);
        }
    }
    // x^2+2x+2: Tr(alpha) = Tr(alpha^3) = 1, Tr(alpha^2) = Tr(alpha^6) = 0,
    // Tr(x0+x1*a) = 2*x0 + x1
    for (uint32_t m : {1u, 3u}) {
        FieldCtx ctx = make_ctx(3, m, QuadModulus::x2_plus_2x_plus_2);
        FieldElem a = alpha(ctx);
        CHECK(trace_to_base(ctx, a) == base_one(ctx));
        CHECK(trace_to_base(ctx, pow(ctx, a, 3)) == base_one(ctx));
        CHECK(trace_to_base(ctx, pow(ctx, a, 2)).is_zero());
        CHECK(trace_to_base(ctx, pow(ctx, a, 6)).is_zero());
        for (uint64_t k = 0; k < ctx.q; ++k) {
            FieldElem x = element_at(ctx, k);
            BaseElem expect = add(ctx, add(ctx, x.a0, x.a0), x.a1);
            CHECK(trace_to_base(ctx, x) == expect);
        }
    }
}

TEST_CASE("trace is linear over the base field") {
    std::mt19937_64 rng(23);
    FieldCtx ctx = make_ctx(3, 3, QuadModulus::x2_plus_1);
    for (int i = 0; i < 200; ++i) {
        FieldElem x = random_elem(ctx, rng);
        FieldElem y = random_elem(ctx, rng);
        BaseElem lam = random_base_elem(ctx, rng);
        BaseElem lhs = trace_to_base(ctx, add(ctx, mul(ctx, embed_base(ctx, lam), x), y));
        BaseElem rhs = add(ctx, mul(ctx, lam, trace_to_base(ctx, x)), trace_to_base(ctx, y));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("absolute trace balance and small values") {
    FieldCtx f9 = make_ctx(3, 1, QuadModulus::x2_plus_1);
    CHECK(abs_trace(f9, zero(f9)) == 0);
    CHECK(abs_trace(f9, one(f9)) == 2);  // 1 + 1 mod 3
    for (FieldCtx ctx : {f9, make_ctx(3, 3, QuadModulus::x2_plus_1),
                         make_ctx(7, 1, QuadModulus::auto_select)}) {
        std::map<uint32_t, uint64_t> counts;
        for (uint64_t k = 0; k < ctx.q; ++k) counts[abs_trace(ctx, element_at(ctx, k))]++;
        REQUIRE(counts.size() == ctx.p);
        for (const auto& [c, n] : counts) CHECK(n == ctx.q / ctx.p);
    }
}

TEST_CASE("norm facts") {
    std::mt19937_64 rng(5);
    for (FieldCtx ctx : {make_ctx(3, 1, QuadModulus::x2_plus_1),
                         make_ctx(3, 3, QuadModulus::x2_plus_1),
                         make_ctx(7, 1, QuadModulus::auto_select)}) {
        CHECK(norm_to_base(ctx, one(ctx)) == base_one(ctx));
        for (int i = 0; i < 100; ++i) {
            FieldElem a = random_elem(ctx, rng);
            FieldElem b = random_elem(ctx, rng);
            CHECK(norm_to_base(ctx, mul(ctx, a, b)) ==
                  mul(ctx, norm_to_base(ctx, a), norm_to_base(ctx, b)));
        }
        uint64_t kernel = 0;
        for (uint64_t k = 1; k < ctx.q; ++k) {
            if (norm_to_base(ctx, element_at(ctx, k)) == base_one(ctx)) ++kernel;
        }
        CHECK(kernel == ctx.q_base + 1);
    }
}

TEST_CASE("enumeration is canonical and total") {
    FieldCtx ctx = make_ctx(3, 3, QuadModulus::x2_plus_1);
    std::vector<FieldElem> all = enumerate_field(ctx);
    REQUIRE(all.size() == ctx.q);
    CHECK(all[0].is_zero());
    for (uint64_t k = 0; k < ctx.q; ++k) {
        CHECK(index_of(ctx, all[k]) == k);
        CHECK(element_at(ctx, k) == all[k]);
    }
    std::vector<BaseElem> base = enumerate_base(ctx);
    REQUIRE(base.size() == ctx.q_base);
    CHECK(base[0].is_zero());
    for (uint64_t k = 0; k < ctx.q_base; ++k) CHECK(base_index_of(ctx, base[k]) == k);
}

TEST_CASE("base-field arithmetic round trips") {
    FieldCtx ctx = make_ctx(3, 3, QuadModulus::x2_plus_1);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        BaseElem a = random_base_elem(ctx, rng);
        BaseElem b = random_base_elem(ctx, rng);
        CHECK(mul(ctx, a, b) == mul(ctx, b, a));
        if (!a.is_zero()) {
            CHECK(mul(ctx, a, inv(ctx, a)) == base_one(ctx));
            CHECK(inv(ctx, inv(ctx, a)) == a);
            CHECK(pow(ctx, a, BigInt(ctx.q_base) - 1) == base_one(ctx));
        }
        // embedding is a homomorphism
        CHECK(embed_base(ctx, mul(ctx, a, b)) ==
              mul(ctx, embed_base(ctx, a), embed_base(ctx, b)));
    }
}

TEST_CASE("discrete-log tables match the element path") {
    std::mt19937_64 rng(99);
    for (FieldCtx ctx : {make_ctx(3, 1, QuadModulus::x2_plus_1),
                         make_ctx(3, 3, QuadModulus::x2_plus_2x_plus_2)}) {
        const MulTables& t = mul_tables(ctx);
        REQUIRE(t.q == ctx.q);
        CHECK(t.log[0] == MulTables::kNoLog);
        CHECK(t.exp[0] == index_of(ctx, one(ctx)));
        FieldElem g = element_at(ctx, t.generator_index);
        CHECK(multiplicative_order(ctx, g) == ctx.q - 1);
        for (int i = 0; i < 300; ++i) {
            uint64_t s = rng() % t.units;
            uint64_t u = rng() % t.units;
            FieldElem a = element_at(ctx, t.exp[s]);
            FieldElem b = element_at(ctx, t.exp[u]);
            CHECK(index_of(ctx, mul(ctx, a, b)) == t.exp[(s + u) % t.units]);
            FieldElem sum = add(ctx, one(ctx), a);
            if (sum.is_zero()) {
                CHECK(t.zech[s] == MulTables::kNoLog);
            } else {
                CHECK(t.zech[s] == t.log[index_of(ctx, sum)]);
            }
        }
        for (uint64_t k = 0; k < ctx.q; ++k) {
            CHECK(t.trace[k] == abs_trace(ctx, element_at(ctx, k)));
        }
    }
}

}  // TEST_SUITE
