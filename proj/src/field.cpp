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

#include "cpplab/field.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <sstream>

#include "cpplab/modring.hpp"

namespace cpplab {

namespace detail {
struct CtxCache {
    std::once_flag once;
    std::unique_ptr<MulTables> tables;
};
}  // namespace detail

namespace {

// ---------------------------------------------------------------------------
// Small integer helpers
// ---------------------------------------------------------------------------

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t n) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % n);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t n) {
    uint64_t r = 1 % n;
    a %= n;
    while (e) {
        if (e & 1u) r = mulmod_u64(r, a, n);
        a = mulmod_u64(a, a, n);
        e >>= 1u;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n % d == 0) return n == d;
    }
    for (uint64_t d = 11; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Dense polynomial arithmetic over F_p (used for the base field and for the
// irreducibility search). Vectors may carry trailing zeros; deg() ignores
// them.
// ---------------------------------------------------------------------------

using Poly = std::vector<uint32_t>;

int poly_deg(const Poly& a) {
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i]) return static_cast<int>(i);
    }
    return -1;
}

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_sub(const Poly& a, const Poly& b, uint32_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t av = i < a.size() ? a[i] : 0;
        uint64_t bv = i < b.size() ? b[i] : 0;
        r[i] = static_cast<uint32_t>((av + p - bv) % p);
    }
    poly_trim(r);
    return r;
}

// Reduce in place by a monic modulus f (constant term first, f.back() == 1).
void poly_reduce(std::vector<uint64_t>& acc, const Poly& f, uint32_t p) {
    size_t m = f.size() - 1;
    for (size_t i = acc.size(); i-- > m;) {
        uint64_t c = acc[i] % p;
        acc[i] = 0;
        if (!c) continue;
        for (size_t j = 0; j < m; ++j) {
            acc[i - m + j] = (acc[i - m + j] + c * (p - f[j])) % p;
        }
    }
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
    size_t m = f.size() - 1;
    if (poly_deg(a) < 0 || poly_deg(b) < 0) return Poly{};
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            acc[i + j] = (acc[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
        }
    }
    poly_reduce(acc, f, p);
    Poly r(std::min(acc.size(), m), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = static_cast<uint32_t>(acc[i] % p);
    poly_trim(r);
    return r;
}

Poly poly_mod(const Poly& a, const Poly& f, uint32_t p) {
    std::vector<uint64_t> acc(a.begin(), a.end());
    if (acc.size() >= f.size()) poly_reduce(acc, f, p);
    Poly r(std::min(acc.size(), f.size() - 1), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = static_cast<uint32_t>(acc[i] % p);
    poly_trim(r);
    return r;
}

Poly poly_powmod(const Poly& base, uint64_t e, const Poly& f, uint32_t p) {
    Poly result{1};
    Poly b = poly_mod(base, f, p);
    while (e) {
        if (e & 1u) result = poly_mulmod(result, b, f, p);
        b = poly_mulmod(b, b, f, p);
        e >>= 1u;
    }
    return result;
}

uint32_t inv_mod_p(uint32_t a, uint32_t p) { return static_cast<uint32_t>(powmod_u64(a, p - 2, p)); }

// num = quot * den + rem with deg(rem) < deg(den).
void poly_divmod(const Poly& num, const Poly& den, uint32_t p, Poly& quot, Poly& rem) {
    int dd = poly_deg(den);
    require(dd >= 0, Errc::division_by_zero, "polynomial division by zero");
    rem = num;
    poly_trim(rem);
    quot.assign(rem.size(), 0);
    uint32_t lead_inv = inv_mod_p(den[dd], p);
    for (int i = poly_deg(rem); i >= dd; i = poly_deg(rem)) {
        uint32_t c = static_cast<uint32_t>(static_cast<uint64_t>(rem[i]) * lead_inv % p);
        int shift = i - dd;
        quot[shift] = c;
        for (int j = 0; j <= dd; ++j) {
            uint64_t v = rem[shift + j] + static_cast<uint64_t>(c) * (p - den[j] % p);
            rem[shift + j] = static_cast<uint32_t>(v % p);
        }
        poly_trim(rem);
    }
    poly_trim(quot);
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
    poly_trim(a);
    poly_trim(b);
    while (poly_deg(b) >= 0) {
        Poly q, r;
        poly_divmod(a, b, p, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Inverse of a (nonzero, deg < deg f) modulo the monic irreducible f:
// extended Euclid in F_p[x].
Poly poly_inv_mod(const Poly& a, const Poly& f, uint32_t p) {
    // s_i tracks the coefficient of `a`: s_i * a == r_i (mod f).
    Poly r0 = f, r1 = a;
    poly_trim(r1);
    require(poly_deg(r1) >= 0, Errc::division_by_zero, "inverse of zero");
    Poly s0{}, s1{1};
    while (poly_deg(r1) > 0) {
        Poly q, r;
        poly_divmod(r0, r1, p, q, r);
        // s2 = s0 - q * s1 (plain product, degrees stay below deg f)
        Poly qs1;
        if (poly_deg(q) >= 0 && poly_deg(s1) >= 0) {
            qs1.assign(q.size() + s1.size() - 1, 0);
            for (size_t i = 0; i < q.size(); ++i) {
                if (!q[i]) continue;
                for (size_t j = 0; j < s1.size(); ++j) {
                    qs1[i + j] = static_cast<uint32_t>(
                        (qs1[i + j] + static_cast<uint64_t>(q[i]) * s1[j]) % p);
                }
            }
        }
        Poly s2 = poly_sub(s0, qs1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    require(poly_deg(r1) == 0, Errc::internal_invariant,
            "gcd with the modulus is not a unit; modulus not irreducible?");
    uint32_t g_inv = inv_mod_p(r1[0], p);
    Poly out(s1.size(), 0);
    for (size_t i = 0; i < s1.size(); ++i) {
        out[i] = static_cast<uint32_t>(static_cast<uint64_t>(s1[i]) * g_inv % p);
    }
    return poly_mod(out, f, p);
}

// Rabin's criterion for a monic degree-m polynomial over F_p.
bool poly_irreducible(const Poly& f, uint32_t p, uint32_t m) {
    Poly x{0, 1};
    uint64_t pm = 1;
    for (uint32_t i = 0; i < m; ++i) pm *= p;
    if (poly_powmod(x, pm, f, p) != poly_mod(x, f, p)) return false;
    auto coprime_step = [&](uint32_t r) {
        uint64_t pk = 1;
        for (uint32_t i = 0; i < m / r; ++i) pk *= p;
        Poly h = poly_sub(poly_powmod(x, pk, f, p), poly_mod(x, f, p), p);
        return poly_deg(poly_gcd(h, f, p)) <= 0;
    };
    uint32_t rest = m;
    for (uint32_t r = 2; r * r <= rest; ++r) {
        if (rest % r) continue;
        while (rest % r == 0) rest /= r;
        if (!coprime_step(r)) return false;
    }
    if (rest > 1 && !coprime_step(rest)) return false;
    return true;
}

// Lexicographically smallest monic irreducible of degree m, coefficient
// tuples (c0, c1, ..., c_{m-1}) compared constant term first.
Poly find_base_modulus(uint32_t p, uint32_t m) {
    Poly coeffs(m, 0);
    while (true) {
        Poly f = coeffs;
        f.push_back(1);
        if (poly_irreducible(f, p, m)) return f;
        // next tuple in lex order: last coordinate moves fastest
        size_t i = m;
        while (i-- > 0) {
            if (++coeffs[i] < p) break;
            coeffs[i] = 0;
            if (i == 0) fail(Errc::internal_invariant, "no irreducible polynomial found");
        }
    }
}

// d in [1, p) viewed inside F_{p^m}: true iff d is a nonsquare there.
bool nonsquare_in_base(uint32_t d, uint32_t p, uint64_t q_base) {
    if (d == 0) return false;
    uint64_t e = ((q_base - 1) / 2) % (p - 1);
    if (e == 0) return false;
    uint64_t r = powmod_u64(d, e, p);
    if (r == 1) return false;
    require(r == p - 1, Errc::internal_invariant, "Euler criterion returned a non-unit");
    return true;
}

uint64_t checked_pow_u64(uint64_t base, uint32_t e, uint64_t limit) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        require(r <= limit / base, Errc::unsupported_size, "field size overflows the cap");
        r *= base;
    }
    return r;
}

}  // namespace

const char* quad_modulus_name(QuadModulus v) {
    switch (v) {
        case QuadModulus::x2_plus_1: return "x2+1";
        case QuadModulus::x2_plus_2x_plus_2: return "x2+2x+2";
        case QuadModulus::x2_plus_x_plus_2: return "x2+x+2";
        case QuadModulus::auto_select: return "auto";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Context construction
// ---------------------------------------------------------------------------

FieldCtx make_ctx(uint32_t p, uint32_t m, QuadModulus top, uint64_t max_q,
                  uint64_t factor_bound) {
    require(p % 2 == 1 && is_prime_u64(p), Errc::not_prime,
            std::to_string(p) + " is not an odd prime");
    require(m >= 1, Errc::invalid_argument, "m must be >= 1");

    FieldCtx ctx;
    ctx.p = p;
    ctx.m = m;
    ctx.top_choice = top;
    ctx.max_q = max_q;
    ctx.factor_bound = factor_bound;
    ctx.q_base = checked_pow_u64(p, m, max_q);
    require(ctx.q_base <= max_q / ctx.q_base, Errc::unsupported_size,
            "q = p^(2m) exceeds the sweep cap " + std::to_string(max_q));
    ctx.q = ctx.q_base * ctx.q_base;
    ctx.unit_order = BigInt(ctx.q) - 1;
    ctx.base_modulus = find_base_modulus(p, m);

    switch (top) {
        case QuadModulus::x2_plus_1:
            ctx.top_c0 = 1 % p;
            ctx.top_c1 = 0;
            break;
        case QuadModulus::x2_plus_2x_plus_2:
            ctx.top_c0 = 2 % p;
            ctx.top_c1 = 2 % p;
            break;
        case QuadModulus::x2_plus_x_plus_2:
            ctx.top_c0 = 2 % p;
            ctx.top_c1 = 1;
            break;
        case QuadModulus::auto_select: {
            uint32_t found = 0;
            for (uint32_t c = 1; c < p; ++c) {
                if (nonsquare_in_base(c, p, ctx.q_base)) {
                    found = c;
                    break;
                }
            }
            require(found != 0, Errc::reducible_modulus,
                    "no irreducible x^2 - c over this base field");
            ctx.top_c0 = p - found;  // x^2 - c
            ctx.top_c1 = 0;
            break;
        }
    }

    // Degree-2 irreducibility over F_{p^m}: the discriminant must be a
    // nonsquare there.
    int64_t disc_signed =
        (static_cast<int64_t>(ctx.top_c1) * ctx.top_c1 - 4 * static_cast<int64_t>(ctx.top_c0)) %
        static_cast<int64_t>(p);
    uint32_t disc = static_cast<uint32_t>((disc_signed + p) % p);
    require(disc != 0 && nonsquare_in_base(disc, p, ctx.q_base), Errc::reducible_modulus,
            std::string("x^2 + ") + std::to_string(ctx.top_c1) + "x + " +
                std::to_string(ctx.top_c0) + " has a root in F_" + std::to_string(ctx.q_base));

    ctx.cache_ = std::make_shared<detail::CtxCache>();

    // The trace identities the constructions lean on, checked once per
    // context for the two towers of interest.
    if (p == 3 && ctx.top_c0 == 1 && ctx.top_c1 == 0) {
        FieldElem a = alpha(ctx);
        require(trace_to_base(ctx, a).is_zero() && trace_to_base(ctx, pow(ctx, a, 3)).is_zero() &&
                    trace_to_base(ctx, mul(ctx, a, a)) == base_one(ctx),
                Errc::internal_invariant, "x^2+1 tower trace identities failed");
    }
    if (p == 3 && ctx.top_c0 == 2 && ctx.top_c1 == 2) {
        FieldElem a = alpha(ctx);
        require(trace_to_base(ctx, a) == base_one(ctx) &&
                    trace_to_base(ctx, pow(ctx, a, 3)) == base_one(ctx) &&
                    trace_to_base(ctx, pow(ctx, a, 2)).is_zero() &&
                    trace_to_base(ctx, pow(ctx, a, 6)).is_zero(),
                Errc::internal_invariant, "x^2+2x+2 tower trace identities failed");
    }
    return ctx;
}

// ---------------------------------------------------------------------------
// Constants and conversions
// ---------------------------------------------------------------------------

BaseElem base_zero(const FieldCtx& ctx) { return BaseElem{std::vector<uint32_t>(ctx.m, 0)}; }

BaseElem base_one(const FieldCtx& ctx) {
    BaseElem b = base_zero(ctx);
    b.c[0] = 1;
    return b;
}

BaseElem base_from_int(const FieldCtx& ctx, int64_t v) {
    BaseElem b = base_zero(ctx);
    int64_t r = v % static_cast<int64_t>(ctx.p);
    if (r < 0) r += ctx.p;
    b.c[0] = static_cast<uint32_t>(r);
    return b;
}

FieldElem zero(const FieldCtx& ctx) { return FieldElem{base_zero(ctx), base_zero(ctx)}; }

FieldElem one(const FieldCtx& ctx) { return FieldElem{base_one(ctx), base_zero(ctx)}; }

FieldElem alpha(const FieldCtx& ctx) { return FieldElem{base_zero(ctx), base_one(ctx)}; }

FieldElem from_int(const FieldCtx& ctx, int64_t v) {
    return FieldElem{base_from_int(ctx, v), base_zero(ctx)};
}

FieldElem embed_base(const FieldCtx& ctx, const BaseElem& b) {
    return FieldElem{b, base_zero(ctx)};
}

// ---------------------------------------------------------------------------
// Base-field arithmetic
// ---------------------------------------------------------------------------

BaseElem add(const FieldCtx& ctx, const BaseElem& a, const BaseElem& b) {
    BaseElem r = a;
    for (uint32_t i = 0; i < ctx.m; ++i) {
        uint32_t v = r.c[i] + b.c[i];
        if (v >= ctx.p) v -= ctx.p;
        r.c[i] = v;
    }
    return r;
}

BaseElem sub(const FieldCtx& ctx, const BaseElem& a, const BaseElem& b) {
    BaseElem r = a;
    for (uint32_t i = 0; i < ctx.m; ++i) {
        uint32_t v = r.c[i] + ctx.p - b.c[i];
        if (v >= ctx.p) v -= ctx.p;
        r.c[i] = v;
    }
    return r;
}

BaseElem neg(const FieldCtx& ctx, const BaseElem& a) { return sub(ctx, base_zero(ctx), a); }

BaseElem mul(const FieldCtx& ctx, const BaseElem& a, const BaseElem& b) {
    std::vector<uint64_t> acc(2 * ctx.m - 1, 0);
    for (uint32_t i = 0; i < ctx.m; ++i) {
        if (!a.c[i]) continue;
        for (uint32_t j = 0; j < ctx.m; ++j) {
            acc[i + j] = (acc[i + j] + static_cast<uint64_t>(a.c[i]) * b.c[j]) % ctx.p;
        }
    }
    poly_reduce(acc, ctx.base_modulus, ctx.p);
    BaseElem r = base_zero(ctx);
    for (uint32_t i = 0; i < ctx.m; ++i) r.c[i] = static_cast<uint32_t>(acc[i] % ctx.p);
    return r;
}

BaseElem inv(const FieldCtx& ctx, const BaseElem& a) {
    require(!a.is_zero(), Errc::division_by_zero, "inverse of zero");
    Poly out = poly_inv_mod(a.c, ctx.base_modulus, ctx.p);
    BaseElem r = base_zero(ctx);
    for (size_t i = 0; i < out.size(); ++i) r.c[i] = out[i];
    return r;
}

namespace {

BaseElem base_pow_u64(const FieldCtx& ctx, BaseElem a, uint64_t e) {
    BaseElem r = base_one(ctx);
    while (e) {
        if (e & 1u) r = mul(ctx, r, a);
        a = mul(ctx, a, a);
        e >>= 1u;
    }
    return r;
}

BaseElem base_scale(const FieldCtx& ctx, const BaseElem& a, uint32_t s) {
    BaseElem r = a;
    for (uint32_t i = 0; i < ctx.m; ++i) {
        r.c[i] = static_cast<uint32_t>(static_cast<uint64_t>(a.c[i]) * s % ctx.p);
    }
    return r;
}

}  // namespace

BaseElem pow(const FieldCtx& ctx, const BaseElem& a, const BigInt& e) {
    if (a.is_zero()) {
        require(e >= 0, Errc::division_by_zero, "negative exponent on zero");
        return e == 0 ? base_one(ctx) : base_zero(ctx);
    }
    BigInt units = BigInt(ctx.q_base) - 1;
    uint64_t er = to_u64(mod_floor(e, units), "exponent");
    return base_pow_u64(ctx, a, er);
}

BaseElem pow(const FieldCtx& ctx, const BaseElem& a, int64_t e) { return pow(ctx, a, BigInt(e)); }

uint32_t abs_trace(const FieldCtx& ctx, const BaseElem& x) {
    BaseElem acc = x;
    BaseElem sum = x;
    for (uint32_t k = 1; k < ctx.m; ++k) {
        acc = base_pow_u64(ctx, acc, ctx.p);
        sum = add(ctx, sum, acc);
    }
    for (uint32_t i = 1; i < ctx.m; ++i) {
        require(sum.c[i] == 0, Errc::internal_invariant, "base-field trace left F_p");
    }
    return sum.c[0];
}

// ---------------------------------------------------------------------------
// Tower arithmetic
// ---------------------------------------------------------------------------

FieldElem add(const FieldCtx& ctx, const FieldElem& a, const FieldElem& b) {
    return FieldElem{add(ctx, a.a0, b.a0), add(ctx, a.a1, b.a1)};
}

FieldElem sub(const FieldCtx& ctx, const FieldElem& a, const FieldElem& b) {
    return FieldElem{sub(ctx, a.a0, b.a0), sub(ctx, a.a1, b.a1)};
}

FieldElem neg(const FieldCtx& ctx, const FieldElem& a) {
    return FieldElem{neg(ctx, a.a0), neg(ctx, a.a1)};
}

FieldElem mul(const FieldCtx& ctx, const FieldElem& a, const FieldElem& b) {
    // alpha^2 = -c1*alpha - c0
    BaseElem t00 = mul(ctx, a.a0, b.a0);
    BaseElem t01 = mul(ctx, a.a0, b.a1);
    BaseElem t10 = mul(ctx, a.a1, b.a0);
    BaseElem t11 = mul(ctx, a.a1, b.a1);
    BaseElem r0 = sub(ctx, t00, base_scale(ctx, t11, ctx.top_c0));
    BaseElem r1 = sub(ctx, add(ctx, t01, t10), base_scale(ctx, t11, ctx.top_c1));
    return FieldElem{r0, r1};
}

FieldElem conjugate(const FieldCtx& ctx, const FieldElem& a) {
    // The other root of the top modulus is -c1 - alpha.
    return FieldElem{sub(ctx, a.a0, base_scale(ctx, a.a1, ctx.top_c1)), neg(ctx, a.a1)};
}

FieldElem inv(const FieldCtx& ctx, const FieldElem& a) {
    require(!a.is_zero(), Errc::division_by_zero, "inverse of zero");
    FieldElem cj = conjugate(ctx, a);
    FieldElem nrm = mul(ctx, a, cj);
    require(nrm.a1.is_zero(), Errc::internal_invariant, "norm left the base field");
    BaseElem ninv = inv(ctx, nrm.a0);
    return FieldElem{mul(ctx, cj.a0, ninv), mul(ctx, cj.a1, ninv)};
}

namespace {

FieldElem pow_u64(const FieldCtx& ctx, FieldElem a, uint64_t e) {
    FieldElem r = one(ctx);
    while (e) {
        if (e & 1u) r = mul(ctx, r, a);
        a = mul(ctx, a, a);
        e >>= 1u;
    }
    return r;
}

}  // namespace

FieldElem pow(const FieldCtx& ctx, const FieldElem& a, const BigInt& e) {
    if (a.is_zero()) {
        require(e >= 0, Errc::division_by_zero, "negative exponent on zero");
        return e == 0 ? one(ctx) : zero(ctx);
    }
    uint64_t er = to_u64(mod_floor(e, ctx.unit_order), "exponent");
    return pow_u64(ctx, a, er);
}

FieldElem pow(const FieldCtx& ctx, const FieldElem& a, int64_t e) { return pow(ctx, a, BigInt(e)); }

FieldElem frobenius(const FieldCtx& ctx, const FieldElem& a, uint32_t k) {
    require(k <= 2 * ctx.m, Errc::invalid_argument, "frobenius power out of range");
    return pow(ctx, a, bi_pow(ctx.p, k));
}

BaseElem trace_to_base(const FieldCtx& ctx, const FieldElem& x) {
    FieldElem t = add(ctx, x, conjugate(ctx, x));
    require(t.a1.is_zero(), Errc::internal_invariant, "trace left the base field");
    return t.a0;
}

uint32_t abs_trace(const FieldCtx& ctx, const FieldElem& x) {
    return abs_trace(ctx, trace_to_base(ctx, x));
}

BaseElem norm_to_base(const FieldCtx& ctx, const FieldElem& x) {
    FieldElem n = mul(ctx, x, conjugate(ctx, x));
    require(n.a1.is_zero(), Errc::internal_invariant, "norm left the base field");
    return n.a0;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

uint64_t base_index_of(const FieldCtx& ctx, const BaseElem& x) {
    uint64_t idx = 0;
    for (uint32_t i = 0; i < ctx.m; ++i) idx = idx * ctx.p + x.c[i];
    return idx;
}

BaseElem base_element_at(const FieldCtx& ctx, uint64_t index) {
    BaseElem b = base_zero(ctx);
    for (uint32_t i = ctx.m; i-- > 0;) {
        b.c[i] = static_cast<uint32_t>(index % ctx.p);
        index /= ctx.p;
    }
    return b;
}

uint64_t index_of(const FieldCtx& ctx, const FieldElem& x) {
    return base_index_of(ctx, x.a1) * ctx.q_base + base_index_of(ctx, x.a0);
}

FieldElem element_at(const FieldCtx& ctx, uint64_t index) {
    return FieldElem{base_element_at(ctx, index % ctx.q_base),
                     base_element_at(ctx, index / ctx.q_base)};
}

std::vector<FieldElem> enumerate_field(const FieldCtx& ctx) {
    require(ctx.q <= ctx.max_q, Errc::unsupported_size, "q exceeds the sweep cap");
    std::vector<FieldElem> out;
    out.reserve(ctx.q);
    for (uint64_t k = 0; k < ctx.q; ++k) out.push_back(element_at(ctx, k));
    return out;
}

std::vector<BaseElem> enumerate_base(const FieldCtx& ctx) {
    std::vector<BaseElem> out;
    out.reserve(ctx.q_base);
    for (uint64_t k = 0; k < ctx.q_base; ++k) out.push_back(base_element_at(ctx, k));
    return out;
}

// ---------------------------------------------------------------------------
// Multiplicative structure
// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<uint64_t, unsigned>> factor_group_order(const FieldCtx& ctx) {
    auto factors = trial_factor(ctx.unit_order, ctx.factor_bound);
    std::vector<std::pair<uint64_t, unsigned>> out;
    out.reserve(factors.size());
    for (const auto& [prime, exp] : factors) {
        out.emplace_back(to_u64(prime, "prime factor"), exp);
    }
    return out;
}

}  // namespace

FieldElem primitive_element(const FieldCtx& ctx) {
    require(ctx.q <= ctx.max_q, Errc::unsupported_size, "q exceeds the sweep cap");
    auto factors = factor_group_order(ctx);
    uint64_t units = ctx.q - 1;
    for (uint64_t k = 1; k < ctx.q; ++k) {
        FieldElem candidate = element_at(ctx, k);
        bool primitive = true;
        for (const auto& [r, e] : factors) {
            (void)e;
            if (pow_u64(ctx, candidate, units / r) == one(ctx)) {
                primitive = false;
                break;
            }
        }
        if (primitive) return candidate;
    }
    fail(Errc::internal_invariant, "no primitive element found");
}

uint64_t multiplicative_order(const FieldCtx& ctx, const FieldElem& x) {
    require(!x.is_zero(), Errc::invalid_argument, "order of zero is undefined");
    auto factors = factor_group_order(ctx);
    uint64_t ord = ctx.q - 1;
    for (const auto& [r, e] : factors) {
        for (unsigned i = 0; i < e; ++i) {
            if (ord % r == 0 && pow_u64(ctx, x, ord / r) == one(ctx)) {
                ord /= r;
            } else {
                break;
            }
        }
    }
    return ord;
}

const MulTables& FieldCtx::tables() const {
    require(cache_ != nullptr, Errc::internal_invariant, "context built outside make_ctx");
    std::call_once(cache_->once, [this] {
        require(q <= (uint64_t(1) << 24), Errc::unsupported_size,
                "discrete-log tables refuse q > 2^24");
        auto t = std::make_unique<MulTables>();
        t->q = q;
        t->units = q - 1;
        t->exp.resize(t->units);
        t->log.assign(q, MulTables::kNoLog);

        FieldElem g = primitive_element(*this);
        t->generator_index = index_of(*this, g);
        FieldElem cur = one(*this);
        for (uint64_t step = 0; step < t->units; ++step) {
            uint64_t idx = index_of(*this, cur);
            require(t->log[idx] == MulTables::kNoLog, Errc::internal_invariant,
                    "generator order below q - 1");
            t->exp[step] = static_cast<uint32_t>(idx);
            t->log[idx] = static_cast<uint32_t>(step);
            cur = mul(*this, cur, g);
        }
        require(cur == one(*this), Errc::internal_invariant, "generator order above q - 1");

        // Zech logarithms: index of 1 + g^t differs from g^t's only in the
        // constant digit of a0, which sits at weight p^(m-1).
        uint64_t w = 1;
        for (uint32_t i = 1; i < m; ++i) w *= p;
        t->zech.resize(t->units);
        for (uint64_t step = 0; step < t->units; ++step) {
            uint64_t idx = t->exp[step];
            uint64_t digit = (idx / w) % p;
            uint64_t next = (digit + 1 == p) ? idx - w * (p - 1) : idx + w;
            t->zech[step] = t->log[next];
        }

        // Absolute trace is F_p-linear: combine per-digit basis traces.
        std::vector<uint32_t> basis_trace(size_t{2} * m);
        uint64_t weight = 1;
        for (uint32_t pos = 0; pos < 2 * m; ++pos) {
            basis_trace[pos] = abs_trace(*this, element_at(*this, weight));
            weight *= p;
        }
        t->trace.resize(q);
        for (uint64_t k = 0; k < q; ++k) {
            uint64_t rest = k;
            uint64_t s = 0;
            for (uint32_t pos = 0; pos < 2 * m; ++pos) {
                s += (rest % p) * basis_trace[pos];
                rest /= p;
            }
            t->trace[k] = static_cast<uint8_t>(s % p);
        }
        cache_->tables = std::move(t);
    });
    return *cache_->tables;
}

std::string to_string(const FieldCtx& ctx, const BaseElem& x) {
    std::ostringstream os;
    os << "[";
    for (uint32_t i = 0; i < ctx.m; ++i) {
        if (i) os << ",";
        os << x.c[i];
    }
    os << "]";
    return os.str();
}

std::string to_string(const FieldCtx& ctx, const FieldElem& x) {
    return "[" + to_string(ctx, x.a0) + "," + to_string(ctx, x.a1) + "]";
}

}  // namespace cpplab
