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

#include "cpplab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

namespace cpplab {

namespace {

constexpr uint32_t kNoLog = MulTables::kNoLog;

inline uint64_t reduce_once(uint64_t x, uint64_t q_minus_1) {
    return x >= q_minus_1 ? x - q_minus_1 : x;
}

// Occurrence marks over q slots (slot 0 = zero element, slot 1+t = unit with
// discrete log t), reusable across candidates via epoch stamping.
struct Marks {
    std::vector<uint32_t> stamp;
    uint32_t epoch = 0;

    explicit Marks(uint64_t q) : stamp(q, 0) {}

    uint32_t bump() { return ++epoch; }
};

// f = c*x^d with log c = cl. Image of every domain point gets marked; any
// repeat means no bijection.
bool mono_is_pp(const MulTables& t, uint64_t cl, uint64_t d, Marks& s) {
    uint64_t n = t.units;
    uint32_t e = s.bump();
    s.stamp[0] = e;  // f(0) = 0
    for (uint64_t k = 0; k < n; ++k) {
        uint64_t slot = 1 + (cl + d * k) % n;
        if (s.stamp[slot] == e) return false;
        s.stamp[slot] = e;
    }
    return true;
}

// x + c*x^d bijective? Unit sums go through Zech logarithms:
// g^u + g^k = g^k (1 + g^(u-k)).
bool mono_plus_x_is_bijection(const MulTables& t, uint64_t cl, uint64_t d, Marks& s) {
    uint64_t n = t.units;
    uint32_t e = s.bump();
    s.stamp[0] = e;  // f(0) + 0 = 0
    for (uint64_t k = 0; k < n; ++k) {
        uint64_t u = (cl + d * k) % n;
        uint64_t rel = reduce_once(u + n - k, n);
        uint32_t z = t.zech[rel];
        uint64_t slot = (z == kNoLog) ? 0 : 1 + reduce_once(k + z, n);
        if (s.stamp[slot] == e) return false;
        s.stamp[slot] = e;
    }
    return true;
}

// Both composition orders pointwise on every unit (0 -> 0 -> 0 holds for any
// monomial with positive exponent).
bool mono_composition_identity(const MulTables& t, uint64_t cf, uint64_t d, uint64_t ci,
                               uint64_t e) {
    uint64_t n = t.units;
    for (uint64_t k = 0; k < n; ++k) {
        uint64_t t1 = (cf + d * k) % n;
        if ((ci + e * t1) % n != k) return false;
        uint64_t t2 = (ci + e * k) % n;
        if ((cf + d * t2) % n != k) return false;
    }
    return true;
}

// Value logs (kNoLog = value zero) of f over the canonical domain order.
void monomial_value_logs(const MulTables& t, uint64_t cl, uint64_t d,
                         std::vector<uint32_t>& out) {
    out.assign(t.q, kNoLog);
    for (uint64_t k = 1; k < t.q; ++k) {
        uint64_t l = t.log[k];
        out[k] = static_cast<uint32_t>((cl + d * l) % t.units);
    }
}

void monomial_plus_x_value_logs(const MulTables& t, uint64_t cl, uint64_t d,
                                std::vector<uint32_t>& out) {
    uint64_t n = t.units;
    out.assign(t.q, kNoLog);
    for (uint64_t k = 1; k < t.q; ++k) {
        uint64_t l = t.log[k];
        uint64_t u = (cl + d * l) % n;
        uint32_t z = t.zech[reduce_once(u + n - l, n)];
        out[k] = (z == kNoLog) ? kNoLog : static_cast<uint32_t>(reduce_once(l + z, n));
    }
}

// All-gamma character-sum uniformity over precomputed value logs.
bool char_sums_uniform(const MulTables& t, uint32_t p, const std::vector<uint32_t>& vlog) {
    uint64_t n = t.units;
    uint64_t expected = t.q / p;
    std::vector<uint64_t> counts(p);
    for (uint64_t tl = 0; tl < n; ++tl) {
        std::fill(counts.begin(), counts.end(), 0);
        for (uint64_t k = 0; k < t.q; ++k) {
            uint32_t lv = vlog[k];
            uint8_t cls = (lv == kNoLog) ? 0 : t.trace[t.exp[reduce_once(tl + lv, n)]];
            counts[cls]++;
        }
        for (uint32_t c = 0; c < p; ++c) {
            if (counts[c] != expected) return false;
        }
    }
    return true;
}

void value_logs_of(const FieldCtx& ctx, const ElemFn& f, std::vector<uint32_t>& out) {
    const MulTables& t = mul_tables(ctx);
    out.resize(ctx.q);
    for (uint64_t k = 0; k < ctx.q; ++k) {
        out[k] = t.log[index_of(ctx, f(element_at(ctx, k)))];
    }
}

}  // namespace

bool is_permutation(const FieldCtx& ctx, const ElemFn& f) {
    require(ctx.q <= ctx.max_q, Errc::unsupported_size, "q exceeds the sweep cap");
    std::vector<char> seen(ctx.q, 0);
    for (uint64_t k = 0; k < ctx.q; ++k) {
        uint64_t idx = index_of(ctx, f(element_at(ctx, k)));
        if (seen[idx]) return false;
        seen[idx] = 1;
    }
    return true;
}

bool is_permutation_on_base(const FieldCtx& ctx, const BaseFn& f) {
    std::vector<char> seen(ctx.q_base, 0);
    for (uint64_t k = 0; k < ctx.q_base; ++k) {
        uint64_t idx = base_index_of(ctx, f(base_element_at(ctx, k)));
        if (seen[idx]) return false;
        seen[idx] = 1;
    }
    return true;
}

bool is_cpp(const FieldCtx& ctx, const Monomial& mono) {
    const MulTables& t = mul_tables(ctx);
    uint64_t cl = t.log[index_of(ctx, mono.coeff)];
    uint64_t d = to_u64(mono.exponent, "exponent");
    Marks s(t.q);
    return mono_is_pp(t, cl, d, s) && mono_plus_x_is_bijection(t, cl, d, s);
}

bool composition_is_identity(const FieldCtx& ctx, const Monomial& f, const Monomial& g) {
    const MulTables& t = mul_tables(ctx);
    uint64_t cf = t.log[index_of(ctx, f.coeff)];
    uint64_t d = to_u64(f.exponent, "exponent");
    uint64_t ci = t.log[index_of(ctx, g.coeff)];
    uint64_t e = to_u64(g.exponent, "exponent");
    return mono_composition_identity(t, cf, d, ci, e);
}

CharSumCounts char_sum_uniformity(const FieldCtx& ctx, const ElemFn& f, const FieldElem& gamma) {
    require(!gamma.is_zero(), Errc::zero_gamma, "gamma must be nonzero");
    require(ctx.q <= ctx.max_q, Errc::unsupported_size, "q exceeds the sweep cap");
    CharSumCounts out;
    out.counts.assign(ctx.p, 0);
    for (uint64_t k = 0; k < ctx.q; ++k) {
        FieldElem y = f(element_at(ctx, k));
        out.counts[abs_trace(ctx, mul(ctx, gamma, y))]++;
    }
    uint64_t expected = ctx.q / ctx.p;
    out.vanishes = std::all_of(out.counts.begin(), out.counts.end(),
                               [&](uint64_t c) { return c == expected; });
    return out;
}

CharSumCounts char_sum_uniformity_on_base(const FieldCtx& ctx, const BaseFn& f,
                                          const BaseElem& gamma) {
    require(!gamma.is_zero(), Errc::zero_gamma, "gamma must be nonzero");
    CharSumCounts out;
    out.counts.assign(ctx.p, 0);
    for (uint64_t k = 0; k < ctx.q_base; ++k) {
        BaseElem y = f(base_element_at(ctx, k));
        out.counts[abs_trace(ctx, mul(ctx, gamma, y))]++;
    }
    uint64_t expected = ctx.q_base / ctx.p;
    out.vanishes = std::all_of(out.counts.begin(), out.counts.end(),
                               [&](uint64_t c) { return c == expected; });
    return out;
}

bool pp_by_char_sums(const FieldCtx& ctx, const ElemFn& f) {
    require(ctx.q <= ctx.max_q, Errc::unsupported_size, "q exceeds the sweep cap");
    const MulTables& t = mul_tables(ctx);
    std::vector<uint32_t> vlog;
    value_logs_of(ctx, f, vlog);
    return char_sums_uniform(t, ctx.p, vlog);
}

bool pp_by_char_sums_on_base(const FieldCtx& ctx, const BaseFn& f) {
    uint64_t qb = ctx.q_base;
    uint64_t expected = qb / ctx.p;
    std::vector<BaseElem> vals;
    vals.reserve(qb);
    for (uint64_t k = 0; k < qb; ++k) vals.push_back(f(base_element_at(ctx, k)));
    std::vector<uint64_t> counts(ctx.p);
    for (uint64_t g = 1; g < qb; ++g) {
        BaseElem gamma = base_element_at(ctx, g);
        std::fill(counts.begin(), counts.end(), 0);
        for (uint64_t k = 0; k < qb; ++k) {
            counts[abs_trace(ctx, mul(ctx, gamma, vals[k]))]++;
        }
        for (uint32_t c = 0; c < ctx.p; ++c) {
            if (counts[c] != expected) return false;
        }
    }
    return true;
}

bool wan_check(const FieldCtx& ctx, uint64_t d, const FieldElem& a) {
    require(d > 0 && (ctx.q - 1) % d == 0, Errc::bad_divisor,
            "d must be a positive divisor of q-1");
    require(!a.is_zero(), Errc::zero_coefficient, "a must be nonzero");
    const MulTables& t = mul_tables(ctx);
    uint64_t n = t.units;
    uint64_t k_exp = n / d;  // (q-1)/d; zeta = g^k_exp

    // (i): (-a)^d != 1
    uint64_t neg_log = t.log[index_of(ctx, neg(ctx, a))];
    if ((neg_log * d) % n == 0) return false;

    // (ii): ((a + zeta^i)/(a + zeta^j))^((q-1)/d) != zeta^(j-i), checked over
    // discrete logs. A vanishing numerator gives 0 on the left, never a root
    // of unity; a vanishing denominator leaves the ratio undefined and the
    // pair counts as satisfied.
    std::vector<uint32_t> sum_log(d);
    for (uint64_t i = 0; i < d; ++i) {
        FieldElem zi = element_at(ctx, t.exp[k_exp * i]);
        FieldElem sum = add(ctx, a, zi);
        sum_log[i] = t.log[index_of(ctx, sum)];
    }
    for (uint64_t i = 0; i + 1 < d; ++i) {
        for (uint64_t j = i + 1; j < d; ++j) {
            if (sum_log[i] == kNoLog || sum_log[j] == kNoLog) continue;
            uint64_t diff = reduce_once(sum_log[i] + n - sum_log[j], n);
            if ((diff * k_exp) % n == ((j - i) * k_exp) % n) return false;
        }
    }
    return true;
}

std::vector<FieldElem> cpp_scan(const FieldCtx& ctx, const BigInt& d) {
    require(boost::multiprecision::gcd(mod_floor(d, ctx.unit_order), ctx.unit_order) == 1,
            Errc::hypothesis_violated, "cpp_scan requires gcd(d, q-1) = 1");
    const MulTables& t = mul_tables(ctx);
    uint64_t n = t.units;
    uint64_t dr = to_u64(mod_floor(d, ctx.unit_order), "exponent");
    Marks s(t.q);
    // gcd(d, q-1) = 1 makes every c*x^d a bijection; confirm once for x^d.
    require(mono_is_pp(t, 0, dr, s), Errc::internal_invariant,
            "x^d not a bijection despite gcd(d, q-1) = 1");

    uint64_t md = (dr - 1 + n) % n;
    std::vector<uint64_t> rel_base(n);
    for (uint64_t k = 0; k < n; ++k) rel_base[k] = (md * k) % n;

    std::vector<uint64_t> hits;
    for (uint64_t w = 0; w < n; ++w) {
        uint32_t e = s.bump();
        s.stamp[0] = e;
        uint64_t shift = (n - w) % n;  // log of v^(-1)
        bool bijective = true;
        for (uint64_t k = 0; k < n; ++k) {
            uint64_t rel = reduce_once(rel_base[k] + shift, n);
            uint32_t z = t.zech[rel];
            uint64_t slot = (z == kNoLog) ? 0 : 1 + reduce_once(k + z, n);
            if (s.stamp[slot] == e) {
                bijective = false;
                break;
            }
            s.stamp[slot] = e;
        }
        if (bijective) hits.push_back(t.exp[w]);
    }
    std::sort(hits.begin(), hits.end());
    std::vector<FieldElem> out;
    out.reserve(hits.size());
    for (uint64_t idx : hits) out.push_back(element_at(ctx, idx));
    return out;
}

VerifyReport verify_family(const FieldCtx& ctx, const FamilySpec& spec,
                           const VerifyOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    validate(spec);
    require(ctx_matches(ctx, spec), Errc::hypothesis_violated,
            "context tower does not match the family spec");
    const MulTables& t = mul_tables(ctx);

    VerifyReport rep;
    rep.spec = spec;
    rep.d = forward_exponent(spec);
    rep.inverse = inverse_info(spec);
    rep.inverse_matches_generic = rep.inverse.exponent == mod_inverse(rep.d, ctx.unit_order);

    std::vector<FieldElem> vs = admissible_v(ctx, spec);
    rep.admissible_count = vs.size();
    uint64_t expected_count = 0;
    switch (spec.cls) {
        case FamilyClass::c1: expected_count = ctx.q_base - 1; break;
        case FamilyClass::c2: expected_count = 2 * (ctx.q_base - 1); break;
        case FamilyClass::c3: expected_count = (ctx.q_base + 1) / spec.s * (spec.s - 1); break;
    }
    rep.expected_count_ok = rep.admissible_count == expected_count;

    bool char_sums_on = opts.char_sums == VerifyOptions::CharSums::always ||
                        (opts.char_sums == VerifyOptions::CharSums::automatic &&
                         ctx.q <= opts.char_sum_cap);
    uint64_t wan_d = spec.cls == FamilyClass::c3 ? (ctx.q_base + 1) / spec.s : 0;

    rep.rows.resize(vs.size());
    std::atomic<uint64_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mu;

    auto worker = [&]() {
        try {
            Marks scratch(t.q);
            std::vector<uint32_t> vlog;
            for (;;) {
                uint64_t i = cursor.fetch_add(1);
                if (i >= vs.size()) break;
                const FieldElem& v = vs[i];
                VerifyRow row;
                row.v = v;
                Monomial fwd = forward_monomial(ctx, spec, v);
                uint64_t cf = t.log[index_of(ctx, fwd.coeff)];
                uint64_t d = to_u64(fwd.exponent, "exponent");
                row.is_pp = mono_is_pp(t, cf, d, scratch);
                bool plus_ok = mono_plus_x_is_bijection(t, cf, d, scratch);
                row.is_cpp = row.is_pp && plus_ok;

                Monomial invm = inverse_monomial(ctx, spec, v);
                uint64_t ci = t.log[index_of(ctx, invm.coeff)];
                uint64_t e = to_u64(invm.exponent, "exponent");
                row.composition_ok = mono_composition_identity(t, cf, d, ci, e);
                row.inverse_is_cpp = mono_is_pp(t, ci, e, scratch) &&
                                     mono_plus_x_is_bijection(t, ci, e, scratch);

                if (char_sums_on) {
                    monomial_value_logs(t, cf, d, vlog);
                    bool agree_f = char_sums_uniform(t, ctx.p, vlog) == row.is_pp;
                    monomial_plus_x_value_logs(t, cf, d, vlog);
                    bool agree_g = char_sums_uniform(t, ctx.p, vlog) == plus_ok;
                    row.char_sum_ok = agree_f && agree_g;
                }
                if (spec.cls == FamilyClass::c3) row.wan_ok = wan_check(ctx, wan_d, v);
                rep.rows[i] = std::move(row);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!first_error) first_error = std::current_exception();
        }
    };

    unsigned nworkers = std::max(1u, opts.workers);
    nworkers = static_cast<unsigned>(
        std::min<uint64_t>(nworkers, std::max<uint64_t>(1, vs.size())));
    if (nworkers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (unsigned i = 0; i < nworkers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    bool rows_pass = true;
    for (uint64_t i = 0; i < rep.rows.size(); ++i) {
        if (!rep.rows[i].pass()) {
            rows_pass = false;
            if (!rep.first_failure) rep.first_failure = i;
        }
    }
    rep.all_pass = rows_pass && rep.expected_count_ok && rep.inverse_matches_generic;

    if (opts.run_scan) {
        std::vector<FieldElem> scan = cpp_scan(ctx, rep.d);
        rep.cpp_scan_count = scan.size();
        std::vector<uint64_t> scan_idx;
        scan_idx.reserve(scan.size());
        for (const FieldElem& x : scan) scan_idx.push_back(index_of(ctx, x));
        bool superset = true;
        for (const FieldElem& v : vs) {
            if (!std::binary_search(scan_idx.begin(), scan_idx.end(), index_of(ctx, v))) {
                superset = false;
                break;
            }
        }
        rep.cpp_scan_superset_ok = superset;
        rep.all_pass = rep.all_pass && superset;
    }

    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

}  // namespace cpplab
