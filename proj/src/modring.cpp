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

#include "cpplab/modring.hpp"

#include <sstream>

namespace cpplab {

const char* family_class_name(FamilyClass cls) {
    switch (cls) {
        case FamilyClass::c1: return "C1";
        case FamilyClass::c2: return "C2";
        case FamilyClass::c3: return "C3";
    }
    return "?";
}

ExtGcdResult ext_gcd(const BigInt& a, const BigInt& b) {
    require(a != 0 || b != 0, Errc::invalid_argument, "ext_gcd(0, 0)");
    // Invariants: u0*a + w0*b == r0, u1*a + w1*b == r1.
    BigInt r0 = a, r1 = b;
    BigInt u0 = 1, u1 = 0;
    BigInt w0 = 0, w1 = 1;
    while (r1 != 0) {
        BigInt quot = r0 / r1;  // truncated division keeps the invariant exact
        BigInt r2 = r0 - quot * r1;
        BigInt u2 = u0 - quot * u1;
        BigInt w2 = w0 - quot * w1;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        w0 = w1; w1 = w2;
    }
    if (r0 < 0) {
        r0 = -r0;
        u0 = -u0;
        w0 = -w0;
    }
    return {r0, u0, w0};
}

BigInt mod_inverse(const BigInt& a, const BigInt& n) {
    require(n >= 2, Errc::invalid_argument, "modulus must be >= 2");
    BigInt ar = mod_floor(a, n);
    require(ar != 0, Errc::not_invertible, "0 has no inverse mod " + dec_string(n));
    ExtGcdResult e = ext_gcd(ar, n);
    require(e.g == 1, Errc::not_invertible,
            dec_string(ar) + " not invertible mod " + dec_string(n) +
                " (gcd = " + dec_string(e.g) + ")");
    return mod_floor(e.u, n);
}

std::vector<std::pair<BigInt, unsigned>> trial_factor(const BigInt& n, uint64_t bound) {
    require(n >= 1, Errc::invalid_argument, "trial_factor needs n >= 1");
    std::vector<std::pair<BigInt, unsigned>> out;
    BigInt rest = n;
    auto strip = [&](const BigInt& d) {
        unsigned e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    };
    strip(2);
    strip(3);
    for (BigInt d = 5; d <= bound && d * d <= rest; d += (d % 6 == 5) ? 2 : 4) strip(d);
    if (rest > 1) {
        // No prime factor below `bound` remains, so a cofactor under bound^2
        // must itself be prime.
        require(rest < BigInt(bound) * bound, Errc::unsupported_size,
                "factoring " + dec_string(n) + " exceeds the trial-division bound " +
                    std::to_string(bound));
        out.emplace_back(rest, 1);
    }
    return out;
}

bool closed_form_applies(FamilyClass cls, uint32_t p, uint32_t m, uint32_t s) {
    switch (cls) {
        case FamilyClass::c1:
        case FamilyClass::c2:
            return p == 3 && m % 2 == 1;
        case FamilyClass::c3:
            return s == 2 && (p == 3 || p % 12 == 7);
    }
    return false;
}

namespace {

std::string pow_str(uint32_t base, uint32_t e) {
    std::ostringstream os;
    os << base << "^" << e;
    return os.str();
}

}  // namespace

ClosedFormExponent closed_form_exponent(FamilyClass cls, uint32_t p, uint32_t m, uint32_t s) {
    require(m >= 1, Errc::hypothesis_violated, "m must be >= 1");
    BigInt q_minus_1 = bi_pow(p, 2 * m) - 1;
    ClosedFormExponent out;
    switch (cls) {
        case FamilyClass::c1: {
            require(p == 3 && m % 2 == 1, Errc::hypothesis_violated,
                    "class 1 closed form needs p = 3 and odd m");
            out.raw = 2 * bi_pow(3, 2 * m - 1) - bi_pow(3, m - 1);
            out.formula = "2*" + pow_str(3, 2 * m - 1) + " - " + pow_str(3, m - 1);
            break;
        }
        case FamilyClass::c2: {
            require(p == 3 && m % 2 == 1, Errc::hypothesis_violated,
                    "class 2 closed form needs p = 3 and odd m");
            // -(2*3^m - 3)/5 with 1/5 taken in the unit group of Z_{q-1}.
            BigInt inv5 = mod_inverse(5, q_minus_1);
            out.raw = -(2 * bi_pow(3, m) - 3) * inv5;
            out.formula = "-(2*" + pow_str(3, m) + " - 3)/5";
            break;
        }
        case FamilyClass::c3: {
            require(s == 2, Errc::hypothesis_violated,
                    "class 3 closed forms cover s = 2 only");
            if (p == 3) {
                require(m % 2 == 1, Errc::hypothesis_violated,
                        "class 3 closed form (p = 3) needs odd m");
                out.raw = bi_pow(3, 2 * m - 1) + 2 * bi_pow(3, m - 1);
                out.formula = pow_str(3, 2 * m - 1) + " + 2*" + pow_str(3, m - 1);
            } else {
                require(p % 12 == 7, Errc::hypothesis_violated,
                        "class 3 closed form needs p = 3 or p = 7 (mod 12)");
                require(m % 2 == 1, Errc::hypothesis_violated,
                        "class 3 closed form needs odd m");
                BigInt pm = bi_pow(p, m);
                BigInt numer = 3 - 2 * (pm - 1) * (2 * pm + 1);
                // 3 | p^m - 1 here, so the division is exact; anything else is
                // a hard error, not silent truncation.
                require(numer % 3 == 0, Errc::internal_invariant,
                        "closed-form numerator not divisible by 3");
                out.raw = numer / 3;
                out.formula =
                    "(3 - 2*(" + pow_str(p, m) + " - 1)*(2*" + pow_str(p, m) + " + 1))/3";
            }
            break;
        }
    }
    out.normalized = mod_floor(out.raw, q_minus_1);
    return out;
}

}  // namespace cpplab
