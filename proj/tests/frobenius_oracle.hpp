// Copyright 2026 The galois3 Authors
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

// Test-only statistical oracle: Frobenius factor-degree patterns of the
// radical modulo many good primes, compared against the cycle types of
// each candidate Galois group. Independent of the classify() code path.

#ifndef GALOIS3_TESTS_FROBENIUS_ORACLE_HPP
#define GALOIS3_TESTS_FROBENIUS_ORACLE_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "galois3/elliptic.hpp"
#include "galois3/unipoly.hpp"

namespace galois3::testing {

using FpPoly = std::vector<long>; // ascending, reduced mod p

inline FpPoly fp_trim(FpPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) c[i + k] = (c[i + k] + a[i] * b[k]) % p;
    return fp_trim(c);
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& m, long p) {
    a = fp_trim(a);
    auto inv = [&](long v) {
        long r = 1, e = p - 2, base = ((v % p) + p) % p;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    long lead_inv = inv(m.back());
    while (a.size() >= m.size()) {
        long c = a.back() * lead_inv % p;
        std::size_t off = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[off + i] = ((a[off + i] - c * m[i]) % p + p) % p;
        a = fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
    a = fp_trim(a);
    b = fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

// x^(p^reps) mod m
inline FpPoly fp_frobenius_power(long p, int reps, const FpPoly& m) {
    FpPoly acc = fp_mod(FpPoly{0, 1}, m, p);
    for (int rep = 0; rep < reps; ++rep) {
        FpPoly r{1}, base = acc;
        long e = p;
        while (e) {
            if (e & 1) r = fp_mod(fp_mul(r, base, p), m, p);
            base = fp_mod(fp_mul(base, base, p), m, p);
            e >>= 1;
        }
        acc = r;
    }
    return acc;
}

// factor degree multiset of a squarefree f over F_p (deg <= 4)
inline std::vector<int> fp_degree_pattern(FpPoly f, long p) {
    std::vector<int> pattern;
    for (long x0 = 0; x0 < p && f.size() > 1; ++x0) {
        for (;;) {
            long v = 0;
            for (std::size_t i = f.size(); i-- > 0;) v = (v * x0 + f[i]) % p;
            if (v != 0) break;
            pattern.push_back(1);
            FpPoly q(f.size() - 1);
            long carry = f.back();
            for (std::size_t i = f.size() - 1; i-- > 0;) {
                q[i] = carry;
                carry = (f[i] + carry * x0) % p;
            }
            f = fp_trim(q);
        }
    }
    std::size_t deg = f.empty() ? 0 : f.size() - 1;
    if (deg == 2) pattern.push_back(2);
    else if (deg == 3) pattern.push_back(3);
    else if (deg == 4) {
        FpPoly xp2 = fp_frobenius_power(p, 2, f);
        if (xp2.size() < 2) xp2.resize(2, 0);
        xp2[1] = ((xp2[1] - 1) % p + p) % p;
        FpPoly g = fp_gcd(f, fp_trim(xp2), p);
        if (g.size() > 1) {
            pattern.push_back(2);
            pattern.push_back(2);
        } else {
            pattern.push_back(4);
        }
    }
    std::sort(pattern.begin(), pattern.end());
    return pattern;
}

inline std::set<std::vector<int>> frobenius_patterns(const UniPoly& radical, int n_primes) {
    Int l = 1;
    for (const Rat& c : radical.coeffs()) l = lcm(l, c.get_den());
    std::vector<Int> zc;
    for (const Rat& c : radical.coeffs()) zc.push_back(Int(c * l));
    Rat disc = discriminant(radical);
    std::set<std::vector<int>> seen;
    int used = 0;
    for (long p = 3; used < n_primes; p += 2) {
        bool isp = true;
        for (long q = 3; q * q <= p; q += 2)
            if (p % q == 0) isp = false;
        if (!isp) continue;
        if (zc.back() % p == 0) continue;
        if (Int(disc.get_num() * disc.get_den()) % p == 0) continue;
        FpPoly f;
        for (const Int& c : zc) f.push_back(mpz_class(((c % p) + p) % p).get_si());
        seen.insert(fp_degree_pattern(fp_trim(f), p));
        ++used;
    }
    return seen;
}

inline std::set<std::vector<int>> expected_patterns(GaloisLabel g, int rad_deg) {
    using V = std::vector<int>;
    switch (g) {
    case GaloisLabel::C2:
        if (rad_deg == 2) return {V{1, 1}, V{2}};
        if (rad_deg == 3) return {V{1, 1, 1}, V{1, 2}};
        return {V{1, 1, 1, 1}, V{1, 1, 2}};
    case GaloisLabel::C2xC2: return {V{1, 1, 1, 1}, V{1, 1, 2}, V{2, 2}};
    case GaloisLabel::S3:
        if (rad_deg == 3) return {V{1, 1, 1}, V{1, 2}, V{3}};
        return {V{1, 1, 1, 1}, V{1, 1, 2}, V{1, 3}};
    case GaloisLabel::D4: return {V{1, 1, 1, 1}, V{1, 1, 2}, V{2, 2}, V{4}};
    case GaloisLabel::S4: return {V{1, 1, 1, 1}, V{1, 1, 2}, V{2, 2}, V{1, 3}, V{4}};
    }
    return {};
}

} // namespace galois3::testing

#endif
