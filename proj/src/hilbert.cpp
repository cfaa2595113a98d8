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

#include "galois3/hilbert.hpp"

#include <algorithm>

#include "galois3/errors.hpp"

namespace galois3 {

std::string to_string(const Place& v) { return v.infinite ? "inf" : v.prime.get_str(); }

namespace {

// v_p(x) and the unit part u with x = p^v u.
std::pair<long, Rat> split_valuation(const Rat& x, const Int& p) {
    Int un, ud;
    long vn = static_cast<long>(mpz_remove(un.get_mpz_t(), x.get_num().get_mpz_t(), p.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(ud.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t()));
    return {vn - vd, rat(un, ud)};
}

// unit u reduced mod m (m odd prime, or 8); denominator inverted mod m
Int unit_mod(const Rat& u, const Int& m) {
    Int dinv;
    if (mpz_invert(dinv.get_mpz_t(), u.get_den().get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("unit_mod: denominator not invertible");
    Int r = u.get_num() * dinv % m;
    if (r < 0) r += m;
    return r;
}

int legendre_of_unit(const Rat& u, const Int& p) {
    Int r = unit_mod(u, p);
    return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

// (u-1)/2 mod 2 and (u^2-1)/8 mod 2 for odd units, via u mod 8
int eps2(const Int& umod8) { return (umod8 == 3 || umod8 == 7) ? 1 : 0; }
int omega2(const Int& umod8) { return (umod8 == 3 || umod8 == 5) ? 1 : 0; }

} // namespace

int hilbert_local(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) throw Error("hilbert symbol needs nonzero arguments");
    if (v.infinite) return (sign(a) < 0 && sign(b) < 0) ? -1 : 1;

    const Int& p = v.prime;
    auto [alpha, u] = split_valuation(a, p);
    auto [beta, w] = split_valuation(b, p);
    if (p == 2) {
        Int u8 = unit_mod(u, 8), w8 = unit_mod(w, 8);
        long e = static_cast<long>(eps2(u8)) * eps2(w8) + alpha * omega2(w8) + beta * omega2(u8);
        return e % 2 == 0 ? 1 : -1;
    }
    int s = 1;
    if ((alpha % 2) != 0 && (beta % 2) != 0 && p % 4 == 3) s = -s; // (-1)^(ab eps(p))
    if (beta % 2 != 0 && legendre_of_unit(u, p) < 0) s = -s;
    if (alpha % 2 != 0 && legendre_of_unit(w, p) < 0) s = -s;
    return s;
}

std::vector<Place> relevant_places(const Rat& a, const Rat& b, const FactorBudget& budget) {
    std::vector<Int> primes;
    for (const Rat* x : {&a, &b}) {
        for (const Int* z : {&x->get_num(), &x->get_den()}) {
            if (*z == 0) throw Error("hilbert symbol needs nonzero arguments");
            for (const auto& [p, e] : factor(*z, budget))
                if (p != 2) primes.push_back(p);
        }
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    std::vector<Place> out{Place::at_infinity(), Place::at(2)};
    for (Int& p : primes) out.push_back(Place::at(std::move(p)));
    return out;
}

std::vector<LocalEntry> hilbert_entries(const Rat& a, const Rat& b, const FactorBudget& budget) {
    std::vector<LocalEntry> out;
    for (const Place& v : relevant_places(a, b, budget)) out.push_back({v, hilbert_local(a, b, v)});
    return out;
}

int hilbert_global(const Rat& a, const Rat& b, const FactorBudget& budget) {
    for (const LocalEntry& e : hilbert_entries(a, b, budget))
        if (e.symbol < 0) return -1;
    return 1;
}

} // namespace galois3
