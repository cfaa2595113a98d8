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

#include "galois3/factorint.hpp"

#include <algorithm>

#include "galois3/errors.hpp"

namespace galois3 {

namespace {

bool is_probable_prime(const Int& n) {
    // 30 Miller-Rabin rounds after GMP's base checks; no composite below
    // any size we can factor here survives this.
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

// Brent's cycle variant of Pollard rho with f(x) = x^2 + c. Returns a
// nontrivial factor of n (not necessarily prime), or 0 if the step budget
// ran out. `steps` counts down across calls.
Int pollard_rho_brent(const Int& n, unsigned long c, unsigned long& steps) {
    Int y = 2, r = 1, q = 1, g = 1, x, ys;
    const unsigned long batch = 128;
    while (g == 1) {
        x = y;
        for (Int i = 0; i < r; ++i) {
            if (steps == 0) return 0;
            --steps;
            y = (y * y + c) % n;
        }
        Int k = 0;
        while (k < r && g == 1) {
            ys = y;
            unsigned long lim = batch;
            if (r - k < lim) lim = mpz_get_ui(Int(r - k).get_mpz_t());
            for (unsigned long i = 0; i < lim; ++i) {
                if (steps == 0) return 0;
                --steps;
                y = (y * y + c) % n;
                q = q * abs(x - y) % n;
            }
            g = gcd(q, n);
            k += lim;
        }
        r *= 2;
    }
    if (g == n) {
        // backtrack one at a time
        do {
            ys = (ys * ys + c) % n;
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    if (g == n) return 0; // this c failed; caller tries the next one
    return g;
}

void factor_rec(Int n, std::map<Int, unsigned>& out, unsigned long& rho_steps) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    // perfect powers collapse before rho
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
                std::map<Int, unsigned> sub;
                factor_rec(root, sub, rho_steps);
                for (const auto& [p, e] : sub) out[p] += e * static_cast<unsigned>(k);
                return;
            }
        }
    }
    for (unsigned long c = 1;; ++c) {
        if (rho_steps == 0) throw FactorBudgetExceeded("pollard rho budget exhausted");
        Int g = pollard_rho_brent(n, c, rho_steps);
        if (g == 0) {
            if (rho_steps == 0) throw FactorBudgetExceeded("pollard rho budget exhausted");
            continue; // cycle found the trivial factor; retry with next c
        }
        factor_rec(g, out, rho_steps);
        factor_rec(n / g, out, rho_steps);
        return;
    }
}

} // namespace

std::map<Int, unsigned> factor(const Int& n, const FactorBudget& budget) {
    if (n == 0) throw Error("factor(0)");
    std::map<Int, unsigned> out;
    Int m = abs(n);
    if (m == 1) return out;

    for (unsigned long p = 2; p <= budget.trial_limit && Int(p) * p <= m; p = (p == 2 ? 3 : p + 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++out[Int(p)];
        }
    }
    if (m > 1) {
        Int bound = Int(budget.trial_limit) * Int(budget.trial_limit);
        if (m <= bound) {
            // below the trial bound squared, the cofactor is prime
            ++out[m];
        } else {
            unsigned long steps = budget.rho_iterations;
            factor_rec(m, out, steps);
        }
    }
    return out;
}

Int squarefree_part(const Int& x, const FactorBudget& budget) {
    if (x == 0) throw Error("squarefree_part(0)");
    Int s = sgn(x);
    for (const auto& [p, e] : factor(x, budget))
        if (e % 2 == 1) s *= p;
    return s;
}

Int squarefree_part(const Rat& x, const FactorBudget& budget) {
    if (x == 0) throw Error("squarefree_part(0)");
    // num/den = num*den / den^2, so the class is that of num*den
    return squarefree_part(Int(x.get_num() * x.get_den()), budget);
}

std::vector<Int> divisors(const Int& n, const FactorBudget& budget) {
    std::vector<Int> out{1};
    for (const auto& [p, e] : factor(n, budget)) {
        std::size_t sz = out.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

bool same_square_class(const Rat& a, const Rat& b, const FactorBudget&) {
    if (a == 0 || b == 0) throw Error("same_square_class on zero");
    // a and b agree mod Q*^2 iff a/b is a square; no factoring needed
    return is_square(Rat(a / b)).has_value();
}

} // namespace galois3
