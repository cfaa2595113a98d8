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

#ifndef GALOIS3_RATIONAL_HPP
#define GALOIS3_RATIONAL_HPP

#include <gmpxx.h>

#include <numeric>
#include <optional>
#include <string>

#include "galois3/errors.hpp"

namespace galois3 {

// Exact scalars. GMP keeps mpq_class canonical under arithmetic; only
// raw (num, den) construction needs an explicit canonicalize, which
// rat() below performs.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(Int num, Int den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Rat rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

inline const Int& num(const Rat& q) { return q.get_num(); }
inline const Int& den(const Rat& q) { return q.get_den(); }

inline int sign(const Rat& q) { return sgn(q); }

// max(|num|, den); the height used by search budgets and enumeration order.
inline Int height(const Rat& q) {
    Int n = abs(q.get_num());
    return n > q.get_den() ? n : q.get_den();
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    return Rat(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
}

// Exact k-th root of an integer, if it exists. Negative inputs are allowed
// for odd k only.
inline std::optional<Int> exact_root(const Int& n, unsigned long k) {
    if (n < 0 && k % 2 == 0) return std::nullopt;
    Int r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (!exact) return std::nullopt;
    return r;
}

// Exact k-th root of a rational: both numerator and denominator must be
// perfect k-th powers (the value is in lowest terms, so this is necessary).
inline std::optional<Rat> exact_root(const Rat& q, unsigned long k) {
    auto rn = exact_root(q.get_num(), k);
    if (!rn) return std::nullopt;
    auto rd = exact_root(q.get_den(), k);
    if (!rd) return std::nullopt;
    return rat(*rn, *rd);
}

inline std::optional<Rat> is_square(const Rat& q) { return exact_root(q, 2); }
inline std::optional<Rat> is_cube(const Rat& q) { return exact_root(q, 3); }

// "p/q" (or "p" when q = 1), the wire format used throughout the JSON
// reports.
inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& n) { return n.get_str(); }

// Parses "p" or "p/q" with optional leading sign.
inline Rat rat_from_string(const std::string& text) {
    Rat q;
    if (q.set_str(text, 10) != 0) throw Error("bad rational literal: " + text);
    q.canonicalize();
    return q;
}

// Deterministic enumeration of Q by height: 0, 1, -1, 2, -2, 1/2, -1/2,
// 3, -3, 1/3, -1/3, 2/3, ... Used by the solvers' parameter sampling.
class RationalEnumerator {
  public:
    Rat next() {
        if (first_) {
            first_ = false;
            return Rat(0);
        }
        while (true) {
            switch (state_) {
            case 0:
                state_ = 1;
                return rat(static_cast<long>(h_));
            case 1:
                state_ = 2;
                p_ = 1;
                return rat(-static_cast<long>(h_));
            case 2:
                for (; p_ < h_; ++p_) {
                    if (std::gcd(p_, h_) == 1) {
                        state_ = 3;
                        return rat(static_cast<long>(p_), static_cast<long>(h_));
                    }
                }
                ++h_;
                state_ = 0;
                break;
            case 3:
                state_ = 2;
                Rat v = rat(-static_cast<long>(p_), static_cast<long>(h_));
                ++p_;
                return v;
            }
        }
    }

  private:
    unsigned long h_ = 1;
    unsigned long p_ = 1;
    int state_ = 0;
    bool first_ = true;
};

} // namespace galois3

#endif
