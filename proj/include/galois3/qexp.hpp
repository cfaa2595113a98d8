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

#ifndef GALOIS3_QEXP_HPP
#define GALOIS3_QEXP_HPP

#include <vector>

#include "galois3/rational.hpp"

namespace galois3 {

// Finite-truncation Laurent series in u = q^(1/3) with exact rational
// coefficients. `prec` is the largest exponent whose coefficient is still
// valid (inclusive); arithmetic propagates the common validity range.
class LaurentSeries {
  public:
    LaurentSeries() = default; // zero series, prec unbounded-ish
    LaurentSeries(long valuation, std::vector<Rat> coeffs, long prec);

    static LaurentSeries monomial(const Rat& c, long exponent, long prec);
    static LaurentSeries one(long prec) { return monomial(Rat(1), 0, prec); }

    bool is_zero() const { return c_.empty(); }
    long valuation() const; // throws on the zero series
    long prec() const { return prec_; }
    Rat coeff(long exponent) const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator*(const Rat& s) const;
    LaurentSeries inverse() const; // throws DivideByZeroSeries on zero
    LaurentSeries operator/(const LaurentSeries& o) const { return *this * o.inverse(); }
    LaurentSeries pow(unsigned long e) const;

    bool identically_zero_to(long order) const;

  private:
    void trim();
    long val_ = 0;
    std::vector<Rat> c_; // c_[i] is the coefficient of u^(val_ + i)
    long prec_ = 1L << 30;
};

// h = (1/3) eta(tau/3)^3 / eta(3 tau)^3 in u = q^(1/3): the fractional eta
// prefactors collapse to exactly u^-1 (q-exponent 1/24 - 3/8 = -1/3), so
// h = (1/3) u^-1 prod(1-u^n)^3 / prod(1-u^(9n))^3.
LaurentSeries eta_quotient_h(long n_terms);

// prod_{n>=1} (1 - u^n)^3 truncated; Jacobi: sum (-1)^k (2k+1) u^(k(k+1)/2).
LaurentSeries eta_cubed_product(long n_terms);

// t = 3 (h+1)(h+3)(h^2+3) / (h (h^2+3h+3)); valuation -1.
LaurentSeries hauptmodul_t(const LaurentSeries& h);

// j = E4^3 / Delta with q = u^3: u^-3 + 744 + 196884 u^3 + ...
LaurentSeries j_series(long n_terms);

// true iff t^3 - j vanishes through u^order.
bool check_identity(long order);

} // namespace galois3

#endif
