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

#ifndef GALOIS3_UNIPOLY_HPP
#define GALOIS3_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "galois3/factorint.hpp"
#include "galois3/poly.hpp"

namespace galois3 {

using UniPoly = Poly<Rat>;
using BiPoly = Poly<UniPoly>; // inner variable first

// Coefficients degree-descending, e.g. {1, 0, 2, 0, -12} is x^4+2x^2-12.
UniPoly upoly(std::vector<Rat> descending);
UniPoly upoly_x(); // the variable

std::string to_string(const UniPoly& f, const std::string& var = "x");

UniPoly monic(const UniPoly& f);

// quotient/remainder over Q
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& a, const UniPoly& b); // a | b

UniPoly gcd(const UniPoly& a, const UniPoly& b); // monic unless both zero

// f / gcd(f, f'): the product of the distinct irreducible factors
UniPoly radical(const UniPoly& f);

// disc f = (-1)^(n(n-1)/2) Res(f, f') / lc(f); zero iff f has a repeated root
Rat discriminant(const UniPoly& f);

// All rational roots with multiplicity (ascending). Factors the cleared
// leading/trailing coefficients, so it can throw FactorBudgetExceeded.
std::vector<Rat> rational_roots(const UniPoly& f, const FactorBudget& budget = {});

// Complete factorization over Q for deg f <= 4.
struct Factorization {
    Rat unit;                                     // leading constant
    std::vector<std::pair<UniPoly, int>> factors; // monic irreducible, multiplicity
    UniPoly remultiply() const;
};
Factorization factor_small(const UniPoly& f, const FactorBudget& budget = {});

// Monic polynomial whose roots are T(alpha) over the roots alpha of f,
// computed as Res_y(f(y), x - T(y)). Requires deg T < deg f.
UniPoly tschirnhaus(const UniPoly& f, const UniPoly& T);

// f(x + c)
UniPoly shift(const UniPoly& f, const Rat& c);
// f(c x)
UniPoly scale_arg(const UniPoly& f, const Rat& c);

// Kills the second-highest coefficient: returns (g, c) with g = monic
// f(x + c) having no degree-(n-1) term.
std::pair<UniPoly, Rat> depress(const UniPoly& f);

} // namespace galois3

#endif
