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

#ifndef GALOIS3_CONIC_HPP
#define GALOIS3_CONIC_HPP

#include <optional>
#include <utility>

#include "galois3/hilbert.hpp"
#include "galois3/unipoly.hpp"

namespace galois3 {

// Q(x, y) = A x^2 + B y^2 + C xy, with disc Q = 4AB - C^2.
struct BinaryForm {
    Rat A, B, C;

    Rat eval(const Rat& x, const Rat& y) const { return A * x * x + B * y * y + C * x * y; }
    Rat disc() const { return 4 * A * B - C * C; }
    bool is_zero() const { return A == 0 && B == 0 && C == 0; }

    BinaryForm negated() const { return {Rat(-A), Rat(-B), Rat(-C)}; }
    BinaryForm scaled(const Rat& s) const { return {Rat(s * A), Rat(s * B), Rat(s * C)}; }
};

using Point = std::pair<Rat, Rat>;

// True iff Q(x, y) = 1 has a rational solution. For B != 0 and disc != 0
// this is the symbol criterion (-disc Q, B) = 1; the degenerate shapes are
// decided directly.
bool represents_one(const BinaryForm& q, const FactorBudget& budget = {});
bool represents(const BinaryForm& q, const Rat& target, const FactorBudget& budget = {});

struct SearchBudget {
    unsigned long height = 10'000; // max height of the x coordinate
};

// A rational point with Q(x, y) = target, or nullopt when the symbol
// criterion rules one out. Bounded-height enumeration of x with an exact
// square test for the residual quadratic in y; throws SearchBudgetExceeded
// when solvable but nothing was found within the budget.
std::optional<Point> conic_point(const BinaryForm& q, const Rat& target,
                                 const SearchBudget& sb = {}, const FactorBudget& budget = {});

// Lines through a base point: x(r), y(r) with Q(x(r), y(r)) = target
// identically. den(r0) = 0 marks the finitely many bad parameters; the
// base point itself is the r -> infinity limit.
struct ConicParametrization {
    UniPoly xnum, ynum, den; // quadratics in r
    Point base;

    std::optional<Point> at(const Rat& r) const {
        Rat d = den(r);
        if (d == 0) return std::nullopt;
        return Point{xnum(r) / d, ynum(r) / d};
    }
};

ConicParametrization conic_parametrize(const BinaryForm& q, const Rat& target, const Point& base);

// The Lemma-style involution between points of Q'(x,y)^2 + Q(x,y) = 0 and
// points of Q(x,y) = -1: (x, y) -> (x / Q'(x,y), y / Q'(x,y)). Requires
// -disc Q' to be a non-square (anisotropy), so Q' only vanishes at the
// origin; throws AnisotropyViolated if Q'(p) = 0 anyway.
Point involution_C(const BinaryForm& qprime, const Point& p);

} // namespace galois3

#endif
