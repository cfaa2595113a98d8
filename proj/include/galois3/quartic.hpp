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

#ifndef GALOIS3_QUARTIC_HPP
#define GALOIS3_QUARTIC_HPP

#include "galois3/elliptic.hpp"
#include "galois3/unipoly.hpp"

namespace galois3 {

// A degree-4 input that passed the admissibility check: its radical is
// squarefree and the product of the discriminants of the distinct
// irreducible factors lies in the class of -3.
struct ValidatedQuartic {
    UniPoly f;
    UniPoly rad;
    Factorization radical_factors;
    Int disc_class; // always -3
};

// Throws WrongDegree unless deg f = 4; DiscriminantClassMismatch when the
// disc condition fails.
ValidatedQuartic validate(const UniPoly& f, const FactorBudget& budget = {});

// Classification outcome with the case payload the solver consumes.
struct GaloisCase {
    GaloisLabel label;
    // C2xC2: squarefree classes of the two quadratic factors, |delta1| <= |delta2|
    Int delta1 = 0, delta2 = 0;
    // S3: depressed cubic x^3 + a x + b
    Rat cubic_a, cubic_b;
    // D4: even form x^4 + a x^2 - 3 d^2
    Rat even_a, even_d;
    // S4: the monic quartic
    UniPoly quartic;
};

// Resolvent of the depressed quartic x^4 + q x^2 + r x + s: the cubic
// z^3 - q z^2 - 4 s z + (4 q s - r^2) with roots a_i a_j + a_k a_l.
UniPoly resolvent_cubic(const Rat& q, const Rat& r, const Rat& s);

GaloisCase classify(const ValidatedQuartic& v, const FactorBudget& budget = {});

// The even quartic of the paired root differences: x^4 + (2z+2q) x^2 +
// ((z-q)^2 - 4z(z-q) + 16s) for the unique rational resolvent root z, with
// (a, d) read off. Falls back to a preliminary Tschirnhaus y = x + c x^2
// when degenerate; throws EvenizeDegenerate after the retry budget.
struct EvenForm {
    Rat a, d;
    UniPoly poly; // x^4 + a x^2 - 3 d^2
};
EvenForm evenize(const UniPoly& f, const FactorBudget& budget = {}, int retries = 16);

} // namespace galois3

#endif
