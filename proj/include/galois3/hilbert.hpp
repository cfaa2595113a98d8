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

#ifndef GALOIS3_HILBERT_HPP
#define GALOIS3_HILBERT_HPP

#include <vector>

#include "galois3/factorint.hpp"
#include "galois3/rational.hpp"

namespace galois3 {

// A place of Q: a finite prime, or the real place.
struct Place {
    bool infinite = false;
    Int prime = 0; // meaningful when !infinite

    static Place at_infinity() { return Place{true, 0}; }
    static Place at(Int p) { return Place{false, std::move(p)}; }

    bool operator==(const Place& o) const {
        return infinite == o.infinite && (infinite || prime == o.prime);
    }
};

std::string to_string(const Place& v);

// Local Hilbert symbol (a, b)_v in {+1, -1}: +1 iff z^2 = a x^2 + b y^2 has
// a nontrivial solution over the completion at v. Closed formulas: sign
// test at infinity, Legendre symbols and valuations at odd p, the
// epsilon/omega exponent formula at 2.
int hilbert_local(const Rat& a, const Rat& b, const Place& v);

// Places where the symbol can possibly be -1: 2, infinity, and the odd
// primes dividing the numerator or denominator of a or b.
std::vector<Place> relevant_places(const Rat& a, const Rat& b, const FactorBudget& budget = {});

// Global symbol: +1 iff (a, b)_v = +1 at every place.
int hilbert_global(const Rat& a, const Rat& b, const FactorBudget& budget = {});

struct LocalEntry {
    Place place;
    int symbol; // +1 / -1
};

// All local symbols at the relevant places, deterministic order
// (infinity, then 2, then odd primes ascending).
std::vector<LocalEntry> hilbert_entries(const Rat& a, const Rat& b, const FactorBudget& budget = {});

} // namespace galois3

#endif
