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

#ifndef GALOIS3_FACTORINT_HPP
#define GALOIS3_FACTORINT_HPP

#include <map>
#include <vector>

#include "galois3/rational.hpp"

namespace galois3 {

// Work budget for integer factorization: trial division up to trial_limit,
// then Brent-cycle Pollard rho with at most rho_iterations total steps.
// Deterministic (fixed starting points), so runs are reproducible.
struct FactorBudget {
    unsigned long trial_limit = 1'000'000;
    unsigned long rho_iterations = 10'000'000;
};

// Prime factorization of |n| as prime -> exponent. n must be nonzero.
// Throws FactorBudgetExceeded when the rho step budget runs out.
std::map<Int, unsigned> factor(const Int& n, const FactorBudget& budget = {});

// The unique squarefree integer s with x = s * (rational square).
Int squarefree_part(const Rat& x, const FactorBudget& budget = {});
Int squarefree_part(const Int& x, const FactorBudget& budget = {});

// All positive divisors of |n| (through factor()); unsorted order is
// deterministic for fixed input.
std::vector<Int> divisors(const Int& n, const FactorBudget& budget = {});

// Squarefree classes s, t in Q*/Q*^2 are equal iff s == t once both are
// reduced; this helper compares arbitrary nonzero rationals by class.
bool same_square_class(const Rat& a, const Rat& b, const FactorBudget& budget = {});

} // namespace galois3

#endif
