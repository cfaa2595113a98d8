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

#ifndef GALOIS3_SOLVER_HPP
#define GALOIS3_SOLVER_HPP

#include <map>
#include <optional>

#include "galois3/conic.hpp"
#include "galois3/quartic.hpp"

namespace galois3 {

// The obstruction of the embedding problem, reduced to one global Hilbert
// symbol (or trivially split, or out of scope for S4 constructions).
struct ObstructionReport {
    enum class Verdict { Trivial, Solvable, Obstructed, Unsupported };

    GaloisLabel label;
    Verdict verdict;
    std::optional<std::pair<Int, Int>> args; // squarefree-reduced symbol arguments
    std::vector<LocalEntry> entries;         // local symbols at the relevant places

    bool solvable() const {
        return verdict == Verdict::Trivial || verdict == Verdict::Solvable;
    }
};

std::string to_string(ObstructionReport::Verdict v);

ObstructionReport obstruction(const GaloisCase& c, const FactorBudget& budget = {});

// One exact verification step. Every check re-evaluates from its operands;
// nothing is stored pre-decided.
struct CertCheck {
    enum class Kind { PolynomialIdentity, SquarefreeClassEqual, LemmaConditions, FactorizationShape };

    Kind kind;
    std::string what;
    UniPoly lhs, rhs;            // PolynomialIdentity: lhs == rhs
    Rat value;                   // SquarefreeClassEqual: class of value ...
    Int cls;                     // ... equals cls
    std::vector<Rat> nonsquares; // LemmaConditions: each nonzero and not a square
    UniPoly poly;                // FactorizationShape: monic factor degrees of poly ...
    std::vector<int> shape;      // ... are exactly this multiset (with multiplicity)
};

bool run_check(const CertCheck& c, const FactorBudget& budget = {});

struct CertificateChain {
    std::vector<CertCheck> checks;
};

// A constructed curve together with the exact identity chain proving that
// the splitting field of its 3-division polynomial is K.
struct SolutionRecord {
    GaloisLabel label;
    Rat t;
    Curve curve;
    Rat j;
    bool non_cm = false;
    std::map<std::string, Rat> witness; // construction data (r, n, m, ...)
    CertificateChain cert;
};

// Record builders; each runs its certificate and throws DegenerateParameter
// when the parameter leads to a degenerate or failing instance.
SolutionRecord c2_record_explicit();
SolutionRecord c2_record_from_t(const Rat& t, const FactorBudget& budget = {});
SolutionRecord c2x_record_from_t(const Int& delta1, const Int& delta2, const Rat& t,
                                 const FactorBudget& budget = {});
SolutionRecord s3_record_from_r(const Rat& a, const Rat& b, const Rat& r,
                                const FactorBudget& budget = {});
// (n, m) must lie on C_{a,d}: (a*+2d*)^2 = 1728 (a*+6d*).
SolutionRecord d4_record_from_cpoint(const Rat& a, const Rat& d, const Rat& n, const Rat& m,
                                     const FactorBudget& budget = {});

struct SolveOptions {
    FactorBudget factor;
    SearchBudget search;
    unsigned long max_samples = 4000; // parameter draws before giving up
};

std::vector<SolutionRecord> solve_C2(int count, const SolveOptions& opt = {});
std::vector<SolutionRecord> solve_C2xC2(const Int& delta1, const Int& delta2, int count,
                                        const SolveOptions& opt = {});
std::vector<SolutionRecord> solve_S3(const Rat& a, const Rat& b, int count,
                                     const SolveOptions& opt = {});
std::vector<SolutionRecord> solve_D4(const Rat& a, const Rat& d, int count,
                                     const SolveOptions& opt = {});

// Dispatch on the classified case. Throws Obstructed when the obstruction
// is -1 and UnsupportedCase for S4.
std::vector<SolutionRecord> solve(const GaloisCase& c, int count, const SolveOptions& opt = {});

// Re-derives the full expected chain from the case payload and the
// record's construction data, then re-runs every exact check.
bool verify_certificate(const SolutionRecord& rec, const GaloisCase& c,
                        const FactorBudget& budget = {});
bool verify_certificate(const SolutionRecord& rec, const ValidatedQuartic& f,
                        const FactorBudget& budget = {});

} // namespace galois3

#endif
