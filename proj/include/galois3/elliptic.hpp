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

#ifndef GALOIS3_ELLIPTIC_HPP
#define GALOIS3_ELLIPTIC_HPP

#include <optional>

#include "galois3/unipoly.hpp"

namespace galois3 {

// The possible Galois groups of the splitting field of a quartic with
// discriminant class -3 (shared by the quartic classifier, the solver and
// the curve families).
enum class GaloisLabel { C2, C2xC2, S3, D4, S4 };
std::string to_string(GaloisLabel l);

// y^2 = x^3 + A x + B, nonsingular.
struct Curve {
    Rat A, B;
};

// Throws SingularCurve when 4A^3 + 27B^2 = 0.
Curve make_curve(Rat A, Rat B);

Rat j_invariant(const Curve& e);

// The 3-division polynomial 3x^4 + 6Ax^2 + 12Bx - A^2; its roots are the
// x-coordinates of the nontrivial 3-torsion points.
UniPoly psi3(const Curve& e);

// (d^2 A, d^3 B): the twist's short model; same j.
Curve quadratic_twist(const Curve& e, const Rat& d);

// The thirteen rational CM j-invariants (class number one).
const std::vector<Rat>& cm_j_invariants();
bool is_cm_j(const Rat& j);

// The five rational functions of the modular ladder, as numerator /
// denominator pairs in t.
struct RationalFn {
    UniPoly num, den;
    Rat operator()(const Rat& t) const;
};
RationalFn fn_F1();
RationalFn fn_F2();
RationalFn fn_G1();
RationalFn fn_G2();
RationalFn fn_G3();
RationalFn compose(const RationalFn& outer, const RationalFn& inner);

// The parametric family E_{t,G}; throws DegenerateParameter when the model
// is singular at t.
Curve family(GaloisLabel g, const Rat& t);

// j of the family as a rational function of t (F1, G1, G1G2, F1F2, or t).
RationalFn family_j(GaloisLabel g);

// The factored shape of psi3(family(g, t)), monic factors. For C2 the
// shape is linear*linear*quadratic, for C2xC2 quadratic*quadratic, for S3
// linear*cubic; for D4 and S4 the quartic itself.
std::vector<UniPoly> psi3_family_factors(GaloisLabel g, const Rat& t);

// Membership of j in the images F1(Q*), G1(Q*), G1(G2(Q*)), F1(F2(Q*)),
// G1(G2(G3(Q*))), with witnesses, plus the resulting Gal(K/Q) row of the
// classification table.
struct JClass {
    Rat j;
    bool cm = false;
    bool in_F1 = false, in_G1 = false, in_G1G2 = false, in_F1F2 = false, in_G1G2G3 = false;
    std::optional<Rat> wit_F1, wit_G1, wit_G1G2, wit_F1F2, wit_G1G2G3;
    GaloisLabel row;
};
JClass classify_from_j(const Rat& j, const FactorBudget& budget = {});

} // namespace galois3

#endif
