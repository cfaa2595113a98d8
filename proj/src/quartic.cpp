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

#include "galois3/quartic.hpp"

#include <algorithm>

#include "galois3/errors.hpp"

namespace galois3 {

ValidatedQuartic validate(const UniPoly& f, const FactorBudget& budget) {
    if (f.degree() != 4) throw WrongDegree("validate expects a degree-4 polynomial");
    ValidatedQuartic v;
    v.f = f;
    v.rad = radical(f);
    v.radical_factors = factor_small(v.rad, budget);
    Rat prod(1);
    for (const auto& [g, e] : v.radical_factors.factors)
        if (g.degree() >= 2) prod *= discriminant(g);
    if (prod == 0) throw Error("internal: radical not squarefree");
    // class equality mod squares is an exact square test; no factoring
    if (!is_square(Rat(prod / -3)).has_value())
        throw DiscriminantClassMismatch("discriminant class of the radical is not -3");
    v.disc_class = -3;
    return v;
}

UniPoly resolvent_cubic(const Rat& q, const Rat& r, const Rat& s) {
    return upoly({Rat(1), -q, -4 * s, 4 * q * s - r * r});
}

namespace {

// squarefree class of the discriminant of a monic quadratic
Int quad_disc_class(const UniPoly& g, const FactorBudget& budget) {
    return squarefree_part(discriminant(g), budget);
}

EvenForm even_from_direct(const Rat& a, const Rat& s) {
    // s = -3 d^2 is guaranteed by the disc class of an even D4 quartic
    auto d = is_square(Rat(-s / 3));
    if (!d) throw Error("internal: even quartic constant not of class -3");
    return {a, *d, upoly({Rat(1), Rat(0), a, Rat(0), s})};
}

} // namespace

EvenForm evenize(const UniPoly& f, const FactorBudget& budget, int retries) {
    UniPoly g = monic(f);
    if (g.degree() != 4) throw WrongDegree("evenize expects a quartic");
    // preliminary transforms y = x + c x^2 until the root-difference form
    // is nondegenerate (c = 0 first)
    RationalEnumerator cs;
    for (int attempt = 0; attempt < retries; ++attempt) {
        Rat c = cs.next(); // 0, 1, -1, 2, ...
        UniPoly h = attempt == 0 ? g : tschirnhaus(g, upoly({c, Rat(1), Rat(0)}));
        if (h.degree() != 4 || discriminant(h) == 0) continue;
        auto [dep, sh] = depress(h);
        Rat q = dep.coeff(2), r = dep.coeff(1), s = dep.coeff(0);
        auto roots = rational_roots(resolvent_cubic(q, r, s), budget);
        if (roots.empty()) continue; // not a D4/C2^2-shaped transform; retry
        Rat z = roots.front();
        Rat a = 2 * z + 2 * q;
        Rat b = (z - q) * (z - q) - 4 * z * (z - q) + 16 * s;
        UniPoly even = upoly({Rat(1), Rat(0), a, Rat(0), b});
        if (discriminant(even) == 0) continue;           // collided differences
        auto d = is_square(Rat(-b / 3));
        if (!d || *d == 0) continue;                     // wrong class; retry
        if (is_square(Rat(a * a - 4 * b)).has_value()) continue; // Lemma condition fails
        auto fac = factor_small(even, budget);
        if (fac.factors.size() != 1 || fac.factors[0].second != 1) continue; // reducible
        return {a, *d, even};
    }
    throw EvenizeDegenerate("no usable even form within the retry budget");
}

GaloisCase classify(const ValidatedQuartic& v, const FactorBudget& budget) {
    std::vector<UniPoly> quads, cubics, quartics;
    int linear = 0;
    for (const auto& [g, e] : v.radical_factors.factors) {
        switch (g.degree()) {
        case 1: ++linear; break;
        case 2: quads.push_back(g); break;
        case 3: cubics.push_back(g); break;
        case 4: quartics.push_back(g); break;
        default: break;
        }
    }

    GaloisCase out;
    if (quartics.empty() && cubics.empty() && quads.size() == 1) {
        // K = Q(sqrt(disc)) = Q(sqrt(-3))
        out.label = GaloisLabel::C2;
        return out;
    }
    if (quads.size() == 2) {
        out.label = GaloisLabel::C2xC2;
        Int d1 = quad_disc_class(quads[0], budget);
        Int d2 = quad_disc_class(quads[1], budget);
        if (cmp(abs(d2), abs(d1)) < 0 || (abs(d1) == abs(d2) && d2 < d1)) std::swap(d1, d2);
        out.delta1 = d1;
        out.delta2 = d2;
        if (out.delta1 == 1 || out.delta2 == 1 || squarefree_part(Rat(d1 * d2), budget) != -3)
            throw ImpossibleClass("C2xC2 deltas inconsistent with disc class -3");
        return out;
    }
    if (cubics.size() == 1) {
        out.label = GaloisLabel::S3;
        auto [dep, c] = depress(cubics[0]);
        out.cubic_a = dep.coeff(1);
        out.cubic_b = dep.coeff(0);
        return out;
    }
    if (quartics.size() == 1) {
        auto [dep, c] = depress(quartics[0]);
        Rat q = dep.coeff(2), r = dep.coeff(1), s = dep.coeff(0);
        auto roots = rational_roots(resolvent_cubic(q, r, s), budget);
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        if (roots.empty()) {
            out.label = GaloisLabel::S4;
            out.quartic = quartics[0];
            return out;
        }
        if (roots.size() == 1) {
            // D4 (C4 is excluded: disc < 0 makes complex conjugation an odd
            // involution, which C4 does not contain)
            out.label = GaloisLabel::D4;
            if (r == 0) {
                auto even = even_from_direct(q, s);
                out.even_a = even.a;
                out.even_d = even.d;
            } else {
                auto even = evenize(quartics[0], budget);
                out.even_a = even.a;
                out.even_d = even.d;
            }
            return out;
        }
        throw ImpossibleClass("resolvent cubic with several rational roots under disc class -3");
    }
    throw ImpossibleClass("factor shape inconsistent with disc class -3");
}

} // namespace galois3
