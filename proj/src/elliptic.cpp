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

#include "galois3/elliptic.hpp"

#include "galois3/errors.hpp"

namespace galois3 {

std::string to_string(GaloisLabel l) {
    switch (l) {
    case GaloisLabel::C2: return "C2";
    case GaloisLabel::C2xC2: return "C2xC2";
    case GaloisLabel::S3: return "S3";
    case GaloisLabel::D4: return "D4";
    case GaloisLabel::S4: return "S4";
    }
    return "?";
}

Curve make_curve(Rat A, Rat B) {
    if (4 * A * A * A + 27 * B * B == 0) throw SingularCurve("4A^3 + 27B^2 = 0");
    return Curve{std::move(A), std::move(B)};
}

Rat j_invariant(const Curve& e) {
    Rat d = 4 * e.A * e.A * e.A + 27 * e.B * e.B;
    if (d == 0) throw SingularCurve("singular model");
    return 6912 * e.A * e.A * e.A / d;
}

UniPoly psi3(const Curve& e) {
    return upoly({Rat(3), Rat(0), 6 * e.A, 12 * e.B, -e.A * e.A});
}

Curve quadratic_twist(const Curve& e, const Rat& d) {
    if (d == 0) throw Error("twist by zero");
    return Curve{d * d * e.A, d * d * d * e.B};
}

const std::vector<Rat>& cm_j_invariants() {
    // class-number-one list (discriminants -3, -4, -7, -8, -11, -12, -16,
    // -19, -27, -28, -43, -67, -163)
    static const std::vector<Rat> k = {
        Rat(0),
        Rat(1728),
        Rat(-3375),
        Rat(8000),
        Rat(-32768),
        Rat(54000),
        Rat(287496),
        Rat(-884736),
        Rat(-12288000),
        Rat(16581375),
        Rat(-884736000),
        Rat(-147197952000),
        Rat(Int("-262537412640768000")),
    };
    return k;
}

bool is_cm_j(const Rat& j) {
    for (const Rat& c : cm_j_invariants())
        if (c == j) return true;
    return false;
}

Rat RationalFn::operator()(const Rat& t) const {
    Rat d = den(t);
    if (d == 0) throw DegenerateParameter("rational function pole at t = " + to_string(t));
    return num(t) / d;
}

RationalFn fn_F1() {
    // 27 (t+1)(t+9)^3 / t^3
    UniPoly n = upoly({Rat(27), Rat(27)}) * upoly({Rat(1), Rat(9)}).pow(3);
    return {n, UniPoly::monomial(Rat(1), 3)};
}
RationalFn fn_F2() { return {upoly({Rat(1), Rat(3), Rat(3), Rat(0)}), UniPoly(Rat(1))}; }
RationalFn fn_G1() { return {UniPoly::monomial(Rat(1), 3), UniPoly(Rat(1))}; }
RationalFn fn_G2() {
    return {upoly({Rat(3), Rat(3)}) * upoly({Rat(1), Rat(-3)}), UniPoly::variable()};
}
RationalFn fn_G3() { return {upoly({Rat(1), Rat(3), Rat(3)}), UniPoly::variable()}; }

RationalFn compose(const RationalFn& outer, const RationalFn& inner) {
    // outer(num/den) cleared by den^(deg outer)
    int d = std::max(outer.num.degree(), outer.den.degree());
    auto lift = [&](const UniPoly& p) {
        UniPoly acc;
        for (int i = 0; i <= d; ++i) {
            Rat c = p.coeff(static_cast<std::size_t>(i));
            if (c == 0) continue;
            acc += inner.num.pow(static_cast<unsigned long>(i)) *
                   inner.den.pow(static_cast<unsigned long>(d - i)) * c;
        }
        return acc;
    };
    return {lift(outer.num), lift(outer.den)};
}

Curve family(GaloisLabel g, const Rat& t) {
    Rat A, B;
    switch (g) {
    case GaloisLabel::S4:
        A = -3 * t * (t - 1728);
        B = -2 * t * (t - 1728) * (t - 1728);
        break;
    case GaloisLabel::S3:
        A = -3 * (t + 1) * (t + 9);
        B = -2 * (t + 1) * (t * t - 18 * t - 27);
        break;
    case GaloisLabel::D4: {
        Rat c = t * t * t - 1728;
        A = -3 * t * c;
        B = -2 * c * c;
        break;
    }
    case GaloisLabel::C2xC2: {
        Rat u = t * t - 6 * t - 3;
        A = -3 * (t - 3) * (t + 1) * u;
        B = -2 * (t * t + 3) * u * u;
        break;
    }
    case GaloisLabel::C2: {
        A = -3 * (t + 1) * (t + 3) * (t * t + 3);
        B = -2 * (t * t - 3) *
            (t * t * t * t + 6 * t * t * t + 18 * t * t + 18 * t + 9);
        break;
    }
    }
    if (4 * A * A * A + 27 * B * B == 0)
        throw DegenerateParameter("family model singular at t = " + to_string(t));
    return Curve{A, B};
}

RationalFn family_j(GaloisLabel g) {
    switch (g) {
    case GaloisLabel::S4: return {UniPoly::variable(), UniPoly(Rat(1))};
    case GaloisLabel::S3: return fn_F1();
    case GaloisLabel::D4: return fn_G1();
    case GaloisLabel::C2xC2: return compose(fn_G1(), fn_G2());
    case GaloisLabel::C2: return compose(fn_F1(), fn_F2());
    }
    throw Error("unreachable");
}

std::vector<UniPoly> psi3_family_factors(GaloisLabel g, const Rat& t) {
    switch (g) {
    case GaloisLabel::C2: {
        // 3 (x - 3t^2-6t-3)(x + t^2+6t+9)(x^2 + (2t^2-6)x + t^4+6t^2+9)
        return {upoly({Rat(1), -(3 * t * t + 6 * t + 3)}), upoly({Rat(1), t * t + 6 * t + 9}),
                upoly({Rat(1), 2 * t * t - 6, t * t * t * t + 6 * t * t + 9})};
    }
    case GaloisLabel::C2xC2: {
        // 3 (x^2 - 2u x - 3(t+1)^2 u)(x^2 + 2u x + (t-3)^2 u), u = t^2-6t-3.
        // The product of these two factors is checked exactly against
        // psi3 in the tests.
        Rat u = t * t - 6 * t - 3;
        return {upoly({Rat(1), -2 * u, -3 * (t + 1) * (t + 1) * u}),
                upoly({Rat(1), 2 * u, (t - 3) * (t - 3) * u})};
    }
    case GaloisLabel::S3: {
        // 3 (x - 3t-3)(x^3 + 3(t+1)x^2 + 3(t+1)(t-15)x + (t+1)(t+9)^2)
        return {upoly({Rat(1), -(3 * t + 3)}),
                upoly({Rat(1), 3 * (t + 1), 3 * (t + 1) * (t - 15), (t + 1) * (t + 9) * (t + 9)})};
    }
    case GaloisLabel::D4:
    case GaloisLabel::S4: {
        Curve e = family(g, t);
        return {monic(psi3(e))};
    }
    }
    throw Error("unreachable");
}

namespace {

// Rational points of F1(t) = j: rational roots of 27 jd (t+1)(t+9)^3 - jn t^3.
// Only the denominator of j enters the outer coefficients, so the huge
// numerator is never factored.
std::vector<Rat> fiber_F1(const Rat& j, const FactorBudget& budget) {
    UniPoly f = fn_F1().num * j.get_den() - UniPoly::monomial(Rat(j.get_num()), 3);
    std::vector<Rat> out;
    for (const Rat& t : rational_roots(f, budget))
        if (t != 0) out.push_back(t);
    return out;
}

} // namespace

JClass classify_from_j(const Rat& j, const FactorBudget& budget) {
    JClass out;
    out.j = j;
    out.cm = is_cm_j(j);

    auto f1 = fiber_F1(j, budget);
    if (!f1.empty()) {
        out.in_F1 = true;
        out.wit_F1 = f1.front();
    }
    // F2 fiber: t (t^2+3t+3) = t1 <=> (t+1)^3 = t1 + 1
    for (const Rat& t1 : f1) {
        auto c = is_cube(Rat(t1 + 1));
        if (c && *c != 1) {
            out.in_F1F2 = true;
            out.wit_F1F2 = *c - 1;
            break;
        }
    }

    if (auto c = is_cube(j); c && *c != 0) {
        out.in_G1 = true;
        out.wit_G1 = *c;
        // G2 fiber of c: 3t^2 - (6+c)t - 9 = 0
        Rat disc = (6 + *c) * (6 + *c) + 108;
        if (auto w = is_square(disc)) {
            out.in_G1G2 = true;
            std::vector<Rat> t2s{((6 + *c) + *w) / 6, ((6 + *c) - *w) / 6};
            out.wit_G1G2 = t2s.front();
            // G3 fiber of t2: t^2 + (3 - t2) t + 3 = 0
            for (const Rat& t2 : t2s) {
                Rat d3 = (3 - t2) * (3 - t2) - 12;
                if (auto w3 = is_square(d3)) {
                    out.in_G1G2G3 = true;
                    out.wit_G1G2G3 = ((t2 - 3) + *w3) / 2;
                    break;
                }
            }
        }
    }

    if (out.in_G1G2G3 || out.in_F1F2)
        out.row = GaloisLabel::C2;
    else if (out.in_G1G2)
        out.row = GaloisLabel::C2xC2;
    else if (out.in_G1)
        out.row = GaloisLabel::D4;
    else if (out.in_F1)
        out.row = GaloisLabel::S3;
    else
        out.row = GaloisLabel::S4;
    return out;
}

} // namespace galois3
