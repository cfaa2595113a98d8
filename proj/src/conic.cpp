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

#include "galois3/conic.hpp"

#include "galois3/errors.hpp"

namespace galois3 {

bool represents_one(const BinaryForm& q, const FactorBudget& budget) {
    if (q.is_zero()) return false;
    Rat A = q.A, B = q.B, C = q.C;
    if (A == 0 && B == 0) return C != 0; // C xy = 1 at (1, 1/C)
    if (B == 0) std::swap(A, B);         // x <-> y leaves disc alone
    Rat d = 4 * A * B - C * C;
    if (d == 0) return is_square(B).has_value(); // B*Q is a perfect square form
    return hilbert_global(Rat(-d), B, budget) == 1;
}

bool represents(const BinaryForm& q, const Rat& target, const FactorBudget& budget) {
    if (target == 0) throw Error("represents: target must be nonzero");
    return represents_one(q.scaled(1 / target), budget);
}

std::optional<Point> conic_point(const BinaryForm& q, const Rat& target, const SearchBudget& sb,
                                 const FactorBudget& budget) {
    if (target == 0) throw Error("conic_point: target must be nonzero");
    if (!represents(q, target, budget)) return std::nullopt;

    // given one coordinate, solve the residual quadratic in the other:
    // B2 y^2 + (C x) y + (A2 x^2 - target) = 0
    auto solve_other = [&](const Rat& x, const Rat& A2, const Rat& B2) -> std::optional<Rat> {
        if (B2 == 0) {
            Rat lin = q.C * x;
            Rat c0 = A2 * x * x - target;
            if (lin == 0) return c0 == 0 ? std::optional<Rat>(Rat(0)) : std::nullopt;
            return Rat(-c0 / lin);
        }
        Rat disc = q.C * q.C * x * x - 4 * B2 * (A2 * x * x - target);
        auto root = is_square(disc);
        if (!root) return std::nullopt;
        return (-q.C * x + *root) / (2 * B2);
    };

    // enumerate both coordinates by height; small points often have one
    // small coordinate only
    RationalEnumerator en;
    for (;;) {
        Rat v = en.next();
        if (height(v) > static_cast<long>(sb.height))
            throw SearchBudgetExceeded("conic_point: height budget exhausted");
        if (auto y = solve_other(v, q.A, q.B)) return Point{v, *y};
        if (auto x = solve_other(v, q.B, q.A)) return Point{*x, v};
    }
}

ConicParametrization conic_parametrize(const BinaryForm& q, const Rat& target, const Point& base) {
    const auto& [x0, y0] = base;
    if (q.eval(x0, y0) != target) throw Error("conic_parametrize: base not on the conic");
    // (x, y) = (x0 + lambda r, y0 + lambda), lambda the chord parameter:
    //   x(r) = -(A x0 + C y0) r^2 - 2 B y0 r + B x0
    //   y(r) =        A y0 r^2 - 2 A x0 r - B y0 - C x0
    //   den(r) =          A r^2 +    C r  + B
    ConicParametrization out;
    out.base = base;
    out.xnum = upoly({-(q.A * x0 + q.C * y0), -2 * q.B * y0, q.B * x0});
    out.ynum = upoly({q.A * y0, -2 * q.A * x0, -q.B * y0 - q.C * x0});
    out.den = upoly({q.A, q.C, q.B});
    if (out.den.is_zero()) throw Error("conic_parametrize: degenerate form");

    // exact symbolic post-condition: Q(x(r), y(r)) == target * den(r)^2
    UniPoly lhs = out.xnum * out.xnum * q.A + out.ynum * out.ynum * q.B + out.xnum * out.ynum * q.C;
    if (lhs != out.den * out.den * target) throw Error("conic_parametrize: identity check failed");
    return out;
}

Point involution_C(const BinaryForm& qprime, const Point& p) {
    Rat nd = -qprime.disc();
    if (is_square(nd).has_value())
        throw AnisotropyViolated("involution needs -disc Q' to be a non-square");
    Rat v = qprime.eval(p.first, p.second);
    if (v == 0) throw AnisotropyViolated("Q' vanishes at the point");
    return {p.first / v, p.second / v};
}

} // namespace galois3
