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

#include "galois3/unipoly.hpp"

#include <algorithm>

#include "galois3/errors.hpp"

namespace galois3 {

UniPoly upoly(std::vector<Rat> descending) {
    std::reverse(descending.begin(), descending.end());
    return UniPoly(std::move(descending));
}

UniPoly upoly_x() { return UniPoly::variable(); }

std::string to_string(const UniPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        Rat c = f.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        bool first = out.empty();
        if (!first) out += sign(c) < 0 ? "-" : "+";
        else if (sign(c) < 0) out += "-";
        Rat a = abs(c);
        if (i == 0) {
            out += to_string(a);
        } else {
            if (a != 1) out += to_string(a) + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

UniPoly monic(const UniPoly& f) {
    if (f.is_zero()) throw Error("monic(0)");
    return f * (Rat(1) / f.lead());
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    UniPoly r = a;
    std::vector<Rat> q;
    if (r.degree() >= b.degree()) q.assign(static_cast<std::size_t>(r.degree() - b.degree()) + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rat c = r.lead() / b.lead();
        std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
        q[k] = c;
        r -= UniPoly::monomial(c, k) * b;
    }
    return {UniPoly(std::move(q)), r};
}

bool divides(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) return true;
    if (a.is_zero() || b.degree() < a.degree()) return false;
    return divrem(b, a).second.is_zero();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divrem(x, y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : monic(x);
}

UniPoly radical(const UniPoly& f) {
    if (f.is_zero()) throw Error("radical(0)");
    if (f.degree() == 0) return UniPoly(Rat(1));
    return monic(divrem(f, gcd(f, f.derivative())).first);
}

Rat discriminant(const UniPoly& f) {
    int n = f.degree();
    if (n < 2) throw Error("discriminant needs degree >= 2");
    Rat res = resultant(f, f.derivative());
    Rat d = res / f.lead();
    return (static_cast<long>(n) * (n - 1) / 2) % 2 == 1 ? Rat(-d) : d;
}

namespace {

// f as primitive integer coefficients (degree-ascending), dropping the
// rational content.
std::vector<Int> primitive_coeffs(const UniPoly& f) {
    Int l = 1;
    for (const Rat& c : f.coeffs()) l = lcm(l, c.get_den());
    std::vector<Int> v;
    v.reserve(f.coeffs().size());
    Int g = 0;
    for (const Rat& c : f.coeffs()) {
        Int z = Int(c * l);
        v.push_back(z);
        g = gcd(g, z);
    }
    if (g > 1)
        for (Int& z : v) z /= g;
    return v;
}

} // namespace

std::vector<Rat> rational_roots(const UniPoly& f, const FactorBudget& budget) {
    if (f.is_zero()) throw Error("rational_roots(0)");
    std::vector<Rat> roots;
    UniPoly g = f;
    // strip zero roots
    std::size_t k = 0;
    while (k < g.coeffs().size() && g.coeff(k) == 0) ++k;
    if (k > 0) {
        roots.assign(k, Rat(0));
        std::vector<Rat> c(g.coeffs().begin() + static_cast<long>(k), g.coeffs().end());
        g = UniPoly(std::move(c));
    }
    if (g.degree() == 1) {
        roots.push_back(-g.coeff(0) / g.coeff(1));
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    if (g.degree() == 2) {
        // quadratic formula; no factoring needed
        Rat a = g.coeff(2), b = g.coeff(1), c = g.coeff(0);
        if (auto w = is_square(Rat(b * b - 4 * a * c))) {
            roots.push_back((-b + *w) / (2 * a));
            roots.push_back((-b - *w) / (2 * a));
        }
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    if (g.degree() >= 3) {
        std::vector<Int> zc = primitive_coeffs(g);
        // no-root-mod-p filter: a rational root descends to every F_p with
        // p not dividing the leading coefficient, so one rootless prime
        // settles the question without factoring anything
        bool maybe_rooted = true;
        for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L}) {
            if (mpz_divisible_ui_p(zc.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
            bool any = false;
            for (long x = 0; x < p && !any; ++x) {
                long v = 0;
                for (std::size_t i = zc.size(); i-- > 0;)
                    v = (v * x + mpz_class(zc[i] % p).get_si() % p + p) % p;
                any = v == 0;
            }
            if (!any) {
                maybe_rooted = false;
                break;
            }
        }
        if (maybe_rooted) {
            std::vector<Int> ps = divisors(zc.front(), budget);
            std::vector<Int> qs = divisors(zc.back(), budget);
            Int f1 = 0, fm1 = 0; // f(1), f(-1): (q -+ p) must divide them
            for (std::size_t i = 0; i < zc.size(); ++i) {
                f1 += zc[i];
                fm1 += (i % 2 ? -zc[i] : zc[i]);
            }
            for (const Int& p : ps) {
                if (g.degree() < 1) break;
                for (const Int& q : qs) {
                    if (g.degree() < 1) break;
                    if (gcd(p, q) != 1) continue;
                    for (int s : {1, -1}) {
                        Int sp = s * p;
                        if (f1 != 0 && q - sp != 0 && !mpz_divisible_p(f1.get_mpz_t(), Int(q - sp).get_mpz_t()))
                            continue;
                        if (fm1 != 0 && q + sp != 0 && !mpz_divisible_p(fm1.get_mpz_t(), Int(q + sp).get_mpz_t()))
                            continue;
                        Rat cand = rat(sp, q);
                        while (g.degree() >= 1 && g(cand) == 0) {
                            roots.push_back(cand);
                            // deflate by (x - cand)
                            g = divrem(g, upoly({Rat(1), -cand})).first;
                        }
                    }
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

UniPoly Factorization::remultiply() const {
    UniPoly f{Rat(1)};
    f = f * unit;
    for (const auto& [g, e] : factors)
        for (int i = 0; i < e; ++i) f = f * g;
    return f;
}

namespace {

// Splits a monic depressed quartic with no rational roots into two monic
// quadratics if possible. Returns factors in a deterministic order.
std::vector<UniPoly> quartic_quadratic_split(const Rat& q, const Rat& r, const Rat& s,
                                             const FactorBudget& budget) {
    // (x^2+ux+v)(x^2-ux+z): u^2 is a root of w^3 + 2q w^2 + (q^2-4s) w - r^2
    UniPoly wcubic = upoly({Rat(1), 2 * q, q * q - 4 * s, -r * r});
    for (const Rat& w : rational_roots(wcubic, budget)) {
        if (w == 0) {
            if (r != 0) continue;
            auto wd = is_square(Rat(q * q - 4 * s));
            if (!wd) continue;
            Rat v = (q + *wd) / 2, z = (q - *wd) / 2;
            return {upoly({Rat(1), Rat(0), v}), upoly({Rat(1), Rat(0), z})};
        }
        auto u = is_square(w);
        if (!u || *u == 0) continue;
        Rat v = (q + w - r / *u) / 2;
        Rat z = (q + w + r / *u) / 2;
        return {upoly({Rat(1), *u, v}), upoly({Rat(1), -*u, z})};
    }
    return {};
}

} // namespace

Factorization factor_small(const UniPoly& f, const FactorBudget& budget) {
    if (f.is_zero() || f.degree() > 4) throw Error("factor_small needs 1 <= deg <= 4");
    Factorization out;
    out.unit = f.lead();
    UniPoly g = monic(f);

    for (const Rat& root : rational_roots(g, budget)) {
        UniPoly lin = upoly({Rat(1), -root});
        int mult = 0;
        while (divides(lin, g)) {
            g = divrem(g, lin).first;
            ++mult;
        }
        if (mult > 0) out.factors.push_back({lin, mult});
    }

    if (g.degree() == 2) {
        // no rational roots left, so irreducible
        out.factors.push_back({g, 1});
    } else if (g.degree() == 3) {
        out.factors.push_back({g, 1}); // cubic without rational roots
    } else if (g.degree() == 4) {
        auto [dep, c] = depress(g);
        auto split = quartic_quadratic_split(dep.coeff(2), dep.coeff(1), dep.coeff(0), budget);
        if (split.empty()) {
            out.factors.push_back({g, 1});
        } else {
            for (UniPoly& h : split) {
                UniPoly hs = shift(h, -c); // undo the depression shift
                int mult = 0;
                while (divides(hs, g)) {
                    g = divrem(g, hs).first;
                    ++mult;
                }
                if (mult > 0) out.factors.push_back({hs, mult});
            }
            if (g.degree() > 0) throw Error("internal: quartic split inconsistency");
        }
    }

    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i) {
            Rat ca = a.first.coeff(static_cast<std::size_t>(i));
            Rat cb = b.first.coeff(static_cast<std::size_t>(i));
            if (ca != cb) return ca < cb;
        }
        return false;
    });
    return out;
}

UniPoly tschirnhaus(const UniPoly& f, const UniPoly& T) {
    if (f.degree() < 1) throw Error("tschirnhaus needs deg f >= 1");
    if (T.degree() >= f.degree()) throw Error("tschirnhaus needs deg T < deg f");
    UniPoly fm = monic(f);
    // work in Q[x][y]: A = f(y), B = x - T(y)
    std::vector<UniPoly> ac;
    ac.reserve(fm.coeffs().size());
    for (const Rat& c : fm.coeffs()) ac.push_back(UniPoly(c));
    BiPoly A{std::move(ac)};
    std::vector<UniPoly> bc(static_cast<std::size_t>(std::max(T.degree(), 0)) + 1);
    for (std::size_t i = 0; i < bc.size(); ++i) bc[i] = UniPoly(-T.coeff(i));
    bc[0] += upoly_x(); // constant term in y carries the x
    BiPoly B{std::move(bc)};
    UniPoly res = resultant(A, B);
    // monic by construction (f monic); normalize to absorb any PRS sign
    return monic(res);
}

UniPoly shift(const UniPoly& f, const Rat& c) {
    return upoly({Rat(1), c}).compose_into(f); // f(x + c)
}

UniPoly scale_arg(const UniPoly& f, const Rat& c) {
    std::vector<Rat> v(f.coeffs());
    Rat p(1);
    for (std::size_t i = 1; i < v.size(); ++i) {
        p *= c;
        v[i] *= p;
    }
    return UniPoly(std::move(v));
}

std::pair<UniPoly, Rat> depress(const UniPoly& f) {
    if (f.degree() < 1) throw Error("depress needs deg >= 1");
    UniPoly g = monic(f);
    std::size_t n = static_cast<std::size_t>(g.degree());
    Rat c = -g.coeff(n - 1) / Rat(static_cast<long>(n));
    return {shift(g, c), c};
}

} // namespace galois3
