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

#include "galois3/solver.hpp"

#include <algorithm>
#include <set>

#include "galois3/errors.hpp"

namespace galois3 {

std::string to_string(ObstructionReport::Verdict v) {
    switch (v) {
    case ObstructionReport::Verdict::Trivial: return "trivial";
    case ObstructionReport::Verdict::Solvable: return "+1";
    case ObstructionReport::Verdict::Obstructed: return "-1";
    case ObstructionReport::Verdict::Unsupported: return "unsupported";
    }
    return "?";
}

ObstructionReport obstruction(const GaloisCase& c, const FactorBudget& budget) {
    ObstructionReport rep;
    rep.label = c.label;
    switch (c.label) {
    case GaloisLabel::C2:
    case GaloisLabel::S3:
        // the extension 1 -> {+-1} -> Gtilde -> G -> 1 is split
        rep.verdict = ObstructionReport::Verdict::Trivial;
        return rep;
    case GaloisLabel::C2xC2: {
        Rat alpha(c.delta1), beta(3);
        rep.args = {squarefree_part(alpha, budget), squarefree_part(beta, budget)};
        rep.entries = hilbert_entries(alpha, beta, budget);
        break;
    }
    case GaloisLabel::D4: {
        if (c.even_a == 0) {
            rep.verdict = ObstructionReport::Verdict::Trivial;
            return rep;
        }
        Rat alpha = 3 * (c.even_a * c.even_a + 12 * c.even_d * c.even_d);
        Rat beta = 2 * c.even_a;
        rep.args = {squarefree_part(alpha, budget), squarefree_part(beta, budget)};
        rep.entries = hilbert_entries(alpha, beta, budget);
        break;
    }
    case GaloisLabel::S4:
        rep.verdict = ObstructionReport::Verdict::Unsupported;
        return rep;
    }
    bool minus = false;
    for (const LocalEntry& e : rep.entries) minus |= e.symbol < 0;
    rep.verdict = minus ? ObstructionReport::Verdict::Obstructed : ObstructionReport::Verdict::Solvable;
    return rep;
}

bool run_check(const CertCheck& c, const FactorBudget& budget) {
    switch (c.kind) {
    case CertCheck::Kind::PolynomialIdentity:
        return c.lhs == c.rhs;
    case CertCheck::Kind::SquarefreeClassEqual:
        // value lies in the class of cls iff value/cls is a square
        return c.value != 0 && c.cls != 0 && is_square(Rat(c.value / c.cls)).has_value();
    case CertCheck::Kind::LemmaConditions:
        for (const Rat& v : c.nonsquares)
            if (v == 0 || is_square(v).has_value()) return false;
        return true;
    case CertCheck::Kind::FactorizationShape: {
        if (c.poly.is_zero()) return false;
        auto fac = factor_small(c.poly, budget);
        std::vector<int> degs;
        for (const auto& [g, e] : fac.factors)
            for (int i = 0; i < e; ++i) degs.push_back(g.degree());
        std::vector<int> want = c.shape;
        std::sort(degs.begin(), degs.end());
        std::sort(want.begin(), want.end());
        return degs == want;
    }
    }
    return false;
}

namespace {

CertCheck poly_identity(std::string what, UniPoly lhs, UniPoly rhs) {
    CertCheck c;
    c.kind = CertCheck::Kind::PolynomialIdentity;
    c.what = std::move(what);
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    return c;
}

CertCheck value_identity(std::string what, const Rat& lhs, const Rat& rhs) {
    return poly_identity(std::move(what), UniPoly(lhs), UniPoly(rhs));
}

CertCheck class_equal(std::string what, Rat value, Int cls) {
    CertCheck c;
    c.kind = CertCheck::Kind::SquarefreeClassEqual;
    c.what = std::move(what);
    c.value = std::move(value);
    c.cls = std::move(cls);
    return c;
}

CertCheck lemma_nonsquares(std::string what, std::vector<Rat> vals) {
    CertCheck c;
    c.kind = CertCheck::Kind::LemmaConditions;
    c.what = std::move(what);
    c.nonsquares = std::move(vals);
    return c;
}

CertCheck factor_shape(std::string what, UniPoly poly, std::vector<int> shape) {
    CertCheck c;
    c.kind = CertCheck::Kind::FactorizationShape;
    c.what = std::move(what);
    c.poly = std::move(poly);
    c.shape = std::move(shape);
    return c;
}

UniPoly product(const std::vector<UniPoly>& fs) {
    UniPoly p{Rat(1)};
    for (const UniPoly& f : fs) p = p * f;
    return p;
}

// ---- chain builders (shared between record construction and verify) ----

CertificateChain c2_chain(const Curve& e, const std::optional<Rat>& family_t) {
    CertificateChain ch;
    UniPoly psi = monic(psi3(e));
    ch.checks.push_back(factor_shape("psi3 splits as linear*linear*quadratic", psi, {1, 1, 2}));
    // the quadratic factor carries K = Q(sqrt(-3))
    auto fac = factor_small(psi);
    for (const auto& [g, mult] : fac.factors)
        if (g.degree() == 2)
            ch.checks.push_back(class_equal("quadratic factor disc class -3", discriminant(g), Int(-3)));
    if (family_t) {
        ch.checks.push_back(poly_identity("psi3 equals the C2 family factorization",
                                          psi, product(psi3_family_factors(GaloisLabel::C2, *family_t))));
    }
    return ch;
}

CertificateChain c2x_chain(const Int& delta1, const Int& delta2, const Rat& t, const Curve& e) {
    CertificateChain ch;
    Rat u = t * t - 6 * t - 3;
    ch.checks.push_back(class_equal("t^2-6t-3 lies in the class of delta1", u, delta1));
    auto fs = psi3_family_factors(GaloisLabel::C2xC2, t);
    ch.checks.push_back(poly_identity("psi3 equals the two quadratic factors", monic(psi3(e)), product(fs)));
    ch.checks.push_back(lemma_nonsquares("both quadratic factors irreducible",
                                         {discriminant(fs[0]), discriminant(fs[1])}));
    ch.checks.push_back(class_equal("first factor disc class delta1", discriminant(fs[0]), delta1));
    ch.checks.push_back(class_equal("second factor disc class delta2", discriminant(fs[1]), delta2));
    return ch;
}

CertificateChain s3_chain(const Rat& a, const Rat& b, const Rat& r, const Rat& n, const Rat& t,
                          const Curve& e) {
    CertificateChain ch;
    Rat astar = (3 * a * r * r - a * a + 9 * b * r) / 3;
    Rat bstar = (-18 * a * a * r * r + 27 * b * r * r * r - 2 * a * a * a - 27 * a * b * r -
                 27 * b * b) / 27;
    // the Tschirnhaus y_i = (2/3)a n + r n x_i + n x_i^2 of x^3+ax+b
    UniPoly T = upoly({n, r * n, Rat(2) / 3 * a * n});
    UniPoly fstar = upoly({Rat(1), Rat(0), astar * n * n, bstar * n * n * n});
    ch.checks.push_back(poly_identity("tschirnhaus(x^3+ax+b, (2/3)an + rnx + nx^2) = x^3+a*n^2 x+b*n^3",
                                      tschirnhaus(upoly({Rat(1), Rat(0), a, b}), T), fstar));
    ch.checks.push_back(factor_shape("f* irreducible", fstar, {3}));
    Rat At = -3 * (t + 1);
    Rat Bt = (t + 1) * (t + 2);
    ch.checks.push_back(value_identity("A(t) = a* n^2", At, astar * n * n));
    ch.checks.push_back(value_identity("B(t) = -b* n^3", Bt, -bstar * n * n * n));
    auto fs = psi3_family_factors(GaloisLabel::S3, t);
    ch.checks.push_back(poly_identity("psi3 equals the S3 family factorization", monic(psi3(e)), product(fs)));
    // depressed cubic factor, roots scaled by 4, equals 64 (x^3 + A(t)x + B(t))
    UniPoly dep = depress(fs[1]).first;
    ch.checks.push_back(poly_identity("cubic factor matches x^3+A(t)x+B(t) after scaling",
                                      scale_arg(dep, Rat(4)),
                                      upoly({Rat(64), Rat(0), Rat(64) * At, Rat(64) * Bt})));
    ch.checks.push_back(factor_shape("cubic factor irreducible", fs[1], {3}));
    if (n == 0) ch.checks.push_back(lemma_nonsquares("n must be nonzero", {Rat(0)}));
    return ch;
}

CertificateChain d4_chain(const Rat& a, const Rat& d, const Rat& n, const Rat& m, const Rat& t,
                          const Curve& e) {
    CertificateChain ch;
    Rat astar = (a * a * a + 9 * a * d * d) * n * n - (2 * a * a + 12 * d * d) * m * n + a * m * m;
    Rat dstar = 3 * d * d * d * n * n + a * d * m * n - d * m * m;

    UniPoly feven = upoly({Rat(1), Rat(0), a, Rat(0), -3 * d * d});
    UniPoly fstar = upoly({Rat(1), Rat(0), astar, Rat(0), -3 * dstar * dstar});
    ch.checks.push_back(poly_identity("tschirnhaus(x^4+ax^2-3d^2, n y^3 + m y) = x^4+a* x^2-3 d*^2",
                                      tschirnhaus(feven, upoly({n, Rat(0), m, Rat(0)})), fstar));
    ch.checks.push_back(lemma_nonsquares("Lemma conditions for f and f*",
                                         {a * a + 12 * d * d, astar * astar + 12 * dstar * dstar,
                                          -3 * d * d, -3 * dstar * dstar}));
    ch.checks.push_back(factor_shape("x^4+ax^2-3d^2 irreducible", feven, {4}));
    ch.checks.push_back(factor_shape("x^4+a* x^2-3 d*^2 irreducible", fstar, {4}));

    ch.checks.push_back(value_identity("(a*, d*) lies on C_{a,d}",
                                       (astar + 2 * dstar) * (astar + 2 * dstar),
                                       1728 * (astar + 6 * dstar)));
    Rat At = -6 * (t - 12) * (t + 24);
    Rat Dt = 3 * t * (t - 12);
    ch.checks.push_back(value_identity("A(t) = a*", At, astar));
    ch.checks.push_back(value_identity("3 D(t)^2 = 3 d*^2", 3 * Dt * Dt, 3 * dstar * dstar));

    // psi_* of the curve's division polynomial
    Rat denom = 24 * (t * t + 12 * t + 144);
    UniPoly Tpsi = upoly({1 / denom, Rat(-1) / 12, -t * (t - 12) / 8});
    ch.checks.push_back(poly_identity("tschirnhaus(psi3, y = -t(t-12)/8 - x/12 + x^2/(24(t^2+12t+144)))",
                                      tschirnhaus(monic(psi3(e)), Tpsi),
                                      upoly({Rat(1), Rat(0), At, Rat(0), -3 * Dt * Dt})));
    ch.checks.push_back(lemma_nonsquares("Lemma conditions for psi_*",
                                         {At * At + 12 * Dt * Dt, -3 * Dt * Dt}));
    return ch;
}

void run_chain_or_throw(const CertificateChain& ch, const FactorBudget& budget) {
    for (const CertCheck& c : ch.checks)
        if (!run_check(c, budget)) throw DegenerateParameter("certificate check failed: " + c.what);
}

SolutionRecord finish_record(GaloisLabel label, const Rat& t, Curve curve, CertificateChain ch,
                             std::map<std::string, Rat> witness, const FactorBudget& budget) {
    SolutionRecord rec;
    rec.label = label;
    rec.t = t;
    rec.curve = std::move(curve);
    rec.j = j_invariant(rec.curve);
    rec.non_cm = !is_cm_j(rec.j);
    rec.witness = std::move(witness);
    rec.cert = std::move(ch);
    run_chain_or_throw(rec.cert, budget);
    return rec;
}

} // namespace

SolutionRecord c2_record_explicit() {
    Curve e = make_curve(Rat(-6), rat(-13, 4));
    return finish_record(GaloisLabel::C2, Rat(1), e, c2_chain(e, std::nullopt),
                         {{"family", Rat(0)}}, {});
}

SolutionRecord c2_record_from_t(const Rat& t, const FactorBudget& budget) {
    Curve e = family(GaloisLabel::C2, t);
    return finish_record(GaloisLabel::C2, t, e, c2_chain(e, t), {{"family", Rat(1)}}, budget);
}

SolutionRecord c2x_record_from_t(const Int& delta1, const Int& delta2, const Rat& t,
                                 const FactorBudget& budget) {
    Curve e = family(GaloisLabel::C2xC2, t);
    return finish_record(GaloisLabel::C2xC2, t, e, c2x_chain(delta1, delta2, t, e), {}, budget);
}

SolutionRecord s3_record_from_r(const Rat& a, const Rat& b, const Rat& r, const FactorBudget& budget) {
    Rat astar = (3 * a * r * r - a * a + 9 * b * r) / 3;
    if (astar == 0) throw DegenerateParameter("a*(r) = 0");
    Rat bstar = (-18 * a * a * r * r + 27 * b * r * r * r - 2 * a * a * a - 27 * a * b * r -
                 27 * b * b) / 27;
    Rat radicand = 81 * bstar * bstar + 12 * astar * astar * astar;
    auto root = is_square(radicand);
    if (!root) throw DegenerateParameter("81 b*^2 + 12 a*^3 is not a square");
    Rat n = (-9 * bstar + *root) / (2 * astar * astar);
    if (n == 0) n = (-9 * bstar - *root) / (2 * astar * astar); // product -3/a* keeps both nonzero
    Rat t = -astar * n * n / 3 - 1;
    if (t == 0 || t == -1) throw DegenerateParameter("t(r) degenerate");
    Curve e = family(GaloisLabel::S3, t);
    return finish_record(GaloisLabel::S3, t, e, s3_chain(a, b, r, n, t, e),
                         {{"r", r}, {"n", n}}, budget);
}

SolutionRecord d4_record_from_cpoint(const Rat& a, const Rat& d, const Rat& n, const Rat& m,
                                     const FactorBudget& budget) {
    Rat astar = (a * a * a + 9 * a * d * d) * n * n - (2 * a * a + 12 * d * d) * m * n + a * m * m;
    Rat dstar = 3 * d * d * d * n * n + a * d * m * n - d * m * m;
    if ((astar + 2 * dstar) * (astar + 2 * dstar) != 1728 * (astar + 6 * dstar))
        throw DegenerateParameter("(n, m) is not on C_{a,d}");
    Rat t = (1728 - astar - 2 * dstar) / 144;
    Curve e = family(GaloisLabel::D4, t); // throws when singular (t = 0, 12)
    return finish_record(GaloisLabel::D4, t, e, d4_chain(a, d, n, m, t, e),
                         {{"n", n}, {"m", m}}, budget);
}

namespace {

// Emit records from a parameter enumeration until `count` distinct
// non-CM j-invariants are collected.
template <class Step>
std::vector<SolutionRecord> collect(int count, const SolveOptions& opt, Step step) {
    std::vector<SolutionRecord> out;
    std::set<Rat> seen;
    for (unsigned long i = 0; i < opt.max_samples && out.size() < static_cast<std::size_t>(count); ++i) {
        std::optional<SolutionRecord> rec;
        try {
            rec = step(i);
        } catch (const DegenerateParameter&) {
            continue;
        } catch (const SingularCurve&) {
            continue;
        }
        if (!rec) continue;
        if (!rec->non_cm) continue;
        if (!seen.insert(rec->j).second) continue;
        out.push_back(std::move(*rec));
    }
    if (out.size() < static_cast<std::size_t>(count))
        throw SearchBudgetExceeded("sampling budget exhausted before count was reached");
    return out;
}

} // namespace

std::vector<SolutionRecord> solve_C2(int count, const SolveOptions& opt) {
    RationalEnumerator en;
    return collect(count, opt, [&](unsigned long i) -> std::optional<SolutionRecord> {
        if (i == 0) return c2_record_explicit();
        return c2_record_from_t(en.next(), opt.factor);
    });
}

std::vector<SolutionRecord> solve_C2xC2(const Int& delta1, const Int& delta2, int count,
                                        const SolveOptions& opt) {
    GaloisCase c;
    c.label = GaloisLabel::C2xC2;
    c.delta1 = delta1;
    c.delta2 = delta2;
    if (!obstruction(c, opt.factor).solvable())
        throw Obstructed("(delta1, 3) = -1: embedding problem obstructed");

    // t^2-6t-3 = delta1 s^2 with u = t-3: points of u^2 - delta1 s^2 = 12
    BinaryForm q{Rat(1), Rat(-Rat(delta1)), Rat(0)};
    auto base = conic_point(q, Rat(12), opt.search, opt.factor);
    if (!base) throw Error("internal: solvable case but conic has no point");
    auto par = conic_parametrize(q, Rat(12), *base);

    RationalEnumerator en;
    bool base_done = false;
    return collect(count, opt, [&](unsigned long) -> std::optional<SolutionRecord> {
        Rat u;
        if (!base_done) {
            base_done = true;
            u = base->first;
        } else {
            auto pt = par.at(en.next());
            if (!pt) return std::nullopt;
            u = pt->first;
        }
        return c2x_record_from_t(delta1, delta2, u + 3, opt.factor);
    });
}

std::vector<SolutionRecord> solve_S3(const Rat& a, const Rat& b, int count, const SolveOptions& opt) {
    RationalEnumerator en;
    return collect(count, opt, [&](unsigned long) -> std::optional<SolutionRecord> {
        return s3_record_from_r(a, b, en.next(), opt.factor);
    });
}

std::vector<SolutionRecord> solve_D4(const Rat& a, const Rat& d, int count, const SolveOptions& opt) {
    GaloisCase c;
    c.label = GaloisLabel::D4;
    c.even_a = a;
    c.even_d = d;
    if (!obstruction(c, opt.factor).solvable())
        throw Obstructed("(3(a^2+12d^2), 2a) = -1: embedding problem obstructed");

    // conic 1728 (a* + 6 d*)(n, m) = 1, then the involution onto C_{a,d}
    BinaryForm conic{Rat(1728) * (a * a * a + 9 * a * d * d + 18 * d * d * d),
                     Rat(1728) * (a - 6 * d),
                     Rat(1728) * (-2 * a * a + 6 * a * d - 12 * d * d)};
    BinaryForm qprime{a * a * a + 9 * a * d * d + 6 * d * d * d, a - 2 * d,
                      -2 * a * a + 2 * a * d - 12 * d * d}; // a* + 2 d*
    auto base = conic_point(conic, Rat(1), opt.search, opt.factor);
    if (!base) throw Error("internal: solvable case but conic has no point");
    auto par = conic_parametrize(conic, Rat(1), *base);

    RationalEnumerator en;
    bool base_done = false;
    return collect(count, opt, [&](unsigned long) -> std::optional<SolutionRecord> {
        Point p0;
        if (!base_done) {
            base_done = true;
            p0 = *base;
        } else {
            auto pt = par.at(en.next());
            if (!pt) return std::nullopt;
            p0 = *pt;
        }
        Point cp = involution_C(qprime, p0);
        return d4_record_from_cpoint(a, d, cp.first, cp.second, opt.factor);
    });
}

std::vector<SolutionRecord> solve(const GaloisCase& c, int count, const SolveOptions& opt) {
    switch (c.label) {
    case GaloisLabel::C2: return solve_C2(count, opt);
    case GaloisLabel::C2xC2: return solve_C2xC2(c.delta1, c.delta2, count, opt);
    case GaloisLabel::S3: return solve_S3(c.cubic_a, c.cubic_b, count, opt);
    case GaloisLabel::D4: return solve_D4(c.even_a, c.even_d, count, opt);
    case GaloisLabel::S4:
        throw UnsupportedCase("S4 construction is not supported");
    }
    throw Error("unreachable");
}

bool verify_certificate(const SolutionRecord& rec, const ValidatedQuartic& f,
                        const FactorBudget& budget) {
    return verify_certificate(rec, classify(f, budget), budget);
}

bool verify_certificate(const SolutionRecord& rec, const GaloisCase& c, const FactorBudget& budget) {
    try {
        if (rec.label != c.label) return false;
        if (4 * rec.curve.A * rec.curve.A * rec.curve.A + 27 * rec.curve.B * rec.curve.B == 0)
            return false;
        if (rec.j != j_invariant(rec.curve)) return false;
        if (rec.non_cm != !is_cm_j(rec.j)) return false;

        CertificateChain expected;
        switch (c.label) {
        case GaloisLabel::C2: {
            bool fam = rec.witness.count("family") && rec.witness.at("family") == 1;
            if (fam) {
                Curve e = family(GaloisLabel::C2, rec.t);
                if (!(e.A == rec.curve.A && e.B == rec.curve.B)) return false;
            }
            expected = c2_chain(rec.curve, fam ? std::optional<Rat>(rec.t) : std::nullopt);
            break;
        }
        case GaloisLabel::C2xC2: {
            Curve e = family(GaloisLabel::C2xC2, rec.t);
            if (!(e.A == rec.curve.A && e.B == rec.curve.B)) return false;
            expected = c2x_chain(c.delta1, c.delta2, rec.t, rec.curve);
            break;
        }
        case GaloisLabel::S3: {
            Curve e = family(GaloisLabel::S3, rec.t);
            if (!(e.A == rec.curve.A && e.B == rec.curve.B)) return false;
            expected = s3_chain(c.cubic_a, c.cubic_b, rec.witness.at("r"), rec.witness.at("n"),
                                rec.t, rec.curve);
            break;
        }
        case GaloisLabel::D4: {
            Curve e = family(GaloisLabel::D4, rec.t);
            if (!(e.A == rec.curve.A && e.B == rec.curve.B)) return false;
            // t must be the recovery value of the witness point
            Rat n = rec.witness.at("n"), m = rec.witness.at("m");
            Rat astar = (c.even_a * c.even_a * c.even_a + 9 * c.even_a * c.even_d * c.even_d) * n * n -
                        (2 * c.even_a * c.even_a + 12 * c.even_d * c.even_d) * m * n +
                        c.even_a * m * m;
            Rat dstar = 3 * c.even_d * c.even_d * c.even_d * n * n + c.even_a * c.even_d * m * n -
                        c.even_d * m * m;
            if (rec.t != (1728 - astar - 2 * dstar) / 144) return false;
            expected = d4_chain(c.even_a, c.even_d, n, m, rec.t, rec.curve);
            break;
        }
        case GaloisLabel::S4:
            return false;
        }
        for (const CertCheck& chk : expected.checks)
            if (!run_check(chk, budget)) return false;
        return true;
    } catch (const Error&) {
        return false;
    } catch (const std::out_of_range&) {
        return false;
    }
}

} // namespace galois3
