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

#ifndef GALOIS3_POLY_HPP
#define GALOIS3_POLY_HPP

#include <cassert>
#include <vector>

#include "galois3/rational.hpp"

namespace galois3 {

template <class K>
class Poly;

// Constants of a (possibly nested) coefficient ring.
template <class K>
struct Ring {
    static K zero() { return K(); }
    static K one() { return K(1); }
    static K from_long(long v) { return K(v); }
};
template <class K>
struct Ring<Poly<K>> {
    static Poly<K> zero() { return Poly<K>(); }
    static Poly<K> one() { return Poly<K>(Ring<K>::one()); }
    static Poly<K> from_long(long v) { return Poly<K>(Ring<K>::from_long(v)); }
};

// Dense univariate polynomials over an integral domain K, coefficients
// stored degree-ascending with the leading one nonzero. Nesting
// Poly<Poly<...>> gives the multivariate rings the identity checks need
// (innermost type is the innermost variable).
template <class K>
class Poly {
  public:
    Poly() = default;
    explicit Poly(K constant) {
        if (!(constant == K())) c_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<K> ascending) : c_(std::move(ascending)) { trim(); }

    static Poly monomial(K coeff, std::size_t degree) {
        if (coeff == K()) return Poly();
        std::vector<K> v(degree + 1);
        v[degree] = std::move(coeff);
        return Poly(std::move(v));
    }
    static Poly variable() { return monomial(Ring<K>::one(), 1); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const K& lead() const {
        assert(!c_.empty());
        return c_.back();
    }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(); }
    const std::vector<K>& coeffs() const { return c_; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r = *this;
        for (K& x : r.c_) x = -x;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }

    Poly operator*(const K& s) const {
        if (s == K()) return Poly();
        Poly r = *this;
        for (K& x : r.c_) x = x * s;
        return r;
    }

    Poly pow(unsigned long e) const {
        Poly r(Ring<K>::one()), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    template <class V>
    V eval(const V& x) const {
        V acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
        return acc;
    }
    K operator()(const K& x) const { return eval(x); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * Ring<K>::from_long(static_cast<long>(i));
        return Poly(std::move(r));
    }

    // b(a(x)): substitution of *this into the outer polynomial b
    Poly compose_into(const Poly& outer) const { return outer.template eval<Poly>(*this); }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == K()) c_.pop_back();
    }
    std::vector<K> c_;
};

// ---- exact division helpers (integral domain; division must be exact) ----

inline Rat ring_divexact(const Rat& a, const Rat& b) { return a / b; }

template <class K>
Poly<K> ring_divexact(const Poly<K>& a, const Poly<K>& b) {
    assert(!b.is_zero());
    if (a.is_zero()) return Poly<K>();
    assert(a.degree() >= b.degree());
    std::vector<K> rem(a.coeffs());
    std::vector<K> quot(a.degree() - b.degree() + 1);
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
        K q = ring_divexact(rem[i + b.degree()], b.lead());
        quot[i] = q;
        for (int j = 0; j <= b.degree(); ++j) rem[i + j] = rem[i + j] - q * b.coeff(j);
    }
#ifndef NDEBUG
    for (const K& r : rem) assert(r == K());
#endif
    return Poly<K>(std::move(quot));
}

template <class K>
K ring_pow(const K& base, unsigned long e) {
    K r = Ring<K>::one(), b = base;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

// lc(B)^(deg A - deg B + 1) * A mod B, computed without leaving the ring.
template <class K>
Poly<K> pseudo_rem(Poly<K> A, const Poly<K>& B) {
    assert(!B.is_zero() && A.degree() >= B.degree());
    int e = A.degree() - B.degree() + 1;
    const K& lb = B.lead();
    while (!A.is_zero() && A.degree() >= B.degree()) {
        Poly<K> shift = Poly<K>::monomial(A.lead(), A.degree() - B.degree());
        A = A * lb - shift * B;
        --e;
    }
    return e > 0 ? A * ring_pow(lb, static_cast<unsigned long>(e)) : A;
}

// Resultant with the convention Res(A, B) = lc(A)^deg(B) * prod B(alpha)
// over the roots alpha of A, via the subresultant PRS (exact over any
// integral domain, no fraction field required).
template <class K>
K resultant(Poly<K> A, Poly<K> B) {
    if (A.is_zero() || B.is_zero()) return K();
    int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        std::swap(A, B);
    }
    if (B.degree() == 0) {
        K r = ring_pow(B.lead(), static_cast<unsigned long>(A.degree()));
        return s > 0 ? r : -r;
    }
    K g = Ring<K>::one(), h = Ring<K>::one();
    while (true) {
        int delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        Poly<K> R = pseudo_rem(A, B);
        A = B;
        K div = g * ring_pow(h, static_cast<unsigned long>(delta));
        if (R.is_zero())
            B = Poly<K>();
        else {
            B = R;
            std::vector<K> c(B.coeffs());
            for (K& x : c) x = ring_divexact(x, div);
            B = Poly<K>(std::move(c));
        }
        if (B.is_zero()) return K(); // common factor of positive degree
        g = A.lead();
        h = delta == 0 ? h : ring_divexact(ring_pow(g, static_cast<unsigned long>(delta)),
                                           ring_pow(h, static_cast<unsigned long>(delta - 1)));
        if (B.degree() == 0) break;
    }
    K r = ring_divexact(ring_pow(B.lead(), static_cast<unsigned long>(A.degree())),
                        ring_pow(h, static_cast<unsigned long>(A.degree() - 1)));
    return s > 0 ? r : -r;
}

} // namespace galois3

#endif
