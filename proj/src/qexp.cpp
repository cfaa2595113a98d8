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

#include "galois3/qexp.hpp"

#include <algorithm>

#include "galois3/errors.hpp"

namespace galois3 {

LaurentSeries::LaurentSeries(long valuation, std::vector<Rat> coeffs, long prec)
    : val_(valuation), c_(std::move(coeffs)), prec_(prec) {
    trim();
}

LaurentSeries LaurentSeries::monomial(const Rat& c, long exponent, long prec) {
    return LaurentSeries(exponent, {c}, prec);
}

void LaurentSeries::trim() {
    // drop anything beyond prec, then leading/trailing zeros
    if (!c_.empty() && val_ + static_cast<long>(c_.size()) - 1 > prec_)
        c_.resize(static_cast<std::size_t>(prec_ - val_ + 1 > 0 ? prec_ - val_ + 1 : 0));
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        val_ += static_cast<long>(lead);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) val_ = 0;
}

long LaurentSeries::valuation() const {
    if (c_.empty()) throw Error("valuation of the zero series");
    return val_;
}

Rat LaurentSeries::coeff(long exponent) const {
    if (exponent > prec_) throw Error("coefficient beyond truncation order");
    long i = exponent - val_;
    if (i < 0 || i >= static_cast<long>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(i)];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    long prec = std::min(prec_, o.prec_);
    if (is_zero()) {
        LaurentSeries r = o;
        r.prec_ = prec;
        r.trim();
        return r;
    }
    if (o.is_zero()) {
        LaurentSeries r = *this;
        r.prec_ = prec;
        r.trim();
        return r;
    }
    long lo = std::min(val_, o.val_);
    long hi = std::min(prec, std::max(val_ + static_cast<long>(c_.size()), o.val_ + static_cast<long>(o.c_.size())) - 1);
    if (hi < lo) return LaurentSeries(0, {}, prec);
    std::vector<Rat> c(static_cast<std::size_t>(hi - lo + 1));
    for (long e = lo; e <= hi; ++e) {
        Rat v(0);
        long i = e - val_;
        if (i >= 0 && i < static_cast<long>(c_.size())) v += c_[static_cast<std::size_t>(i)];
        long k = e - o.val_;
        if (k >= 0 && k < static_cast<long>(o.c_.size())) v += o.c_[static_cast<std::size_t>(k)];
        c[static_cast<std::size_t>(e - lo)] = v;
    }
    return LaurentSeries(lo, std::move(c), prec);
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + o * Rat(-1); }

LaurentSeries LaurentSeries::operator*(const Rat& s) const {
    if (s == 0) return LaurentSeries(0, {}, prec_);
    LaurentSeries r = *this;
    for (Rat& x : r.c_) x *= s;
    return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    // a product term at exponent e is complete iff every contributing pair
    // is inside both windows: valid through min(prec + o.val, o.prec + val)
    if (is_zero() || o.is_zero()) return LaurentSeries(0, {}, std::min(prec_, o.prec_));
    long prec = std::min(prec_ + o.val_, o.prec_ + val_);
    long lo = val_ + o.val_;
    if (prec < lo) throw Error("series product has no valid terms");
    std::vector<Rat> c(static_cast<std::size_t>(prec - lo + 1));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            long e = val_ + static_cast<long>(i) + o.val_ + static_cast<long>(k);
            if (e > prec) break;
            c[static_cast<std::size_t>(e - lo)] += c_[i] * o.c_[k];
        }
    }
    return LaurentSeries(lo, std::move(c), prec);
}

LaurentSeries LaurentSeries::inverse() const {
    if (is_zero()) throw DivideByZeroSeries("inverse of the zero series");
    // f = c u^v (1 + eps); 1/f = u^-v/c * sum (-eps)^k, relative precision
    // is preserved: prec' = prec - 2v
    long v = val_;
    Rat lead = c_.front();
    long rel = prec_ - v; // number of valid higher orders
    std::vector<Rat> inv(static_cast<std::size_t>(rel + 1));
    inv[0] = 1 / lead;
    for (long k = 1; k <= rel; ++k) {
        // convolution: sum_{i=1..k} f_{v+i} * inv_{k-i} = 0
        Rat s(0);
        for (long i = 1; i <= k; ++i) {
            long idx = i;
            if (idx < static_cast<long>(c_.size()))
                s += c_[static_cast<std::size_t>(idx)] * inv[static_cast<std::size_t>(k - i)];
        }
        inv[static_cast<std::size_t>(k)] = -s / lead;
    }
    return LaurentSeries(-v, std::move(inv), prec_ - 2 * v);
}

LaurentSeries LaurentSeries::pow(unsigned long e) const {
    if (e == 0) return one(prec_);
    LaurentSeries r = *this;
    for (unsigned long i = 1; i < e; ++i) r = r * *this;
    return r;
}

bool LaurentSeries::identically_zero_to(long order) const {
    if (prec_ < order) throw Error("series not valid to the requested order");
    if (is_zero()) return true;
    return val_ > order;
}

LaurentSeries eta_cubed_product(long n) {
    LaurentSeries p = LaurentSeries::one(n);
    for (long k = 1; k <= n; ++k) {
        LaurentSeries f = LaurentSeries::one(n) - LaurentSeries::monomial(Rat(1), k, n);
        p = p * f * f * f;
    }
    return p;
}

LaurentSeries eta_quotient_h(long n) {
    long work = n + 2;
    LaurentSeries num = eta_cubed_product(work);
    LaurentSeries den = LaurentSeries::one(work);
    for (long k = 1; 9 * k <= work; ++k) {
        LaurentSeries f = LaurentSeries::one(work) - LaurentSeries::monomial(Rat(1), 9 * k, work);
        den = den * f * f * f;
    }
    return LaurentSeries::monomial(rat(1, 3), -1, work) * num * den.inverse();
}

LaurentSeries hauptmodul_t(const LaurentSeries& h) {
    long p = h.prec();
    LaurentSeries one = LaurentSeries::one(p);
    LaurentSeries h2 = h * h;
    LaurentSeries num = (h + one) * (h + one * Rat(3)) * (h2 + one * Rat(3)) * Rat(3);
    LaurentSeries den = h * (h2 + h * Rat(3) + one * Rat(3));
    return num / den;
}

LaurentSeries j_series(long n) {
    long work = n + 8; // Delta has valuation 3; its inverse costs 6 orders
    // q = u^3
    LaurentSeries e4 = LaurentSeries::one(work);
    for (long k = 1; 3 * k <= work; ++k) {
        Int s3 = 0;
        for (long d = 1; d <= k; ++d)
            if (k % d == 0) s3 += Int(d) * d * d;
        e4 = e4 + LaurentSeries::monomial(Rat(240 * s3), 3 * k, work);
    }
    LaurentSeries delta = LaurentSeries::monomial(Rat(1), 3, work);
    for (long k = 1; 3 * k <= work; ++k) {
        LaurentSeries f = LaurentSeries::one(work) - LaurentSeries::monomial(Rat(1), 3 * k, work);
        LaurentSeries f3 = f * f * f;
        LaurentSeries f12 = f3 * f3 * f3 * f3;
        delta = delta * f12 * f12;
    }
    return e4 * e4 * e4 * delta.inverse();
}

bool check_identity(long order) {
    if (order < 1) throw Error("check_identity needs order >= 1");
    LaurentSeries h = eta_quotient_h(order + 6);
    LaurentSeries t = hauptmodul_t(h);
    LaurentSeries j = j_series(order + 6);
    LaurentSeries diff = t * t * t - j;
    return diff.identically_zero_to(order);
}

} // namespace galois3
