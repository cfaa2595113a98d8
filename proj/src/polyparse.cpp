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

#include "galois3/polyparse.hpp"

#include <cctype>

#include "galois3/errors.hpp"

namespace galois3 {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    UniPoly run() {
        UniPoly p = sum();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    UniPoly sum() {
        UniPoly acc = eat('-') ? -term() : (eat('+'), term());
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    UniPoly term() {
        UniPoly acc = power();
        while (eat('*')) acc = acc * power();
        return acc;
    }

    UniPoly power() {
        UniPoly base = atom();
        if (!eat('^')) return base;
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("exponent must be a nonnegative integer", at);
        unsigned long e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            e = e * 10 + static_cast<unsigned long>(s_[pos_++] - '0');
        return base.pow(e);
    }

    UniPoly atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            UniPoly inner = sum();
            if (!eat(')')) throw ParseError("missing ')'", pos_);
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            return upoly_x();
        }
        if (c == '-') { // unary minus inside a term, e.g. 2*-3 is rejected; -x handled in sum
            throw ParseError("unexpected '-'", pos_);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return UniPoly(number());
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Rat number() {
        Int n = integer();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            // a literal p/q only when q is a plain integer (not x or '(')
            std::size_t save = pos_;
            ++pos_;
            skip_ws();
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                Int d = integer();
                if (d == 0) throw ParseError("zero denominator", save);
                return rat(n, d);
            }
            throw ParseError("'/' is only allowed in rational literals p/q", save);
        }
        return Rat(n);
    }

    Int integer() {
        std::size_t at = pos_;
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        if (digits.empty()) throw ParseError("expected an integer", at);
        return Int(digits);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

UniPoly parse_poly(const std::string& text) { return Parser(text).run(); }

UniPoly parse_coeff_list(const std::string& text) {
    std::vector<Rat> cs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        // trim
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front())))
            piece.erase(piece.begin());
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back())))
            piece.pop_back();
        if (piece.empty()) throw ParseError("empty coefficient", start);
        try {
            cs.push_back(rat_from_string(piece));
        } catch (const Error&) {
            throw ParseError("bad coefficient '" + piece + "'", start);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return upoly(std::move(cs));
}

} // namespace galois3
