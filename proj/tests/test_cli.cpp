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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "galois3/polyparse.hpp"
#include "galois3/report.hpp"

using namespace galois3;

TEST_CASE("parse_poly") {
    CHECK(parse_poly("x^4+2*x^2-12") == upoly({Rat(1), Rat(0), Rat(2), Rat(0), Rat(-12)}));
    CHECK(parse_poly("x^3-6*x-13/4") == upoly({Rat(1), Rat(0), Rat(-6), rat(-13, 4)}));
    CHECK(parse_poly("x^2") == upoly({Rat(1), Rat(0), Rat(0)}));
    CHECK(parse_poly("(x^2+2)*(x^2-6)") ==
          upoly({Rat(1), Rat(0), Rat(2)}) * upoly({Rat(1), Rat(0), Rat(-6)}));
    CHECK(parse_poly("x^2*(x^2+3)") == upoly({Rat(1), Rat(0), Rat(3), Rat(0), Rat(0)}));
    CHECK(parse_poly("-x+1") == upoly({Rat(-1), Rat(1)}));
    CHECK(parse_poly(" 3 * x ^ 2 ") == upoly({Rat(3), Rat(0), Rat(0)}));
    CHECK(parse_poly("2/3") == UniPoly(rat(2, 3)));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_poly("x +"), ParseError);
    CHECK_THROWS_AS(parse_poly("2x"), ParseError);      // implicit multiplication
    CHECK_THROWS_AS(parse_poly("x^-2"), ParseError);    // negative exponent
    CHECK_THROWS_AS(parse_poly("(x"), ParseError);
    CHECK_THROWS_AS(parse_poly("x/2"), ParseError);     // '/' only in literals
    CHECK_THROWS_AS(parse_poly("1/0"), ParseError);
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    try {
        parse_poly("x^4+y");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("parse_coeff_list") {
    CHECK(parse_coeff_list("1,0,2,0,-12") == parse_poly("x^4+2*x^2-12"));
    CHECK(parse_coeff_list("1, 0, -6, -13/4") == parse_poly("x^3-6*x-13/4"));
    CHECK_THROWS_AS(parse_coeff_list("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_coeff_list("1,a,2"), ParseError);
}

TEST_CASE("print/parse round trip on random polynomials") {
    std::mt19937_64 rng(808);
    std::uniform_int_distribution<long> numd(-30, 30), dend(1, 9), degd(0, 4);
    for (int i = 0; i < 100; ++i) {
        int deg = static_cast<int>(degd(rng));
        std::vector<Rat> c;
        for (int k = 0; k <= deg; ++k) c.push_back(rat(numd(rng), dend(rng)));
        if (c.front() == 0) c.front() = Rat(1);
        UniPoly f = upoly(std::move(c));
        CHECK(parse_poly(to_string(f)) == f);
    }
}

TEST_CASE("record json round trip") {
    GaloisCase c = classify(validate(parse_poly("(x^2+2)*(x^2-6)")));
    auto rec = c2x_record_from_t(c.delta1, c.delta2, Rat(5));
    Json j = to_json(rec);
    SolutionRecord back = record_from_json(j);
    CHECK(back.label == rec.label);
    CHECK(back.t == rec.t);
    CHECK(back.curve.A == rec.curve.A);
    CHECK(back.curve.B == rec.curve.B);
    CHECK(back.j == rec.j);
    CHECK(verify_certificate(back, c));
}

TEST_CASE("json shapes are stable") {
    GaloisCase c = classify(validate(parse_poly("x^4+2*x^2-12")));
    Json j1 = to_json(obstruction(c));
    Json j2 = to_json(obstruction(c));
    CHECK(j1.dump() == j2.dump());
    CHECK(j1["case"] == "D4");
    CHECK(j1["global_symbol"] == "+1");
    CHECK(j1["arguments"]["alpha"] == "39");
    CHECK(j1["arguments"]["beta"] == "1");
    Json jc = to_json(classify_from_j(Rat(432)));
    CHECK(jc["galois_group_of_K"] == "S3");
    CHECK(jc["witnesses"]["F1"] == "-3");
}
