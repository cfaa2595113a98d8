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

#include "galois3/report.hpp"

namespace galois3 {

Json to_json(const Rat& q) { return to_string(q); }

Json to_json(const UniPoly& f) {
    Json coeffs = Json::array();
    for (int i = f.degree(); i >= 0; --i) coeffs.push_back(to_string(f.coeff(static_cast<std::size_t>(i))));
    return Json{{"degree", f.degree()}, {"coeffs_desc", coeffs}, {"pretty", to_string(f)}};
}

Json to_json(const Curve& e) {
    return Json{{"A", to_json(e.A)}, {"B", to_json(e.B)},
                {"equation", "y^2 = x^3 + (" + to_string(e.A) + ")*x + (" + to_string(e.B) + ")"}};
}

Json to_json(const Factorization& f) {
    Json factors = Json::array();
    for (const auto& [g, e] : f.factors)
        factors.push_back(Json{{"factor", to_string(g)}, {"multiplicity", e}});
    return Json{{"unit", to_json(f.unit)}, {"factors", factors}};
}

Json to_json(const GaloisCase& c) {
    Json out{{"label", to_string(c.label)}};
    switch (c.label) {
    case GaloisLabel::C2xC2:
        out["delta1"] = c.delta1.get_str();
        out["delta2"] = c.delta2.get_str();
        break;
    case GaloisLabel::S3:
        out["cubic"] = Json{{"a", to_json(c.cubic_a)}, {"b", to_json(c.cubic_b)}};
        break;
    case GaloisLabel::D4:
        out["even_form"] = Json{{"a", to_json(c.even_a)}, {"d", to_json(c.even_d)}};
        break;
    case GaloisLabel::S4:
        out["quartic"] = to_string(c.quartic);
        break;
    default:
        break;
    }
    return out;
}

Json to_json(const JClass& jc) {
    auto wit = [](const std::optional<Rat>& w) { return w ? Json(to_string(*w)) : Json(nullptr); };
    return Json{{"j", to_json(jc.j)},
                {"cm", jc.cm},
                {"memberships",
                 Json{{"F1", jc.in_F1},
                      {"G1", jc.in_G1},
                      {"G1G2", jc.in_G1G2},
                      {"F1F2", jc.in_F1F2},
                      {"G1G2G3", jc.in_G1G2G3}}},
                {"witnesses",
                 Json{{"F1", wit(jc.wit_F1)},
                      {"G1", wit(jc.wit_G1)},
                      {"G1G2", wit(jc.wit_G1G2)},
                      {"F1F2", wit(jc.wit_F1F2)},
                      {"G1G2G3", wit(jc.wit_G1G2G3)}}},
                {"galois_group_of_K", to_string(jc.row)}};
}

Json to_json(const ObstructionReport& rep) {
    Json entries = Json::array();
    for (const LocalEntry& e : rep.entries)
        entries.push_back(Json{{"place", to_string(e.place)}, {"symbol", e.symbol}});
    Json args(nullptr);
    if (rep.args)
        args = Json{{"alpha", rep.args->first.get_str()}, {"beta", rep.args->second.get_str()}};
    return Json{{"case", to_string(rep.label)},
                {"global_symbol", to_string(rep.verdict)},
                {"solvable", rep.solvable()},
                {"arguments", args},
                {"local_entries", entries}};
}

namespace {

const char* kind_name(CertCheck::Kind k) {
    switch (k) {
    case CertCheck::Kind::PolynomialIdentity: return "PolynomialIdentity";
    case CertCheck::Kind::SquarefreeClassEqual: return "SquarefreeClassEqual";
    case CertCheck::Kind::LemmaConditions: return "LemmaConditions";
    case CertCheck::Kind::FactorizationShape: return "FactorizationShape";
    }
    return "?";
}

} // namespace

Json to_json(const SolutionRecord& rec) {
    Json cert = Json::array();
    for (const CertCheck& c : rec.cert.checks)
        cert.push_back(Json{{"kind", kind_name(c.kind)}, {"what", c.what}});
    Json wit = Json::object();
    for (const auto& [k, v] : rec.witness) wit[k] = to_string(v);
    return Json{{"case", to_string(rec.label)},
                {"t", to_json(rec.t)},
                {"curve", to_json(rec.curve)},
                {"j", to_json(rec.j)},
                {"non_cm", rec.non_cm},
                {"witness", wit},
                {"certificate", cert}};
}

Json to_json(const GroupTableRow& row) {
    return Json{{"i", row.index},
                {"G", Json{{"order", row.g.order()}, {"label", to_string(row.g.label)}}},
                {"Gtilde", Json{{"order", row.gtilde.order()}, {"label", to_string(row.gtilde.label)}}},
                {"split", row.split}};
}

SolutionRecord record_from_json(const Json& j) {
    SolutionRecord rec;
    std::string label = j.at("case").get<std::string>();
    if (label == "C2") rec.label = GaloisLabel::C2;
    else if (label == "C2xC2") rec.label = GaloisLabel::C2xC2;
    else if (label == "S3") rec.label = GaloisLabel::S3;
    else if (label == "D4") rec.label = GaloisLabel::D4;
    else if (label == "S4") rec.label = GaloisLabel::S4;
    else throw Error("bad case label in record: " + label);
    rec.t = rat_from_string(j.at("t").get<std::string>());
    rec.curve.A = rat_from_string(j.at("curve").at("A").get<std::string>());
    rec.curve.B = rat_from_string(j.at("curve").at("B").get<std::string>());
    rec.j = rat_from_string(j.at("j").get<std::string>());
    rec.non_cm = j.at("non_cm").get<bool>();
    for (const auto& [k, v] : j.at("witness").items())
        rec.witness[k] = rat_from_string(v.get<std::string>());
    return rec;
}

} // namespace galois3
