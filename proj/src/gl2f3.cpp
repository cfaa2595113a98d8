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

#include "galois3/gl2f3.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace galois3 {

std::string to_string(const Mat2F3& m) {
    return "[[" + std::to_string(m.e[0]) + "," + std::to_string(m.e[1]) + "],[" +
           std::to_string(m.e[2]) + "," + std::to_string(m.e[3]) + "]]";
}

Perm perm_identity() { return {1, 2, 3, 4}; }

Perm perm_mul(const Perm& s, const Perm& t) {
    Perm r;
    for (int i = 0; i < 4; ++i) r[i] = s[t[i] - 1];
    return r;
}

Perm perm_from_cycles(const std::vector<std::vector<int>>& cycles) {
    Perm r = perm_identity();
    for (const auto& cyc : cycles) {
        Perm c = perm_identity();
        for (std::size_t i = 0; i < cyc.size(); ++i)
            c[cyc[i] - 1] = static_cast<unsigned char>(cyc[(i + 1) % cyc.size()]);
        r = perm_mul(r, c);
    }
    return r;
}

std::vector<Perm> all_s4() {
    Perm p = {1, 2, 3, 4};
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace {

const Mat2F3 kA12{{0, 1, 1, 0}};
const Mat2F3 kA23{{2, 1, 0, 1}};
const Mat2F3 kA34{{2, 0, 0, 1}};

// adjacent-transposition word for s (bubble sort)
std::vector<int> adjacent_word(Perm s) {
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < 3; ++i) {
            if (s[i] > s[i + 1]) {
                // s = s' * (i i+1) with s' having the swap applied; the
                // word accumulates right-to-left
                std::swap(s[i], s[i + 1]);
                word.push_back(i);
                moved = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

} // namespace

PGLElem phi(const Perm& s) {
    static const Mat2F3 gens[3] = {kA12, kA23, kA34};
    Mat2F3 m = Mat2F3::identity();
    for (int g : adjacent_word(s)) m = m * gens[g];
    return PGLElem::of(m);
}

namespace {

template <class E>
std::vector<E> closure(std::vector<E> gens, const E& id) {
    std::set<E> seen{id};
    std::vector<E> frontier{id};
    for (const E& g : gens)
        if (seen.insert(g).second) frontier.push_back(g);
    std::vector<E> elems(seen.begin(), seen.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<E> cur(seen.begin(), seen.end());
        for (const E& a : cur)
            for (const E& b : cur) {
                E p = a * b;
                if (seen.insert(p).second) grew = true;
            }
    }
    return {seen.begin(), seen.end()};
}

template <class E>
int element_order(const E& x, const E& id) {
    E p = x;
    int n = 1;
    while (!(p == id)) {
        p = p * x;
        ++n;
    }
    return n;
}

template <class E>
std::map<int, int> order_profile(const std::vector<E>& elems, const E& id) {
    std::map<int, int> prof;
    for (const E& x : elems) ++prof[element_order(x, id)];
    return prof;
}

template <class E>
bool abelian(const std::vector<E>& elems) {
    for (const E& a : elems)
        for (const E& b : elems)
            if (!(a * b == b * a)) return false;
    return true;
}

template <class E>
GroupLabel recognize(const std::vector<E>& elems, const E& id) {
    std::size_t n = elems.size();
    auto prof = order_profile(elems, id);
    bool ab = abelian(elems);
    switch (n) {
    case 1: return GroupLabel::C1;
    case 2: return GroupLabel::C2;
    case 3: return GroupLabel::C3;
    case 4: return prof.count(4) ? GroupLabel::C4 : GroupLabel::C2xC2;
    case 6: return ab ? GroupLabel::C6 : GroupLabel::S3;
    case 8:
        if (ab) {
            if (prof.count(8)) return GroupLabel::C8;
            return prof.count(4) ? GroupLabel::C4xC2 : GroupLabel::C2xC2xC2;
        }
        return prof[2] == 1 ? GroupLabel::Q8 : GroupLabel::D4;
    case 12:
        if (ab) return prof.count(12) ? GroupLabel::C12 : GroupLabel::C2xC6;
        if (!prof.count(6)) return GroupLabel::A4;
        return prof[2] == 7 ? GroupLabel::D6 : GroupLabel::Dic3;
    case 16: {
        if (prof.count(16)) return GroupLabel::C16;
        if (prof[2] == 1 && prof.count(8)) return GroupLabel::Q16;
        // separate SD16 / D8 by the conjugation relation on an order-8 element
        for (const E& s : elems) {
            if (element_order(s, id) != 8) continue;
            E s2 = s * s, s3 = s2 * s, s7 = s3 * s3 * s;
            for (const E& r : elems) {
                if (element_order(r, id) != 2) continue;
                E c = r * s * r;
                if (c == s3) return GroupLabel::SD16;
                if (c == s7) return GroupLabel::D8_16;
            }
            break;
        }
        throw UnrecognizedGroup("order-16 group outside the expected lattice");
    }
    case 24:
        if (prof[2] == 1) return GroupLabel::SL2F3;
        if (prof.count(4) && !prof.count(6) && prof[3] == 8) return GroupLabel::S4;
        if (ab) return GroupLabel::C24;
        return GroupLabel::S4;
    case 48: return GroupLabel::GL2F3;
    default: throw UnrecognizedGroup("order " + std::to_string(n));
    }
}

} // namespace

std::string to_string(GroupLabel l) {
    switch (l) {
    case GroupLabel::C1: return "C1";
    case GroupLabel::C2: return "C2";
    case GroupLabel::C3: return "C3";
    case GroupLabel::C4: return "C4";
    case GroupLabel::C2xC2: return "C2xC2";
    case GroupLabel::S3: return "S3";
    case GroupLabel::C6: return "C6";
    case GroupLabel::C8: return "C8";
    case GroupLabel::D4: return "D4";
    case GroupLabel::Q8: return "Q8";
    case GroupLabel::C4xC2: return "C4xC2";
    case GroupLabel::C2xC2xC2: return "C2xC2xC2";
    case GroupLabel::C12: return "C12";
    case GroupLabel::D6: return "D6";
    case GroupLabel::Dic3: return "Dic3";
    case GroupLabel::A4: return "A4";
    case GroupLabel::C2xC6: return "C2xC6";
    case GroupLabel::SD16: return "SD16";
    case GroupLabel::D8_16: return "D8";
    case GroupLabel::Q16: return "Q16";
    case GroupLabel::C16: return "C16";
    case GroupLabel::SL2F3: return "SL2F3";
    case GroupLabel::S4: return "S4";
    case GroupLabel::C24: return "C24";
    case GroupLabel::GL2F3: return "GL2F3";
    }
    return "?";
}

SubgroupRecord subgroup(const std::vector<Mat2F3>& generators) {
    for (const Mat2F3& g : generators)
        if (g.det() == 0) throw Error("subgroup: singular generator");
    SubgroupRecord r;
    r.projective = false;
    r.elements = closure(generators, Mat2F3::identity());
    r.label = recognize(r.elements, Mat2F3::identity());
    return r;
}

SubgroupRecord subgroup_pgl(const std::vector<PGLElem>& generators) {
    SubgroupRecord r;
    r.projective = true;
    r.pelements = closure(generators, PGLElem::of(Mat2F3::identity()));
    r.label = recognize(r.pelements, PGLElem::of(Mat2F3::identity()));
    return r;
}

SubgroupRecord preimage(const SubgroupRecord& g) {
    if (!g.projective) throw Error("preimage needs a PGL subgroup");
    std::set<Mat2F3> elems;
    for (const PGLElem& p : g.pelements) {
        elems.insert(p.rep);
        elems.insert(p.rep.negated());
    }
    SubgroupRecord r;
    r.projective = false;
    r.elements.assign(elems.begin(), elems.end());
    r.label = recognize(r.elements, Mat2F3::identity());
    return r;
}

GroupLabel iso_type_of(const SubgroupRecord& h) {
    return h.projective ? recognize(h.pelements, PGLElem::of(Mat2F3::identity()))
                        : recognize(h.elements, Mat2F3::identity());
}

bool is_split(const SubgroupRecord& gtilde, const SubgroupRecord& g) {
    if (gtilde.projective || !g.projective) throw Error("is_split: want (GL, PGL) pair");
    const Mat2F3 minus = Mat2F3::minus_identity();
    std::set<PGLElem> target(g.pelements.begin(), g.pelements.end());

    auto complement = [&](const std::vector<Mat2F3>& h) {
        if (h.size() != g.pelements.size()) return false;
        std::set<PGLElem> image;
        for (const Mat2F3& m : h) {
            if (m == minus) return false;
            image.insert(PGLElem::of(m));
        }
        return image == target;
    };

    for (const Mat2F3& a : gtilde.elements) {
        if (complement(closure(std::vector<Mat2F3>{a}, Mat2F3::identity()))) return true;
        for (const Mat2F3& b : gtilde.elements) {
            if (complement(closure(std::vector<Mat2F3>{a, b}, Mat2F3::identity()))) return true;
        }
    }
    return false;
}

std::vector<GroupTableRow> group_table() {
    const std::vector<std::vector<std::vector<std::vector<int>>>> gens = {
        {{{1, 2}}},                  // G_0
        {{{1, 2}}, {{3, 4}}},        // G_1
        {{{1, 2, 3}}, {{1, 2}}},     // G_2
        {{{1, 2, 3, 4}}, {{2, 4}}},  // G_3
        {{{1, 2}}, {{2, 3}}, {{3, 4}}}, // G_4
    };
    std::vector<GroupTableRow> rows;
    for (int i = 0; i < 5; ++i) {
        std::vector<PGLElem> pg;
        for (const auto& cyc : gens[static_cast<std::size_t>(i)]) pg.push_back(phi(perm_from_cycles(cyc)));
        GroupTableRow row;
        row.index = i;
        row.g = subgroup_pgl(pg);
        row.gtilde = preimage(row.g);
        row.split = is_split(row.gtilde, row.g);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace galois3
