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

#ifndef GALOIS3_GL2F3_HPP
#define GALOIS3_GL2F3_HPP

#include <array>
#include <string>
#include <vector>

#include "galois3/errors.hpp"

namespace galois3 {

// 2x2 matrix over F_3, entries row-major in {0,1,2}. Group elements are
// the invertible ones (det != 0).
struct Mat2F3 {
    std::array<unsigned char, 4> e{0, 0, 0, 0}; // a b / c d

    static Mat2F3 identity() { return {{1, 0, 0, 1}}; }
    static Mat2F3 minus_identity() { return {{2, 0, 0, 2}}; }

    unsigned char det() const {
        return static_cast<unsigned char>((e[0] * e[3] + 3 * 3 - e[1] * e[2]) % 3);
    }
    Mat2F3 operator*(const Mat2F3& o) const {
        return {{static_cast<unsigned char>((e[0] * o.e[0] + e[1] * o.e[2]) % 3),
                 static_cast<unsigned char>((e[0] * o.e[1] + e[1] * o.e[3]) % 3),
                 static_cast<unsigned char>((e[2] * o.e[0] + e[3] * o.e[2]) % 3),
                 static_cast<unsigned char>((e[2] * o.e[1] + e[3] * o.e[3]) % 3)}};
    }
    Mat2F3 negated() const {
        return {{static_cast<unsigned char>((3 - e[0]) % 3), static_cast<unsigned char>((3 - e[1]) % 3),
                 static_cast<unsigned char>((3 - e[2]) % 3), static_cast<unsigned char>((3 - e[3]) % 3)}};
    }
    unsigned char encode() const {
        return static_cast<unsigned char>(e[0] * 27 + e[1] * 9 + e[2] * 3 + e[3]);
    }
    static Mat2F3 decode(unsigned char code) {
        return {{static_cast<unsigned char>(code / 27), static_cast<unsigned char>(code / 9 % 3),
                 static_cast<unsigned char>(code / 3 % 3), static_cast<unsigned char>(code % 3)}};
    }
    bool operator==(const Mat2F3& o) const { return e == o.e; }
    bool operator<(const Mat2F3& o) const { return encode() < o.encode(); }
};

std::string to_string(const Mat2F3& m);

// An element of PGL_2(F_3): the unordered pair {M, -M}, stored as the
// representative with the smaller encoding.
struct PGLElem {
    Mat2F3 rep;

    static PGLElem of(const Mat2F3& m) {
        Mat2F3 n = m.negated();
        return {n < m ? n : m};
    }
    PGLElem operator*(const PGLElem& o) const { return of(rep * o.rep); }
    bool operator==(const PGLElem& o) const { return rep == o.rep; }
    bool operator<(const PGLElem& o) const { return rep < o.rep; }
};

// A permutation of {1,2,3,4} as the image array (perm[i] is the image of
// i+1, values 1..4).
using Perm = std::array<unsigned char, 4>;

Perm perm_identity();
Perm perm_mul(const Perm& s, const Perm& t); // (s*t)(i) = s(t(i))
Perm perm_from_cycles(const std::vector<std::vector<int>>& cycles);
std::vector<Perm> all_s4();

// The isomorphism Phi: S_4 -> PGL_2(F_3) fixed by the generator images
// (1 2) -> [[0,1],[1,0]], (2 3) -> [[2,1],[0,1]], (3 4) -> [[2,0],[0,1]];
// a permutation is decomposed into adjacent transpositions and Phi is the
// product of the generator matrices in the same order.
PGLElem phi(const Perm& s);

enum class GroupLabel {
    C1, C2, C3, C4, C2xC2, S3, C6, C8, D4, Q8, C4xC2, C2xC2xC2,
    C12, D6, Dic3, A4, C2xC6, SD16, D8_16, Q16, C16, SL2F3, S4, C24, GL2F3
};
std::string to_string(GroupLabel l);

// A subgroup of GL_2(F_3) or PGL_2(F_3), closed element list plus the
// recognized isomorphism type.
struct SubgroupRecord {
    bool projective = false; // true: elements are PGL classes
    std::vector<Mat2F3> elements;  // used when !projective
    std::vector<PGLElem> pelements; // used when projective
    GroupLabel label;

    std::size_t order() const { return projective ? pelements.size() : elements.size(); }
};

SubgroupRecord subgroup(const std::vector<Mat2F3>& generators);
SubgroupRecord subgroup_pgl(const std::vector<PGLElem>& generators);

// Full preimage under GL -> PGL; the order doubles.
SubgroupRecord preimage(const SubgroupRecord& g);

// Isomorphism type by order, abelianness, element-order profile, and the
// defining relation for the ambiguous order-16 case (SD16 vs D8 vs Q16).
GroupLabel iso_type_of(const SubgroupRecord& h);

// True iff the central extension 1 -> {+-1} -> Gtilde -> G -> 1 splits,
// i.e. some subgroup H <= Gtilde misses -I and surjects onto G. All
// candidate complements here are 2-generated, so closure over element
// pairs is exhaustive.
bool is_split(const SubgroupRecord& gtilde, const SubgroupRecord& g);

// The subgroup ladder: G_i inside PGL, Gtilde_i = preimage(G_i).
struct GroupTableRow {
    int index;
    SubgroupRecord g;
    SubgroupRecord gtilde;
    bool split;
};
std::vector<GroupTableRow> group_table();

} // namespace galois3

#endif
