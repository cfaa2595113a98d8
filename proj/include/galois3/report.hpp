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

#ifndef GALOIS3_REPORT_HPP
#define GALOIS3_REPORT_HPP

#include <json.hpp>

#include "galois3/gl2f3.hpp"
#include "galois3/solver.hpp"

namespace galois3 {

// Stable, deterministic JSON encodings. Rationals are "p/q" strings,
// polynomials coefficient arrays degree-descending plus a display string.
using Json = nlohmann::ordered_json;

Json to_json(const Rat& q);
Json to_json(const UniPoly& f);
Json to_json(const Curve& e);
Json to_json(const Factorization& f);
Json to_json(const GaloisCase& c);
Json to_json(const JClass& jc);
Json to_json(const ObstructionReport& rep);
Json to_json(const SolutionRecord& rec);
Json to_json(const GroupTableRow& row);

SolutionRecord record_from_json(const Json& j); // inverse of to_json(SolutionRecord)

} // namespace galois3

#endif
