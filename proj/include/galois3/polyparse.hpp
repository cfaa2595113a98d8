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

#ifndef GALOIS3_POLYPARSE_HPP
#define GALOIS3_POLYPARSE_HPP

#include <string>

#include "galois3/unipoly.hpp"

namespace galois3 {

// Grammar: integer or rational literals (p or p/q), the variable x,
// operators + - * ^ with the usual precedence, parentheses; implicit
// multiplication is not allowed. Throws ParseError with the offending
// position.
UniPoly parse_poly(const std::string& text);

// "c4,c3,c2,c1,c0" degree-descending.
UniPoly parse_coeff_list(const std::string& text);

} // namespace galois3

#endif
