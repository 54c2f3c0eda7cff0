// Copyright 2026 The cubicplane Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CUBICPLANE_PARSE_HPP
#define CUBICPLANE_PARSE_HPP

#include <string_view>

#include "cubicplane/poly.hpp"

namespace cubicplane {

/// Parses a polynomial expression:
///
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := int ['/' positive-int] | variable ['^' positive-int] | '(' expr ')'
///
/// Whitespace is ignored and implicit multiplication is rejected. Throws
/// ParseError (column is 1-based) on syntax errors, unknown variables and
/// non-homogeneous results.
MultiPoly parse_poly(std::string_view text, VarSet vars, Field field);

}  // namespace cubicplane

#endif  // CUBICPLANE_PARSE_HPP
