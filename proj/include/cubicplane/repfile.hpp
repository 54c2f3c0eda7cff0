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

#ifndef CUBICPLANE_REPFILE_HPP
#define CUBICPLANE_REPFILE_HPP

#include <optional>
#include <string>

#include "cubicplane/detrep.hpp"

namespace cubicplane {

/// Reads the line-oriented rep format:
///
///   # comment
///   field rational            (or: field fp 13)
///   vars x1 x2 x3
///   row 0: E, E, E, E         (rows 0..3)
///
/// `field_override` replaces the declared field. Syntax errors throw
/// ParseError with line and column; a well-formed matrix that is not a
/// valid representation throws MathRejection.
SymDetRep parse_rep_file(const std::string& text, std::optional<Field> field_override = std::nullopt);

std::string format_rep_file(const SymDetRep& rep, const std::string& comment = "");

}  // namespace cubicplane

#endif  // CUBICPLANE_REPFILE_HPP
