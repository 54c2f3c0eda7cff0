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

#ifndef CUBICPLANE_EXAMPLES_HPP
#define CUBICPLANE_EXAMPLES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubicplane/detrep.hpp"

namespace cubicplane {

using Params = std::map<std::string, std::string>;

/// Counts every run of the pipeline on a fixture must reproduce.
struct Highlights {
  int sing_c = 0;
  int s_theta = 0;
  int s_theta_tilde = 0;
  int s_c = 0;
  int b = 0;
  int sing_x = 0;
  bool smooth = false;

  friend bool operator==(const Highlights&, const Highlights&) = default;
};

struct NamedExample {
  std::string name;
  Params params;  // every parameter, defaults filled in
  SymDetRep rep;
  /// Present when the parameters are the defaults.
  std::optional<Highlights> expected;
  std::vector<std::string> notes;
};

std::vector<std::string> example_names();

/// Parameters: `field` (rational or fp:Q) for every example, plus
///   ex42i, rmk31: f
///   ex42ii: l1 .. l6
///   ex43_quartic_two_lines: l1 l2 l11 q1 f
///   ex43_quintic_line: l1 l11 l12 l22 q1 q2 f
///   prop44: A as "a11,a12,a13;a21,a22,a23;a31,a32,a33"
/// Throws std::invalid_argument for unknown names or parameters and
/// MathRejection when the data violate the example's hypotheses.
NamedExample build_example(const std::string& name, const Params& params = {});

/// Parses "rational" or "fp:Q" (also "fp Q").
Field parse_field(const std::string& text);
std::string field_spec(const Field& f);

struct Prop44Membership {
  bool in_u = false;
  std::string violated;  // empty when in_u
};

/// Whether A lies in the open set U: f_A is a smooth cubic missing the
/// three coordinate points and meeting each coordinate line in three
/// distinct points.
Prop44Membership prop44_membership(const std::vector<std::vector<Scalar>>& a);

/// f_A = sum_i (a_i1 x1 + a_i2 x2 + a_i3 x3)^2 x_i
MultiPoly prop44_cubic(const std::vector<std::vector<Scalar>>& a);

/// The three forms u_i - a_i1 x1 - a_i2 x2 - a_i3 x3 of the section plane.
std::vector<MultiPoly> prop44_section_plane(const std::vector<std::vector<Scalar>>& a);

}  // namespace cubicplane

#endif  // CUBICPLANE_EXAMPLES_HPP
