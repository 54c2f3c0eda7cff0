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

#ifndef CUBICPLANE_SOLVE_HPP
#define CUBICPLANE_SOLVE_HPP

#include <vector>

#include "cubicplane/point.hpp"
#include "cubicplane/poly.hpp"
#include "cubicplane/univariate.hpp"

namespace cubicplane {

/// Res_var(f, g) for forms in three variables, as a binary form in the two
/// remaining variables. When exactly one of f, g is free of `var` that form
/// is returned as the eliminant. Throws DegenerateResultant when both are.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

/// Binary form in variables (a, b) = the two variables other than `skip`,
/// written as a polynomial in t = b/a. The difference between the form's
/// degree and the returned degree is the multiplicity of the root (0:1).
UniPoly dehomogenize_binary(const MultiPoly& form, int skip);

struct ZeroSet {
  std::vector<Point> points;  // canonical, sorted
  /// False if some solution may have coordinates outside the base field.
  bool complete = true;
};

/// Common projective zeros of forms in three variables.
/// Throws PositiveDimensional if the zero set contains a curve.
ZeroSet common_zeros(const std::vector<MultiPoly>& forms);

/// True when the forms provably have no common zero over the algebraic
/// closure. False means a common zero exists or could not be excluded.
bool certify_no_common_zeros(const std::vector<MultiPoly>& forms);

/// True iff a plane curve has no repeated component. Needs a base field of
/// characteristic 0 or greater than the degree.
bool is_square_free(const MultiPoly& h);

/// Every F_q-point of P^2, canonical, in lexicographic order.
std::vector<Point> plane_points(Field f);

}  // namespace cubicplane

#endif  // CUBICPLANE_SOLVE_HPP
