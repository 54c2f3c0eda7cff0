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

#ifndef CUBICPLANE_CURVES_HPP
#define CUBICPLANE_CURVES_HPP

#include <utility>
#include <vector>

#include "cubicplane/detrep.hpp"
#include "cubicplane/solve.hpp"

namespace cubicplane {

struct SingularPoints {
  std::vector<Point> points;
  /// Over F_q: always true (relative to F_q-points). Over Q: false when
  /// some singular point may be irrational.
  bool complete = true;
};

/// Points where h and its three partials vanish. Rational mode eliminates
/// with resultants; finite-field mode scans P^2(F_q). Throws MathRejection
/// for a curve with a repeated component.
SingularPoints singular_points(const MultiPoly& h);

/// Same set for a curve given as a product of pairwise coprime reduced
/// components: pairwise intersections plus each component's own singular
/// points.
SingularPoints singular_points_factored(const std::vector<MultiPoly>& components);

/// True iff p is an ordinary double point: the quadratic part of h in the
/// affine chart of p's first nonzero coordinate has rank 2. Throws
/// std::invalid_argument if p is not a singular point.
bool is_node(const MultiPoly& h, const Point& p);

struct SingPointRecord {
  Point p;
  int rank = 0;  // of M(p), 2 or 3
  bool on_d = false;
  bool node = false;
};

struct SingClassification {
  std::vector<SingPointRecord> sing_c;
  std::vector<Point> s_theta;        // rank 2
  std::vector<Point> s_theta_tilde;  // on D
  std::vector<Point> s_c;            // off D
  std::vector<Point> i_c;            // D meets C at a singular point
  bool complete = true;
};

/// Locates and classifies Sing(C). Throws MathRejection when C is not
/// reduced or has a singular point that is not a node, and
/// std::domain_error when the characteristic is at most 6.
SingClassification classify_singularities(const SymDetRep& rep, const DerivedEquations& eq);

struct ComponentGenus {
  int degree;
  int genus;
};

/// Geometric genus (d-1)(d-2)/2 - nodes of each nodal component. Throws
/// std::invalid_argument if a node count makes the genus negative.
std::vector<ComponentGenus> component_genera(const std::vector<std::pair<int, int>>& degree_and_nodes);

}  // namespace cubicplane

#endif  // CUBICPLANE_CURVES_HPP
