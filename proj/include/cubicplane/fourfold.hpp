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

#ifndef CUBICPLANE_FOURFOLD_HPP
#define CUBICPLANE_FOURFOLD_HPP

#include <optional>
#include <string>
#include <vector>

#include "cubicplane/curves.hpp"
#include "cubicplane/detrep.hpp"
#include "cubicplane/quadext.hpp"

namespace cubicplane {

/// P^5 point over p = (a:b:c) for fiber coordinates (u1:u2:u3:t):
/// (t*a : t*b : t*c : u1 : u2 : u3).
Point fiber_to_p5(const Point& p, const std::vector<Scalar>& w);

struct FiberReport {
  Point p;
  int rank = 4;
  std::string kind;  // "smooth-quadric", "cone", "plane-pair"
  /// The vertex (rank 3) or two points spanning the singular line (rank 2).
  std::vector<Point> singular_locus;
  int conic_rank = 0;  // rank of G(p)
  bool vertex_in_p = false;
};

FiberReport fiber_analysis(const SymDetRep& rep, const Point& p);

/// A plane in P^5 cut out by three linear forms a + b*sqrt(d). When
/// `d` is empty every b-part is zero and the plane is defined over the
/// base field. Forms are kept in reduced echelon form.
struct Plane {
  std::vector<std::vector<Scalar>> a;
  std::vector<std::vector<Scalar>> b;
  std::optional<Scalar> d;

  bool is_p() const;
  std::string to_string() const;
};

struct PlanePair {
  Point source;
  Plane first;
  Plane second;
  /// Set when the pair is conjugate over the base field.
  std::optional<Scalar> d;
};

/// Writes the rank-2 fiber quadric over p as a product of two linear forms.
/// Throws std::invalid_argument if the fiber rank is not 2.
PlanePair split_rank2_fiber(const SymDetRep& rep, const Point& p);

/// Projective dimension of the intersection of two planes (-1 if empty).
int intersection_dimension(const Plane& x, const Plane& y);

/// True iff F vanishes identically on the plane.
bool plane_on_fourfold(const Plane& plane, const MultiPoly& fourfold);

struct BaseLocus {
  std::vector<Point> points;  // in P^5, inside P
  bool complete = true;
  int net_rank = 0;  // dimension of the span of G(e1), G(e2), G(e3)
  bool general_position = true;  // no three base points collinear
};

/// Base points of the net of conics u^T G(x) u. Throws MathRejection when
/// det G vanishes identically or the base locus is a curve.
BaseLocus base_locus(const SymDetRep& rep, const DerivedEquations& eq);

struct SingularLocusX {
  std::vector<Point> cone_vertices;
  BaseLocus base;
  std::vector<Point> points;  // sorted union
  bool all_double = true;
  bool zero_dimensional = true;
  bool bounds_ok = true;
  bool smooth = false;
  bool complete = true;
};

/// Sing(X) as the cone vertices over S_C together with B, every point
/// re-checked against F and its six partials (ConsistencyError on failure).
SingularLocusX singular_locus_x(const SymDetRep& rep, const DerivedEquations& eq, const SingClassification& sc);

/// Whether F vanishes to order exactly 2 at a singular point.
bool is_double_point(const MultiPoly& fourfold, const Point& x);

struct CouplesReport {
  std::vector<PlanePair> couples;
  bool within_lines = true;   // each couple meets in a line
  bool cross_points = true;   // planes from distinct couples meet in a point
  bool none_is_p = true;
  bool all_on_x = true;
  int cross_checks = 0;
};

CouplesReport couples_and_intersections(const SymDetRep& rep, const DerivedEquations& eq,
                                        const std::vector<Point>& s_theta);

/// Every F_q-point of P^5 where F and all partials vanish, sorted. Throws
/// std::invalid_argument when q^5 exceeds 10^9.
std::vector<Point> brute_force_oracle(const MultiPoly& fourfold, unsigned threads = 1);

}  // namespace cubicplane

#endif  // CUBICPLANE_FOURFOLD_HPP
