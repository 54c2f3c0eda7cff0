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

#include "cubicplane/fourfold.hpp"

#include <algorithm>

#include "cubicplane/errors.hpp"

namespace cubicplane {

Point fiber_to_p5(const Point& p, const std::vector<Scalar>& w) {
  Point x;
  for (int i = 0; i < 3; ++i) x.push_back(w[3] * p[i]);
  for (int i = 0; i < 3; ++i) x.push_back(w[i]);
  return normalize(std::move(x));
}

FiberReport fiber_analysis(const SymDetRep& rep, const Point& p) {
  ScalarMatrix g = fiber_gram(rep, p);
  KernelRankDet krd = kernel_rank_det(g);
  FiberReport r;
  r.p = p;
  r.rank = krd.rank;
  r.conic_rank = static_cast<int>(rank(g.submatrix({0, 1, 2}, {0, 1, 2})));
  for (const auto& v : krd.kernel) r.singular_locus.push_back(fiber_to_p5(p, v));
  bool in_p = !r.singular_locus.empty();
  for (const auto& x : r.singular_locus) in_p = in_p && x[0].is_zero() && x[1].is_zero() && x[2].is_zero();
  r.vertex_in_p = in_p;
  switch (r.rank) {
    case 4: r.kind = "smooth-quadric"; break;
    case 3: r.kind = "cone"; break;
    default: r.kind = "plane-pair"; break;
  }
  return r;
}

BaseLocus base_locus(const SymDetRep& rep, const DerivedEquations& eq) {
  const Field f = rep.field();
  if (eq.d_cubic.is_zero())
    throw MathRejection("degenerate net of conics", "det G vanishes identically, so the base locus is not finite");
  BaseLocus out;
  std::vector<MultiPoly> conics;
  ScalarMatrix span(3, 6, f.zero());
  for (int k = 0; k < 3; ++k) {
    ScalarMatrix g = net_generator(rep, k);
    MultiPoly c(f, VarSet::PlaneU, 2);
    int col = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j, ++col) {
        span(k, col) = g(i, j);
        Exponent e{};
        e[i] += 1;
        e[j] += 1;
        c.add_term(e, i == j ? g(i, j) : g(i, j) * f.from_int(2));
      }
    conics.push_back(std::move(c));
  }
  out.net_rank = static_cast<int>(rank(span));
  std::vector<Point> pts;
  if (f.is_finite()) {
    for (const Point& u : plane_points(f)) {
      bool all = true;
      for (const auto& c : conics) all = all && c.eval(u).is_zero();
      if (all) pts.push_back(u);
    }
  } else {
    try {
      ZeroSet z = common_zeros(conics);
      pts = std::move(z.points);
      out.complete = z.complete;
    } catch (const PositiveDimensional&) {
      throw MathRejection("degenerate net of conics", "the base locus contains a curve");
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (determinant(ScalarMatrix::from_rows({pts[i], pts[j], pts[k]})).is_zero()) out.general_position = false;
  for (const auto& u : pts) out.points.push_back(plane_p_to_p5(u));
  std::sort(out.points.begin(), out.points.end());
  return out;
}

bool is_double_point(const MultiPoly& fourfold, const Point& x) {
  const int k = first_nonzero(x);
  for (int i = 0; i < 6; ++i) {
    if (i == k) continue;
    MultiPoly di = fourfold.derivative(i);
    for (int j = i; j < 6; ++j) {
      if (j == k) continue;
      if (!di.derivative(j).eval(x).is_zero()) return true;
    }
  }
  return false;
}

SingularLocusX singular_locus_x(const SymDetRep& rep, const DerivedEquations& eq, const SingClassification& sc) {
  SingularLocusX out;
  out.base = base_locus(rep, eq);
  out.complete = sc.complete && out.base.complete;
  for (const Point& p : sc.s_c) {
    FiberReport fr = fiber_analysis(rep, p);
    if (fr.rank != 3 || fr.singular_locus.size() != 1)
      throw ConsistencyError("fiber over " + point_to_string(p) + " is not a cone");
    if (fr.vertex_in_p) throw ConsistencyError("cone vertex over " + point_to_string(p) + " lies in P");
    if (fr.conic_rank != 3) throw ConsistencyError("conic over " + point_to_string(p) + " is singular");
    out.cone_vertices.push_back(fr.singular_locus[0]);
  }
  std::sort(out.cone_vertices.begin(), out.cone_vertices.end());
  out.points = out.cone_vertices;
  out.points.insert(out.points.end(), out.base.points.begin(), out.base.points.end());
  std::sort(out.points.begin(), out.points.end());
  if (std::adjacent_find(out.points.begin(), out.points.end()) != out.points.end())
    throw ConsistencyError("cone vertices and base points overlap");

  std::vector<MultiPoly> grad;
  for (int i = 0; i < 6; ++i) grad.push_back(eq.fourfold.derivative(i));
  for (const Point& x : out.points) {
    bool singular = eq.fourfold.eval(x).is_zero();
    for (const auto& g : grad) singular = singular && g.eval(x).is_zero();
    if (!singular) throw ConsistencyError("assembled point " + point_to_string(x) + " is not singular on X");
    out.all_double = out.all_double && is_double_point(eq.fourfold, x);
  }
  const std::size_t n = out.points.size(), nc = sc.s_c.size();
  out.bounds_ok = nc <= n && n <= nc + 3 && out.base.points.size() <= 3;
  out.smooth = out.points.empty();
  return out;
}

}  // namespace cubicplane
