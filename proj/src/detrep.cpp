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

#include "cubicplane/detrep.hpp"

#include <string>
#include <vector>

#include "cubicplane/errors.hpp"

namespace cubicplane {

namespace {

std::string entry_name(int i, int j) { return "entry(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

MultiPoly u_var(Field f, int k) { return MultiPoly::variable(f, VarSet::Ambient, 3 + k); }

}  // namespace

int SymDetRep::profile_degree(int i, int j) {
  if (i == 3 && j == 3) return 3;
  if (i == 3 || j == 3) return 2;
  return 1;
}

SymDetRep SymDetRep::validate(const PolyMatrix4& m) {
  const Field f = m[0][0].field();
  PolyMatrix4 norm = m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const MultiPoly& e = m[i][j];
      if (e.vars() != VarSet::Plane)
        throw MathRejection("wrong variables", entry_name(i, j) + " must be a form in x1, x2, x3");
      if (e.field() != f) throw MathRejection("mixed fields", entry_name(i, j) + " is over another field");
      if (e.is_zero()) {
        norm[i][j] = MultiPoly(f, VarSet::Plane, profile_degree(i, j));
      } else if (e.degree() != profile_degree(i, j)) {
        throw MathRejection("wrong degree profile", entry_name(i, j) + " has degree " +
                                                        std::to_string(e.degree()) + ", expected " +
                                                        std::to_string(profile_degree(i, j)));
      }
    }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(norm[i][j] == norm[j][i]))
        throw MathRejection("asymmetric matrix", entry_name(i, j) + " = " + norm[i][j].to_string() + " but " +
                                                     entry_name(j, i) + " = " + norm[j][i].to_string());
  SymDetRep rep(std::move(norm));
  std::vector<std::vector<MultiPoly>> rows;
  for (const auto& r : rep.m_) rows.emplace_back(r.begin(), r.end());
  if (poly_determinant(rows).is_zero())
    throw MathRejection("zero determinant", "det M vanishes identically, so there is no discriminant curve");
  return rep;
}

SymDetRep SymDetRep::reduce_mod(std::uint32_t q) const {
  PolyMatrix4 r = m_;
  for (auto& row : r)
    for (auto& e : row) e = e.reduce_mod(q);
  return validate(r);
}

DerivedEquations derived_equations(const SymDetRep& rep) {
  const Field f = rep.field();
  std::vector<std::vector<MultiPoly>> full, block;
  for (int i = 0; i < 4; ++i) {
    full.emplace_back(rep.matrix()[i].begin(), rep.matrix()[i].end());
    if (i < 3) block.emplace_back(rep.matrix()[i].begin(), rep.matrix()[i].begin() + 3);
  }
  MultiPoly sextic = poly_determinant(full);
  MultiPoly d_cubic = poly_determinant(block);
  if (d_cubic.is_zero()) d_cubic = MultiPoly(f, VarSet::Plane, 3);

  MultiPoly F(f, VarSet::Ambient, 3);
  const Scalar two = f.from_int(2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) F += rep.entry(i, j).with_vars(VarSet::Ambient) * u_var(f, i) * u_var(f, j);
  for (int k = 0; k < 3; ++k) F += rep.entry(k, 3).with_vars(VarSet::Ambient) * u_var(f, k) * two;
  F += rep.entry(3, 3).with_vars(VarSet::Ambient);
  return DerivedEquations{std::move(sextic), std::move(d_cubic), std::move(F)};
}

ScalarMatrix fiber_gram(const SymDetRep& rep, const Point& p) {
  ScalarMatrix g(4, 4, rep.field().zero());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = rep.entry(i, j).eval(p);
  if (rank(g) <= 1)
    throw MathRejection("invalid representation",
                        "M has rank at most 1 at " + point_to_string(p) + ", impossible for a nodal discriminant");
  return g;
}

ScalarMatrix net_generator(const SymDetRep& rep, int k) {
  Point e(3, rep.field().zero());
  e[k] = rep.field().one();
  ScalarMatrix g(3, 3, rep.field().zero());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = rep.entry(i, j).eval(e);
  return g;
}

}  // namespace cubicplane
